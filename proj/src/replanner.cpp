// Copyright 2026 The SMART-OC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "smartoc/replanner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <utility>

#include "smartoc/error.hpp"

namespace smartoc {

const char* TriggerKindName(TriggerKind kind) {
  switch (kind) {
    case TriggerKind::kObstacleRisk: return "obstacle_risk";
    case TriggerKind::kCurrentDeviation: return "current_deviation";
  }
  return "unknown";
}

Trigger Trigger::obstacle_risk(std::vector<ObstacleId> ids, double t) {
  Trigger tr;
  tr.kind = TriggerKind::kObstacleRisk;
  tr.obstacles = std::move(ids);
  tr.time = t;
  return tr;
}

Trigger Trigger::current_deviation(double ratio, double t) {
  Trigger tr;
  tr.kind = TriggerKind::kCurrentDeviation;
  tr.deviation_ratio = ratio;
  tr.time = t;
  return tr;
}

std::vector<Vec2> lrz_probe_points(std::span<const Vec2> path, double radius,
                                   int count) {
  std::vector<Vec2> probes;
  if (path.empty() || count <= 0) return probes;
  const Vec2 center = path.front();

  // Arc length of the leading portion inside the disc.
  double inside = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Vec2 a = path[i];
    const Vec2 b = path[i + 1];
    const double len = dist(a, b);
    if (dist(center, b) <= radius) {
      inside += len;
      continue;
    }
    // Exit parameter s in [0, 1] with |a + s (b - a) - center| = radius.
    const Vec2 d = b - a;
    const Vec2 f = a - center;
    const double qa = d.squared_norm();
    const double qb = 2.0 * dot(f, d);
    const double qc = f.squared_norm() - radius * radius;
    const double disc = std::max(0.0, qb * qb - 4.0 * qa * qc);
    const double s = std::clamp((-qb + std::sqrt(disc)) / (2.0 * qa), 0.0, 1.0);
    inside += s * len;
    break;
  }

  probes.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double target =
        count == 1 ? 0.0 : inside * static_cast<double>(k) / (count - 1);
    double walked = 0.0;
    Vec2 p = path.back();
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const double len = dist(path[i], path[i + 1]);
      if (walked + len >= target) {
        const double s = len > 0.0 ? (target - walked) / len : 0.0;
        p = path[i] + (path[i + 1] - path[i]) * s;
        break;
      }
      walked += len;
    }
    if (path.size() == 1) p = path.front();
    probes.push_back(p);
  }
  return probes;
}

std::optional<Trigger> check_triggers(Vec2 usv, const Path& path,
                                      const World& world,
                                      const CurrentField& field,
                                      std::span<const Vec2> reference_field_samples,
                                      const LrzConfig& cfg, double t) {
  auto ids = world.ohz_intersects_lrz(usv, cfg.radius, t);
  if (!ids.empty()) return Trigger::obstacle_risk(std::move(ids), t);

  const std::vector<Vec2> probes =
      lrz_probe_points(path.waypoints, cfg.radius, cfg.current_probe_count);
  if (probes.empty()) return std::nullopt;
  std::vector<ProbeSample> samples;
  samples.reserve(probes.size());
  for (Vec2 p : probes) samples.push_back({p, t});
  const double ratio = deviation_ratio(field, samples, reference_field_samples);
  if (ratio > cfg.deviation_threshold) return Trigger::current_deviation(ratio, t);
  return std::nullopt;
}

bool segment_enters_inner_band(Vec2 usv, Vec2 target, const World& world,
                               const FrozenField& frozen, double t,
                               const RiskParams& rp, const EdgeTimeParams& ep,
                               double sample_ds) {
  if (world.dynamics.empty()) return false;
  const double len = dist(usv, target);
  if (len == 0.0) return false;
  const auto pieces = static_cast<long>(std::ceil(len / sample_ds));
  Vec2 prev = usv;
  double arrival = t;
  for (long k = 1; k <= pieces; ++k) {
    const Vec2 next = k == pieces ? target
                                  : usv + (target - usv) * (static_cast<double>(k) /
                                                            static_cast<double>(pieces));
    const auto dt = edge_time(prev, next, frozen, arrival, ep);
    // Infeasible runs are rejected by the time cost instead.
    if (!dt) return false;
    arrival += *dt;
    if (world.min_dynamic_distance(next, arrival) <= rp.d_min) return true;
    prev = next;
  }
  return false;
}

Replanner::Replanner(const Tree& tree, ReplanParams params)
    : tree_(&tree), params_(std::move(params)) {}

CandidateScore Replanner::score(NodeId n, Vec2 usv, const World& world,
                                const CurrentField& field,
                                const FrozenField& frozen, double t,
                                std::uint64_t stamp) const {
  CandidateScore s;
  s.node = n;
  const Vec2 pos = tree_->node(n).pos;
  if (!world.segment_clear_static(usv, pos) ||
      segment_enters_inner_band(usv, pos, world, frozen, t, params_.risk,
                                params_.edge, params_.path_risk.sample_ds)) {
    s.rejected = true;
    return s;
  }
  s.cost_to_come = edge_time(usv, pos, frozen, t, params_.edge);
  if (!s.cost_to_come) return s;
  s.cost_to_go = tree_->cost_to_go_time(n, frozen, params_.edge, stamp);
  if (!s.cost_to_go) return s;
  const double f = *s.cost_to_come + *s.cost_to_go;
  const Path route = tree_->path_through(usv, n);
  s.risk = path_risk(route.waypoints, world, field, t, params_.risk,
                     params_.edge, params_.path_risk);
  if (!s.risk) return s;
  s.cost = time_risk_cost(f, *s.risk);
  return s;
}

std::vector<CandidateScore> Replanner::score_candidates(Vec2 usv,
                                                        const World& world,
                                                        const CurrentField& field,
                                                        double t) {
  const std::uint64_t stamp = next_stamp_++;
  const FrozenField frozen(field, t);
  std::vector<CandidateScore> scores;
  for (NodeId n : tree_->nodes_in_radius(usv, params_.lrz.radius)) {
    scores.push_back(score(n, usv, world, field, frozen, t, stamp));
  }
  return scores;
}

ReplanAttempt Replanner::try_replan(Vec2 usv, const World& world,
                                   const CurrentField& field, double t,
                                   const Trigger& trigger) {
  const auto started = std::chrono::steady_clock::now();
  const std::vector<CandidateScore> scores = score_candidates(usv, world, field, t);

  const CandidateScore* best = nullptr;
  for (const CandidateScore& s : scores) {
    if (!s.cost) continue;
    // Ascending ids, so strict comparison keeps the lowest id on ties.
    if (best == nullptr || *s.cost < *best->cost) best = &s;
  }
  ReplanAttempt attempt;
  attempt.candidates_evaluated = scores.size();
  if (best != nullptr) {
    ReplanResult result;
    result.new_path = tree_->path_through(usv, best->node);
    result.chosen_node = best->node;
    result.cost = *best->cost;
    result.candidates_evaluated = scores.size();
    result.trigger = trigger;
    attempt.result = std::move(result);
  }
  attempt.wall_clock =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  if (attempt.result) attempt.result->wall_clock = attempt.wall_clock;
  return attempt;
}

ReplanResult Replanner::replan(Vec2 usv, const World& world,
                               const CurrentField& field, double t,
                               const Trigger& trigger) {
  ReplanAttempt attempt = try_replan(usv, world, field, t, trigger);
  if (!attempt.result) {
    throw Error(ErrorCode::kNoFeasibleNode,
                "no admissible node among " +
                    std::to_string(attempt.candidates_evaluated) +
                    " LRZ candidates");
  }
  return std::move(*attempt.result);
}

}  // namespace smartoc
