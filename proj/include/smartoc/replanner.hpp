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

// Local Reaction Zone (LRZ) monitoring and time-risk node reselection.
//
// While the vehicle follows its path it watches a disc of radius
// LrzConfig::radius. Replanning fires when a dynamic obstacle's hazard zone
// touches that disc, or when the current at probe points along the path inside
// the disc has drifted from what the plan assumed. On a trigger every tree
// node inside the LRZ is scored with
//
//   f(N)    = C(R, N) + g(N)        travel time vehicle -> N -> goal
//   Cost(N) = f(N) / (1 - r(N))     r = mean risk along that route
//
// and the vehicle reconnects to the cheapest admissible node.

#ifndef SMARTOC_REPLANNER_HPP_
#define SMARTOC_REPLANNER_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "smartoc/current_field.hpp"
#include "smartoc/planner_tree.hpp"
#include "smartoc/time_risk.hpp"
#include "smartoc/world.hpp"

namespace smartoc {

struct LrzConfig {
  double radius = 5.0;
  int current_probe_count = 5;
  double deviation_threshold = 0.1;
};

enum class TriggerKind { kObstacleRisk, kCurrentDeviation };

const char* TriggerKindName(TriggerKind kind);

struct Trigger {
  TriggerKind kind = TriggerKind::kObstacleRisk;
  std::vector<ObstacleId> obstacles;  // kObstacleRisk
  double deviation_ratio = 0.0;       // kCurrentDeviation
  double time = 0.0;

  static Trigger obstacle_risk(std::vector<ObstacleId> ids, double t);
  static Trigger current_deviation(double ratio, double t);
};

// `count` points evenly spaced (by arc length) along the part of the path
// that starts at the vehicle and stays inside the LRZ, both ends included.
std::vector<Vec2> lrz_probe_points(std::span<const Vec2> path, double radius,
                                   int count);

// Obstacle risk has priority over current deviation. `reference_field_samples`
// are the field vectors the active plan assumed at lrz_probe_points(...).
std::optional<Trigger> check_triggers(Vec2 usv, const Path& path,
                                      const World& world,
                                      const CurrentField& field,
                                      std::span<const Vec2> reference_field_samples,
                                      const LrzConfig& cfg, double t);

struct ReplanParams {
  LrzConfig lrz;
  RiskParams risk;
  EdgeTimeParams edge;
  PathRiskParams path_risk;
};

// Scores for one LRZ node. `cost` is empty when the node was rejected, its
// route is infeasible, or its risk makes it inadmissible.
struct CandidateScore {
  NodeId node = 0;
  std::optional<double> cost_to_come;
  std::optional<double> cost_to_go;
  std::optional<double> risk;
  std::optional<double> cost;
  bool rejected = false;
};

struct ReplanResult {
  Path new_path;
  NodeId chosen_node = 0;
  double cost = 0.0;
  std::size_t candidates_evaluated = 0;
  double wall_clock = 0.0;  // s
  Trigger trigger;
};

struct ReplanAttempt {
  std::optional<ReplanResult> result;  // empty: no admissible node
  std::size_t candidates_evaluated = 0;
  double wall_clock = 0.0;
};

// Stateful because the tree's g-time cache is keyed by an event stamp that
// must change with every replanning event.
class Replanner {
 public:
  Replanner(const Tree& tree, ReplanParams params);

  // Throws NoFeasibleNode when no LRZ node is admissible.
  ReplanResult replan(Vec2 usv, const World& world, const CurrentField& field,
                      double t, const Trigger& trigger);
  ReplanAttempt try_replan(Vec2 usv, const World& world,
                           const CurrentField& field, double t,
                           const Trigger& trigger);

  // Scores every LRZ node under the same frozen inputs `replan` uses.
  std::vector<CandidateScore> score_candidates(Vec2 usv, const World& world,
                                               const CurrentField& field,
                                               double t);

  const ReplanParams& params() const { return params_; }

 private:
  CandidateScore score(NodeId n, Vec2 usv, const World& world,
                       const CurrentField& field, const FrozenField& frozen,
                       double t, std::uint64_t stamp) const;

  const Tree* tree_;
  ReplanParams params_;
  std::uint64_t next_stamp_ = 1;
};

// True when the straight run usv -> target passes within d_min of a predicted
// obstacle, with arrival times from the frozen field.
bool segment_enters_inner_band(Vec2 usv, Vec2 target, const World& world,
                               const FrozenField& frozen, double t,
                               const RiskParams& rp, const EdgeTimeParams& ep,
                               double sample_ds);

}  // namespace smartoc

#endif  // SMARTOC_REPLANNER_HPP_
