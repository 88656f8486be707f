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

#include "smartoc/time_risk.hpp"

#include <cmath>

namespace smartoc {

std::optional<double> effective_speed(double speed, Vec2 current,
                                      Vec2 track_dir) {
  const double along = dot(current, track_dir);
  const double across = std::abs(cross(track_dir, current));
  if (speed < across) return std::nullopt;
  const double v = along + std::sqrt(speed * speed - across * across);
  if (v <= 0.0) return std::nullopt;
  return v;
}

Vec2 heading_for(double speed, Vec2 current, Vec2 track_dir,
                 double ground_speed) {
  return (track_dir * ground_speed - current) / speed;
}

namespace {

template <typename Field>
std::optional<double> edge_time_impl(Vec2 a, Vec2 b, const Field& field,
                                     double t_start, const EdgeTimeParams& p) {
  const Vec2 ab = b - a;
  const double len = ab.norm();
  if (len == 0.0) return 0.0;
  const Vec2 dir = ab / len;
  const auto pieces = static_cast<long>(std::ceil(len / p.sub_step));
  const double piece_len = len / static_cast<double>(pieces);
  double t = t_start;
  for (long i = 0; i < pieces; ++i) {
    const Vec2 mid = a + dir * (piece_len * (static_cast<double>(i) + 0.5));
    const auto v = effective_speed(p.usv_speed, field.sample(mid, t), dir);
    if (!v) return std::nullopt;
    t += piece_len / *v;
  }
  return t - t_start;
}

}  // namespace

std::optional<double> edge_time(Vec2 a, Vec2 b, const CurrentField& field,
                                double t_start, const EdgeTimeParams& p) {
  return edge_time_impl(a, b, field, t_start, p);
}

std::optional<double> edge_time(Vec2 a, Vec2 b, const FrozenField& field,
                                double t_start, const EdgeTimeParams& p) {
  return edge_time_impl(a, b, field, t_start, p);
}

double point_risk(double d, const RiskParams& rp) {
  if (d <= rp.d_min) return 1.0;
  if (d >= rp.d_max) return 0.0;
  return std::exp((d - rp.d_min) / (d - rp.d_max));
}

std::optional<double> path_risk(std::span<const Vec2> waypoints,
                                const World& world, const CurrentField& field,
                                double t0, const RiskParams& rp,
                                const EdgeTimeParams& ep,
                                const PathRiskParams& pp) {
  if (world.dynamics.empty() || waypoints.empty()) return 0.0;
  const FrozenField frozen(field, t0);
  const double t_end = t0 + pp.horizon;

  double sum = 0.0;
  long count = 0;
  bool certain = false;
  auto accumulate = [&](Vec2 p, double t) {
    const double r = point_risk(world.min_dynamic_distance(p, t), rp);
    if (r == 1.0) certain = true;
    sum += r;
    ++count;
  };

  double t = t0;
  accumulate(waypoints.front(), t);
  for (std::size_t i = 0; i + 1 < waypoints.size() && !certain; ++i) {
    const Vec2 a = waypoints[i];
    const Vec2 b = waypoints[i + 1];
    const double len = dist(a, b);
    if (len == 0.0) continue;
    const auto pieces = static_cast<long>(std::ceil(len / pp.sample_ds));
    Vec2 prev = a;
    for (long k = 1; k <= pieces; ++k) {
      const Vec2 next =
          k == pieces ? b
                      : a + (b - a) * (static_cast<double>(k) /
                                       static_cast<double>(pieces));
      const auto dt = edge_time(prev, next, frozen, t, ep);
      if (!dt) return std::nullopt;
      t += *dt;
      if (t > t_end) return certain ? 1.0 : sum / static_cast<double>(count);
      accumulate(next, t);
      if (certain) break;
      prev = next;
    }
  }
  if (certain) return 1.0;
  return sum / static_cast<double>(count);
}

std::optional<double> time_risk_cost(double f, double r) {
  if (r >= 1.0) return std::nullopt;
  return f / (1.0 - r);
}

}  // namespace smartoc
