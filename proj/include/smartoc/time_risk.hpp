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

// Time and risk costs for candidate paths.
//
// Travel times are computed from the ground speed a vehicle of fixed
// water-relative speed achieves along a track while crabbing against the
// local current. Risk comes from the center distance to the nearest predicted
// dynamic obstacle:
//
//   r(d) = 1                                 d <= d_min
//        = exp((d - d_min) / (d - d_max))    d_min < d < d_max
//        = 0                                 d >= d_max
//
// and a candidate's time-risk cost is f / (1 - r).
//
// "Infeasible" (the current defeats the vehicle) and "inadmissible" (certain
// collision) are both reported as an empty optional.

#ifndef SMARTOC_TIME_RISK_HPP_
#define SMARTOC_TIME_RISK_HPP_

#include <optional>
#include <span>

#include "smartoc/current_field.hpp"
#include "smartoc/geometry.hpp"
#include "smartoc/world.hpp"

namespace smartoc {

struct RiskParams {
  double d_min = 2.0;  // inner safety threshold, m
  double d_max = 5.0;  // outer safety threshold, m
};

struct EdgeTimeParams {
  double sub_step = 1.0;   // edge discretization length, m
  double usv_speed = 4.0;  // water-relative speed, m/s
};

// Sampling controls for path_risk.
struct PathRiskParams {
  double sample_ds = 1.0;  // m
  double horizon = 15.0;   // s
};

// The field with its clock stopped at `epoch`. Every cost evaluated inside one
// replanning event sees the same snapshot.
class FrozenField {
 public:
  FrozenField(const CurrentField& field, double epoch)
      : field_(&field), epoch_(epoch) {}
  // Holds a pointer; the field must outlive the view.
  FrozenField(CurrentField&&, double) = delete;
  Vec2 sample(Vec2 p, double /*t*/) const { return field_->sample(p, epoch_); }
  double epoch() const { return epoch_; }

 private:
  const CurrentField* field_;
  double epoch_;
};

// Ground speed along unit vector `track_dir`, or nullopt when the current's
// cross-track component exceeds `speed` or the resulting along-track speed is
// not positive.
std::optional<double> effective_speed(double speed, Vec2 current,
                                      Vec2 track_dir);

// Water-relative heading that realizes `ground_speed` along `track_dir`.
Vec2 heading_for(double speed, Vec2 current, Vec2 track_dir,
                 double ground_speed);

// Traversal time of a != b, split into ceil(|b - a| / sub_step) equal pieces,
// each using the field at its midpoint and the running arrival time.
std::optional<double> edge_time(Vec2 a, Vec2 b, const CurrentField& field,
                                double t_start, const EdgeTimeParams& p);
std::optional<double> edge_time(Vec2 a, Vec2 b, const FrozenField& field,
                                double t_start, const EdgeTimeParams& p);

double point_risk(double d, const RiskParams& rp);

// Mean point risk over samples taken every sample_ds along the polyline
// (vertices included) whose estimated arrival time is within the horizon of
// t0. Exactly 1 when any sample sits inside the d_min band; 0 when the world
// has no dynamic obstacles. Arrival times use the field frozen at t0.
std::optional<double> path_risk(std::span<const Vec2> waypoints,
                                const World& world, const CurrentField& field,
                                double t0, const RiskParams& rp,
                                const EdgeTimeParams& ep,
                                const PathRiskParams& pp);

// f / (1 - r); nullopt when r == 1.
std::optional<double> time_risk_cost(double f, double r);

}  // namespace smartoc

#endif  // SMARTOC_TIME_RISK_HPP_
