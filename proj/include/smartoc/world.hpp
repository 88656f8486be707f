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

#ifndef SMARTOC_WORLD_HPP_
#define SMARTOC_WORLD_HPP_

#include <cstdint>
#include <limits>
#include <variant>
#include <vector>

#include "smartoc/geometry.hpp"

namespace smartoc {

using ObstacleId = std::int64_t;

struct StaticObstacle {
  std::variant<Disc, Rect> shape;

  bool blocks_segment(Vec2 a, Vec2 b) const;
  bool contains(Vec2 p) const;
};

// Constant-velocity mover carrying a circular hazard zone (OHZ).
struct DynamicObstacle {
  ObstacleId id = 0;
  Vec2 pos0;
  Vec2 vel;
  double ohz_radius = 1.0;
};

inline constexpr double kNoObstacleDistance =
    std::numeric_limits<double>::infinity();

struct World {
  Rect bounds;
  std::vector<StaticObstacle> statics;
  std::vector<DynamicObstacle> dynamics;

  // Constant-velocity advance with specular reflection off the bounds.
  Vec2 predict_position(const DynamicObstacle& ob, double t) const;

  bool segment_clear_static(Vec2 a, Vec2 b) const;
  bool inside_static(Vec2 p) const;

  // Center-to-center distance to the nearest dynamic obstacle at time t;
  // kNoObstacleDistance when there are none.
  double min_dynamic_distance(Vec2 p, double t) const;

  // Ids of obstacles whose OHZ disc overlaps the LRZ disc around `usv`,
  // in declaration order.
  std::vector<ObstacleId> ohz_intersects_lrz(Vec2 usv, double lrz_radius,
                                             double t) const;
};

// Reflects a 1-D coordinate moving as x0 + v t into [lo, hi].
double fold_into_interval(double x0, double v, double t, double lo, double hi);

}  // namespace smartoc

#endif  // SMARTOC_WORLD_HPP_
