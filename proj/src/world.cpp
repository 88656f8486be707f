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

#include "smartoc/world.hpp"

#include <algorithm>
#include <cmath>

namespace smartoc {

bool StaticObstacle::blocks_segment(Vec2 a, Vec2 b) const {
  if (const auto* disc = std::get_if<Disc>(&shape)) {
    return segment_disc_hit(a, b, *disc);
  }
  return segment_rect_hit(a, b, std::get<Rect>(shape));
}

bool StaticObstacle::contains(Vec2 p) const {
  if (const auto* disc = std::get_if<Disc>(&shape)) {
    return dist(p, disc->center) <= disc->radius;
  }
  return std::get<Rect>(shape).contains(p);
}

double fold_into_interval(double x0, double v, double t, double lo, double hi) {
  const double width = hi - lo;
  if (width <= 0.0) return lo;
  // Unfold onto a circle of circumference 2 * width; the second half of the
  // period is the mirrored leg.
  const double period = 2.0 * width;
  double u = std::fmod(x0 - lo + v * t, period);
  if (u < 0.0) u += period;
  return u <= width ? lo + u : hi - (u - width);
}

Vec2 World::predict_position(const DynamicObstacle& ob, double t) const {
  if (t == 0.0) return ob.pos0;
  return {fold_into_interval(ob.pos0.x, ob.vel.x, t, bounds.min.x, bounds.max.x),
          fold_into_interval(ob.pos0.y, ob.vel.y, t, bounds.min.y, bounds.max.y)};
}

bool World::segment_clear_static(Vec2 a, Vec2 b) const {
  return std::none_of(statics.begin(), statics.end(),
                      [&](const StaticObstacle& s) { return s.blocks_segment(a, b); });
}

bool World::inside_static(Vec2 p) const {
  return std::any_of(statics.begin(), statics.end(),
                     [&](const StaticObstacle& s) { return s.contains(p); });
}

double World::min_dynamic_distance(Vec2 p, double t) const {
  double best = kNoObstacleDistance;
  for (const DynamicObstacle& ob : dynamics) {
    best = std::min(best, dist(p, predict_position(ob, t)));
  }
  return best;
}

std::vector<ObstacleId> World::ohz_intersects_lrz(Vec2 usv, double lrz_radius,
                                                  double t) const {
  std::vector<ObstacleId> ids;
  for (const DynamicObstacle& ob : dynamics) {
    if (dist(usv, predict_position(ob, t)) <= lrz_radius + ob.ohz_radius) {
      ids.push_back(ob.id);
    }
  }
  return ids;
}

}  // namespace smartoc
