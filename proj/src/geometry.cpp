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

#include "smartoc/geometry.hpp"

#include <algorithm>
#include <utility>

namespace smartoc {

double dist(Vec2 p, Vec2 q) { return (p - q).norm(); }

Vec2 closest_point_on_segment(Vec2 a, Vec2 b, Vec2 p) {
  const Vec2 ab = b - a;
  const double len2 = ab.squared_norm();
  if (len2 == 0.0) return a;
  const double s = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return a + ab * s;
}

double point_segment_distance(Vec2 a, Vec2 b, Vec2 p) {
  return dist(p, closest_point_on_segment(a, b, p));
}

bool segment_disc_hit(Vec2 a, Vec2 b, const Disc& d) {
  // Orientation-independent: clamp from whichever endpoint is lexicographically
  // smaller so that (a, b) and (b, a) evaluate the same arithmetic.
  if (b.x < a.x || (b.x == a.x && b.y < a.y)) std::swap(a, b);
  return point_segment_distance(a, b, d.center) <= d.radius;
}

bool segment_rect_hit(Vec2 a, Vec2 b, const Rect& r) {
  if (r.contains(a) || r.contains(b)) return true;
  // Liang-Barsky clipping of the parametric segment against the slab pair.
  const Vec2 d = b - a;
  double t0 = 0.0;
  double t1 = 1.0;
  const double p[4] = {-d.x, d.x, -d.y, d.y};
  const double q[4] = {a.x - r.min.x, r.max.x - a.x, a.y - r.min.y,
                       r.max.y - a.y};
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0.0) {
      if (q[i] < 0.0) return false;
      continue;
    }
    const double t = q[i] / p[i];
    if (p[i] < 0.0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
    if (t0 > t1) return false;
  }
  return true;
}

}  // namespace smartoc
