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

// Planar vector math and intersection predicates. Everything is in meters
// (or m/s when a Vec2 carries a velocity). Touching counts as intersecting.

#ifndef SMARTOC_GEOMETRY_HPP_
#define SMARTOC_GEOMETRY_HPP_

#include <cmath>

namespace smartoc {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double k) const { return {x * k, y * k}; }
  constexpr Vec2 operator/(double k) const { return {x / k, y / k}; }
  constexpr Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr bool operator==(const Vec2&) const = default;

  double norm() const { return std::hypot(x, y); }
  constexpr double squared_norm() const { return x * x + y * y; }
};

constexpr Vec2 operator*(double k, Vec2 v) { return v * k; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
// z-component of the 3-D cross product.
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

struct Disc {
  Vec2 center;
  double radius = 1.0;
};

// Axis-aligned, closed.
struct Rect {
  Vec2 min;
  Vec2 max;

  constexpr bool contains(Vec2 p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
  }
  constexpr double width() const { return max.x - min.x; }
  constexpr double height() const { return max.y - min.y; }
};

double dist(Vec2 p, Vec2 q);

// Closest point to p on segment ab (a when a == b).
Vec2 closest_point_on_segment(Vec2 a, Vec2 b, Vec2 p);
double point_segment_distance(Vec2 a, Vec2 b, Vec2 p);

bool segment_disc_hit(Vec2 a, Vec2 b, const Disc& d);
bool segment_rect_hit(Vec2 a, Vec2 b, const Rect& r);

inline bool is_finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

}  // namespace smartoc

#endif  // SMARTOC_GEOMETRY_HPP_
