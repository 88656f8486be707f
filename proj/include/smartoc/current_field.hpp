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

#ifndef SMARTOC_CURRENT_FIELD_HPP_
#define SMARTOC_CURRENT_FIELD_HPP_

#include <span>
#include <vector>

#include "smartoc/geometry.hpp"

namespace smartoc {

enum class Spin { kCounterClockwise = 1, kClockwise = -1 };

// Rankine vortex whose center drifts linearly: center(t) = center0 + t * drift.
struct Vortex {
  Vec2 center0;
  Vec2 drift;
  double peak_speed = 0.0;   // tangential speed at the core radius, m/s
  double core_radius = 1.0;  // m
  Spin spin = Spin::kCounterClockwise;

  Vec2 center_at(double t) const { return center0 + drift * t; }
  // Velocity induced at p at time t.
  Vec2 velocity(Vec2 p, double t) const;
};

// Uniform ambient flow plus a set of moving vortices. Immutable once built.
struct CurrentField {
  Vec2 ambient;
  std::vector<Vortex> vortices;

  Vec2 sample(Vec2 p, double t) const;
};

// Denominator floor for deviation_ratio, m/s.
inline constexpr double kDeviationFloor = 0.1;

// max_i |now_i - reference_i| / max(|reference_i|, kDeviationFloor), where
// now_i = field.sample(samples[i]). Throws LengthMismatch when the two lists
// differ in length or are empty.
struct ProbeSample {
  Vec2 pos;
  double t = 0.0;
};
double deviation_ratio(const CurrentField& field,
                       std::span<const ProbeSample> samples,
                       std::span<const Vec2> reference);

}  // namespace smartoc

#endif  // SMARTOC_CURRENT_FIELD_HPP_
