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

#include "smartoc/current_field.hpp"

#include <algorithm>

#include "smartoc/error.hpp"

namespace smartoc {

Vec2 Vortex::velocity(Vec2 p, double t) const {
  const Vec2 r = p - center_at(t);
  const double rho = r.norm();
  if (rho == 0.0) return {};
  const double v_theta = rho <= core_radius ? peak_speed * (rho / core_radius)
                                            : peak_speed * (core_radius / rho);
  // Unit tangent for counterclockwise rotation is the radial unit vector
  // rotated by +90 degrees.
  const Vec2 tangent{-r.y / rho, r.x / rho};
  const double sign = spin == Spin::kCounterClockwise ? 1.0 : -1.0;
  return tangent * (sign * v_theta);
}

Vec2 CurrentField::sample(Vec2 p, double t) const {
  Vec2 v = ambient;
  for (const Vortex& vx : vortices) v += vx.velocity(p, t);
  return v;
}

double deviation_ratio(const CurrentField& field,
                       std::span<const ProbeSample> samples,
                       std::span<const Vec2> reference) {
  if (samples.size() != reference.size() || samples.empty()) {
    throw Error(ErrorCode::kLengthMismatch,
                "deviation_ratio: " + std::to_string(samples.size()) +
                    " samples vs " + std::to_string(reference.size()) +
                    " reference vectors");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Vec2 now = field.sample(samples[i].pos, samples[i].t);
    const double denom = std::max(reference[i].norm(), kDeviationFloor);
    worst = std::max(worst, (now - reference[i]).norm() / denom);
  }
  return worst;
}

}  // namespace smartoc
