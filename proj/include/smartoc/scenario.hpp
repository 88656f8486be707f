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

// Scenario configuration: a full experiment description plus its YAML
// reader/writer. Omitted fields take the defaults below (USV 4 m/s, obstacles
// 3 m/s, LRZ 5 m, currents 1-8 m/s).

#ifndef SMARTOC_SCENARIO_HPP_
#define SMARTOC_SCENARIO_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "smartoc/current_field.hpp"
#include "smartoc/planner_tree.hpp"
#include "smartoc/replanner.hpp"
#include "smartoc/world.hpp"

namespace smartoc {

struct SimParams {
  double dt = 0.1;               // s
  double goal_tolerance = 1.0;   // m
  double timeout = 300.0;        // s
  double stuck_window = 30.0;    // s without progress toward the goal
  std::uint64_t seed = 1;
  bool replanning_enabled = true;
  bool record_wall_clock = true;  // false writes null timings (reproducible traces)
};

struct ScenarioConfig {
  World world;
  Vec2 start;
  Vec2 goal;
  double obstacle_speed = 3.0;  // m/s, every dynamic obstacle moves at this speed
  CurrentField field;
  double current_speed_min = 1.0;  // m/s
  double current_speed_max = 8.0;  // m/s
  RrtParams rrt;                   // goal_root and seed are taken from goal / sim.seed
  ReplanParams replan;
  SimParams sim;

  double usv_speed() const { return replan.edge.usv_speed; }
  // RRT parameters with the goal root and seed filled in.
  RrtParams tree_params() const;
};

// Throws ParseError on malformed YAML and ValidationError (with a field path
// in Error::where()) on constraint violations.
ScenarioConfig parse_scenario(std::string_view text);
ScenarioConfig load_scenario_file(const std::string& path);

// Normalized document: every field written explicitly, shortest round-trip
// float formatting. parse_scenario(serialize_scenario(c)) == c.
std::string serialize_scenario(const ScenarioConfig& config);

// Throws ValidationError on the first violated constraint.
void validate_scenario(const ScenarioConfig& config);

// 64-bit FNV-1a of the normalized document, as 16 hex digits.
std::string scenario_hash(const ScenarioConfig& config);

}  // namespace smartoc

#endif  // SMARTOC_SCENARIO_HPP_
