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

// Fixed-timestep closed-loop simulation. A run is single-threaded and fully
// determined by its scenario (including the seed); independent runs share no
// state and may execute in parallel.

#ifndef SMARTOC_SIMULATOR_HPP_
#define SMARTOC_SIMULATOR_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "smartoc/planner_tree.hpp"
#include "smartoc/replanner.hpp"
#include "smartoc/scenario.hpp"
#include "smartoc/trace.hpp"

namespace smartoc {

struct SimState {
  std::int64_t tick = 0;
  double t = 0.0;
  Vec2 usv_pos;
  Path active_path;
  // Time whose field the active plan was made with; empty for the baseline
  // path, which assumes still water.
  std::optional<double> plan_epoch;
  bool holding = false;  // no admissible node at the last attempt
  std::optional<Trigger> held_trigger;
  std::optional<std::int64_t> last_replan_tick;
  double best_goal_distance = 0.0;
  double last_progress_time = 0.0;
  SimStatus status = SimStatus::kRunning;
};

class Simulation {
 public:
  // Builds the tree and the baseline path. A start with no clear connection to
  // the tree yields a Stuck simulation with a header-only trace.
  explicit Simulation(ScenarioConfig config);

  Simulation(const Simulation&) = delete;
  Simulation& operator=(const Simulation&) = delete;

  // Advances one tick; a no-op once the status is terminal.
  void step();
  SimStatus run_to_end();

  const SimState& state() const { return state_; }
  const Trace& trace() const { return trace_; }
  const Tree& tree() const { return tree_; }
  const ScenarioConfig& config() const { return config_; }

  // Field vectors the active plan assumed at the given probe points.
  std::vector<Vec2> reference_samples(const std::vector<Vec2>& probes) const;

 private:
  void follow_path();
  void update_status();
  void record_tick(std::optional<TriggerKind> trigger);

  ScenarioConfig config_;
  Tree tree_;
  Replanner replanner_;
  SimState state_;
  Trace trace_;
};

struct RunOutput {
  Trace trace;
  Metrics metrics;
};

RunOutput run(const ScenarioConfig& scenario);

}  // namespace smartoc

#endif  // SMARTOC_SIMULATOR_HPP_
