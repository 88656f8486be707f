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

#include "smartoc/simulator.hpp"

#include <utility>

#include "smartoc/error.hpp"

namespace smartoc {

namespace {

// Progress smaller than this does not reset the stuck timer.
constexpr double kProgressEpsilon = 1e-6;

}  // namespace

Simulation::Simulation(ScenarioConfig config)
    : config_(std::move(config)),
      tree_(Tree::build(config_.world, config_.tree_params())),
      replanner_(tree_, config_.replan) {
  trace_.header.scenario_hash = scenario_hash(config_);
  trace_.header.seed = config_.sim.seed;
  trace_.header.scenario = serialize_scenario(config_);

  state_.usv_pos = config_.start;
  state_.best_goal_distance = dist(config_.start, config_.goal);
  try {
    state_.active_path = initial_path(tree_, config_.start, config_.world);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoConnection) throw;
    state_.status = SimStatus::kStuck;
    return;
  }
  update_status();
  record_tick(std::nullopt);
}

std::vector<Vec2> Simulation::reference_samples(const std::vector<Vec2>& probes) const {
  std::vector<Vec2> ref;
  ref.reserve(probes.size());
  for (Vec2 p : probes) {
    ref.push_back(state_.plan_epoch ? config_.field.sample(p, *state_.plan_epoch) : Vec2{});
  }
  return ref;
}

void Simulation::step() {
  if (state_.status != SimStatus::kRunning) return;
  SimState& s = state_;
  ++s.tick;
  s.t = static_cast<double>(s.tick) * config_.sim.dt;

  std::optional<Trigger> trigger;
  if (config_.sim.replanning_enabled) {
    const std::vector<Vec2> probes = lrz_probe_points(
        s.active_path.waypoints, config_.replan.lrz.radius,
        config_.replan.lrz.current_probe_count);
    trigger = check_triggers(s.usv_pos, s.active_path, config_.world,
                             config_.field, reference_samples(probes),
                             config_.replan.lrz, s.t);
    // A holding vehicle retries every tick even when nothing new fired.
    if (!trigger && s.holding && s.held_trigger) {
      trigger = *s.held_trigger;
      trigger->time = s.t;
    }
  }

  const bool cooling_down = s.last_replan_tick && *s.last_replan_tick == s.tick - 1;
  if (trigger && !cooling_down) {
    ReplanAttempt attempt =
        replanner_.try_replan(s.usv_pos, config_.world, config_.field, s.t, *trigger);
    ReplanRecord rec;
    rec.t = s.t;
    rec.trigger = trigger->kind;
    rec.obstacles = trigger->obstacles;
    if (trigger->kind == TriggerKind::kCurrentDeviation) {
      rec.deviation_ratio = trigger->deviation_ratio;
    }
    rec.candidates_evaluated = attempt.candidates_evaluated;
    if (config_.sim.record_wall_clock) rec.wall_clock = attempt.wall_clock;
    if (attempt.result) {
      rec.chosen_node = attempt.result->chosen_node;
      s.active_path = std::move(attempt.result->new_path);
      s.plan_epoch = s.t;
      s.holding = false;
      s.held_trigger.reset();
    } else {
      s.holding = true;
      s.held_trigger = *trigger;
    }
    s.last_replan_tick = s.tick;
    trace_.records.emplace_back(std::move(rec));
  }

  if (!s.holding) follow_path();
  update_status();
  record_tick(trigger ? std::optional<TriggerKind>(trigger->kind) : std::nullopt);
}

void Simulation::follow_path() {
  SimState& s = state_;
  Path& path = s.active_path;
  double time_left = config_.sim.dt;
  while (time_left > 0.0 && path.waypoints.size() > 1) {
    const Vec2 target = path.waypoints[1];
    const Vec2 seg = target - s.usv_pos;
    const double len = seg.norm();
    bool reached = len == 0.0;
    if (!reached) {
      const Vec2 dir = seg / len;
      const auto v = effective_speed(config_.usv_speed(),
                                     config_.field.sample(s.usv_pos, s.t), dir);
      // The current defeats the vehicle on this track: stall for the tick.
      if (!v) break;
      const double travel = *v * time_left;
      if (travel >= len) {
        time_left -= len / *v;
        reached = true;
      } else {
        s.usv_pos = s.usv_pos + dir * travel;
        time_left = 0.0;
      }
    }
    if (reached) {
      s.usv_pos = target;
      path.waypoints.erase(path.waypoints.begin() + 1);
      // Drop tree nodes up to and including the one at this waypoint.
      while (!path.nodes.empty()) {
        const bool at_target = tree_.node(path.nodes.front()).pos == target;
        path.nodes.erase(path.nodes.begin());
        if (at_target) break;
      }
    }
  }
  path.waypoints.front() = s.usv_pos;
}

void Simulation::update_status() {
  SimState& s = state_;
  const double to_goal = dist(s.usv_pos, config_.goal);
  if (to_goal < s.best_goal_distance - kProgressEpsilon) {
    s.best_goal_distance = to_goal;
    s.last_progress_time = s.t;
  }
  if (to_goal <= config_.sim.goal_tolerance) {
    s.status = SimStatus::kGoalReached;
  } else if (s.t >= config_.sim.timeout) {
    s.status = SimStatus::kTimedOut;
  } else if (s.t - s.last_progress_time >= config_.sim.stuck_window) {
    s.status = SimStatus::kStuck;
  }
}

void Simulation::record_tick(std::optional<TriggerKind> trigger) {
  TickRecord rec;
  rec.t = state_.t;
  rec.usv = state_.usv_pos;
  rec.path_nodes = state_.active_path.nodes;
  rec.path = state_.active_path.waypoints;
  rec.obstacles.reserve(config_.world.dynamics.size());
  for (const DynamicObstacle& ob : config_.world.dynamics) {
    rec.obstacles.push_back(config_.world.predict_position(ob, state_.t));
  }
  rec.status = state_.status;
  rec.trigger = trigger;
  trace_.records.emplace_back(std::move(rec));
}

SimStatus Simulation::run_to_end() {
  while (state_.status == SimStatus::kRunning) step();
  return state_.status;
}

RunOutput run(const ScenarioConfig& scenario) {
  validate_scenario(scenario);
  Simulation sim(scenario);
  sim.run_to_end();
  RunOutput out;
  out.trace = sim.trace();
  out.metrics = metrics(out.trace);
  out.metrics.final_status = sim.state().status;
  out.metrics.goal_reached = sim.state().status == SimStatus::kGoalReached;
  return out;
}

}  // namespace smartoc
