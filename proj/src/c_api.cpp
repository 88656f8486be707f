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

#include "smartoc/smartoc.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "smartoc/error.hpp"
#include "smartoc/scenario.hpp"
#include "smartoc/simulator.hpp"
#include "smartoc/trace.hpp"

struct smartoc_scenario {
  smartoc::ScenarioConfig config;
};

struct smartoc_run {
  smartoc::RunOutput output;
};

namespace {

thread_local std::string g_last_error;
thread_local std::string g_last_error_field;

smartoc_status fail(smartoc_status status, std::string message,
                    std::string field = {}) {
  g_last_error = std::move(message);
  g_last_error_field = std::move(field);
  return status;
}

smartoc_status status_of(smartoc::ErrorCode code) {
  using smartoc::ErrorCode;
  switch (code) {
    case ErrorCode::kParse: return SMARTOC_ERR_PARSE;
    case ErrorCode::kValidation: return SMARTOC_ERR_VALIDATION;
    case ErrorCode::kIo: return SMARTOC_ERR_IO;
    case ErrorCode::kMalformedTrace: return SMARTOC_ERR_MALFORMED_TRACE;
    case ErrorCode::kInvalidRoot: return SMARTOC_ERR_VALIDATION;
    default: return SMARTOC_ERR_INTERNAL;
  }
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
smartoc_status guarded(Fn&& fn) {
  try {
    fn();
    return SMARTOC_OK;
  } catch (const smartoc::Error& e) {
    return fail(status_of(e.code()), e.what(), e.where());
  } catch (const std::bad_alloc&) {
    return fail(SMARTOC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SMARTOC_ERR_INTERNAL, e.what());
  }
}

smartoc_sim_status to_c(smartoc::SimStatus s) {
  switch (s) {
    case smartoc::SimStatus::kRunning: return SMARTOC_SIM_RUNNING;
    case smartoc::SimStatus::kGoalReached: return SMARTOC_SIM_GOAL_REACHED;
    case smartoc::SimStatus::kTimedOut: return SMARTOC_SIM_TIMED_OUT;
    case smartoc::SimStatus::kStuck: return SMARTOC_SIM_STUCK;
  }
  return SMARTOC_SIM_RUNNING;
}

void fill(const smartoc::Metrics& m, smartoc_metrics* out) {
  out->mission_time_s = m.mission_time;
  out->path_length_m = m.path_length;
  out->replan_count = m.replan_count;
  out->obstacle_replans = m.obstacle_replans;
  out->current_replans = m.current_replans;
  out->failed_replans = m.failed_replans;
  out->mean_replan_wall_clock_s =
      m.mean_replan_wall_clock().value_or(std::numeric_limits<double>::quiet_NaN());
  out->min_obstacle_center_distance_m = m.min_obstacle_center_distance;
  out->goal_reached = m.goal_reached ? 1 : 0;
  out->final_status = to_c(m.final_status);
}

}  // namespace

extern "C" {

const char* smartoc_version(void) { return "1.0.0"; }

const char* smartoc_status_string(smartoc_status status) {
  switch (status) {
    case SMARTOC_OK: return "ok";
    case SMARTOC_ERR_PARSE: return "parse error";
    case SMARTOC_ERR_VALIDATION: return "validation error";
    case SMARTOC_ERR_IO: return "i/o error";
    case SMARTOC_ERR_MALFORMED_TRACE: return "malformed trace";
    case SMARTOC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SMARTOC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* smartoc_last_error(void) { return g_last_error.c_str(); }
const char* smartoc_last_error_field(void) { return g_last_error_field.c_str(); }

smartoc_status smartoc_scenario_load(const char* path, smartoc_scenario** out) {
  if (path == nullptr || out == nullptr) {
    return fail(SMARTOC_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    *out = new smartoc_scenario{smartoc::load_scenario_file(path)};
  });
}

smartoc_status smartoc_scenario_parse(const char* text, size_t len,
                                      smartoc_scenario** out) {
  if (text == nullptr || out == nullptr) {
    return fail(SMARTOC_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    *out = new smartoc_scenario{smartoc::parse_scenario(std::string_view(text, len))};
  });
}

void smartoc_scenario_free(smartoc_scenario* scenario) { delete scenario; }

smartoc_status smartoc_scenario_set_seed(smartoc_scenario* scenario, uint64_t seed) {
  if (scenario == nullptr) return fail(SMARTOC_ERR_INVALID_ARGUMENT, "null scenario");
  scenario->config.sim.seed = seed;
  return SMARTOC_OK;
}

smartoc_status smartoc_scenario_set_replanning(smartoc_scenario* scenario, int enabled) {
  if (scenario == nullptr) return fail(SMARTOC_ERR_INVALID_ARGUMENT, "null scenario");
  scenario->config.sim.replanning_enabled = enabled != 0;
  return SMARTOC_OK;
}

smartoc_status smartoc_scenario_set_record_wall_clock(smartoc_scenario* scenario,
                                                      int enabled) {
  if (scenario == nullptr) return fail(SMARTOC_ERR_INVALID_ARGUMENT, "null scenario");
  scenario->config.sim.record_wall_clock = enabled != 0;
  return SMARTOC_OK;
}

smartoc_status smartoc_scenario_set_node_budget(smartoc_scenario* scenario,
                                                uint64_t budget) {
  if (scenario == nullptr) return fail(SMARTOC_ERR_INVALID_ARGUMENT, "null scenario");
  scenario->config.rrt.node_budget = static_cast<std::size_t>(budget);
  return SMARTOC_OK;
}

smartoc_status smartoc_scenario_serialize(const smartoc_scenario* scenario, char** out) {
  if (scenario == nullptr || out == nullptr) {
    return fail(SMARTOC_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    const std::string text = smartoc::serialize_scenario(scenario->config);
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

void smartoc_string_free(char* str) { delete[] str; }

smartoc_status smartoc_simulate(const smartoc_scenario* scenario, smartoc_run** out) {
  if (scenario == nullptr || out == nullptr) {
    return fail(SMARTOC_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] { *out = new smartoc_run{smartoc::run(scenario->config)}; });
}

void smartoc_run_free(smartoc_run* run) { delete run; }

smartoc_status smartoc_run_metrics(const smartoc_run* run, smartoc_metrics* out) {
  if (run == nullptr || out == nullptr) {
    return fail(SMARTOC_ERR_INVALID_ARGUMENT, "null argument");
  }
  fill(run->output.metrics, out);
  return SMARTOC_OK;
}

smartoc_status smartoc_run_replan_wall_clocks(const smartoc_run* run,
                                              const double** values, size_t* count) {
  if (run == nullptr || values == nullptr || count == nullptr) {
    return fail(SMARTOC_ERR_INVALID_ARGUMENT, "null argument");
  }
  const auto& clocks = run->output.metrics.replan_wall_clocks;
  *values = clocks.data();
  *count = clocks.size();
  return SMARTOC_OK;
}

smartoc_status smartoc_run_write_trace(const smartoc_run* run, const char* path) {
  if (run == nullptr || path == nullptr) {
    return fail(SMARTOC_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] { smartoc::write_trace_file(run->output.trace, path); });
}

smartoc_status smartoc_trace_metrics(const char* path, smartoc_metrics* out) {
  if (path == nullptr || out == nullptr) {
    return fail(SMARTOC_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] { fill(smartoc::metrics(smartoc::read_trace_file(path)), out); });
}

}  // extern "C"
