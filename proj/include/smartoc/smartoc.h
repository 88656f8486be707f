/*
 * Copyright 2026 The SMART-OC Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the SMART-OC planner and scenario simulator.
 *
 * Objects are opaque handles created by *_load / *_parse / smartoc_simulate
 * and released with the matching *_free function. Every fallible call returns
 * an smartoc_status; on failure smartoc_last_error() describes the problem
 * (thread-local, valid until the next failing call on the same thread).
 *
 * A single handle must not be used from two threads at once. Distinct
 * handles are independent.
 */

#ifndef SMARTOC_SMARTOC_H_
#define SMARTOC_SMARTOC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SMARTOC_BUILDING_LIBRARY)
#    define SMARTOC_API __declspec(dllexport)
#  else
#    define SMARTOC_API __declspec(dllimport)
#  endif
#else
#  define SMARTOC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum smartoc_status {
  SMARTOC_OK = 0,
  SMARTOC_ERR_PARSE = 1,
  SMARTOC_ERR_VALIDATION = 2,
  SMARTOC_ERR_IO = 3,
  SMARTOC_ERR_MALFORMED_TRACE = 4,
  SMARTOC_ERR_INVALID_ARGUMENT = 5,
  SMARTOC_ERR_INTERNAL = 6
} smartoc_status;

typedef enum smartoc_sim_status {
  SMARTOC_SIM_RUNNING = 0,
  SMARTOC_SIM_GOAL_REACHED = 1,
  SMARTOC_SIM_TIMED_OUT = 2,
  SMARTOC_SIM_STUCK = 3
} smartoc_sim_status;

typedef struct smartoc_scenario smartoc_scenario;
typedef struct smartoc_run smartoc_run;

typedef struct smartoc_metrics {
  double mission_time_s;
  double path_length_m;
  uint64_t replan_count;
  uint64_t obstacle_replans;
  uint64_t current_replans;
  uint64_t failed_replans;
  /* NaN when no timings are available. */
  double mean_replan_wall_clock_s;
  /* +inf when the scenario has no dynamic obstacles. */
  double min_obstacle_center_distance_m;
  int goal_reached;
  smartoc_sim_status final_status;
} smartoc_metrics;

SMARTOC_API const char* smartoc_version(void);
SMARTOC_API const char* smartoc_status_string(smartoc_status status);
SMARTOC_API const char* smartoc_last_error(void);
/* Field path of the last validation error ("risk.d_min_m"), or "". */
SMARTOC_API const char* smartoc_last_error_field(void);

/* Scenarios */
SMARTOC_API smartoc_status smartoc_scenario_load(const char* path,
                                                 smartoc_scenario** out);
SMARTOC_API smartoc_status smartoc_scenario_parse(const char* text, size_t len,
                                                  smartoc_scenario** out);
SMARTOC_API void smartoc_scenario_free(smartoc_scenario* scenario);
SMARTOC_API smartoc_status smartoc_scenario_set_seed(smartoc_scenario* scenario,
                                                     uint64_t seed);
SMARTOC_API smartoc_status smartoc_scenario_set_replanning(
    smartoc_scenario* scenario, int enabled);
SMARTOC_API smartoc_status smartoc_scenario_set_record_wall_clock(
    smartoc_scenario* scenario, int enabled);
SMARTOC_API smartoc_status smartoc_scenario_set_node_budget(
    smartoc_scenario* scenario, uint64_t budget);
/* Normalized YAML; release with smartoc_string_free. */
SMARTOC_API smartoc_status smartoc_scenario_serialize(
    const smartoc_scenario* scenario, char** out);
SMARTOC_API void smartoc_string_free(char* str);

/* Simulation */
SMARTOC_API smartoc_status smartoc_simulate(const smartoc_scenario* scenario,
                                            smartoc_run** out);
SMARTOC_API void smartoc_run_free(smartoc_run* run);
SMARTOC_API smartoc_status smartoc_run_metrics(const smartoc_run* run,
                                               smartoc_metrics* out);
/* Borrowed pointer into the run; *count receives the number of entries. */
SMARTOC_API smartoc_status smartoc_run_replan_wall_clocks(
    const smartoc_run* run, const double** values, size_t* count);
SMARTOC_API smartoc_status smartoc_run_write_trace(const smartoc_run* run,
                                                   const char* path);

/* Traces */
SMARTOC_API smartoc_status smartoc_trace_metrics(const char* path,
                                                 smartoc_metrics* out);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* SMARTOC_SMARTOC_H_ */
