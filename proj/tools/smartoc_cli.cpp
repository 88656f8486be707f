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

// smartoc: run, benchmark and validate scenarios.
//
// Exit codes: 0 success / goal reached, 2 timed out or stuck, 3 validation
// failure, 4 I/O failure.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "smartoc/smartoc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotReached = 2;
constexpr int kExitValidation = 3;
constexpr int kExitIo = 4;

struct ScenarioDeleter {
  void operator()(smartoc_scenario* s) const { smartoc_scenario_free(s); }
};
struct RunDeleter {
  void operator()(smartoc_run* r) const { smartoc_run_free(r); }
};
using ScenarioPtr = std::unique_ptr<smartoc_scenario, ScenarioDeleter>;
using RunPtr = std::unique_ptr<smartoc_run, RunDeleter>;

int exit_code_for(smartoc_status status) {
  switch (status) {
    case SMARTOC_OK: return kExitOk;
    case SMARTOC_ERR_IO: return kExitIo;
    case SMARTOC_ERR_PARSE:
    case SMARTOC_ERR_VALIDATION: return kExitValidation;
    default: return kExitIo;
  }
}

int report(smartoc_status status) {
  const char* field = smartoc_last_error_field();
  std::fprintf(stderr, "error: %s: %s", smartoc_status_string(status),
               smartoc_last_error());
  if (field != nullptr && field[0] != '\0') std::fprintf(stderr, " [field %s]", field);
  std::fprintf(stderr, "\n");
  return exit_code_for(status);
}

const char* sim_status_name(smartoc_sim_status s) {
  switch (s) {
    case SMARTOC_SIM_RUNNING: return "running";
    case SMARTOC_SIM_GOAL_REACHED: return "goal_reached";
    case SMARTOC_SIM_TIMED_OUT: return "timed_out";
    case SMARTOC_SIM_STUCK: return "stuck";
  }
  return "unknown";
}

nlohmann::ordered_json optional_number(double v) {
  return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json metrics_json(const smartoc_metrics& m) {
  nlohmann::ordered_json j;
  j["status"] = sim_status_name(m.final_status);
  j["goal_reached"] = m.goal_reached != 0;
  j["mission_time_s"] = m.mission_time_s;
  j["path_length_m"] = m.path_length_m;
  j["replan_count"] = m.replan_count;
  j["obstacle_replans"] = m.obstacle_replans;
  j["current_replans"] = m.current_replans;
  j["failed_replans"] = m.failed_replans;
  j["mean_replan_wall_clock_s"] = optional_number(m.mean_replan_wall_clock_s);
  j["min_obstacle_center_distance_m"] = optional_number(m.min_obstacle_center_distance_m);
  return j;
}

// Nearest-rank percentile of a non-empty sorted sample.
double percentile(const std::vector<double>& sorted, double q) {
  const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(sorted.size())));
  return sorted[std::clamp<std::size_t>(rank, 1, sorted.size()) - 1];
}

double median(const std::vector<double>& sorted) {
  const std::size_t n = sorted.size();
  return n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

smartoc_status load(const std::string& path, ScenarioPtr& out) {
  smartoc_scenario* raw = nullptr;
  const smartoc_status st = smartoc_scenario_load(path.c_str(), &raw);
  out.reset(raw);
  return st;
}

int cmd_validate(const std::string& scenario_path) {
  ScenarioPtr scenario;
  if (const auto st = load(scenario_path, scenario); st != SMARTOC_OK) return report(st);
  std::printf("%s: valid\n", scenario_path.c_str());
  return kExitOk;
}

int cmd_run(const std::string& scenario_path, std::uint64_t seed,
            const std::string& out_path, bool quiet, bool no_timing,
            bool no_replan) {
  ScenarioPtr scenario;
  if (const auto st = load(scenario_path, scenario); st != SMARTOC_OK) return report(st);
  smartoc_scenario_set_seed(scenario.get(), seed);
  if (no_timing) smartoc_scenario_set_record_wall_clock(scenario.get(), 0);
  if (no_replan) smartoc_scenario_set_replanning(scenario.get(), 0);

  smartoc_run* raw = nullptr;
  if (const auto st = smartoc_simulate(scenario.get(), &raw); st != SMARTOC_OK) {
    return report(st);
  }
  RunPtr run(raw);
  if (const auto st = smartoc_run_write_trace(run.get(), out_path.c_str());
      st != SMARTOC_OK) {
    return report(st);
  }
  smartoc_metrics m{};
  smartoc_run_metrics(run.get(), &m);
  if (!quiet) std::printf("%s\n", metrics_json(m).dump(2).c_str());
  return m.goal_reached ? kExitOk : kExitNotReached;
}

int cmd_bench(const std::string& scenario_path, unsigned seeds,
              std::uint64_t first_seed, const std::string& out_path,
              bool no_replan, std::int64_t node_budget) {
  ScenarioPtr scenario;
  if (const auto st = load(scenario_path, scenario); st != SMARTOC_OK) return report(st);
  if (no_replan) smartoc_scenario_set_replanning(scenario.get(), 0);
  if (node_budget >= 0) {
    smartoc_scenario_set_node_budget(scenario.get(), static_cast<std::uint64_t>(node_budget));
  }

  nlohmann::ordered_json runs = nlohmann::ordered_json::array();
  std::vector<double> clocks;
  unsigned reached = 0;
  for (unsigned i = 0; i < seeds; ++i) {
    const std::uint64_t seed = first_seed + i;
    smartoc_scenario_set_seed(scenario.get(), seed);
    smartoc_run* raw = nullptr;
    if (const auto st = smartoc_simulate(scenario.get(), &raw); st != SMARTOC_OK) {
      return report(st);
    }
    RunPtr run(raw);
    smartoc_metrics m{};
    smartoc_run_metrics(run.get(), &m);
    const double* values = nullptr;
    std::size_t count = 0;
    smartoc_run_replan_wall_clocks(run.get(), &values, &count);
    clocks.insert(clocks.end(), values, values + count);
    reached += m.goal_reached ? 1U : 0U;

    nlohmann::ordered_json j;
    j["seed"] = seed;
    j.update(metrics_json(m));
    runs.push_back(j);
  }

  std::sort(clocks.begin(), clocks.end());
  nlohmann::ordered_json agg;
  agg["runs"] = seeds;
  agg["goal_reached"] = reached;
  agg["replan_events"] = clocks.size();
  if (clocks.empty()) {
    agg["mean_replan_wall_clock_s"] = nullptr;
    agg["median_replan_wall_clock_s"] = nullptr;
    agg["p99_replan_wall_clock_s"] = nullptr;
    agg["max_replan_wall_clock_s"] = nullptr;
  } else {
    double sum = 0.0;
    for (double c : clocks) sum += c;
    agg["mean_replan_wall_clock_s"] = sum / static_cast<double>(clocks.size());
    agg["median_replan_wall_clock_s"] = median(clocks);
    agg["p99_replan_wall_clock_s"] = percentile(clocks, 0.99);
    agg["max_replan_wall_clock_s"] = clocks.back();
  }

  nlohmann::ordered_json doc;
  doc["scenario"] = scenario_path;
  doc["aggregate"] = agg;
  doc["per_seed"] = runs;

  std::ofstream out(out_path);
  if (!out) {
    std::fprintf(stderr, "error: cannot open '%s' for writing\n", out_path.c_str());
    return kExitIo;
  }
  out << doc.dump(2) << '\n';
  if (!out) {
    std::fprintf(stderr, "error: failed writing '%s'\n", out_path.c_str());
    return kExitIo;
  }
  std::printf("%s\n", agg.dump(2).c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SMART-OC time-risk replanning simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", smartoc_version());

  std::string scenario_path;
  std::string out_path;
  std::uint64_t seed = 1;
  bool quiet = false;
  bool no_timing = false;
  bool no_replan = false;

  auto* run = app.add_subcommand("run", "Simulate one scenario and write its trace");
  run->add_option("--scenario", scenario_path, "Scenario YAML file")->required();
  run->add_option("--seed", seed, "Random seed for tree construction")->required();
  run->add_option("--out", out_path, "Trace output path (JSON lines)")->required();
  run->add_flag("--quiet", quiet, "Do not print the metrics summary");
  run->add_flag("--no-timing", no_timing, "Write null replan timings (reproducible traces)");
  run->add_flag("--no-replan", no_replan, "Follow the baseline path without replanning");

  unsigned seeds = 20;
  std::uint64_t first_seed = 1;
  std::int64_t node_budget = -1;
  auto* bench = app.add_subcommand("bench", "Run a scenario over several seeds");
  bench->add_option("--scenario", scenario_path, "Scenario YAML file")->required();
  bench->add_option("--seeds", seeds, "Number of seeds")->required()->check(CLI::PositiveNumber);
  bench->add_option("--first-seed", first_seed, "First seed (default 1)");
  bench->add_option("--out", out_path, "Metrics output path (JSON)")->required();
  bench->add_option("--node-budget", node_budget, "Override the tree node budget");
  bench->add_flag("--no-replan", no_replan, "Disable replanning");

  auto* validate = app.add_subcommand("validate", "Check a scenario file");
  validate->add_option("--scenario", scenario_path, "Scenario YAML file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*run) return cmd_run(scenario_path, seed, out_path, quiet, no_timing, no_replan);
  if (*bench) return cmd_bench(scenario_path, seeds, first_seed, out_path, no_replan, node_budget);
  return cmd_validate(scenario_path);
}
