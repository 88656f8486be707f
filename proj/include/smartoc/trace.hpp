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

// Simulation trace: one JSON object per line.
//
//   {"kind":"header","format":"smartoc-trace","version":1,
//    "scenario_hash":"<16 hex>","seed":<u64>,"scenario":"<normalized YAML>"}
//   {"kind":"replan","t":..,"trigger":"obstacle_risk"|"current_deviation",
//    "obstacles":[ids],"deviation_ratio":x|null,"chosen_node":id|null,
//    "candidates_evaluated":n,"wall_clock_s":x|null}
//   {"kind":"tick","t":..,"usv":[x,y],"path_nodes":[ids],"path":[[x,y],..],
//    "obstacles":[[x,y],..],"status":"running"|"goal_reached"|"timed_out"|"stuck",
//    "trigger":null|"obstacle_risk"|"current_deviation"}
//
// The header comes first; records are ordered by t, and a replan record
// precedes the tick record of the same step. "chosen_node" is null when no
// admissible node existed (the vehicle holds). "wall_clock_s" is null when
// timing capture is disabled. Floats use shortest round-trip formatting.

#ifndef SMARTOC_TRACE_HPP_
#define SMARTOC_TRACE_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "smartoc/geometry.hpp"
#include "smartoc/planner_tree.hpp"
#include "smartoc/replanner.hpp"
#include "smartoc/world.hpp"

namespace smartoc {

enum class SimStatus { kRunning, kGoalReached, kTimedOut, kStuck };

const char* SimStatusName(SimStatus status);

struct TraceHeader {
  int version = 1;
  std::string scenario_hash;
  std::uint64_t seed = 0;
  std::string scenario;  // normalized scenario document

  bool operator==(const TraceHeader&) const = default;
};

struct TickRecord {
  double t = 0.0;
  Vec2 usv;
  std::vector<NodeId> path_nodes;
  std::vector<Vec2> path;
  std::vector<Vec2> obstacles;
  SimStatus status = SimStatus::kRunning;
  std::optional<TriggerKind> trigger;

  bool operator==(const TickRecord&) const = default;
};

struct ReplanRecord {
  double t = 0.0;
  TriggerKind trigger = TriggerKind::kObstacleRisk;
  std::vector<ObstacleId> obstacles;
  std::optional<double> deviation_ratio;
  std::optional<NodeId> chosen_node;
  std::size_t candidates_evaluated = 0;
  std::optional<double> wall_clock;

  bool operator==(const ReplanRecord&) const = default;
};

using TraceRecord = std::variant<TickRecord, ReplanRecord>;

struct Trace {
  TraceHeader header;
  std::vector<TraceRecord> records;

  bool operator==(const Trace&) const = default;
};

std::string trace_header_line(const TraceHeader& header);
std::string trace_record_line(const TraceRecord& record);

void write_trace(const Trace& trace, std::ostream& out);
std::string write_trace(const Trace& trace);
void write_trace_file(const Trace& trace, const std::string& path);

// Throws MalformedTrace naming the offending 1-based line in Error::where().
Trace read_trace(std::istream& in);
Trace read_trace(const std::string& text);
Trace read_trace_file(const std::string& path);

struct Metrics {
  double mission_time = 0.0;  // s, time of the last tick
  double path_length = 0.0;   // m, distance travelled
  std::size_t replan_count = 0;
  // One entry per replan when timings were captured, empty otherwise.
  std::vector<double> replan_wall_clocks;
  std::size_t obstacle_replans = 0;
  std::size_t current_replans = 0;
  std::size_t failed_replans = 0;  // events with no admissible node
  double min_obstacle_center_distance = kNoObstacleDistance;
  bool goal_reached = false;
  SimStatus final_status = SimStatus::kRunning;

  std::optional<double> mean_replan_wall_clock() const;
};

// Throws MalformedTrace when the records break the ordering contract.
Metrics metrics(const Trace& trace);

}  // namespace smartoc

#endif  // SMARTOC_TRACE_HPP_
