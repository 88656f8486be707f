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

#include "smartoc/trace.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "smartoc/error.hpp"

namespace smartoc {

using json = nlohmann::ordered_json;

const char* SimStatusName(SimStatus status) {
  switch (status) {
    case SimStatus::kRunning: return "running";
    case SimStatus::kGoalReached: return "goal_reached";
    case SimStatus::kTimedOut: return "timed_out";
    case SimStatus::kStuck: return "stuck";
  }
  return "unknown";
}

namespace {

constexpr const char* kFormat = "smartoc-trace";

json vec(Vec2 v) { return json::array({v.x, v.y}); }

json vecs(const std::vector<Vec2>& vs) {
  json a = json::array();
  for (Vec2 v : vs) a.push_back(vec(v));
  return a;
}

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

// Parsing helpers throw a bare message; read_trace attaches the line number.
struct Malformed {
  std::string what;
};

const json& field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw Malformed{std::string("missing field '") + key + "'"};
  return *it;
}

double num(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number()) throw Malformed{std::string("field '") + key + "' is not a number"};
  return v.get<double>();
}

Vec2 to_vec(const json& v) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw Malformed{"expected [x, y]"};
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

std::vector<Vec2> to_vecs(const json& v) {
  if (!v.is_array()) throw Malformed{"expected a list of points"};
  std::vector<Vec2> out;
  out.reserve(v.size());
  for (const json& e : v) out.push_back(to_vec(e));
  return out;
}

TriggerKind to_trigger(const json& v) {
  if (v == "obstacle_risk") return TriggerKind::kObstacleRisk;
  if (v == "current_deviation") return TriggerKind::kCurrentDeviation;
  throw Malformed{"unknown trigger kind"};
}

SimStatus to_status(const json& v) {
  for (SimStatus s : {SimStatus::kRunning, SimStatus::kGoalReached,
                      SimStatus::kTimedOut, SimStatus::kStuck}) {
    if (v == SimStatusName(s)) return s;
  }
  throw Malformed{"unknown status"};
}

template <typename T>
std::vector<T> to_ints(const json& v) {
  if (!v.is_array()) throw Malformed{"expected a list of integers"};
  std::vector<T> out;
  for (const json& e : v) {
    if (!e.is_number_integer()) throw Malformed{"expected a list of integers"};
    out.push_back(e.get<T>());
  }
  return out;
}

TraceHeader parse_header(const json& j) {
  if (field(j, "kind") != "header") throw Malformed{"first line must be the header"};
  if (field(j, "format") != kFormat) throw Malformed{"unknown trace format"};
  TraceHeader h;
  h.version = field(j, "version").get<int>();
  h.scenario_hash = field(j, "scenario_hash").get<std::string>();
  h.seed = field(j, "seed").get<std::uint64_t>();
  h.scenario = field(j, "scenario").get<std::string>();
  return h;
}

TraceRecord parse_record(const json& j) {
  const json& kind = field(j, "kind");
  if (kind == "tick") {
    TickRecord r;
    r.t = num(j, "t");
    r.usv = to_vec(field(j, "usv"));
    r.path_nodes = to_ints<NodeId>(field(j, "path_nodes"));
    r.path = to_vecs(field(j, "path"));
    r.obstacles = to_vecs(field(j, "obstacles"));
    r.status = to_status(field(j, "status"));
    const json& tr = field(j, "trigger");
    if (!tr.is_null()) r.trigger = to_trigger(tr);
    return r;
  }
  if (kind == "replan") {
    ReplanRecord r;
    r.t = num(j, "t");
    r.trigger = to_trigger(field(j, "trigger"));
    r.obstacles = to_ints<ObstacleId>(field(j, "obstacles"));
    if (const json& d = field(j, "deviation_ratio"); !d.is_null()) r.deviation_ratio = d.get<double>();
    if (const json& c = field(j, "chosen_node"); !c.is_null()) r.chosen_node = c.get<NodeId>();
    r.candidates_evaluated = field(j, "candidates_evaluated").get<std::size_t>();
    if (const json& w = field(j, "wall_clock_s"); !w.is_null()) r.wall_clock = w.get<double>();
    return r;
  }
  throw Malformed{"unknown record kind"};
}

double record_time(const TraceRecord& r) {
  return std::visit([](const auto& rec) { return rec.t; }, r);
}

}  // namespace

std::string trace_header_line(const TraceHeader& header) {
  json j;
  j["kind"] = "header";
  j["format"] = kFormat;
  j["version"] = header.version;
  j["scenario_hash"] = header.scenario_hash;
  j["seed"] = header.seed;
  j["scenario"] = header.scenario;
  return j.dump();
}

std::string trace_record_line(const TraceRecord& record) {
  json j;
  if (const auto* tick = std::get_if<TickRecord>(&record)) {
    j["kind"] = "tick";
    j["t"] = tick->t;
    j["usv"] = vec(tick->usv);
    j["path_nodes"] = tick->path_nodes;
    j["path"] = vecs(tick->path);
    j["obstacles"] = vecs(tick->obstacles);
    j["status"] = SimStatusName(tick->status);
    j["trigger"] = tick->trigger ? json(TriggerKindName(*tick->trigger)) : json(nullptr);
  } else {
    const auto& rp = std::get<ReplanRecord>(record);
    j["kind"] = "replan";
    j["t"] = rp.t;
    j["trigger"] = TriggerKindName(rp.trigger);
    j["obstacles"] = rp.obstacles;
    j["deviation_ratio"] = opt(rp.deviation_ratio);
    j["chosen_node"] = opt(rp.chosen_node);
    j["candidates_evaluated"] = rp.candidates_evaluated;
    j["wall_clock_s"] = opt(rp.wall_clock);
  }
  return j.dump();
}

void write_trace(const Trace& trace, std::ostream& out) {
  out << trace_header_line(trace.header) << '\n';
  for (const TraceRecord& r : trace.records) out << trace_record_line(r) << '\n';
}

std::string write_trace(const Trace& trace) {
  std::ostringstream out;
  write_trace(trace, out);
  return out.str();
}

void write_trace_file(const Trace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  write_trace(trace, out);
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path + "'");
}

Trace read_trace(std::istream& in) {
  Trace trace;
  std::string line;
  std::size_t line_no = 0;
  double last_t = -std::numeric_limits<double>::infinity();
  while (std::getline(in, line)) {
    ++line_no;
    const bool terminated = !in.eof();
    try {
      if (line.empty()) throw Malformed{"empty line"};
      if (!terminated) throw Malformed{"truncated line (no trailing newline)"};
      const json j = json::parse(line);
      if (!j.is_object()) throw Malformed{"expected a JSON object"};
      if (line_no == 1) {
        trace.header = parse_header(j);
        continue;
      }
      TraceRecord rec = parse_record(j);
      const double t = record_time(rec);
      if (t < last_t) throw Malformed{"records are not time-ordered"};
      last_t = t;
      trace.records.push_back(std::move(rec));
    } catch (const Malformed& m) {
      throw Error(ErrorCode::kMalformedTrace,
                  "line " + std::to_string(line_no) + ": " + m.what,
                  std::to_string(line_no));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kMalformedTrace,
                  "line " + std::to_string(line_no) + ": " + e.what(),
                  std::to_string(line_no));
    }
  }
  if (line_no == 0) {
    throw Error(ErrorCode::kMalformedTrace, "line 1: missing header", "1");
  }
  return trace;
}

Trace read_trace(const std::string& text) {
  std::istringstream in(text);
  return read_trace(in);
}

Trace read_trace_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open trace '" + path + "'");
  return read_trace(in);
}

std::optional<double> Metrics::mean_replan_wall_clock() const {
  if (replan_wall_clocks.empty()) return std::nullopt;
  return std::accumulate(replan_wall_clocks.begin(), replan_wall_clocks.end(), 0.0) /
         static_cast<double>(replan_wall_clocks.size());
}

Metrics metrics(const Trace& trace) {
  Metrics m;
  const TickRecord* prev = nullptr;
  bool all_timed = true;
  std::vector<double> clocks;
  double last_t = -std::numeric_limits<double>::infinity();
  for (const TraceRecord& rec : trace.records) {
    const double t = record_time(rec);
    if (t < last_t) throw Error(ErrorCode::kMalformedTrace, "records are not time-ordered");
    last_t = t;
    if (const auto* tick = std::get_if<TickRecord>(&rec)) {
      if (prev != nullptr) m.path_length += dist(prev->usv, tick->usv);
      for (Vec2 ob : tick->obstacles) {
        m.min_obstacle_center_distance =
            std::min(m.min_obstacle_center_distance, dist(tick->usv, ob));
      }
      m.mission_time = tick->t;
      m.final_status = tick->status;
      prev = tick;
    } else {
      const auto& rp = std::get<ReplanRecord>(rec);
      ++m.replan_count;
      if (rp.trigger == TriggerKind::kObstacleRisk) {
        ++m.obstacle_replans;
      } else {
        ++m.current_replans;
      }
      if (!rp.chosen_node) ++m.failed_replans;
      if (rp.wall_clock) {
        clocks.push_back(*rp.wall_clock);
      } else {
        all_timed = false;
      }
    }
  }
  if (all_timed) m.replan_wall_clocks = std::move(clocks);
  m.goal_reached = m.final_status == SimStatus::kGoalReached;
  return m;
}

}  // namespace smartoc
