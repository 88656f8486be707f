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

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "smartoc/error.hpp"
#include "smartoc/scenario.hpp"

namespace smartoc {

RrtParams ScenarioConfig::tree_params() const {
  RrtParams p = rrt;
  p.goal_root = goal;
  p.seed = sim.seed;
  return p;
}

namespace {

[[noreturn]] void invalid(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kValidation, path + ": " + what, path);
}

std::string join(const std::string& base, const std::string& key) {
  return base.empty() ? key : base + "." + key;
}

// --- reading ---------------------------------------------------------------

double read_double(const YAML::Node& node, const std::string& path) {
  try {
    return node.as<double>();
  } catch (const YAML::Exception&) {
    invalid(path, "expected a number");
  }
}

Vec2 read_vec2(const YAML::Node& node, const std::string& path) {
  if (!node.IsSequence() || node.size() != 2) invalid(path, "expected [x, y]");
  return {read_double(node[0], path + "[0]"), read_double(node[1], path + "[1]")};
}

template <typename T>
void maybe(const YAML::Node& parent, const char* key, const std::string& base,
           T& out);

template <>
void maybe<double>(const YAML::Node& parent, const char* key,
                   const std::string& base, double& out) {
  if (const YAML::Node n = parent[key]) out = read_double(n, join(base, key));
}

template <>
void maybe<Vec2>(const YAML::Node& parent, const char* key,
                 const std::string& base, Vec2& out) {
  if (const YAML::Node n = parent[key]) out = read_vec2(n, join(base, key));
}

template <>
void maybe<bool>(const YAML::Node& parent, const char* key,
                 const std::string& base, bool& out) {
  if (const YAML::Node n = parent[key]) {
    try {
      out = n.as<bool>();
    } catch (const YAML::Exception&) {
      invalid(join(base, key), "expected true or false");
    }
  }
}

template <typename Int>
void maybe_int(const YAML::Node& parent, const char* key,
               const std::string& base, Int& out) {
  if (const YAML::Node n = parent[key]) {
    try {
      out = n.as<Int>();
    } catch (const YAML::Exception&) {
      invalid(join(base, key), "expected a non-negative integer");
    }
  }
}

Vec2 require_vec2(const YAML::Node& parent, const char* key,
                  const std::string& base) {
  const YAML::Node n = parent[key];
  if (!n) invalid(join(base, key), "required field is missing");
  return read_vec2(n, join(base, key));
}

void read_world(const YAML::Node& doc, ScenarioConfig& c) {
  const YAML::Node world = doc["world"];
  if (!world || !world.IsMap()) invalid("world", "required section is missing");
  const YAML::Node bounds = world["bounds_m"];
  if (!bounds) invalid("world.bounds_m", "required field is missing");
  c.world.bounds.min = require_vec2(bounds, "min", "world.bounds_m");
  c.world.bounds.max = require_vec2(bounds, "max", "world.bounds_m");
  c.start = require_vec2(world, "start_m", "world");
  c.goal = require_vec2(world, "goal_m", "world");

  if (const YAML::Node statics = world["static_obstacles"]) {
    for (std::size_t i = 0; i < statics.size(); ++i) {
      const std::string path = "world.static_obstacles[" + std::to_string(i) + "]";
      const YAML::Node s = statics[i];
      if (const YAML::Node rect = s["rect"]) {
        c.world.statics.push_back(StaticObstacle{
            Rect{require_vec2(rect, "min", path + ".rect"),
                 require_vec2(rect, "max", path + ".rect")}});
      } else if (const YAML::Node disc = s["disc"]) {
        Disc d;
        d.center = require_vec2(disc, "center_m", path + ".disc");
        if (!disc["radius_m"]) invalid(path + ".disc.radius_m", "required field is missing");
        d.radius = read_double(disc["radius_m"], path + ".disc.radius_m");
        c.world.statics.push_back(StaticObstacle{d});
      } else {
        invalid(path, "expected a 'rect' or 'disc' entry");
      }
    }
  }
}

void read_dynamics(const YAML::Node& doc, ScenarioConfig& c) {
  const YAML::Node dyn = doc["dynamic_obstacles"];
  if (!dyn) return;
  maybe(dyn, "speed_mps", "dynamic_obstacles", c.obstacle_speed);
  const YAML::Node items = dyn["items"];
  if (!items) return;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string path = "dynamic_obstacles.items[" + std::to_string(i) + "]";
    const YAML::Node it = items[i];
    DynamicObstacle ob;
    ob.id = static_cast<ObstacleId>(i);
    maybe_int(it, "id", path, ob.id);
    ob.pos0 = require_vec2(it, "pos0_m", path);
    if (const YAML::Node v = it["vel_mps"]) {
      ob.vel = read_vec2(v, path + ".vel_mps");
    } else if (const YAML::Node h = it["heading_deg"]) {
      const double rad = read_double(h, path + ".heading_deg") * std::numbers::pi / 180.0;
      ob.vel = Vec2{std::cos(rad), std::sin(rad)} * c.obstacle_speed;
    } else {
      invalid(path, "expected 'vel_mps' or 'heading_deg'");
    }
    maybe(it, "ohz_radius_m", path, ob.ohz_radius);
    c.world.dynamics.push_back(ob);
  }
}

void read_currents(const YAML::Node& doc, ScenarioConfig& c) {
  const YAML::Node cur = doc["currents"];
  if (!cur) return;
  if (const YAML::Node range = cur["speed_range_mps"]) {
    const Vec2 r = read_vec2(range, "currents.speed_range_mps");
    c.current_speed_min = r.x;
    c.current_speed_max = r.y;
  }
  maybe(cur, "ambient_mps", "currents", c.field.ambient);
  if (const YAML::Node vortices = cur["vortices"]) {
    for (std::size_t i = 0; i < vortices.size(); ++i) {
      const std::string path = "currents.vortices[" + std::to_string(i) + "]";
      const YAML::Node v = vortices[i];
      Vortex vx;
      vx.center0 = require_vec2(v, "center0_m", path);
      maybe(v, "drift_mps", path, vx.drift);
      if (!v["peak_speed_mps"]) invalid(path + ".peak_speed_mps", "required field is missing");
      vx.peak_speed = read_double(v["peak_speed_mps"], path + ".peak_speed_mps");
      maybe(v, "core_radius_m", path, vx.core_radius);
      if (const YAML::Node spin = v["spin"]) {
        const std::string s = spin.as<std::string>();
        if (s == "ccw") {
          vx.spin = Spin::kCounterClockwise;
        } else if (s == "cw") {
          vx.spin = Spin::kClockwise;
        } else {
          invalid(path + ".spin", "expected 'ccw' or 'cw'");
        }
      }
      c.field.vortices.push_back(vx);
    }
  }
}

void read_rest(const YAML::Node& doc, ScenarioConfig& c) {
  if (const YAML::Node v = doc["vehicle"]) {
    maybe(v, "usv_speed_mps", "vehicle", c.replan.edge.usv_speed);
    maybe(v, "lrz_radius_m", "vehicle", c.replan.lrz.radius);
  }
  if (const YAML::Node r = doc["risk"]) {
    maybe(r, "d_min_m", "risk", c.replan.risk.d_min);
    maybe(r, "d_max_m", "risk", c.replan.risk.d_max);
    maybe(r, "horizon_s", "risk", c.replan.path_risk.horizon);
    maybe(r, "sample_ds_m", "risk", c.replan.path_risk.sample_ds);
    maybe(r, "edge_substep_m", "risk", c.replan.edge.sub_step);
  }
  if (const YAML::Node p = doc["planner"]) {
    maybe_int(p, "node_budget", "planner", c.rrt.node_budget);
    maybe(p, "step_size_m", "planner", c.rrt.step_size);
    maybe(p, "rewire_gamma_m", "planner", c.rrt.rewire_gamma);
    maybe(p, "rewire_max_m", "planner", c.rrt.rewire_max);
  }
  if (const YAML::Node r = doc["replanning"]) {
    maybe(r, "enabled", "replanning", c.sim.replanning_enabled);
    maybe_int(r, "probe_count", "replanning", c.replan.lrz.current_probe_count);
    maybe(r, "deviation_threshold", "replanning", c.replan.lrz.deviation_threshold);
  }
  if (const YAML::Node s = doc["simulation"]) {
    maybe(s, "dt_s", "simulation", c.sim.dt);
    maybe(s, "goal_tolerance_m", "simulation", c.sim.goal_tolerance);
    maybe(s, "timeout_s", "simulation", c.sim.timeout);
    maybe(s, "stuck_window_s", "simulation", c.sim.stuck_window);
    maybe_int(s, "seed", "simulation", c.sim.seed);
    maybe(s, "record_wall_clock", "simulation", c.sim.record_wall_clock);
  }
}

// --- writing ---------------------------------------------------------------

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void emit(YAML::Emitter& out, double v) { out << fmt(v); }

void emit(YAML::Emitter& out, Vec2 v) {
  out << YAML::Flow << YAML::BeginSeq << fmt(v.x) << fmt(v.y) << YAML::EndSeq;
}

template <typename T>
void kv(YAML::Emitter& out, const char* key, const T& value) {
  out << YAML::Key << key << YAML::Value;
  if constexpr (std::is_same_v<T, double> || std::is_same_v<T, Vec2>) {
    emit(out, value);
  } else {
    out << value;
  }
}

// --- validation ------------------------------------------------------------

bool inside(const Rect& outer, const Rect& r) {
  return outer.contains(r.min) && outer.contains(r.max);
}

bool inside(const Rect& outer, const Disc& d) {
  return d.center.x - d.radius >= outer.min.x && d.center.x + d.radius <= outer.max.x &&
         d.center.y - d.radius >= outer.min.y && d.center.y + d.radius <= outer.max.y;
}

void require_positive(double v, const std::string& path) {
  if (!(v > 0.0) || !std::isfinite(v)) invalid(path, "must be a positive number");
}

void require_finite(Vec2 v, const std::string& path) {
  if (!is_finite(v)) invalid(path, "must be finite");
}

// Probe resolution for the field magnitude check.
constexpr int kFieldProbeGrid = 41;

}  // namespace

void validate_scenario(const ScenarioConfig& c) {
  const Rect& b = c.world.bounds;
  require_finite(b.min, "world.bounds_m.min");
  require_finite(b.max, "world.bounds_m.max");
  if (!(b.min.x < b.max.x && b.min.y < b.max.y)) {
    invalid("world.bounds_m", "min must be < max componentwise");
  }
  for (std::size_t i = 0; i < c.world.statics.size(); ++i) {
    const std::string path = "world.static_obstacles[" + std::to_string(i) + "]";
    const auto& shape = c.world.statics[i].shape;
    if (const auto* d = std::get_if<Disc>(&shape)) {
      require_positive(d->radius, path + ".disc.radius_m");
      if (!inside(b, *d)) invalid(path, "must lie inside world bounds");
    } else {
      const Rect& r = std::get<Rect>(shape);
      if (!(r.min.x < r.max.x && r.min.y < r.max.y)) {
        invalid(path + ".rect", "min must be < max componentwise");
      }
      if (!inside(b, r)) invalid(path, "must lie inside world bounds");
    }
  }
  require_finite(c.start, "world.start_m");
  require_finite(c.goal, "world.goal_m");
  if (!b.contains(c.start)) invalid("world.start_m", "must lie inside world bounds");
  if (!b.contains(c.goal)) invalid("world.goal_m", "must lie inside world bounds");
  if (c.world.inside_static(c.start)) invalid("world.start_m", "lies inside a static obstacle");
  if (c.world.inside_static(c.goal)) invalid("world.goal_m", "lies inside a static obstacle");

  require_positive(c.replan.edge.usv_speed, "vehicle.usv_speed_mps");
  require_positive(c.replan.lrz.radius, "vehicle.lrz_radius_m");

  const RiskParams& rp = c.replan.risk;
  require_positive(rp.d_min, "risk.d_min_m");
  require_positive(rp.d_max, "risk.d_max_m");
  if (!(rp.d_min < rp.d_max)) invalid("risk.d_min_m", "risk.d_min_m must be < risk.d_max_m");
  require_positive(c.replan.path_risk.horizon, "risk.horizon_s");
  require_positive(c.replan.path_risk.sample_ds, "risk.sample_ds_m");
  require_positive(c.replan.edge.sub_step, "risk.edge_substep_m");

  require_positive(c.obstacle_speed, "dynamic_obstacles.speed_mps");
  std::set<ObstacleId> ids;
  for (std::size_t i = 0; i < c.world.dynamics.size(); ++i) {
    const std::string path = "dynamic_obstacles.items[" + std::to_string(i) + "]";
    const DynamicObstacle& ob = c.world.dynamics[i];
    if (!ids.insert(ob.id).second) invalid(path + ".id", "duplicate obstacle id");
    require_finite(ob.pos0, path + ".pos0_m");
    require_finite(ob.vel, path + ".vel_mps");
    if (!b.contains(ob.pos0)) invalid(path + ".pos0_m", "must lie inside world bounds");
    require_positive(ob.ohz_radius, path + ".ohz_radius_m");
    if (std::abs(ob.vel.norm() - c.obstacle_speed) > 1e-9 * c.obstacle_speed) {
      invalid(path + ".vel_mps", "speed must equal dynamic_obstacles.speed_mps");
    }
  }

  const double lo = c.current_speed_min;
  const double hi = c.current_speed_max;
  if (!(lo >= 0.0 && lo <= hi && std::isfinite(hi))) {
    invalid("currents.speed_range_mps", "expected 0 <= min <= max");
  }
  require_finite(c.field.ambient, "currents.ambient_mps");
  if (c.field.ambient.norm() > hi) invalid("currents.ambient_mps", "exceeds the declared speed range");
  for (std::size_t i = 0; i < c.field.vortices.size(); ++i) {
    const std::string path = "currents.vortices[" + std::to_string(i) + "]";
    const Vortex& v = c.field.vortices[i];
    require_finite(v.center0, path + ".center0_m");
    require_finite(v.drift, path + ".drift_mps");
    require_positive(v.core_radius, path + ".core_radius_m");
    if (!(v.peak_speed >= lo && v.peak_speed <= hi)) {
      invalid(path + ".peak_speed_mps", "outside the declared speed range");
    }
  }
  // Superposed vortices can exceed any single peak; probe the combined field.
  for (int i = 0; i < kFieldProbeGrid; ++i) {
    for (int j = 0; j < kFieldProbeGrid; ++j) {
      const Vec2 p{b.min.x + b.width() * i / (kFieldProbeGrid - 1),
                   b.min.y + b.height() * j / (kFieldProbeGrid - 1)};
      if (c.field.sample(p, 0.0).norm() > hi) {
        invalid("currents", "field magnitude at (" + fmt(p.x) + ", " + fmt(p.y) +
                                ") exceeds the declared speed range");
      }
    }
  }

  require_positive(c.rrt.step_size, "planner.step_size_m");
  require_positive(c.rrt.rewire_gamma, "planner.rewire_gamma_m");
  if (!(c.rrt.rewire_max >= c.rrt.step_size)) {
    invalid("planner.rewire_max_m", "must be >= planner.step_size_m");
  }

  if (c.replan.lrz.current_probe_count < 1) invalid("replanning.probe_count", "must be >= 1");
  require_positive(c.replan.lrz.deviation_threshold, "replanning.deviation_threshold");

  require_positive(c.sim.dt, "simulation.dt_s");
  require_positive(c.sim.goal_tolerance, "simulation.goal_tolerance_m");
  require_positive(c.sim.timeout, "simulation.timeout_s");
  require_positive(c.sim.stuck_window, "simulation.stuck_window_s");
}

ScenarioConfig parse_scenario(std::string_view text) {
  YAML::Node doc;
  try {
    doc = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed scenario: ") + e.what());
  }
  if (!doc.IsMap()) throw Error(ErrorCode::kParse, "scenario document must be a mapping");

  ScenarioConfig c;
  try {
    read_world(doc, c);
    read_dynamics(doc, c);
    read_currents(doc, c);
    read_rest(doc, c);
  } catch (const YAML::Exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed scenario: ") + e.what());
  }
  validate_scenario(c);
  return c;
}

ScenarioConfig load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open scenario file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string serialize_scenario(const ScenarioConfig& c) {
  YAML::Emitter out;
  out << YAML::BeginMap;

  out << YAML::Key << "world" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "bounds_m" << YAML::Value << YAML::BeginMap;
  kv(out, "min", c.world.bounds.min);
  kv(out, "max", c.world.bounds.max);
  out << YAML::EndMap;
  kv(out, "start_m", c.start);
  kv(out, "goal_m", c.goal);
  out << YAML::Key << "static_obstacles" << YAML::Value << YAML::BeginSeq;
  for (const StaticObstacle& s : c.world.statics) {
    out << YAML::BeginMap;
    if (const auto* d = std::get_if<Disc>(&s.shape)) {
      out << YAML::Key << "disc" << YAML::Value << YAML::BeginMap;
      kv(out, "center_m", d->center);
      kv(out, "radius_m", d->radius);
    } else {
      const Rect& r = std::get<Rect>(s.shape);
      out << YAML::Key << "rect" << YAML::Value << YAML::BeginMap;
      kv(out, "min", r.min);
      kv(out, "max", r.max);
    }
    out << YAML::EndMap << YAML::EndMap;
  }
  out << YAML::EndSeq << YAML::EndMap;

  out << YAML::Key << "vehicle" << YAML::Value << YAML::BeginMap;
  kv(out, "usv_speed_mps", c.replan.edge.usv_speed);
  kv(out, "lrz_radius_m", c.replan.lrz.radius);
  out << YAML::EndMap;

  out << YAML::Key << "risk" << YAML::Value << YAML::BeginMap;
  kv(out, "d_min_m", c.replan.risk.d_min);
  kv(out, "d_max_m", c.replan.risk.d_max);
  kv(out, "horizon_s", c.replan.path_risk.horizon);
  kv(out, "sample_ds_m", c.replan.path_risk.sample_ds);
  kv(out, "edge_substep_m", c.replan.edge.sub_step);
  out << YAML::EndMap;

  out << YAML::Key << "dynamic_obstacles" << YAML::Value << YAML::BeginMap;
  kv(out, "speed_mps", c.obstacle_speed);
  out << YAML::Key << "items" << YAML::Value << YAML::BeginSeq;
  for (const DynamicObstacle& ob : c.world.dynamics) {
    out << YAML::BeginMap;
    out << YAML::Key << "id" << YAML::Value << ob.id;
    kv(out, "pos0_m", ob.pos0);
    kv(out, "vel_mps", ob.vel);
    kv(out, "ohz_radius_m", ob.ohz_radius);
    out << YAML::EndMap;
  }
  out << YAML::EndSeq << YAML::EndMap;

  out << YAML::Key << "currents" << YAML::Value << YAML::BeginMap;
  kv(out, "speed_range_mps", Vec2{c.current_speed_min, c.current_speed_max});
  kv(out, "ambient_mps", c.field.ambient);
  out << YAML::Key << "vortices" << YAML::Value << YAML::BeginSeq;
  for (const Vortex& v : c.field.vortices) {
    out << YAML::BeginMap;
    kv(out, "center0_m", v.center0);
    kv(out, "drift_mps", v.drift);
    kv(out, "peak_speed_mps", v.peak_speed);
    kv(out, "core_radius_m", v.core_radius);
    out << YAML::Key << "spin" << YAML::Value
        << (v.spin == Spin::kCounterClockwise ? "ccw" : "cw");
    out << YAML::EndMap;
  }
  out << YAML::EndSeq << YAML::EndMap;

  out << YAML::Key << "planner" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "node_budget" << YAML::Value << c.rrt.node_budget;
  kv(out, "step_size_m", c.rrt.step_size);
  kv(out, "rewire_gamma_m", c.rrt.rewire_gamma);
  kv(out, "rewire_max_m", c.rrt.rewire_max);
  out << YAML::EndMap;

  out << YAML::Key << "replanning" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "enabled" << YAML::Value << c.sim.replanning_enabled;
  out << YAML::Key << "probe_count" << YAML::Value << c.replan.lrz.current_probe_count;
  kv(out, "deviation_threshold", c.replan.lrz.deviation_threshold);
  out << YAML::EndMap;

  out << YAML::Key << "simulation" << YAML::Value << YAML::BeginMap;
  kv(out, "dt_s", c.sim.dt);
  kv(out, "goal_tolerance_m", c.sim.goal_tolerance);
  kv(out, "timeout_s", c.sim.timeout);
  kv(out, "stuck_window_s", c.sim.stuck_window);
  out << YAML::Key << "seed" << YAML::Value << c.sim.seed;
  out << YAML::Key << "record_wall_clock" << YAML::Value << c.sim.record_wall_clock;
  out << YAML::EndMap;

  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

std::string scenario_hash(const ScenarioConfig& config) {
  const std::string text = serialize_scenario(config);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace smartoc
