// Exercises the shared library through its C header only.
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "smartoc/smartoc.h"

#ifndef SMARTOC_SCENARIO_DIR
#error "SMARTOC_SCENARIO_DIR must point at the shipped scenarios"
#endif

namespace {

const char* kShort = R"(
world:
  bounds_m: {min: [0, 0], max: [20, 20]}
  start_m: [6, 10]
  goal_m: [10, 10]
planner: {node_budget: 200}
)";

std::string temp_path(const char* name) {
  return (std::string(::testing::TempDir()) + name);
}

TEST(CApi, ParseSimulateAndWrite) {
  smartoc_scenario* sc = nullptr;
  ASSERT_EQ(smartoc_scenario_parse(kShort, std::strlen(kShort), &sc), SMARTOC_OK);
  ASSERT_NE(sc, nullptr);
  EXPECT_EQ(smartoc_scenario_set_seed(sc, 9), SMARTOC_OK);
  EXPECT_EQ(smartoc_scenario_set_record_wall_clock(sc, 0), SMARTOC_OK);

  smartoc_run* run = nullptr;
  ASSERT_EQ(smartoc_simulate(sc, &run), SMARTOC_OK);
  smartoc_metrics m{};
  ASSERT_EQ(smartoc_run_metrics(run, &m), SMARTOC_OK);
  EXPECT_EQ(m.goal_reached, 1);
  EXPECT_EQ(m.final_status, SMARTOC_SIM_GOAL_REACHED);
  EXPECT_TRUE(std::isinf(m.min_obstacle_center_distance_m));
  EXPECT_TRUE(std::isnan(m.mean_replan_wall_clock_s));

  const std::string path = temp_path("capi_trace.jsonl");
  ASSERT_EQ(smartoc_run_write_trace(run, path.c_str()), SMARTOC_OK);
  smartoc_metrics back{};
  ASSERT_EQ(smartoc_trace_metrics(path.c_str(), &back), SMARTOC_OK);
  EXPECT_EQ(back.mission_time_s, m.mission_time_s);
  EXPECT_EQ(back.replan_count, m.replan_count);

  char* text = nullptr;
  ASSERT_EQ(smartoc_scenario_serialize(sc, &text), SMARTOC_OK);
  EXPECT_NE(std::strstr(text, "seed: 9"), nullptr);
  smartoc_string_free(text);

  smartoc_run_free(run);
  smartoc_scenario_free(sc);
}

TEST(CApi, ValidationErrorReportsField) {
  const std::string bad = std::string(kShort) + "risk: {d_min_m: 5, d_max_m: 2}\n";
  smartoc_scenario* sc = reinterpret_cast<smartoc_scenario*>(0x1);
  EXPECT_EQ(smartoc_scenario_parse(bad.c_str(), bad.size(), &sc), SMARTOC_ERR_VALIDATION);
  EXPECT_EQ(sc, nullptr);
  EXPECT_STREQ(smartoc_last_error_field(), "risk.d_min_m");
  EXPECT_NE(std::strstr(smartoc_last_error(), "d_min"), nullptr);
}

TEST(CApi, ErrorCodes) {
  smartoc_scenario* sc = nullptr;
  EXPECT_EQ(smartoc_scenario_load("/nonexistent.yaml", &sc), SMARTOC_ERR_IO);
  EXPECT_EQ(smartoc_scenario_parse("world: [", 8, &sc), SMARTOC_ERR_PARSE);
  EXPECT_EQ(smartoc_scenario_parse(nullptr, 0, &sc), SMARTOC_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(smartoc_simulate(nullptr, nullptr), SMARTOC_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(smartoc_scenario_set_seed(nullptr, 1), SMARTOC_ERR_INVALID_ARGUMENT);

  const std::string path = temp_path("capi_bad_trace.jsonl");
  std::ofstream(path) << "{\"kind\":\"tick\"}\n";
  smartoc_metrics m{};
  EXPECT_EQ(smartoc_trace_metrics(path.c_str(), &m), SMARTOC_ERR_MALFORMED_TRACE);
  EXPECT_STREQ(smartoc_last_error_field(), "1");

  EXPECT_STREQ(smartoc_status_string(SMARTOC_OK), "ok");
  EXPECT_STRNE(smartoc_version(), "");
  smartoc_scenario_free(nullptr);
  smartoc_run_free(nullptr);
}

TEST(CApi, ReplanTimingsExposed) {
  smartoc_scenario* sc = nullptr;
  const std::string file = std::string(SMARTOC_SCENARIO_DIR) + "/two_lane_currents.yaml";
  ASSERT_EQ(smartoc_scenario_load(file.c_str(), &sc), SMARTOC_OK);
  smartoc_run* run = nullptr;
  ASSERT_EQ(smartoc_simulate(sc, &run), SMARTOC_OK);
  const double* clocks = nullptr;
  size_t n = 0;
  ASSERT_EQ(smartoc_run_replan_wall_clocks(run, &clocks, &n), SMARTOC_OK);
  smartoc_metrics m{};
  smartoc_run_metrics(run, &m);
  EXPECT_EQ(n, m.replan_count);
  EXPECT_GE(n, 1u);
  for (size_t i = 0; i < n; ++i) EXPECT_GE(clocks[i], 0.0);
  smartoc_run_free(run);
  smartoc_scenario_free(sc);
}

}  // namespace
