// Copyright 2026 The knotgirth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "knotgirth/cli/commands.hpp"
#include "knotgirth/cli/report.hpp"
#include "knotgirth/cli/verify.hpp"

namespace knotgirth::cli {
namespace {

DiagramSource braid_source(const char* word, int strands, Closure closure) {
  return {word, strands, closure, std::nullopt};
}

Json without_timings(RunReport r) {
  r.wall_time_seconds = 0;
  r.outputs.erase("timings");
  return to_json(r);
}

TEST(Report, JsonRoundTrip) {
  RunReport r;
  r.command = "jones";
  r.inputs["braid"] = "1 1 1";
  r.outputs["value"] = 3;
  r.seed = 1234567890123ULL;
  r.wall_time_seconds = 0.25;
  const auto back = report_from_json(to_json(r));
  EXPECT_EQ(to_json(back), to_json(r));
  EXPECT_NE(render(r, OutputFormat::Text).find("jones"), std::string::npos);
  EXPECT_EQ(Json::parse(render(r, OutputFormat::Json)), to_json(r));
  EXPECT_EQ(parse_format("json"), OutputFormat::Json);
  EXPECT_THROW(parse_format("yaml"), std::invalid_argument);
}

TEST(Report, CyclotomicCoefficientsAreStrings) {
  const auto j = cyclotomic_json(loop_value(5));
  EXPECT_EQ(j["order"], 20);
  ASSERT_TRUE(j["coefficients"].is_array());
  EXPECT_TRUE(j["coefficients"][0].is_string());
  EXPECT_NEAR(j["re"].get<double>(), 1.6180339887, 1e-9);
}

TEST(Commands, StatsOfTrefoil) {
  const auto r = cmd_stats(braid_source("1 1 1", 2, Closure::Trace));
  EXPECT_EQ(r.command, "stats");
  EXPECT_EQ(r.outputs["stats"]["girth"], 4);
  EXPECT_EQ(r.outputs["stats"]["crossings"], 3);
  EXPECT_EQ(r.outputs["stats"]["components"], 1);
  EXPECT_EQ(r.outputs["seifert"]["circles"], 2);
  EXPECT_EQ(r.outputs["seifert"]["genus"], 1);
  EXPECT_EQ(r.outputs["seifert_bound"]["holds"], true);

  const auto id = cmd_stats(braid_source("", 3, Closure::Trace));
  EXPECT_EQ(id.outputs["stats"]["girth"], 6);
  EXPECT_EQ(id.outputs["seifert"]["circles"], 3);
  EXPECT_TRUE(id.outputs["seifert"]["genus"].is_null());
}

TEST(Commands, JonesOfUnknotAndTrefoil) {
  const auto u = cmd_jones(braid_source("", 1, Closure::Trace), 5);
  EXPECT_EQ(u.outputs["bracket"], cyclotomic_json(loop_value(5)));
  EXPECT_NEAR(u.outputs["normalized_abs"].get<double>(), 1.0, 1e-12);

  const auto t = cmd_jones(braid_source("1 1 1", 2, Closure::Trace), 5);
  const Json coeffs = Json::array({"-1", "0", "0", "0", "-2", "0", "0", "0"});
  EXPECT_EQ(t.outputs["bracket"]["coefficients"], coeffs);
  EXPECT_EQ(t.outputs["oracle_equal"], true);
  EXPECT_EQ(t.outputs["girth"], 4);
}

TEST(Commands, DiagramFileSource) {
  const auto path = std::filesystem::temp_directory_path() / "knotgirth_test_diagram.json";
  {
    std::ofstream out(path);
    out << to_json(trace_closure(parse_braid("1 1 1", 2)));
  }
  DiagramSource src;
  src.diagram_file = path.string();
  const auto r = cmd_jones(src, 5);
  EXPECT_EQ(r.outputs["bracket"],
            cmd_jones(braid_source("1 1 1", 2, Closure::Trace), 5).outputs["bracket"]);
  EXPECT_FALSE(r.outputs.contains("normalized_abs"));
  std::filesystem::remove(path);

  src.diagram_file = (std::filesystem::temp_directory_path() / "knotgirth_missing.json").string();
  EXPECT_THROW(cmd_jones(src, 5), std::invalid_argument);
  EXPECT_THROW(cmd_jones(DiagramSource{}, 5), std::invalid_argument);
}

TEST(Commands, VogelOfPlatKink) {
  const auto r = cmd_vogel(braid_source("1", 2, Closure::Plat), 5);
  EXPECT_EQ(r.outputs["bracket_equal"], true);
  EXPECT_EQ(r.outputs["seifert_circles_before"], r.outputs["seifert_circles_after"]);
  EXPECT_EQ(r.outputs["within_budget"], true);

  const auto braided = cmd_vogel(braid_source("1 -2 1", 3, Closure::Trace), 5);
  EXPECT_EQ(braided.outputs["braid"], "1 -2 1");
  EXPECT_EQ(braided.outputs["rii_moves"], 0);
}

TEST(Commands, TwistReportsInvariance) {
  const auto r = cmd_twist(braid_source("1 1 1", 2, Closure::Trace), {0, 2, std::nullopt}, 20, 5);
  EXPECT_EQ(r.outputs["crossing_delta"], 40);
  EXPECT_EQ(r.outputs["expected_delta"], 40);
  EXPECT_EQ(r.outputs["abs_squared_equal"], true);
  const auto once = cmd_twist(braid_source("1 1 1", 2, Closure::Trace), {0, 2, std::nullopt}, 1, 5);
  EXPECT_EQ(once.outputs["abs_squared_equal"], false);
}

TEST(Commands, SimulationsAreDeterministic) {
  SimulateOptions o;
  o.seed = 99;
  o.reps = 20;
  const auto src = braid_source("1 1 1", 2, Closure::Trace);
  const auto a = cmd_simulate_dqc1(src, o);
  const auto b = cmd_simulate_dqc1(src, o);
  RunReport x = a;
  RunReport y = b;
  x.wall_time_seconds = y.wall_time_seconds = 0;
  EXPECT_EQ(to_json(x), to_json(y));
  EXPECT_GE(a.outputs["empirical_success"].get<double>(), 0.75);

  const auto plat = cmd_simulate_plat(braid_source("1 1 1", 4, Closure::Plat), o);
  EXPECT_GE(plat.outputs["empirical_success"].get<double>(), 0.75);
  EXPECT_THROW(cmd_simulate_plat(braid_source("1", 3, Closure::Plat), o), std::invalid_argument);

  const auto pipe = cmd_pipeline(braid_source("1 1 1", 2, Closure::Plat), o);
  EXPECT_GE(pipe.outputs["agreement_with_direct"].get<double>(), 0.75);
}

TEST(Verify, ParseSuite) {
  EXPECT_EQ(parse_suite("all").size(), 11U);
  EXPECT_EQ(parse_suite("acceptance").front(), 1);
  EXPECT_EQ(parse_suite("acceptance").size(), 10U);
  EXPECT_EQ(parse_suite("3,0,7"), (std::vector<int>{3, 0, 7}));
  EXPECT_THROW(parse_suite("11"), std::invalid_argument);
  EXPECT_THROW(parse_suite("x"), std::invalid_argument);
}

TEST(Verify, SelfCheckPassesAndCorruptionFails) {
  VerifyOptions o;
  o.criteria = {0};
  const auto good = cmd_verify(o);
  EXPECT_EQ(good.exit_code, 0);
  ASSERT_EQ(good.results.size(), 1U);
  EXPECT_TRUE(good.results[0].passed);
  EXPECT_EQ(format_line(good.results[0]).rfind("[PASS] 0 ", 0), 0U);

  o.corrupt_constant = true;
  const auto bad = cmd_verify(o);
  EXPECT_NE(bad.exit_code, 0);
  EXPECT_FALSE(bad.results[0].passed);
  EXPECT_EQ(format_line(bad.results[0]).rfind("[FAIL]", 0), 0U);
}

TEST(Verify, RerunIsIdenticalApartFromTimings) {
  VerifyOptions o;
  o.criteria = {0, 3, 4};
  o.seed = 5;
  const auto a = cmd_verify(o);
  const auto b = cmd_verify(o);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(without_timings(a.report), without_timings(b.report));
}

}  // namespace
}  // namespace knotgirth::cli
