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

#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include "knotgirth/cli/commands.hpp"
#include "knotgirth/cli/verify.hpp"

namespace {

using namespace knotgirth;
using namespace knotgirth::cli;

struct Globals {
  int r = 5;
  std::uint64_t seed = 0;
  std::string format = "json";
};

struct Inputs {
  std::string braid;
  int strands = 0;
  std::string closure = "trace";
  std::string diagram;

  DiagramSource source() const {
    DiagramSource s;
    if (!braid.empty()) s.braid = braid;
    s.strands = strands;
    s.closure = parse_closure(closure);
    if (!diagram.empty()) s.diagram_file = diagram;
    return s;
  }
};

void add_inputs(CLI::App* cmd, Inputs& in, bool allow_file) {
  cmd->add_option("--braid", in.braid, "Signed generator indices, e.g. \"1 -2 1\"");
  cmd->add_option("--strands", in.strands, "Strand count of the braid");
  cmd->add_option("--closure", in.closure, "plat or trace")
      ->check(CLI::IsMember({"plat", "trace"}));
  if (allow_file) cmd->add_option("--diagram", in.diagram, "Morse diagram JSON file");
}

void add_simulation(CLI::App* cmd, SimulateOptions& s) {
  cmd->add_option("--eps", s.epsilon, "Target additive error")->check(CLI::PositiveNumber);
  cmd->add_option("--reps", s.reps, "Independent repetitions")->check(CLI::PositiveNumber);
  cmd->add_option("--samples", s.samples_per_part, "Draws per estimated part");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotgirth: exact and simulated Jones polynomial evaluation at roots of unity"};
  app.require_subcommand(1);
  // Global options may also follow the subcommand name.
  app.fallthrough();
  Globals g;
  app.add_option("--r", g.r, "Root of unity index (>= 5, not 6)")->capture_default_str();
  app.add_option("--seed", g.seed, "Base seed for every random draw")->capture_default_str();
  app.add_option("--format", g.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  Inputs in;
  SimulateOptions sim;
  std::string window = "0,2";
  int twists = 0;
  bool twists_set = false;
  std::string suite = "all";
  bool corrupt = false;

  auto* stats = app.add_subcommand("stats", "Girth, crossings, components and Seifert data");
  add_inputs(stats, in, true);
  auto* jones = app.add_subcommand("jones", "Exact bracket at the root of unity");
  add_inputs(jones, in, true);
  auto* vogel = app.add_subcommand("vogel", "Braid a diagram with Vogel moves");
  add_inputs(vogel, in, true);
  auto* twist = app.add_subcommand("twist", "Insert full twists and compare |J|^2");
  add_inputs(twist, in, true);
  twist->add_option("--window", window, "position,strands of the twist window");
  twist->add_option("--k", twists, "Number of full twists (default 4r)")
      ->each([&](const std::string&) { twists_set = true; });
  auto* plat = app.add_subcommand("simulate-plat", "Hadamard-test estimate of a plat closure");
  add_inputs(plat, in, false);
  add_simulation(plat, sim);
  auto* dqc1 = app.add_subcommand("simulate-dqc1", "One-clean-qubit estimate of a trace closure");
  add_inputs(dqc1, in, false);
  add_simulation(dqc1, sim);
  auto* pipe = app.add_subcommand("pipeline", "Plat closure through braiding and the trace estimator");
  add_inputs(pipe, in, false);
  add_simulation(pipe, sim);
  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  verify->add_option("--suite", suite, "all, acceptance or a list such as 1,3,5");
  verify->add_flag("--corrupt-constant", corrupt, "Break a frozen constant (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    require_valid_root(g.r);
    const auto format = parse_format(g.format);
    sim.r = g.r;
    sim.seed = g.seed;

    if (verify->parsed()) {
      VerifyOptions vo;
      vo.criteria = parse_suite(suite);
      vo.seed = g.seed;
      vo.corrupt_constant = corrupt;
      auto outcome = cmd_verify(vo);
      for (const auto& r : outcome.results) std::cerr << format_line(r) << '\n';
      std::cout << render(outcome.report, format) << '\n';
      return outcome.exit_code;
    }

    RunReport report;
    if (plat->parsed() || dqc1->parsed() || pipe->parsed()) {
      in.closure = plat->parsed() || pipe->parsed() ? "plat" : "trace";
    }
    const auto source = in.source();
    if (stats->parsed()) {
      report = cmd_stats(source);
    } else if (jones->parsed()) {
      report = cmd_jones(source, g.r);
    } else if (vogel->parsed()) {
      report = cmd_vogel(source, g.r);
    } else if (twist->parsed()) {
      const auto comma = window.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("--window wants position,strands");
      const TwistWindow w{std::stoi(window.substr(0, comma)), std::stoi(window.substr(comma + 1)),
                          std::nullopt};
      report = cmd_twist(source, w, twists_set ? twists : 4 * g.r, g.r);
    } else if (plat->parsed()) {
      report = cmd_simulate_plat(source, sim);
    } else if (dqc1->parsed()) {
      report = cmd_simulate_dqc1(source, sim);
    } else {
      report = cmd_pipeline(source, sim);
    }
    report.seed = g.seed;
    std::cout << render(report, format) << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
