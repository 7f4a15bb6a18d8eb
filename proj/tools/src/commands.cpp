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

#include "knotgirth/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "knotgirth/estimators.hpp"
#include "knotgirth/seifert.hpp"

namespace knotgirth::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Json estimate_json(const qsim::EstimateReport& e) {
  Json j;
  j["point_estimate"] = e.point_estimate;
  j["real_part"] = e.real_part;
  j["imag_part"] = e.imag_part;
  j["p0_real"] = e.p0_real;
  j["p0_imag"] = e.p0_imag;
  j["samples_per_part"] = e.samples_per_part;
  j["samples"] = e.samples;
  j["epsilon"] = e.epsilon;
  j["matrix_dimension"] = e.matrix_dimension;
  return j;
}

Json simulate_inputs(const DiagramSource& source, const SimulateOptions& o) {
  Json in = source_json(source);
  in["r"] = o.r;
  in["epsilon"] = o.epsilon;
  in["reps"] = o.reps;
  in["samples_per_part"] = o.samples_per_part ? Json(*o.samples_per_part) : Json();
  return in;
}

qsim::EstimatorOptions estimator_options(const SimulateOptions& o, std::uint64_t seed) {
  return {o.epsilon, seed, o.samples_per_part};
}

// First repetition in full plus the success fraction over all of them.
RunReport simulate(const std::string& command, const DiagramSource& source,
                   const SimulateOptions& o, Closure closure) {
  const auto start = Clock::now();
  const auto braid = load_braid(source);
  require_valid_root(o.r);
  if (o.reps < 1) throw std::invalid_argument("reps must be positive");
  const auto model = closure == Closure::Plat ? qsim::plat_outcome_model(braid, o.r)
                                              : qsim::trace_outcome_model(braid, o.r);
  const double exact = normalized_abs(braid, closure, o.r);
  const auto first = qsim::sample_estimate(model, estimator_options(o, qsim::derive_seed(o.seed, 0)));
  const auto reps = qsim::repeat_estimate(
      [&](std::uint64_t seed) {
        return qsim::sample_estimate(model, estimator_options(o, seed)).point_estimate;
      },
      o.reps, o.seed, exact, o.epsilon);

  RunReport report;
  report.command = command;
  report.inputs = simulate_inputs(source, o);
  report.seed = o.seed;
  report.outputs["estimate"] = estimate_json(first);
  report.outputs["exact_normalized_abs"] = exact;
  report.outputs["repetitions"] = reps.repetitions;
  report.outputs["successes"] = reps.successes;
  report.outputs["empirical_success"] = reps.empirical_success;
  report.wall_time_seconds = seconds_since(start);
  return report;
}

}  // namespace

MorseLink load_diagram(const DiagramSource& source) {
  if (source.braid.has_value() == source.diagram_file.has_value()) {
    throw std::invalid_argument("give exactly one of --braid or --diagram");
  }
  if (source.diagram_file) {
    std::ifstream in(*source.diagram_file);
    if (!in) throw std::invalid_argument("cannot read " + *source.diagram_file);
    std::ostringstream text;
    text << in.rdbuf();
    return morse_link_from_json(text.str());
  }
  return close_braid(load_braid(source), source.closure);
}

BraidWord load_braid(const DiagramSource& source) {
  if (!source.braid) throw std::invalid_argument("this command needs --braid");
  if (source.strands < 1) throw std::invalid_argument("--strands must be positive");
  return parse_braid(*source.braid, source.strands);
}

Json source_json(const DiagramSource& source) {
  Json j;
  if (source.braid) {
    j["braid"] = *source.braid;
    j["strands"] = source.strands;
    j["closure"] = closure_name(source.closure);
  } else if (source.diagram_file) {
    j["diagram_file"] = *source.diagram_file;
  }
  return j;
}

RunReport cmd_stats(const DiagramSource& source) {
  const auto start = Clock::now();
  const auto d = load_diagram(source);
  const auto bound = check_seifert_bound(d);
  RunReport report;
  report.command = "stats";
  report.inputs = source_json(source);
  report.outputs["stats"] = stats_json(diagram_stats(d));
  report.outputs["seifert"] = seifert_json(seifert_data(d));
  report.outputs["writhe"] = writhe(d);
  Json b;
  b["holds"] = bound.holds;
  b["circles"] = bound.circles;
  b["crossings"] = bound.crossings;
  b["components"] = bound.components;
  report.outputs["seifert_bound"] = std::move(b);
  report.wall_time_seconds = seconds_since(start);
  return report;
}

RunReport cmd_jones(const DiagramSource& source, int r) {
  const auto start = Clock::now();
  require_valid_root(r);
  const auto d = load_diagram(source);
  ContractionStats cs;
  const auto value = jones_at_root(d, r, &cs);
  RunReport report;
  report.command = "jones";
  report.inputs = source_json(source);
  report.inputs["r"] = r;
  report.outputs["bracket"] = cyclotomic_json(value);
  report.outputs["abs"] = std::abs(value.to_complex());
  report.outputs["abs_squared"] = cyclotomic_json(abs_squared(value));
  report.outputs["loop_value"] = loop_value_real(r);
  if (source.braid) {
    report.outputs["normalized_abs"] = normalized_abs(load_braid(source), source.closure, r);
  }
  report.outputs["writhe_normalized"] = cyclotomic_json(writhe_normalized(d, r));
  report.outputs["oracle_equal"] = crossing_count(d) <= kDefaultStateSumCap
                                       ? Json(bracket_statesum_oracle(d, r) == value)
                                       : Json();
  report.outputs["girth"] = cs.girth;
  report.outputs["peak_dimension"] = cs.peak_dimension;
  report.wall_time_seconds = seconds_since(start);
  return report;
}

RunReport cmd_vogel(const DiagramSource& source, int r) {
  const auto start = Clock::now();
  require_valid_root(r);
  const auto d = load_diagram(source);
  const auto v = vogel_braiding(d);
  const auto out = trace_closure(v.braid);
  RunReport report;
  report.command = "vogel";
  report.inputs = source_json(source);
  report.inputs["r"] = r;
  report.outputs["braid"] = v.braid.to_string();
  report.outputs["strands"] = v.braid.strand_count();
  report.outputs["rii_moves"] = v.rii_moves;
  report.outputs["move_budget"] = v.seifert_circles * v.seifert_circles;
  report.outputs["within_budget"] = v.within_budget;
  report.outputs["before"] = stats_json(diagram_stats(d));
  report.outputs["after"] = stats_json(diagram_stats(out));
  report.outputs["seifert_circles_before"] = v.seifert_circles;
  report.outputs["seifert_circles_after"] = seifert_circles(out);
  report.outputs["bracket_equal"] = jones_at_root(d, r) == jones_at_root(out, r);
  report.wall_time_seconds = seconds_since(start);
  return report;
}

RunReport cmd_twist(const DiagramSource& source, const TwistWindow& window, int k, int r) {
  const auto start = Clock::now();
  require_valid_root(r);
  const auto d = load_diagram(source);
  const auto twisted = insert_full_twists(d, window, k);
  const auto before = abs_squared(jones_at_root(d, r));
  const auto after = abs_squared(jones_at_root(twisted, r));
  const auto ledger = twist_witness_ledger(d, window, r);
  const int m = window.strands;
  RunReport report;
  report.command = "twist";
  report.inputs = source_json(source);
  report.inputs["position"] = window.position;
  report.inputs["strands"] = m;
  report.inputs["level"] = window.level ? Json(*window.level) : Json();
  report.inputs["k"] = k;
  report.inputs["r"] = r;
  report.outputs["before"] = stats_json(diagram_stats(d));
  report.outputs["after"] = stats_json(diagram_stats(twisted));
  report.outputs["crossing_delta"] = crossing_count(twisted) - crossing_count(d);
  report.outputs["expected_delta"] = std::abs(k) * m * (m - 1);
  report.outputs["abs_squared_before"] = cyclotomic_json(before);
  report.outputs["abs_squared_after"] = cyclotomic_json(after);
  report.outputs["abs_squared_equal"] = before == after;
  Json l;
  l["crossings_c"] = ledger.crossings_c;
  l["bits_b"] = ledger.bits_b;
  l["reidemeister_gamma"] = ledger.reidemeister_gamma;
  l["total"] = ledger_total(ledger);
  report.outputs["witness_ledger"] = std::move(l);
  report.wall_time_seconds = seconds_since(start);
  return report;
}

RunReport cmd_simulate_plat(const DiagramSource& source, const SimulateOptions& options) {
  return simulate("simulate-plat", source, options, Closure::Plat);
}

RunReport cmd_simulate_dqc1(const DiagramSource& source, const SimulateOptions& options) {
  return simulate("simulate-dqc1", source, options, Closure::Trace);
}

RunReport cmd_pipeline(const DiagramSource& source, const SimulateOptions& o) {
  const auto start = Clock::now();
  const auto braid = load_braid(source);
  require_valid_root(o.r);
  if (o.reps < 1) throw std::invalid_argument("reps must be positive");
  const auto pipe = qsim::pipeline_model(braid, o.r);
  const auto plat = qsim::plat_outcome_model(braid, o.r);
  const double exact = normalized_abs(braid, Closure::Plat, o.r);

  auto seed_pair = [&](int i) {
    const auto s = qsim::derive_seed(o.seed, static_cast<std::uint64_t>(i));
    return std::pair{qsim::derive_seed(s, 1), qsim::derive_seed(s, 2)};
  };
  const auto [s0, t0] = seed_pair(0);
  const auto first = qsim::sample_pipeline(pipe, estimator_options(o, s0));
  const auto direct = qsim::sample_estimate(plat, estimator_options(o, t0));
  int agree = 0;
  int near_exact = 0;
  for (int i = 0; i < o.reps; ++i) {
    const auto [s, t] = seed_pair(i);
    const double z = qsim::sample_pipeline(pipe, estimator_options(o, s)).point_estimate;
    const double y = qsim::sample_estimate(plat, estimator_options(o, t)).point_estimate;
    if (std::abs(z - y) < 2 * o.epsilon) ++agree;
    if (std::abs(z - exact) < o.epsilon) ++near_exact;
  }

  RunReport report;
  report.command = "pipeline";
  report.inputs = simulate_inputs(source, o);
  report.seed = o.seed;
  auto est = estimate_json(first);
  est["n"] = first.n;
  est["n_prime"] = first.n_prime;
  est["rii_moves"] = first.rii_moves;
  est["rescale"] = first.rescale;
  est["epsilon_prime"] = first.epsilon_prime;
  report.outputs["estimate"] = std::move(est);
  report.outputs["braided"] = pipe.braid.to_string();
  report.outputs["direct_plat_estimate"] = direct.point_estimate;
  report.outputs["exact_normalized_abs"] = exact;
  report.outputs["repetitions"] = o.reps;
  report.outputs["agreement_with_direct"] = static_cast<double>(agree) / o.reps;
  report.outputs["empirical_success"] = static_cast<double>(near_exact) / o.reps;
  report.wall_time_seconds = seconds_since(start);
  return report;
}

}  // namespace knotgirth::cli
