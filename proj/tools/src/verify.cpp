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

#include "knotgirth/cli/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "knotgirth/estimators.hpp"
#include "knotgirth/hadamard.hpp"
#include "knotgirth/jones.hpp"
#include "knotgirth/random_diagrams.hpp"
#include "knotgirth/seifert.hpp"
#include "knotgirth/surgery.hpp"

namespace knotgirth::cli {

namespace {

using Clock = std::chrono::steady_clock;
using qsim::derive_seed;

constexpr int kEstimatorRoot = 5;
constexpr double kEstimatorEpsilon = 0.1;
constexpr int kRepetitions = 100;
constexpr int kRequiredSuccesses = 75;

struct Outcome {
  bool passed = false;
  std::string detail;
};

template <class... Args>
std::string cat(const Args&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

// Runs body(i) for i in [0, count) on all hardware threads. Results must be
// written to per-index slots so the outcome does not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const auto threads =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), count));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) body(i);
  };
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

// --- 0: frozen constants ----------------------------------------------------

Outcome frozen_constants(const VerifyOptions& o) {
  // Bracket of the trace closure of sigma_1^3 at r = 5 is A^7 + A^3 + A^-1 -
  // A^-9; with A = z^4 in Z[z]/Phi_20 that is -1 - 2 z^4.
  std::vector<BigInt> trefoil{-1, 0, 0, 0, -2, 0, 0, 0};
  if (o.corrupt_constant) trefoil[4] = -3;
  const auto& ring = CyclotomicRing::for_root(5);
  const auto braid = parse_braid("1 1 1", 2);
  const auto got = jones_at_root(trace_closure(braid), 5);
  const bool trefoil_ok = got == Cyclotomic(ring, trefoil);
  const bool unknot_ok = jones_at_root(trace_closure(BraidWord::identity(1)), 5) == loop_value(5);
  const bool catalan_ok = catalan(6) == 132;
  return {trefoil_ok && unknot_ok && catalan_ok,
          cat("trefoil bracket ", trefoil_ok ? "matches" : "differs", " (", got.to_string(),
              "), unknot ", unknot_ok ? "ok" : "wrong", ", Catalan(6) ",
              catalan_ok ? "ok" : "wrong")};
}

// --- 1: oracle equivalence --------------------------------------------------

constexpr int kOracleMaxStrands = 4;
constexpr int kOracleMaxLength = 8;
constexpr double kOracleTimeLimit = 300.0;

struct OracleUnit {
  int strands = 1;
  int length = 0;
  int first = -1;  // fixed first letter index, -1 for the empty word
};

struct OracleTally {
  long long braids = 0;
  long long cases = 0;
  long long mismatches = 0;
  std::string first_mismatch;
};

BraidLetter letter_of(int index) { return {index / 2 + 1, index % 2 == 0 ? 1 : -1}; }

void oracle_unit(const OracleUnit& u, OracleTally& t) {
  const int alphabet = 2 * (u.strands - 1);
  std::vector<int> rest(static_cast<std::size_t>(std::max(0, u.length - 1)), 0);
  std::vector<BraidLetter> letters(static_cast<std::size_t>(u.length));
  while (true) {
    if (u.length > 0) letters[0] = letter_of(u.first);
    for (std::size_t i = 0; i < rest.size(); ++i) letters[i + 1] = letter_of(rest[i]);
    const BraidWord braid(u.strands, letters);
    ++t.braids;
    for (const auto closure : {Closure::Trace, Closure::Plat}) {
      if (closure == Closure::Plat && u.strands % 2 != 0) continue;
      const auto diagram = close_braid(braid, closure);
      const auto tally = bracket_statesum_tally(diagram);
      for (const int r : {5, 7, 8}) {
        ++t.cases;
        if (jones_at_root(diagram, r) == evaluate_tally(tally, r)) continue;
        if (t.mismatches++ == 0) {
          t.first_mismatch = cat(closure_name(closure), " closure of [", braid.to_string(),
                                 "] on ", u.strands, " strands at r=", r);
        }
      }
    }
    std::size_t i = 0;
    while (i < rest.size() && ++rest[i] == alphabet) rest[i++] = 0;
    if (i == rest.size()) break;
  }
}

Outcome oracle_equivalence(const VerifyOptions&) {
  const auto start = Clock::now();
  std::vector<OracleUnit> units;
  for (int s = 1; s <= kOracleMaxStrands; ++s) {
    units.push_back({s, 0, -1});
    for (int len = 1; len <= kOracleMaxLength && s > 1; ++len) {
      for (int f = 0; f < 2 * (s - 1); ++f) units.push_back({s, len, f});
    }
  }
  std::vector<OracleTally> tallies(units.size());
  parallel_for(units.size(), [&](std::size_t i) { oracle_unit(units[i], tallies[i]); });
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();

  OracleTally total;
  for (const auto& t : tallies) {
    total.braids += t.braids;
    total.cases += t.cases;
    if (t.mismatches > 0 && total.mismatches == 0) total.first_mismatch = t.first_mismatch;
    total.mismatches += t.mismatches;
  }
  const bool fast = seconds < kOracleTimeLimit;
  auto detail = cat(total.braids, " braids, ", total.cases, " cases at r in {5,7,8}, ",
                    total.mismatches, " mismatches, runtime ",
                    fast ? "under" : "over", " 300 s");
  if (total.mismatches > 0) detail += "; first: " + total.first_mismatch;
  return {total.mismatches == 0 && total.cases >= 10000 && fast, detail};
}

// --- 2: root-of-unity wiring ------------------------------------------------

Outcome root_wiring(const VerifyOptions&) {
  double worst = 0;
  for (const int r : {5, 7, 8, 9, 10}) {
    const auto a = bracket_variable(r);
    const auto a2 = a * a;
    const auto d = -(a2 + a2.conjugate());
    const auto t = a.conjugate().pow(4);
    const auto want_t = std::polar(1.0, 2 * std::numbers::pi / r);
    worst = std::max(worst, std::abs(d.to_complex() - 2 * std::cos(std::numbers::pi / r)));
    worst = std::max(worst, std::abs(t.to_complex() - want_t));
  }
  return {worst <= 1e-12, cat("max deviation ", worst, " over r in {5,7,8,9,10}")};
}

// --- 3: Hadamard-test identities --------------------------------------------

qsim::Vector random_state(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  qsim::Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = {g(rng), g(rng)};
  return v / v.norm();
}

Outcome hadamard_identities(const VerifyOptions& o) {
  std::mt19937_64 rng(derive_seed(o.seed, 3));
  double worst = 0;
  for (int k = 0; k < 100; ++k) {
    const int dim = 2 + k % 31;
    const auto u = qsim::random_unitary(dim, rng);
    const auto psi = random_state(dim, rng);
    const auto amp = psi.dot(u.matrix() * psi);  // <psi|U|psi>
    const auto pure = qsim::StatePrep::pure(psi);
    worst = std::max(worst, std::abs(qsim::hadamard_test(u, pure, qsim::Part::Real) -
                                     (1 + amp.real()) / 2));
    worst = std::max(worst, std::abs(qsim::hadamard_test(u, pure, qsim::Part::Imaginary) -
                                     (1 + amp.imag()) / 2));
    const double mixed = 0.5 + u.matrix().trace().real() / (2.0 * dim);
    worst = std::max(worst, std::abs(qsim::hadamard_test(u, qsim::StatePrep::maximally_mixed(),
                                                         qsim::Part::Real) -
                                     mixed));
  }
  return {worst <= 1e-10, cat("100 unitaries of dimension 2..32, max deviation ", worst)};
}

// --- 4: one-clean-qubit probability and U' -----------------------------------

Outcome dqc1_identities(const VerifyOptions& o) {
  std::mt19937_64 rng(derive_seed(o.seed, 4));
  double worst_density = 0;
  double worst_trace = 0;
  for (int k = 0; k < 100; ++k) {
    const int n = k % 5;
    const auto u = qsim::random_unitary(1 << (n + 1), rng);
    const double p0 = qsim::dqc1_prob0(u);
    worst_density = std::max(worst_density, std::abs(p0 - qsim::dqc1_prob0_density(u)));
    worst_trace = std::max(
        worst_trace, std::abs(qsim::uprime_normalized_trace(qsim::uprime_construct(u)) - p0));
  }
  return {worst_density <= 1e-10 && worst_trace <= 1e-10,
          cat("100 unitaries with n = 0..4, density deviation ", worst_density,
              ", U' trace deviation ", worst_trace)};
}

// --- 5, 6: estimator corpus -------------------------------------------------

std::vector<BraidWord> estimator_corpus(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BraidWord> corpus;
  for (int i = 0; i < 24; ++i) {
    const int strands = i % 2 == 0 ? 2 : 4;
    const int length = 1 + static_cast<int>(rng() % 6);
    corpus.push_back(random_braid(rng, strands, length));
  }
  return corpus;
}

int count_successes(const qsim::OutcomeModel& model, double exact, std::uint64_t seed) {
  return qsim::repeat_estimate(
             [&](std::uint64_t s) {
               return qsim::sample_estimate(model, {kEstimatorEpsilon, s, std::nullopt})
                   .point_estimate;
             },
             kRepetitions, seed, exact, kEstimatorEpsilon)
      .successes;
}

Outcome estimator_contracts(const VerifyOptions& o) {
  const auto corpus = estimator_corpus(derive_seed(o.seed, 56));
  std::vector<int> plat(corpus.size());
  std::vector<int> trace(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) {
    const auto& b = corpus[i];
    const auto base = derive_seed(o.seed, 500 + i);
    plat[i] = count_successes(qsim::plat_outcome_model(b, kEstimatorRoot),
                              normalized_abs(b, Closure::Plat, kEstimatorRoot),
                              derive_seed(base, 1));
    trace[i] = count_successes(qsim::trace_outcome_model(b, kEstimatorRoot),
                               normalized_abs(b, Closure::Trace, kEstimatorRoot),
                               derive_seed(base, 2));
  });
  const int worst_plat = *std::min_element(plat.begin(), plat.end());
  const int worst_trace = *std::min_element(trace.begin(), trace.end());
  return {worst_plat >= kRequiredSuccesses && worst_trace >= kRequiredSuccesses,
          cat(corpus.size(), " braids, eps 0.1, fewest successes in 100: plat ", worst_plat,
              ", trace ", worst_trace)};
}

Outcome pipeline_agreement(const VerifyOptions& o) {
  const auto corpus = estimator_corpus(derive_seed(o.seed, 56));
  std::vector<int> agree(corpus.size());
  std::vector<int> widest(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) {
    const auto& b = corpus[i];
    const auto pipe = qsim::pipeline_model(b, kEstimatorRoot);
    const auto plat = qsim::plat_outcome_model(b, kEstimatorRoot);
    widest[i] = pipe.n_prime;
    const auto base = derive_seed(o.seed, 600 + i);
    int ok = 0;
    for (int k = 0; k < kRepetitions; ++k) {
      const auto s = derive_seed(base, static_cast<std::uint64_t>(k));
      const double z = qsim::sample_pipeline(pipe, {kEstimatorEpsilon, derive_seed(s, 1), {}})
                           .point_estimate;
      const double y = qsim::sample_estimate(plat, {kEstimatorEpsilon, derive_seed(s, 2), {}})
                           .point_estimate;
      if (std::abs(z - y) < 2 * kEstimatorEpsilon) ++ok;
    }
    agree[i] = ok;
  });
  const int worst = *std::min_element(agree.begin(), agree.end());
  return {worst >= kRequiredSuccesses,
          cat(corpus.size(), " braids, largest braided width ",
              *std::max_element(widest.begin(), widest.end()),
              ", fewest agreements within 2 eps in 100: ", worst)};
}

// --- 7: Seifert bound and genus ---------------------------------------------

Outcome seifert_identities(const VerifyOptions& o) {
  std::mt19937_64 rng(derive_seed(o.seed, 7));
  int violations = 0;
  for (int i = 0; i < 1000; ++i) {
    if (!check_seifert_bound(random_morse_link(rng)).holds) ++violations;
  }
  int genus_failures = 0;
  int max_genus = 0;
  for (int i = 0; i < 100; ++i) {
    const auto knot = random_knot_diagram(rng);
    const auto s = seifert_data(knot);
    const int twice_g = s.crossings - s.circles + 1;
    const bool integral = twice_g % 2 == 0 && twice_g >= 0;
    const int g = twice_g / 2;
    if (!integral || s.crossings - s.circles - 1 + 2 - 2 * g != 0 || seifert_genus(knot) != g) {
      ++genus_failures;
    }
    max_genus = std::max(max_genus, g);
  }
  return {violations == 0 && genus_failures == 0,
          cat("1000 diagrams, ", violations, " bound violations; 100 knots, ", genus_failures,
              " genus failures, max genus ", max_genus)};
}

// --- 8: Vogel braiding ------------------------------------------------------

constexpr int kVogelMaxCircles = 8;

Outcome vogel_bound(const VerifyOptions& o) {
  std::mt19937_64 rng(derive_seed(o.seed, 8));
  int tested = 0;
  int failures = 0;
  int max_moves = 0;
  int max_circles = 0;
  std::string first_failure;
  while (tested < 200) {
    RandomDiagramOptions opt;
    opt.max_width = 6;
    opt.body_events = 4 + static_cast<int>(rng() % 9);
    const auto d = random_morse_link(rng, opt);
    const int s = seifert_circles(d);
    if (s > kVogelMaxCircles) continue;
    const auto v = vogel_braiding(d);
    // Trace closures come back unchanged; they are already braided.
    if (trace_closure(v.braid) == d) continue;
    ++tested;
    const auto out = trace_closure(v.braid);
    const bool ok = v.braid.strand_count() == s && v.rii_moves <= s * s &&
                    seifert_circles(out) == s &&
                    jones_at_root(d, 5) == jones_at_root(out, 5) &&
                    jones_at_root(d, 7) == jones_at_root(out, 7);
    max_moves = std::max(max_moves, v.rii_moves);
    max_circles = std::max(max_circles, s);
    if (!ok && failures++ == 0) first_failure = to_json(d);
  }
  auto detail = cat(tested, " diagrams with up to ", max_circles, " Seifert circles, ",
                    failures, " failures, most R2 moves ", max_moves);
  if (failures > 0) detail += "; first: " + first_failure;
  return {failures == 0, detail};
}

// --- 9: twist surgery -------------------------------------------------------

Outcome twist_surgery(const VerifyOptions& o) {
  constexpr int r = 5;
  std::mt19937_64 rng(derive_seed(o.seed, 9));
  std::vector<MorseLink> corpus;
  while (corpus.size() < 50) {
    RandomDiagramOptions opt;
    opt.max_width = 6;
    opt.body_events = 6 + static_cast<int>(rng() % 8);
    auto d = random_morse_link(rng, opt);
    if (girth(d) >= 4) corpus.push_back(std::move(d));
  }
  int failures = 0;
  int broken = 0;
  for (const auto& d : corpus) {
    for (const int m : {2, 3}) {
      const TwistWindow w{0, m, std::nullopt};
      for (const int k : {4 * r, -4 * r}) {
        const auto t = check_twist_invariance(d, w, r, k);
        if (!t.equal || t.crossings_after - t.crossings_before != 4 * r * m * (m - 1)) {
          ++failures;
        }
      }
    }
    if (!check_twist_invariance(d, {0, 2, std::nullopt}, r, 1).equal) ++broken;
  }
  return {failures == 0 && broken >= 1,
          cat("50 diagrams x m in {2,3} x k = +-20: ", failures, " failures; k = 1 breaks ",
              broken, " of 50")};
}

// --- 10: performance envelope -----------------------------------------------

Outcome performance(const VerifyOptions& o) {
  std::mt19937_64 rng(derive_seed(o.seed, 10));
  const auto diagram = trace_closure(random_braid(rng, 6, 200));
  ContractionStats stats;
  const auto start = Clock::now();
  jones_at_root(diagram, 5, &stats);
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  const bool shape = crossing_count(diagram) == 200 && stats.girth == 12;
  return {shape && seconds < 10.0 && stats.peak_dimension <= catalan(6),
          cat(crossing_count(diagram), " crossings, girth ", stats.girth, ", peak dimension ",
              stats.peak_dimension, " (limit ", catalan(6), "), runtime ",
              seconds < 10.0 ? "under" : "over", " 10 s")};
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*run)(const VerifyOptions&);
};

constexpr Criterion kCriteria[] = {
    {0, "frozen constants", frozen_constants},
    {1, "oracle equivalence", oracle_equivalence},
    {2, "root-of-unity wiring", root_wiring},
    {3, "Hadamard-test identities", hadamard_identities},
    {4, "one-clean-qubit probability and U'", dqc1_identities},
    {5, "estimator contracts", estimator_contracts},
    {6, "girth-reduction pipeline", pipeline_agreement},
    {7, "Seifert bound and genus", seifert_identities},
    {8, "Vogel braiding", vogel_bound},
    {9, "twist surgery", twist_surgery},
    {10, "performance envelope", performance},
};

}  // namespace

std::vector<int> parse_suite(std::string_view selector) {
  std::vector<int> ids;
  if (selector == "all") {
    for (int i = kFirstCriterion; i <= kLastCriterion; ++i) ids.push_back(i);
    return ids;
  }
  if (selector == "acceptance") {
    for (int i = 1; i <= kLastCriterion; ++i) ids.push_back(i);
    return ids;
  }
  std::string token;
  std::istringstream in{std::string(selector)};
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int id = -1;
    try {
      id = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || id < kFirstCriterion || id > kLastCriterion) {
      throw std::invalid_argument("unknown criterion '" + token +
                                  "'; use all, acceptance or ids 0-10");
    }
    ids.push_back(id);
  }
  if (ids.empty()) throw std::invalid_argument("empty suite selector");
  return ids;
}

CriterionResult run_criterion(int id, const VerifyOptions& options) {
  for (const auto& c : kCriteria) {
    if (c.id != id) continue;
    const auto start = Clock::now();
    CriterionResult result{id, c.title, false, {}, 0};
    try {
      auto outcome = c.run(options);
      result.passed = outcome.passed;
      result.detail = std::move(outcome.detail);
    } catch (const std::exception& e) {
      result.detail = std::string("threw: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
  }
  throw std::invalid_argument("unknown criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_criteria(const VerifyOptions& options) {
  auto ids = options.criteria;
  if (ids.empty()) ids = parse_suite("all");
  std::vector<CriterionResult> out;
  for (const int id : ids) out.push_back(run_criterion(id, options));
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream line;
  line << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.title << ": " << r.detail
       << " (" << std::fixed;
  line.precision(2);
  line << r.seconds << " s)";
  return line.str();
}

VerifyOutcome cmd_verify(const VerifyOptions& options) {
  const auto start = Clock::now();
  VerifyOutcome out;
  out.results = run_criteria(options);
  bool all = true;
  Json criteria = Json::array();
  Json timings = Json::object();
  for (const auto& r : out.results) {
    all = all && r.passed;
    criteria.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed},
                        {"detail", r.detail}});
    timings[std::to_string(r.id)] = r.seconds;
  }
  auto& rep = out.report;
  rep.command = "verify";
  Json ids = Json::array();
  for (const auto& r : out.results) ids.push_back(r.id);
  rep.inputs["criteria"] = std::move(ids);
  rep.inputs["corrupt_constant"] = options.corrupt_constant;
  rep.seed = options.seed;
  rep.outputs["passed"] = all;
  rep.outputs["criteria"] = std::move(criteria);
  rep.outputs["timings"] = std::move(timings);
  rep.wall_time_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  out.exit_code = all ? 0 : 1;
  return out;
}

}  // namespace knotgirth::cli
