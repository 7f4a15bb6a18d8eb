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

#include "knotgirth/estimators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "knotgirth/hadamard.hpp"
#include "knotgirth/jones.hpp"
#include "knotgirth/jones_rep.hpp"
#include "knotgirth/seifert.hpp"

namespace knotgirth::qsim {

namespace {

std::int64_t budget(const EstimatorOptions& options) {
  if (!(options.epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (options.samples_per_part) {
    if (*options.samples_per_part < 1) throw std::invalid_argument("samples must be positive");
    return *options.samples_per_part;
  }
  return sample_budget(options.epsilon);
}

std::int64_t binomial(std::mt19937_64& rng, std::int64_t trials, double p) {
  if (trials <= 0) return 0;
  p = std::clamp(p, 0.0, 1.0);
  return std::binomial_distribution<std::int64_t>(trials, p)(rng);
}

void finish(EstimateReport& report, std::int64_t zeros_re, std::int64_t zeros_im) {
  const auto n = static_cast<double>(report.samples_per_part);
  report.real_part = 2.0 * static_cast<double>(zeros_re) / n - 1.0;
  report.imag_part = 2.0 * static_cast<double>(zeros_im) / n - 1.0;
  report.point_estimate =
      std::clamp(std::hypot(report.real_part, report.imag_part), 0.0, 1.0);
  report.samples = 2 * report.samples_per_part;
}

}  // namespace

std::int64_t sample_budget(double epsilon) {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  return static_cast<std::int64_t>(std::ceil(4.0 * std::log(16.0) / (epsilon * epsilon)));
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

OutcomeModel plat_outcome_model(const BraidWord& braid, int r) {
  const PathBasis basis(braid.strand_count(), r, Closure::Plat);
  const auto u = compile_braid(braid, basis);
  const auto zig = StatePrep::pure(plat_boundary_state(basis));
  OutcomeModel m;
  m.weights = {1.0};
  m.p0_real = {hadamard_test(u, zig, Part::Real)};
  m.p0_imag = {hadamard_test(u, zig, Part::Imaginary)};
  m.matrix_dimension = basis.size();
  return m;
}

OutcomeModel trace_outcome_model(const BraidWord& braid, int r) {
  const PathBasis basis(braid.strand_count(), r, Closure::Trace);
  const auto u = compile_braid(braid, basis);
  OutcomeModel m;
  m.weights = markov_weights(basis);
  for (int i = 0; i < basis.size(); ++i) {
    const auto prep = StatePrep::basis(i);
    m.p0_real.push_back(hadamard_test(u, prep, Part::Real));
    m.p0_imag.push_back(hadamard_test(u, prep, Part::Imaginary));
  }
  m.matrix_dimension = basis.size();
  return m;
}

EstimateReport sample_estimate(const OutcomeModel& model, const EstimatorOptions& options) {
  const auto n = budget(options);
  EstimateReport report;
  report.epsilon = options.epsilon;
  report.seed = options.seed;
  report.samples_per_part = n;
  report.matrix_dimension = model.matrix_dimension;
  for (std::size_t i = 0; i < model.weights.size(); ++i) {
    report.p0_real += model.weights[i] * model.p0_real[i];
    report.p0_imag += model.weights[i] * model.p0_imag[i];
  }

  std::mt19937_64 rng(derive_seed(options.seed, 0));
  // Each draw picks a register input with its weight, then runs the test on
  // it; the input counts are multinomial, drawn as a chain of binomials.
  auto run = [&](const std::vector<double>& p) {
    std::int64_t remaining = n;
    double mass = 1.0;
    std::int64_t zeros = 0;
    const auto& w = model.weights;
    for (std::size_t i = 0; i < w.size() && remaining > 0; ++i) {
      const auto count = i + 1 == w.size() ? remaining : binomial(rng, remaining, w[i] / mass);
      remaining -= count;
      mass -= w[i];
      zeros += binomial(rng, count, p[i]);
    }
    return zeros;
  };
  const auto zeros_re = run(model.p0_real);
  const auto zeros_im = run(model.p0_imag);
  finish(report, zeros_re, zeros_im);
  return report;
}

EstimateReport estimate_plat(const BraidWord& braid, int r, const EstimatorOptions& options) {
  budget(options);
  return sample_estimate(plat_outcome_model(braid, r), options);
}

EstimateReport estimate_trace_dqc1(const BraidWord& braid, int r,
                                   const EstimatorOptions& options) {
  budget(options);
  return sample_estimate(trace_outcome_model(braid, r), options);
}

PipelineModel pipeline_model(const BraidWord& braid, int r) {
  const auto vogel = vogel_braiding(plat_closure(braid));
  PipelineModel p;
  p.n = braid.strand_count() / 2;
  p.n_prime = vogel.braid.strand_count();
  p.rii_moves = vogel.rii_moves;
  p.rescale = std::pow(loop_value_real(r), p.n_prime - p.n);
  p.braid = vogel.braid;
  p.model = trace_outcome_model(vogel.braid, r);
  return p;
}

EstimateReport sample_pipeline(const PipelineModel& model, const EstimatorOptions& options) {
  budget(options);
  auto inner = options;
  inner.epsilon = options.epsilon / model.rescale;
  auto report = sample_estimate(model.model, inner);
  report.point_estimate = std::clamp(model.rescale * report.point_estimate, 0.0, 1.0);
  report.epsilon = options.epsilon;
  report.epsilon_prime = inner.epsilon;
  report.n = model.n;
  report.n_prime = model.n_prime;
  report.rii_moves = model.rii_moves;
  report.rescale = model.rescale;
  return report;
}

EstimateReport girth_reduction_pipeline(const BraidWord& braid, int r,
                                        const EstimatorOptions& options) {
  budget(options);
  return sample_pipeline(pipeline_model(braid, r), options);
}

RepetitionSummary repeat_estimate(const std::function<double(std::uint64_t)>& estimate,
                                  int repetitions, std::uint64_t base_seed, double target,
                                  double tolerance) {
  if (repetitions < 1) throw std::invalid_argument("need at least one repetition");
  RepetitionSummary s;
  s.repetitions = repetitions;
  for (int i = 0; i < repetitions; ++i) {
    const double z = estimate(derive_seed(base_seed, static_cast<std::uint64_t>(i)));
    s.estimates.push_back(z);
    if (std::abs(z - target) < tolerance) ++s.successes;
  }
  s.empirical_success = static_cast<double>(s.successes) / repetitions;
  return s;
}

}  // namespace knotgirth::qsim
