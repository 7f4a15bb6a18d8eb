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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "knotgirth/link.hpp"

namespace knotgirth::qsim {

/// Draws per estimated part (real and imaginary): ceil(4 ln 16 / eps^2).
/// Hoeffding with deviation eps / (2 sqrt 2) on each of the two outcome
/// frequencies, plus a union bound, keeps |Z - |mu|| < eps with probability
/// at least 3/4.
std::int64_t sample_budget(double epsilon);

/// Deterministic child seed for repetition `index` of a run seeded `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

struct EstimatorOptions {
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  /// Overrides sample_budget(epsilon) when set.
  std::optional<std::int64_t> samples_per_part;
};

struct EstimateReport {
  /// Z, clamped to [0, 1].
  double point_estimate = 0;
  double real_part = 0;
  double imag_part = 0;
  /// Exact outcome probabilities the draws were taken from.
  double p0_real = 0;
  double p0_imag = 0;
  std::int64_t samples_per_part = 0;
  std::int64_t samples = 0;
  double epsilon = 0;
  int matrix_dimension = 0;
  std::uint64_t seed = 0;

  // Filled by girth_reduction_pipeline only.
  int n = 0;
  int n_prime = 0;
  int rii_moves = 0;
  double rescale = 1;
  double epsilon_prime = 0;

  friend bool operator==(const EstimateReport&, const EstimateReport&) = default;
};

/// Exact Hadamard-test outcome probabilities for every register input the
/// estimator can draw. A plat model has a single input (the zigzag walk);
/// a trace model has one input per walk, drawn with its Markov weight.
struct OutcomeModel {
  std::vector<double> weights;
  std::vector<double> p0_real;
  std::vector<double> p0_imag;
  int matrix_dimension = 0;
};

OutcomeModel plat_outcome_model(const BraidWord& braid, int r);
OutcomeModel trace_outcome_model(const BraidWord& braid, int r);

/// Draws samples_per_part outcomes for each part from the model.
EstimateReport sample_estimate(const OutcomeModel& model, const EstimatorOptions& options);

/// Hadamard test of the compiled plat-basis unitary on the zigzag state;
/// estimates |J(plat closure)| / d^n for a braid on 2n strands. Throws for
/// odd strand counts or epsilon <= 0.
EstimateReport estimate_plat(const BraidWord& braid, int r, const EstimatorOptions& options);

/// One clean qubit estimate of |J(trace closure)| / d^n: the register holds
/// basis walks drawn with their Markov weights, the control runs the
/// Hadamard test on each. Throws for epsilon <= 0.
EstimateReport estimate_trace_dqc1(const BraidWord& braid, int r, const EstimatorOptions& options);

/// The braided trace-closure form of a plat closure and its outcome model.
struct PipelineModel {
  int n = 0;
  int n_prime = 0;
  int rii_moves = 0;
  double rescale = 1;
  BraidWord braid = BraidWord::identity(1);
  OutcomeModel model;
};

PipelineModel pipeline_model(const BraidWord& braid, int r);
EstimateReport sample_pipeline(const PipelineModel& model, const EstimatorOptions& options);

/// Braids the plat closure with vogel_braiding, estimates the trace closure
/// of the result at epsilon / d^(n' - n) and rescales by d^(n' - n).
EstimateReport girth_reduction_pipeline(const BraidWord& braid, int r,
                                        const EstimatorOptions& options);

struct RepetitionSummary {
  int repetitions = 0;
  int successes = 0;
  double empirical_success = 0;
  std::vector<double> estimates;
};

/// Runs `estimate(seed_i)` for seed_i = derive_seed(base_seed, i) and counts
/// the runs with |Z - target| < tolerance.
RepetitionSummary repeat_estimate(const std::function<double(std::uint64_t)>& estimate,
                                  int repetitions, std::uint64_t base_seed, double target,
                                  double tolerance);

}  // namespace knotgirth::qsim
