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
#include <string>
#include <string_view>
#include <vector>

#include "knotgirth/cli/report.hpp"

namespace knotgirth::cli {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Deterministic summary; never contains timings.
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  /// Criterion ids to run, in order. Empty means all (0 through 10).
  std::vector<int> criteria;
  std::uint64_t seed = 1;
  /// Replaces a frozen constant with a wrong value; criterion 0 must fail.
  bool corrupt_constant = false;
};

inline constexpr int kFirstCriterion = 0;
inline constexpr int kLastCriterion = 10;

/// "all", "acceptance" (1 through 10) or a comma-separated list of ids.
std::vector<int> parse_suite(std::string_view selector);

CriterionResult run_criterion(int id, const VerifyOptions& options);
std::vector<CriterionResult> run_criteria(const VerifyOptions& options);

/// "[PASS] 3 hadamard-test identities: ... (0.42 s)".
std::string format_line(const CriterionResult& result);

struct VerifyOutcome {
  int exit_code = 0;
  RunReport report;
  std::vector<CriterionResult> results;
};

/// Exit code 0 iff every selected criterion passed. Timings live under
/// outputs.timings so the rest of the report is reproducible per seed.
VerifyOutcome cmd_verify(const VerifyOptions& options);

}  // namespace knotgirth::cli
