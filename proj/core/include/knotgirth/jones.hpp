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

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "knotgirth/cyclotomic.hpp"
#include "knotgirth/link.hpp"

namespace knotgirth {

enum class Closure : std::uint8_t { Plat, Trace };

std::string_view closure_name(Closure closure);
/// Accepts "plat" or "trace".
Closure parse_closure(std::string_view name);
MorseLink close_braid(const BraidWord& braid, Closure closure);

/// Throws std::invalid_argument unless r >= 5 and r != 6.
void require_valid_root(int r);

/// A = z^(r-1) in Z[z]/Phi_4r. With this choice -A^2 - A^-2 = 2cos(pi/r)
/// and A^-4 = exp(2 pi i / r).
Cyclotomic bracket_variable(int r);
/// d = -A^2 - A^-2.
Cyclotomic loop_value(int r);
/// 2cos(pi/r) in double precision.
double loop_value_real(int r);

struct ContractionStats {
  /// Largest number of planar matchings held at any level.
  std::size_t peak_dimension = 0;
  int girth = 0;
  /// True when machine-word coefficients overflowed and the contraction was
  /// redone with arbitrary-precision integers.
  bool used_big_integers = false;
};

struct ContractionOptions {
  /// Skip the machine-word pass. The result is identical either way.
  bool force_big_integers = false;
};

/// Kauffman bracket with loop value d, normalized so the empty diagram is 1.
/// Contracts the diagram level by level over the Temperley-Lieb matching
/// basis; crossings expand as A*identity + A^-1*E (CrossPos) and
/// A^-1*identity + A*E (CrossNeg). Diagrams wider than 62 strands are
/// rejected.
Cyclotomic jones_at_root(const MorseLink& diagram, int r,
                         ContractionStats* stats = nullptr,
                         const ContractionOptions& options = {});

inline constexpr int kDefaultStateSumCap = 16;

/// Number of smoothings with a given A-exponent (#A - #B) and loop count,
/// summed over all 2^c smoothings. Independent of r.
struct StateSumTally {
  int crossings = 0;
  int max_loops = 0;
  std::vector<std::int64_t> counts;

  std::int64_t count(int a_exponent, int loops) const;
};

/// Loops are counted on the union of two perfect matchings of crossing
/// ports: one from the diagram's arcs, one from the smoothing. Throws
/// std::invalid_argument above `crossing_cap` crossings or above 16.
StateSumTally bracket_statesum_tally(const MorseLink& diagram,
                                     int crossing_cap = kDefaultStateSumCap);
/// Sum of count * A^e * d^loops in Z[z]/Phi_4r.
Cyclotomic evaluate_tally(const StateSumTally& tally, int r);

/// Brute-force bracket: sums A^(#A - #B) d^loops over all 2^c smoothings.
/// Throws std::invalid_argument above `crossing_cap` crossings.
Cyclotomic bracket_statesum_oracle(const MorseLink& diagram, int r,
                                   int crossing_cap = kDefaultStateSumCap);

/// (-A^3)^(-writhe) times the bracket: the orientation-normalized value.
Cyclotomic writhe_normalized(const MorseLink& diagram, int r);

/// |J(closure of braid)| / d^n, where n is half the strand count for plat
/// closures and the strand count for trace closures.
double normalized_abs(const BraidWord& braid, Closure closure, int r);

/// Number of planar matchings of 2k points.
std::uint64_t catalan(int k);

}  // namespace knotgirth
