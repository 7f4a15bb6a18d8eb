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
#include <optional>
#include <span>

#include "knotgirth/cyclotomic.hpp"
#include "knotgirth/link.hpp"

namespace knotgirth {

/// Integer 2x2 matrix [[a, b], [c, d]]. Nothing is checked on construction;
/// operations that need det = 1 check it themselves.
struct SL2Matrix {
  BigInt a = 1;
  BigInt b = 0;
  BigInt c = 0;
  BigInt d = 1;

  BigInt determinant() const { return a * d - b * c; }
  static SL2Matrix identity() { return {}; }
  /// Inverse of a determinant-one matrix; throws otherwise.
  SL2Matrix inverse() const;

  friend SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y);
  friend bool operator==(const SL2Matrix&, const SL2Matrix&) = default;
};

/// True iff M is congruent to the identity modulo 4r. Throws
/// std::invalid_argument if det M != 1 or r < 1.
bool gamma4r_member(const SL2Matrix& m, int r);

/// m strands starting at `position`, taken just before event `level`
/// (level == size() means after the last event). Without a level the first
/// level of maximal width is used.
struct TwistWindow {
  int position = 0;
  int strands = 2;
  std::optional<std::size_t> level;
};

/// Inserts the k-th power of the full twist (sigma_1 ... sigma_{m-1})^m on
/// the window; negative k inserts the inverse. Adds |k| m (m - 1) crossings.
/// Throws std::invalid_argument when the window does not fit the level.
MorseLink insert_full_twists(const MorseLink& diagram, const TwistWindow& window, int k);

struct TwistInvariance {
  bool equal = false;
  Cyclotomic before;
  Cyclotomic after;
  int crossings_before = 0;
  int crossings_after = 0;
};

/// Compares abs_squared of the bracket before and after inserting k full
/// twists (k = 4r by default) exactly.
TwistInvariance check_twist_invariance(const MorseLink& diagram, const TwistWindow& window,
                                       int r, std::optional<int> k = std::nullopt);

/// Cost of one witness for the r-distance: crossings, bits and Reidemeister
/// moves. The distance itself is the minimum over witnesses and is not
/// computed here.
struct SurgeryLedger {
  long long crossings_c = 0;
  long long bits_b = 0;
  long long reidemeister_gamma = 0;

  friend bool operator==(const SurgeryLedger&, const SurgeryLedger&) = default;
};

/// c + b + gamma. Throws std::invalid_argument for a negative field.
long long ledger_total(const SurgeryLedger& ledger);

/// 1 + ceil(log2(|entry| + 1)): a sign bit plus the magnitude.
long long entry_bits(const BigInt& entry);
long long matrix_bits(std::span<const SL2Matrix> matrices);

/// Ledger of the single-twist witness: the surgery diagram is the diagram
/// plus an unknot around the window (2m extra crossings), the surgery
/// matrix is [[1, 4r], [0, 1]], and no Reidemeister moves are needed.
SurgeryLedger twist_witness_ledger(const MorseLink& diagram, const TwistWindow& window, int r);

}  // namespace knotgirth
