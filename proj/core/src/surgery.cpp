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

#include "knotgirth/surgery.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "knotgirth/jones.hpp"

namespace knotgirth {

namespace {

BigInt mod(const BigInt& x, const BigInt& n) {
  BigInt m = x % n;
  return m < 0 ? BigInt(m + n) : m;
}

std::size_t resolve_level(const MorseLink& diagram, const TwistWindow& window,
                          const std::vector<int>& widths) {
  if (window.level) {
    if (*window.level > diagram.size()) {
      throw std::invalid_argument("twist level " + std::to_string(*window.level) +
                                  " past the end of the diagram");
    }
    return *window.level;
  }
  const auto it = std::max_element(widths.begin(), widths.end());
  return static_cast<std::size_t>(it - widths.begin());
}

}  // namespace

SL2Matrix SL2Matrix::inverse() const {
  if (determinant() != 1) throw std::invalid_argument("matrix determinant is not 1");
  return {d, -b, -c, a};
}

SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

bool gamma4r_member(const SL2Matrix& m, int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (m.determinant() != 1) throw std::invalid_argument("matrix determinant is not 1");
  const BigInt n = 4 * r;
  return mod(m.a, n) == mod(1, n) && mod(m.b, n) == 0 && mod(m.c, n) == 0 &&
         mod(m.d, n) == mod(1, n);
}

MorseLink insert_full_twists(const MorseLink& diagram, const TwistWindow& window, int k) {
  if (window.strands < 1 || window.position < 0) {
    throw std::invalid_argument("twist window needs position >= 0 and at least one strand");
  }
  const auto widths = diagram.widths();
  const auto level = resolve_level(diagram, window, widths);
  if (window.position + window.strands > widths[level]) {
    throw std::invalid_argument("twist window [" + std::to_string(window.position) + ", " +
                                std::to_string(window.position + window.strands) +
                                ") exceeds width " + std::to_string(widths[level]) +
                                " at level " + std::to_string(level));
  }
  std::vector<MorseEvent> twist;
  const int m = window.strands;
  for (int rep = 0; rep < std::abs(k); ++rep) {
    for (int round = 0; round < m; ++round) {
      for (int j = 0; j < m - 1; ++j) {
        // Delta^2 = (s_1 ... s_{m-1})^m; its inverse is (s_{m-1}^-1 ... s_1^-1)^m.
        const int g = k > 0 ? j : m - 2 - j;
        twist.push_back(MorseEvent::cross(window.position + g, k > 0 ? 1 : -1));
      }
    }
  }
  const auto events = diagram.events();
  std::vector<MorseEvent> out(events.begin(), events.begin() + static_cast<std::ptrdiff_t>(level));
  out.insert(out.end(), twist.begin(), twist.end());
  out.insert(out.end(), events.begin() + static_cast<std::ptrdiff_t>(level), events.end());
  return MorseLink(std::move(out));
}

TwistInvariance check_twist_invariance(const MorseLink& diagram, const TwistWindow& window,
                                       int r, std::optional<int> k) {
  require_valid_root(r);
  const auto twisted = insert_full_twists(diagram, window, k.value_or(4 * r));
  TwistInvariance t{false, abs_squared(jones_at_root(diagram, r)),
                    abs_squared(jones_at_root(twisted, r)), crossing_count(diagram),
                    crossing_count(twisted)};
  t.equal = t.before == t.after;
  return t;
}

long long ledger_total(const SurgeryLedger& ledger) {
  if (ledger.crossings_c < 0 || ledger.bits_b < 0 || ledger.reidemeister_gamma < 0) {
    throw std::invalid_argument("ledger fields must be nonnegative");
  }
  return ledger.crossings_c + ledger.bits_b + ledger.reidemeister_gamma;
}

long long entry_bits(const BigInt& entry) {
  const BigInt magnitude = entry < 0 ? BigInt(-entry) : entry;
  // ceil(log2(x + 1)) is the bit length of x.
  const long long length =
      magnitude == 0 ? 0 : static_cast<long long>(boost::multiprecision::msb(magnitude)) + 1;
  return 1 + length;
}

long long matrix_bits(std::span<const SL2Matrix> matrices) {
  long long bits = 0;
  for (const auto& m : matrices) {
    bits += entry_bits(m.a) + entry_bits(m.b) + entry_bits(m.c) + entry_bits(m.d);
  }
  return bits;
}

SurgeryLedger twist_witness_ledger(const MorseLink& diagram, const TwistWindow& window, int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  const SL2Matrix f{1, 4 * r, 0, 1};
  return {crossing_count(diagram) + 2LL * window.strands, matrix_bits(std::span(&f, 1)), 0};
}

}  // namespace knotgirth
