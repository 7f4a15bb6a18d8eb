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


#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "knotgirth/jones.hpp"
#include "knotgirth/random_diagrams.hpp"
#include "knotgirth/surgery.hpp"

namespace knotgirth {
namespace {

SL2Matrix random_member(std::mt19937_64& rng, int r) {
  // Products of the generators [[1, 4r], [0, 1]] and [[1, 0], [4r, 1]].
  const SL2Matrix up{1, 4 * r, 0, 1};
  const SL2Matrix low{1, 0, 4 * r, 1};
  SL2Matrix m;
  const int len = 1 + static_cast<int>(rng() % 6);
  for (int i = 0; i < len; ++i) {
    const auto& g = rng() % 2 ? up : low;
    m = m * (rng() % 2 ? g : g.inverse());
  }
  return m;
}

TEST(Surgery, GammaMembership) {
  for (int r : {5, 7, 12}) {
    EXPECT_TRUE(gamma4r_member(SL2Matrix::identity(), r));
    EXPECT_TRUE(gamma4r_member({1, 4 * r, 0, 1}, r));
    EXPECT_TRUE(gamma4r_member({1, -4 * r, 0, 1}, r));
    EXPECT_FALSE(gamma4r_member({1, 1, 0, 1}, r));
    EXPECT_FALSE(gamma4r_member({-1, 0, 0, -1}, r));
  }
  EXPECT_THROW(gamma4r_member({2, 0, 0, 1}, 5), std::invalid_argument);
  EXPECT_THROW(SL2Matrix({2, 0, 0, 1}).inverse(), std::invalid_argument);
}

TEST(Surgery, GammaIsClosedUnderProductAndInverse) {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 300; ++i) {
    const int r = 5 + static_cast<int>(rng() % 4);
    const auto x = random_member(rng, r);
    const auto y = random_member(rng, r);
    ASSERT_EQ(x.determinant(), 1);
    EXPECT_TRUE(gamma4r_member(x, r));
    EXPECT_TRUE(gamma4r_member(x * y, r));
    EXPECT_TRUE(gamma4r_member(x.inverse(), r));
    EXPECT_EQ(x * x.inverse(), SL2Matrix::identity());
    // Multiplying by a non-member leaves the subgroup.
    EXPECT_FALSE(gamma4r_member(x * SL2Matrix{1, 1, 0, 1}, r));
  }
}

TEST(Surgery, TwistCrossingCounts) {
  const auto tref = trace_closure(parse_braid("1 1 1", 2));
  EXPECT_EQ(insert_full_twists(tref, {0, 2, std::nullopt}, 0), tref);
  EXPECT_EQ(crossing_count(insert_full_twists(tref, {0, 2, std::nullopt}, 20)), 3 + 40);
  const auto wide = trace_closure(parse_braid("1 2", 3));
  EXPECT_EQ(crossing_count(insert_full_twists(wide, {0, 3, std::nullopt}, -20)), 2 + 120);
  std::mt19937_64 rng(79);
  for (int i = 0; i < 100; ++i) {
    const auto d = random_morse_link(rng, {6, 10, 0.5});
    const auto widths = d.widths();
    const int w = *std::max_element(widths.begin(), widths.end());
    const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(w));
    const int p = static_cast<int>(rng() % static_cast<unsigned>(w - m + 1));
    const int k = static_cast<int>(rng() % 9) - 4;
    const auto t = insert_full_twists(d, {p, m, std::nullopt}, k);
    EXPECT_EQ(crossing_count(t) - crossing_count(d), std::abs(k) * m * (m - 1));
    EXPECT_EQ(component_count(t), component_count(d));
  }
}

TEST(Surgery, TwistWindowMustFit) {
  const auto tref = trace_closure(parse_braid("1 1 1", 2));
  EXPECT_THROW(insert_full_twists(tref, {3, 2, std::nullopt}, 1), std::invalid_argument);
  EXPECT_THROW(insert_full_twists(tref, {0, 2, std::size_t{0}}, 1), std::invalid_argument);
  EXPECT_THROW(insert_full_twists(tref, {0, 2, tref.size() + 1}, 1), std::invalid_argument);
  EXPECT_THROW(insert_full_twists(tref, {-1, 2, std::nullopt}, 1), std::invalid_argument);
}

TEST(Surgery, TwistAndInverseCancel) {
  const auto d = trace_closure(parse_braid("1 -2 1", 3));
  const auto w = TwistWindow{0, 3, std::size_t{3}};
  const auto there = insert_full_twists(d, w, 2);
  const auto back = insert_full_twists(there, w, -2);
  for (int r : {5, 7}) EXPECT_EQ(jones_at_root(back, r), jones_at_root(d, r));
}

TEST(Surgery, InvarianceOnUnknotAndTrefoil) {
  // Plat closure of the identity has two strands in the middle.
  const auto unknot = plat_closure(BraidWord::identity(2));
  EXPECT_TRUE(check_twist_invariance(unknot, {0, 2, std::nullopt}, 5).equal);
  const auto tref = trace_closure(parse_braid("1 1 1", 2));
  const auto inv = check_twist_invariance(tref, {0, 2, std::nullopt}, 5);
  EXPECT_TRUE(inv.equal);
  EXPECT_EQ(inv.crossings_before, 3);
  EXPECT_EQ(inv.crossings_after, 43);
  EXPECT_TRUE(inv.before.is_real());

  EXPECT_FALSE(check_twist_invariance(tref, {0, 2, std::nullopt}, 5, 1).equal);
}

TEST(Surgery, InvarianceOnRandomCorpus) {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 30; ++i) {
    const auto d = random_morse_link(rng, {6, 8, 0.5});
    const auto widths = d.widths();
    const auto level =
        static_cast<std::size_t>(std::max_element(widths.begin(), widths.end()) - widths.begin());
    const int m = std::min(3, widths[level]);
    for (int r : {5, 7}) {
      for (int k : {4 * r, -4 * r}) {
        EXPECT_TRUE(check_twist_invariance(d, {0, m, level}, r, k).equal) << to_json(d);
      }
    }
  }
}

TEST(Surgery, NonMultiplesBreakInvarianceSomewhere) {
  std::mt19937_64 rng(89);
  std::vector<MorseLink> corpus{trace_closure(parse_braid("1 1 1", 2))};
  for (int i = 0; i < 10; ++i) corpus.push_back(trace_closure(random_braid(rng, 3, 6)));
  for (int k : {1, 2, 3, 4, 6, 7}) {
    bool broke = false;
    for (const auto& d : corpus) {
      if (!check_twist_invariance(d, {0, 2, std::nullopt}, 5, k).equal) broke = true;
    }
    EXPECT_TRUE(broke) << "k=" << k;
  }
}

TEST(Surgery, FiveTwistsAlreadyPreserveModulusAtFive) {
  // At r = 5 the full twist on two strands acts on |J| with period 5, a
  // divisor of 4r.
  std::mt19937_64 rng(97);
  for (int i = 0; i < 10; ++i) {
    const auto d = trace_closure(random_braid(rng, 3, 6));
    EXPECT_TRUE(check_twist_invariance(d, {0, 2, std::nullopt}, 5, 5).equal);
  }
}

TEST(Surgery, EntryBits) {
  EXPECT_EQ(entry_bits(0), 1);
  EXPECT_EQ(entry_bits(1), 2);
  EXPECT_EQ(entry_bits(-1), 2);
  EXPECT_EQ(entry_bits(20), 6);
  EXPECT_EQ(entry_bits(BigInt(1) << 100), 102);
  const SL2Matrix id;
  // Entries 1, 0, 0, 1 cost 2 + 1 + 1 + 2 under the sign-plus-magnitude rule.
  EXPECT_EQ(matrix_bits(std::span(&id, 1)), 6);
}

TEST(Surgery, LedgerTotals) {
  EXPECT_EQ(ledger_total({}), 0);
  EXPECT_EQ(ledger_total({3, 4, 5}), 12);
  EXPECT_THROW(ledger_total({-1, 0, 0}), std::invalid_argument);
  for (int field = 0; field < 3; ++field) {
    SurgeryLedger l{2, 2, 2};
    const auto base = ledger_total(l);
    (field == 0 ? l.crossings_c : field == 1 ? l.bits_b : l.reidemeister_gamma) += 1;
    EXPECT_GT(ledger_total(l), base);
  }
}

TEST(Surgery, TrefoilWitnessLedger) {
  const auto tref = trace_closure(parse_braid("1 1 1", 2));
  const auto l = twist_witness_ledger(tref, {0, 2, std::nullopt}, 5);
  EXPECT_EQ(l.crossings_c, 7);
  EXPECT_EQ(l.bits_b, 2 + 6 + 1 + 2);
  EXPECT_EQ(l.reidemeister_gamma, 0);
  EXPECT_EQ(ledger_total(l), 18);
}

}  // namespace
}  // namespace knotgirth
