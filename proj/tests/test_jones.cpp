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


#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "knotgirth/cyclotomic.hpp"
#include "knotgirth/jones.hpp"
#include "knotgirth/link.hpp"
#include "knotgirth/random_diagrams.hpp"

namespace knotgirth {
namespace {

const MorseLink kUnknot({MorseEvent::cup(0), MorseEvent::cap(0)});

MorseLink trefoil() { return trace_closure(parse_braid("1 1 1", 2)); }

Cyclotomic a_power(int r, int e) {
  return CyclotomicRing::for_root(r).zeta_power(static_cast<long long>(r - 1) * e);
}

TEST(Jones, EmptyAndUnknot) {
  for (int r : {5, 7, 8, 12}) {
    EXPECT_EQ(jones_at_root(MorseLink{}, r), CyclotomicRing::for_root(r).one());
    EXPECT_EQ(jones_at_root(kUnknot, r), loop_value(r));
    EXPECT_EQ(bracket_statesum_oracle(kUnknot, r), loop_value(r));
    EXPECT_EQ(jones_at_root(disjoint_union(kUnknot, kUnknot), r), loop_value(r).pow(2));
  }
}

TEST(Jones, LoopValueEmbedding) {
  EXPECT_NEAR(to_complex(loop_value(5)).real(), 1.6180339887, 1e-10);
  EXPECT_NEAR(to_complex(loop_value(7)).real(), 1.8019377358, 1e-10);
  for (int r : {5, 7, 8, 9, 10}) {
    const auto d = to_complex(loop_value(r));
    EXPECT_NEAR(d.real(), 2 * std::cos(std::numbers::pi / r), 1e-12);
    EXPECT_NEAR(d.imag(), 0, 1e-12);
    EXPECT_NEAR(loop_value_real(r), d.real(), 1e-12);
    const auto t = to_complex(a_power(r, -4));
    EXPECT_NEAR(std::abs(t - std::polar(1.0, 2 * std::numbers::pi / r)), 0, 1e-12);
    EXPECT_EQ(bracket_variable(r).pow(static_cast<unsigned>(4 * r)),
              CyclotomicRing::for_root(r).one());
  }
}

TEST(Jones, RejectsInvalidRoots) {
  EXPECT_THROW(require_valid_root(4), std::invalid_argument);
  EXPECT_THROW(require_valid_root(6), std::invalid_argument);
  EXPECT_NO_THROW(require_valid_root(5));
  EXPECT_THROW(jones_at_root(kUnknot, 6), std::invalid_argument);
}

TEST(Jones, TrefoilFrozenAtFive) {
  const auto& ring = CyclotomicRing::for_root(5);
  const Cyclotomic expected(ring, {-1, 0, 0, 0, -2, 0, 0, 0});
  EXPECT_EQ(jones_at_root(trefoil(), 5), expected);
  EXPECT_EQ(bracket_statesum_oracle(trefoil(), 5), expected);
}

TEST(Jones, TrefoilMatchesHandExpansion) {
  // A^7 + A^3 + A^-1 - A^-9
  for (int r : {5, 7, 8, 9, 11}) {
    const auto hand = a_power(r, 7) + a_power(r, 3) + a_power(r, -1) - a_power(r, -9);
    EXPECT_EQ(jones_at_root(trefoil(), r), hand) << "r=" << r;
  }
}

TEST(Jones, TrefoilTally) {
  const auto t = bracket_statesum_tally(trefoil());
  EXPECT_EQ(t.crossings, 3);
  EXPECT_EQ(t.count(3, 2), 1);
  EXPECT_EQ(t.count(1, 1), 3);
  EXPECT_EQ(t.count(-1, 2), 3);
  EXPECT_EQ(t.count(-3, 3), 1);
  std::int64_t total = 0;
  for (auto n : t.counts) total += n;
  EXPECT_EQ(total, 8);
}

TEST(Jones, WritheNormalizedTrefoil) {
  // V = t + t^3 - t^4 at t = A^-4, times d for the unknot normalization.
  for (int r : {5, 7, 8}) {
    const auto t = a_power(r, -4);
    const auto v = t + t.pow(3) - t.pow(4);
    EXPECT_EQ(writhe_normalized(trefoil(), r), v * loop_value(r));
  }
}

TEST(Jones, StateSumCap) {
  std::mt19937_64 rng(3);
  const auto big = trace_closure(random_braid(rng, 3, 17));
  EXPECT_THROW(bracket_statesum_oracle(big, 5), std::invalid_argument);
  EXPECT_THROW(bracket_statesum_tally(trefoil(), 2), std::invalid_argument);
  EXPECT_THROW(bracket_statesum_tally(big, 20), std::invalid_argument);
}

TEST(Jones, MatchesOracleOnRandomDiagrams) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    RandomDiagramOptions opt;
    opt.max_width = 2 + 2 * static_cast<int>(rng() % 4);
    opt.body_events = 4 + static_cast<int>(rng() % 20);
    const auto d = random_morse_link(rng, opt);
    if (crossing_count(d) > 14) continue;
    const auto tally = bracket_statesum_tally(d);
    for (int r : {5, 7, 8, 10}) {
      EXPECT_EQ(jones_at_root(d, r), evaluate_tally(tally, r)) << to_json(d);
    }
  }
}

TEST(Jones, MachineWordsAgreeWithBigIntegers) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const int s = 2 + static_cast<int>(rng() % 5);
    const auto b = random_braid(rng, s, 10 + static_cast<int>(rng() % 60));
    const auto d = close_braid(b, i % 2 && s % 2 == 0 ? Closure::Plat : Closure::Trace);
    for (int r : {5, 8, 13}) {
      ContractionStats fast;
      ContractionStats slow;
      const auto x = jones_at_root(d, r, &fast);
      const auto y = jones_at_root(d, r, &slow, {.force_big_integers = true});
      EXPECT_EQ(x, y);
      EXPECT_TRUE(slow.used_big_integers);
      EXPECT_EQ(fast.peak_dimension, slow.peak_dimension);
    }
  }
}

TEST(Jones, HugeCoefficientsFallBackToBigIntegers) {
  // d^k grows like the golden ratio; 200 unknots overflow 64-bit words.
  MorseLink d;
  for (int i = 0; i < 200; ++i) d = disjoint_union(d, kUnknot);
  ContractionStats stats;
  const auto v = jones_at_root(d, 5, &stats);
  EXPECT_TRUE(stats.used_big_integers);
  EXPECT_EQ(v, loop_value(5).pow(200));
}

TEST(Jones, MirrorConjugates) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    const auto d = trace_closure(random_braid(rng, 3, 9));
    for (int r : {5, 7}) {
      const auto v = jones_at_root(d, r);
      EXPECT_EQ(jones_at_root(mirror(d), r), v.conjugate());
      EXPECT_EQ(abs_squared(jones_at_root(mirror(d), r)), abs_squared(v));
    }
  }
}

TEST(Jones, DisjointUnionMultiplies) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    const auto a = trace_closure(random_braid(rng, 2, 5));
    const auto b = plat_closure(random_braid(rng, 4, 5));
    EXPECT_EQ(jones_at_root(disjoint_union(a, b), 7), jones_at_root(a, 7) * jones_at_root(b, 7));
  }
}

TEST(Jones, PeakDimensionWithinCatalan) {
  EXPECT_EQ(catalan(0), 1U);
  EXPECT_EQ(catalan(3), 5U);
  EXPECT_EQ(catalan(6), 132U);
  std::mt19937_64 rng(29);
  for (int s = 1; s <= 6; ++s) {
    ContractionStats stats;
    jones_at_root(trace_closure(random_braid(rng, s, 40)), 5, &stats);
    EXPECT_EQ(stats.girth, 2 * s);
    EXPECT_LE(stats.peak_dimension, catalan(s));
  }
}

TEST(Jones, NormalizedAbsOfIdentityIsOne) {
  for (int r : {5, 7, 9}) {
    EXPECT_NEAR(normalized_abs(BraidWord::identity(4), Closure::Plat, r), 1.0, 1e-12);
    EXPECT_NEAR(normalized_abs(BraidWord::identity(3), Closure::Trace, r), 1.0, 1e-12);
  }
  EXPECT_THROW(normalized_abs(BraidWord::identity(3), Closure::Plat, 5), std::invalid_argument);
  const double d = loop_value_real(5);
  const double tref = std::abs(to_complex(jones_at_root(trefoil(), 5)));
  EXPECT_NEAR(normalized_abs(parse_braid("1 1 1", 2), Closure::Trace, 5), tref / (d * d), 1e-12);
}

TEST(Jones, ClosureNames) {
  EXPECT_EQ(parse_closure("plat"), Closure::Plat);
  EXPECT_EQ(parse_closure("trace"), Closure::Trace);
  EXPECT_EQ(closure_name(Closure::Plat), "plat");
  EXPECT_THROW(parse_closure("markov"), std::invalid_argument);
}

}  // namespace
}  // namespace knotgirth
