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


#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "knotgirth/jones.hpp"
#include "knotgirth/link.hpp"
#include "knotgirth/random_diagrams.hpp"
#include "knotgirth/seifert.hpp"

namespace knotgirth {
namespace {

const MorseLink kUnknot({MorseEvent::cup(0), MorseEvent::cap(0)});

TEST(Seifert, TrefoilData) {
  const auto d = seifert_data(trace_closure(parse_braid("1 1 1", 2)));
  EXPECT_EQ(d.circles, 2);
  EXPECT_EQ(d.crossings, 3);
  EXPECT_EQ(d.components, 1);
  EXPECT_EQ(d.euler_characteristic, -1);
  ASSERT_TRUE(d.genus_if_knot.has_value());
  EXPECT_EQ(*d.genus_if_knot, 1);
}

TEST(Seifert, UnknotAndHopf) {
  const auto u = seifert_data(kUnknot);
  EXPECT_EQ(u.circles, 1);
  EXPECT_EQ(u.euler_characteristic, 1);
  EXPECT_EQ(u.genus_if_knot, 0);

  const auto hopf = trace_closure(parse_braid("1 1", 2));
  const auto h = seifert_data(hopf);
  EXPECT_EQ(h.circles, 2);
  EXPECT_EQ(h.euler_characteristic, 0);
  EXPECT_FALSE(h.genus_if_knot.has_value());
  EXPECT_THROW(seifert_genus(hopf), std::invalid_argument);
}

TEST(Seifert, TraceClosureHasOneCirclePerStrand) {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 6; ++n) {
    for (int i = 0; i < 10; ++i) {
      EXPECT_EQ(seifert_circles(trace_closure(random_braid(rng, n, 3 * i))), n);
    }
  }
}

TEST(Seifert, PlatClosureOfKink) {
  // sigma_1 plat-closed is an unknot with one kink; smoothing it
  // coherently leaves two circles.
  const auto d = plat_closure(parse_braid("1", 2));
  EXPECT_EQ(seifert_circles(d), 2);
  EXPECT_EQ(seifert_genus(d), 0);
}

TEST(Seifert, BoundIsTightForSplitUnknots) {
  MorseLink d;
  for (int k = 1; k <= 5; ++k) {
    d = disjoint_union(d, kUnknot);
    const auto b = check_seifert_bound(d);
    EXPECT_TRUE(b.holds);
    EXPECT_EQ(b.circles, k);
    EXPECT_EQ(b.circles, b.crossings + b.components);
  }
}

TEST(Seifert, BoundAndGenusParityOnRandomDiagrams) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 400; ++i) {
    RandomDiagramOptions opt;
    opt.max_width = 2 + 2 * static_cast<int>(rng() % 4);
    opt.body_events = 2 + static_cast<int>(rng() % 30);
    const auto d = random_morse_link(rng, opt);
    const auto b = check_seifert_bound(d);
    EXPECT_TRUE(b.holds) << to_json(d);
    EXPECT_LE(b.circles, b.crossings + b.components);
    const auto data = seifert_data(d);
    EXPECT_EQ(data.euler_characteristic, data.circles - data.crossings);
    if (data.components == 1) {
      EXPECT_EQ((data.crossings - data.circles + 1) % 2, 0);
      ASSERT_TRUE(data.genus_if_knot.has_value());
      EXPECT_GE(*data.genus_if_knot, 0);
    }
  }
}

TEST(Vogel, BraidedInputIsReturnedUnchanged) {
  const auto b = parse_braid("1 -2 1 2 2", 3);
  const auto v = vogel_braiding(trace_closure(b));
  EXPECT_EQ(v.braid, b);
  EXPECT_EQ(v.rii_moves, 0);
  EXPECT_EQ(v.seifert_circles, 3);
  EXPECT_TRUE(v.within_budget);
}

TEST(Vogel, RejectsEmptyDiagram) {
  EXPECT_THROW(vogel_braiding(MorseLink{}), std::invalid_argument);
}

TEST(Vogel, CrosslessCirclesBecomeIdentity) {
  MorseLink d;
  for (int k = 0; k < 3; ++k) d = disjoint_union(d, kUnknot);
  const auto v = vogel_braiding(d);
  EXPECT_EQ(v.braid, BraidWord::identity(3));
  EXPECT_EQ(v.rii_moves, 0);
}

void expect_vogel_postconditions(const MorseLink& d) {
  const auto v = vogel_braiding(d);
  const int s = seifert_circles(d);
  const auto out = trace_closure(v.braid);
  EXPECT_EQ(v.seifert_circles, s);
  EXPECT_EQ(v.braid.strand_count(), s);
  EXPECT_EQ(seifert_circles(out), s);
  EXPECT_LE(v.rii_moves, s * s) << to_json(d);
  EXPECT_EQ(v.within_budget, v.rii_moves <= s * s);
  EXPECT_EQ(component_count(out), component_count(d));
  EXPECT_EQ(crossing_count(out), crossing_count(d) + 2 * v.rii_moves);
  for (int r : {5, 7, 8}) {
    EXPECT_EQ(jones_at_root(out, r), jones_at_root(d, r)) << "r=" << r << " " << to_json(d);
  }
}

TEST(Vogel, PlatClosureOfSigmaOne) {
  expect_vogel_postconditions(plat_closure(parse_braid("1", 2)));
}

TEST(Vogel, PlatClosuresOfRandomBraids) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 60; ++i) {
    const int s = 2 * (1 + static_cast<int>(rng() % 3));
    expect_vogel_postconditions(plat_closure(random_braid(rng, s, static_cast<int>(rng() % 9))));
  }
}

TEST(Vogel, RandomMorseDiagrams) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 150; ++i) {
    RandomDiagramOptions opt;
    opt.max_width = 2 + 2 * static_cast<int>(rng() % 3);
    opt.body_events = 4 + static_cast<int>(rng() % 10);
    expect_vogel_postconditions(random_morse_link(rng, opt));
  }
}

TEST(Vogel, IsDeterministic) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 20; ++i) {
    const auto d = random_morse_link(rng, {6, 12, 0.5});
    const auto a = vogel_braiding(d);
    const auto b = vogel_braiding(d);
    EXPECT_EQ(a.braid, b.braid);
    EXPECT_EQ(a.rii_moves, b.rii_moves);
  }
}

TEST(Vogel, Idempotent) {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 30; ++i) {
    const auto d = random_morse_link(rng, {6, 10, 0.5});
    const auto once = vogel_braiding(d);
    const auto twice = vogel_braiding(trace_closure(once.braid));
    EXPECT_EQ(twice.braid, once.braid);
    EXPECT_EQ(twice.rii_moves, 0);
  }
}

}  // namespace
}  // namespace knotgirth
