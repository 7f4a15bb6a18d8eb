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

namespace knotgirth {
namespace {

TEST(Braid, ParsesSignedGenerators) {
  const auto b = parse_braid("1 1 1", 2);
  EXPECT_EQ(b.strand_count(), 2);
  ASSERT_EQ(b.length(), 3U);
  for (const auto& l : b.letters()) EXPECT_EQ(l, (BraidLetter{1, 1}));

  EXPECT_EQ(parse_braid("", 3), BraidWord::identity(3));

  const auto c = parse_braid("2 -1", 3);
  ASSERT_EQ(c.length(), 2U);
  EXPECT_EQ(c.letters()[0], (BraidLetter{2, 1}));
  EXPECT_EQ(c.letters()[1], (BraidLetter{1, -1}));
  EXPECT_EQ(c.to_string(), "2 -1");
}

TEST(Braid, RejectsBadInput) {
  EXPECT_THROW(parse_braid("3", 3), std::invalid_argument);
  EXPECT_THROW(parse_braid("0", 3), std::invalid_argument);
  EXPECT_THROW(parse_braid("1 x", 3), std::invalid_argument);
  EXPECT_THROW(BraidWord(0, {}), std::invalid_argument);
  EXPECT_THROW(BraidWord(2, {{1, 2}}), std::invalid_argument);
}

TEST(Braid, PermutationAndCycles) {
  EXPECT_EQ(parse_braid("1 1 1", 2).cycle_count(), 1);
  EXPECT_EQ(parse_braid("1 1", 2).cycle_count(), 2);
  EXPECT_EQ(BraidWord::identity(3).cycle_count(), 3);
  EXPECT_EQ(parse_braid("1 2", 3).cycle_count(), 1);
}

TEST(Braid, InverseMirrorTensor) {
  const auto b = parse_braid("1 -2 2", 3);
  EXPECT_EQ(b.inverse().to_string(), "-2 2 -1");
  EXPECT_EQ(b.mirror().to_string(), "-1 2 -2");
  const auto t = parse_braid("1", 2).tensor(parse_braid("-1", 2));
  EXPECT_EQ(t.strand_count(), 4);
  EXPECT_EQ(t.to_string(), "1 -3");
}

TEST(Closure, TraceClosureStatistics) {
  const auto unknot = trace_closure(BraidWord::identity(2));
  EXPECT_EQ(diagram_stats(trace_closure(BraidWord::identity(1))), (DiagramStats{2, 0, 1}));
  EXPECT_EQ(component_count(unknot), 2);

  const auto trefoil = trace_closure(parse_braid("1 1 1", 2));
  EXPECT_EQ(diagram_stats(trefoil), (DiagramStats{4, 3, 1}));
  EXPECT_EQ(component_count(trace_closure(parse_braid("1 1", 2))), 2);
  EXPECT_EQ(component_count(trace_closure(BraidWord::identity(3))), 3);
  EXPECT_EQ(girth(trace_closure(parse_braid("1 -2", 3))), 6);
}

TEST(Closure, PlatClosureStatistics) {
  EXPECT_EQ(diagram_stats(plat_closure(BraidWord::identity(2))), (DiagramStats{2, 0, 1}));
  EXPECT_EQ(diagram_stats(plat_closure(parse_braid("1 1 1", 2))), (DiagramStats{2, 3, 1}));
  EXPECT_EQ(component_count(plat_closure(BraidWord::identity(6))), 3);
  EXPECT_THROW(plat_closure(BraidWord::identity(3)), std::invalid_argument);
}

TEST(Closure, GirthAndCrossingsOfRandomBraids) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int len = static_cast<int>(rng() % 12);
    const auto plat = plat_closure(random_braid(rng, 2 * n, len));
    EXPECT_EQ(girth(plat), 2 * n);
    EXPECT_EQ(crossing_count(plat), len);
    const auto b = random_braid(rng, n, len);
    const auto trace = trace_closure(b);
    EXPECT_EQ(girth(trace), 2 * n);
    EXPECT_EQ(component_count(trace), b.cycle_count());
  }
}

TEST(Morse, EmptyDiagram) {
  const MorseLink empty;
  EXPECT_EQ(girth(empty), 0);
  EXPECT_EQ(crossing_count(empty), 0);
  EXPECT_EQ(component_count(empty), 0);
}

TEST(Morse, ValidationRejectsBrokenEventLists) {
  EXPECT_FALSE(validate_events(std::vector{MorseEvent::cup(0)}).empty());
  EXPECT_FALSE(validate_events(std::vector{MorseEvent::cap(0)}).empty());
  EXPECT_FALSE(
      validate_events(std::vector{MorseEvent::cup(0), MorseEvent::cross(1, 1), MorseEvent::cap(0)})
          .empty());
  EXPECT_TRUE(validate_events(std::vector{MorseEvent::cup(0), MorseEvent::cap(0)}).empty());
  EXPECT_THROW(MorseLink(std::vector{MorseEvent::cup(1)}), std::invalid_argument);
}

TEST(Morse, WidthsTrackCupsAndCaps) {
  const auto d = trace_closure(parse_braid("1", 2));
  const auto w = d.widths();
  ASSERT_EQ(w.size(), d.size() + 1);
  EXPECT_EQ(w.front(), 0);
  EXPECT_EQ(w.back(), 0);
}

TEST(Morse, WritheOfBraidClosures) {
  EXPECT_EQ(writhe(trace_closure(parse_braid("1 1 1", 2))), 3);
  EXPECT_EQ(writhe(trace_closure(parse_braid("-1 -1 -1", 2))), -3);
  EXPECT_EQ(writhe(trace_closure(parse_braid("1 -2 1 -2", 3))), 0);
  for (const auto& o : crossing_orientations(trace_closure(parse_braid("1 2 -1", 3)))) {
    EXPECT_TRUE(o.left_strand_up);
    EXPECT_TRUE(o.right_strand_up);
  }
}

TEST(Morse, JsonRoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto d = random_morse_link(rng);
    EXPECT_EQ(morse_link_from_json(to_json(d)), d);
  }
  EXPECT_THROW(morse_link_from_json("{\"events\": [{\"type\": \"cup\"}]}"), std::invalid_argument);
  EXPECT_THROW(morse_link_from_json("not json"), std::invalid_argument);
}

TEST(Morse, DisjointUnionAndMirror) {
  const auto a = trace_closure(parse_braid("1 1 1", 2));
  const auto b = trace_closure(parse_braid("1 1", 2));
  const auto u = disjoint_union(a, b);
  EXPECT_EQ(crossing_count(u), 5);
  EXPECT_EQ(component_count(u), 3);
  EXPECT_EQ(writhe(mirror(a)), -3);
}

TEST(Reidemeister, R2AddKeepsBracket) {
  const auto d = trace_closure(parse_braid("1 -2 1", 3));
  const auto moved = apply_reidemeister(d, {MoveKind::R2Add, 5, 1, 1});
  EXPECT_EQ(moved.reidemeister_moves, 1);
  EXPECT_EQ(crossing_count(moved.diagram), crossing_count(d) + 2);
  EXPECT_EQ(jones_at_root(moved.diagram, 5), jones_at_root(d, 5));
  const auto back = apply_reidemeister(moved.diagram, {MoveKind::R2Remove, 5, 0, 1});
  EXPECT_EQ(back.diagram, d);
}

TEST(Reidemeister, R1KinkMultipliesByUnit) {
  const auto d = trace_closure(parse_braid("1 1 1", 2));
  for (const int sign : {1, -1}) {
    const auto kinked = apply_reidemeister(d, {MoveKind::R1Add, 2, 0, sign}).diagram;
    EXPECT_EQ(crossing_count(kinked), 4);
    const auto before = jones_at_root(d, 7);
    const auto after = jones_at_root(kinked, 7);
    EXPECT_NEAR(std::abs(after.to_complex()), std::abs(before.to_complex()), 1e-12);
    // Kauffman: a kink contributes -A^3 or -A^-3.
    auto up = before;
    up.mul_zeta_power(3LL * 6);
    auto down = before;
    down.mul_zeta_power(-3LL * 6);
    EXPECT_TRUE(after == -up || after == -down);
    EXPECT_EQ(apply_reidemeister(kinked, {MoveKind::R1Remove, 2, 0, 1}).diagram, d);
  }
}

TEST(Reidemeister, R3AndExchangeKeepBracket) {
  const auto d = trace_closure(parse_braid("1 2 1 -1", 4));
  const auto first = d.widths();
  // Find the first crossing event to anchor the R3 triple.
  std::size_t at = 0;
  while (!d.events()[at].is_crossing()) ++at;
  const auto r3 = apply_reidemeister(d, {MoveKind::R3, at, 0, 1});
  EXPECT_EQ(jones_at_root(r3.diagram, 5), jones_at_root(d, 5));
  EXPECT_EQ(crossing_count(r3.diagram), crossing_count(d));

  const auto far = trace_closure(parse_braid("1 3", 4));
  std::size_t x = 0;
  while (!far.events()[x].is_crossing()) ++x;
  const auto swapped = apply_reidemeister(far, {MoveKind::Exchange, x, 0, 1});
  EXPECT_EQ(swapped.reidemeister_moves, 0);
  EXPECT_EQ(diagram_stats(swapped.diagram), diagram_stats(far));
  EXPECT_EQ(jones_at_root(swapped.diagram, 8), jones_at_root(far, 8));
  EXPECT_NE(swapped.diagram, far);
  (void)first;
}

TEST(Reidemeister, MismatchedPatternsThrow) {
  const auto d = trace_closure(parse_braid("1 2", 3));
  EXPECT_THROW(apply_reidemeister(d, {MoveKind::R1Remove, 0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(apply_reidemeister(d, {MoveKind::R2Remove, 0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(apply_reidemeister(d, {MoveKind::R3, 0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(apply_reidemeister(d, {MoveKind::R2Add, 0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(apply_reidemeister(d, {MoveKind::R1Add, d.size() + 1, 0, 1}),
               std::invalid_argument);
}

// Random Reidemeister walks keep the bracket up to the R1 unit factors,
// so |bracket| is invariant.
TEST(Reidemeister, RandomWalksKeepBracketModulus) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    auto d = trace_closure(random_braid(rng, 3, 4));
    const double want = std::abs(jones_at_root(d, 5).to_complex());
    for (int step = 0; step < 6; ++step) {
      const auto widths = d.widths();
      const auto index = static_cast<std::size_t>(rng() % (d.size() + 1));
      const int width = widths[index];
      ReidemeisterMove m{};
      m.index = index;
      m.sign = rng() % 2 == 0 ? 1 : -1;
      if (width >= 2 && rng() % 2 == 0) {
        m.kind = MoveKind::R2Add;
        m.pos = static_cast<int>(rng() % static_cast<unsigned>(width - 1));
      } else if (width >= 1) {
        m.kind = MoveKind::R1Add;
        m.pos = static_cast<int>(rng() % static_cast<unsigned>(width));
      } else {
        continue;
      }
      d = apply_reidemeister(d, m).diagram;
    }
    EXPECT_NEAR(std::abs(jones_at_root(d, 5).to_complex()), want, 1e-9);
  }
}

}  // namespace
}  // namespace knotgirth
