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

#include <optional>

#include "knotgirth/link.hpp"

namespace knotgirth {

struct SeifertData {
  int circles = 0;
  int crossings = 0;
  int components = 0;
  /// circles - crossings
  int euler_characteristic = 0;
  /// (c - s + 1) / 2, present only for single-component diagrams.
  std::optional<int> genus_if_knot;
};

/// Loops left after the oriented smoothing of every crossing.
int seifert_circles(const MorseLink& diagram);
SeifertData seifert_data(const MorseLink& diagram);
/// Genus of the Seifert surface; throws std::invalid_argument unless the
/// diagram has exactly one component.
int seifert_genus(const MorseLink& diagram);

struct SeifertBound {
  bool holds = true;  // s <= c + n
  int circles = 0;
  int crossings = 0;
  int components = 0;
};

SeifertBound check_seifert_bound(const MorseLink& diagram);

struct VogelResult {
  BraidWord braid = BraidWord::identity(1);
  /// Number of Reidemeister II moves performed.
  int rii_moves = 0;
  int seifert_circles = 0;
  /// rii_moves <= seifert_circles^2. Reported, never enforced.
  bool within_budget = true;
};

/// Braids a diagram with Vogel moves. Every move is a Reidemeister II move
/// between arcs of two different Seifert circles that bound a common face
/// with the same orientation; the number of Seifert circles never changes.
/// Once no such face remains the braid is read off, so trace_closure of the
/// result is the input link up to isotopy on the 2-sphere and the bracket is
/// unchanged. Projection-disjoint pieces are braided separately and placed
/// side by side; a crossingless loop becomes its own strand.
///
/// Trace closures are recognized syntactically and returned as they are.
/// Throws std::invalid_argument for the empty diagram.
VogelResult vogel_braiding(const MorseLink& diagram);

}  // namespace knotgirth
