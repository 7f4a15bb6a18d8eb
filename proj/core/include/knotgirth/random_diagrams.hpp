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

#include <random>

#include "knotgirth/link.hpp"

namespace knotgirth {

/// Uniform letters: generator in [1, strands), sign +-1.
BraidWord random_braid(std::mt19937_64& rng, int strands, int length);

struct RandomDiagramOptions {
  int max_width = 8;
  /// Events emitted before the remaining strands are capped off.
  int body_events = 16;
  double crossing_weight = 0.5;
};

/// A random closed Morse diagram: a walk of cups, caps and crossings kept
/// within max_width, then closed by caps at random positions. Never empty.
MorseLink random_morse_link(std::mt19937_64& rng, const RandomDiagramOptions& options = {});

/// Rejection-samples random_morse_link until it has one component.
MorseLink random_knot_diagram(std::mt19937_64& rng, const RandomDiagramOptions& options = {});

}  // namespace knotgirth
