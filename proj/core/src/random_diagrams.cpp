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

#include "knotgirth/random_diagrams.hpp"

#include <stdexcept>
#include <vector>

namespace knotgirth {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

BraidWord random_braid(std::mt19937_64& rng, int strands, int length) {
  if (strands < 1 || length < 0) throw std::invalid_argument("bad random braid shape");
  if (strands == 1) return BraidWord::identity(1);
  std::vector<BraidLetter> letters;
  letters.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    letters.push_back({uniform(rng, 1, strands - 1), uniform(rng, 0, 1) == 1 ? 1 : -1});
  }
  return BraidWord(strands, std::move(letters));
}

MorseLink random_morse_link(std::mt19937_64& rng, const RandomDiagramOptions& options) {
  if (options.max_width < 2 || options.body_events < 0) {
    throw std::invalid_argument("random diagram needs max_width >= 2");
  }
  std::vector<MorseEvent> events;
  events.push_back(MorseEvent::cup(0));
  int width = 2;
  std::bernoulli_distribution cross(options.crossing_weight);
  for (int i = 0; i < options.body_events; ++i) {
    if (cross(rng)) {
      events.push_back(MorseEvent::cross(uniform(rng, 0, width - 2), uniform(rng, 0, 1) == 1 ? 1 : -1));
      continue;
    }
    const bool can_cup = width + 2 <= options.max_width;
    const bool can_cap = width > 2;
    if (can_cup && (!can_cap || uniform(rng, 0, 1) == 0)) {
      events.push_back(MorseEvent::cup(uniform(rng, 0, width)));
      width += 2;
    } else if (can_cap) {
      events.push_back(MorseEvent::cap(uniform(rng, 0, width - 2)));
      width -= 2;
    }
  }
  while (width > 0) {
    events.push_back(MorseEvent::cap(uniform(rng, 0, width - 2)));
    width -= 2;
  }
  return MorseLink(std::move(events));
}

MorseLink random_knot_diagram(std::mt19937_64& rng, const RandomDiagramOptions& options) {
  for (;;) {
    auto d = random_morse_link(rng, options);
    if (component_count(d) == 1) return d;
  }
}

}  // namespace knotgirth
