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

#include "knotgirth/seifert.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace knotgirth {

int seifert_circles(const MorseLink& diagram) {
  const auto orient = crossing_orientations(diagram);
  std::vector<int> parent;
  auto make = [&] {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  };
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };

  std::vector<int> level;
  std::size_t k = 0;
  for (const auto& ev : diagram.events()) {
    const auto p = static_cast<std::size_t>(ev.pos);
    const auto at = level.begin() + ev.pos;
    switch (ev.kind) {
      case EventKind::Cup: {
        const int x = make();
        level.insert(at, {x, x});
        break;
      }
      case EventKind::Cap:
        unite(level[p], level[p + 1]);
        level.erase(at, at + 2);
        break;
      default: {
        const auto& o = orient[k++];
        // Parallel strands smooth vertically; antiparallel ones turn back.
        if (o.left_strand_up != o.right_strand_up) {
          unite(level[p], level[p + 1]);
          const int x = make();
          level[p] = x;
          level[p + 1] = x;
        }
        break;
      }
    }
  }
  int circles = 0;
  for (int i = 0; i < static_cast<int>(parent.size()); ++i) {
    if (find(i) == i) ++circles;
  }
  return circles;
}

SeifertData seifert_data(const MorseLink& diagram) {
  SeifertData data;
  data.circles = seifert_circles(diagram);
  data.crossings = crossing_count(diagram);
  data.components = component_count(diagram);
  data.euler_characteristic = data.circles - data.crossings;
  if (data.components == 1) data.genus_if_knot = (data.crossings - data.circles + 1) / 2;
  return data;
}

int seifert_genus(const MorseLink& diagram) {
  const auto data = seifert_data(diagram);
  if (!data.genus_if_knot) {
    throw std::invalid_argument("genus needs a one-component diagram, got " +
                                std::to_string(data.components) + " components");
  }
  return *data.genus_if_knot;
}

SeifertBound check_seifert_bound(const MorseLink& diagram) {
  SeifertBound b;
  b.circles = seifert_circles(diagram);
  b.crossings = crossing_count(diagram);
  b.components = component_count(diagram);
  b.holds = b.circles <= b.crossings + b.components;
  return b;
}

}  // namespace knotgirth
