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

#include "planar_map.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "strand_graph.hpp"

namespace knotgirth::detail {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    auto& p = parent[static_cast<std::size_t>(x)];
    p = parent[static_cast<std::size_t>(p)];
    x = p;
  }
  return x;
}

}  // namespace

std::vector<PlanarMap> planar_components(const MorseLink& diagram, int& free_loops) {
  const StrandGraph graph(diagram);
  const auto& crossings = graph.crossings();
  const auto& dir = graph.direction();

  // terminal -> global half-edge id (4 * crossing + slot)
  std::vector<int> half_of(graph.terminal_count(), -1);
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    for (int s = 0; s < 4; ++s) {
      half_of[static_cast<std::size_t>(crossings[c].slot[static_cast<std::size_t>(s)])] =
          static_cast<int>(4 * c) + s;
    }
  }
  auto through_of = [&](std::size_t c, int slot) {
    const auto& x = crossings[c];
    return slot == StrandGraph::TopRight || slot == StrandGraph::BottomLeft
               ? x.left_through
               : x.right_through;
  };

  const auto n = crossings.size();
  std::vector<int> twin(4 * n, -1);
  std::vector<bool> out(4 * n, false);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t c = 0; c < n; ++c) {
    const auto& x = crossings[c];
    // Through links run a = bottom slot to b = top slot.
    out[4 * c + StrandGraph::TopRight] = dir[static_cast<std::size_t>(x.left_through)] > 0;
    out[4 * c + StrandGraph::BottomLeft] = dir[static_cast<std::size_t>(x.left_through)] < 0;
    out[4 * c + StrandGraph::TopLeft] = dir[static_cast<std::size_t>(x.right_through)] > 0;
    out[4 * c + StrandGraph::BottomRight] = dir[static_cast<std::size_t>(x.right_through)] < 0;
    for (int s = 0; s < 4; ++s) {
      const int start = x.slot[static_cast<std::size_t>(s)];
      int link = graph.other_link(start, through_of(c, s));
      int term = graph.other_end(link, start);
      while (half_of[static_cast<std::size_t>(term)] < 0) {
        link = graph.other_link(term, link);
        term = graph.other_end(link, term);
      }
      const int h = static_cast<int>(4 * c) + s;
      const int t = half_of[static_cast<std::size_t>(term)];
      twin[static_cast<std::size_t>(h)] = t;
      parent[static_cast<std::size_t>(find_root(parent, static_cast<int>(c)))] =
          find_root(parent, t / 4);
    }
  }

  std::vector<bool> has_crossing(static_cast<std::size_t>(graph.component_count()), false);
  for (std::size_t c = 0; c < n; ++c) {
    has_crossing[static_cast<std::size_t>(
        graph.component_of_link()[static_cast<std::size_t>(crossings[c].left_through)])] = true;
    has_crossing[static_cast<std::size_t>(
        graph.component_of_link()[static_cast<std::size_t>(crossings[c].right_through)])] = true;
  }
  free_loops = static_cast<int>(std::count(has_crossing.begin(), has_crossing.end(), false));

  // Components ordered by their first crossing; vertices keep event order.
  std::map<int, std::size_t> component_index;
  std::vector<std::vector<int>> members;
  for (std::size_t c = 0; c < n; ++c) {
    const int root = find_root(parent, static_cast<int>(c));
    auto [it, inserted] = component_index.try_emplace(root, members.size());
    if (inserted) members.emplace_back();
    members[it->second].push_back(static_cast<int>(c));
  }

  std::vector<PlanarMap> maps;
  std::vector<int> local(n, -1);
  for (const auto& vs : members) {
    for (std::size_t i = 0; i < vs.size(); ++i) local[static_cast<std::size_t>(vs[i])] = static_cast<int>(i);
    PlanarMap m;
    m.twin.resize(4 * vs.size());
    m.out.resize(4 * vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const auto c = static_cast<std::size_t>(vs[i]);
      m.over_slot.push_back(crossings[c].positive_kind ? 0 : 1);
      for (std::size_t s = 0; s < 4; ++s) {
        const int t = twin[4 * c + s];
        m.twin[4 * i + s] = 4 * local[static_cast<std::size_t>(t / 4)] + t % 4;
        m.out[4 * i + s] = out[4 * c + s];
      }
    }
    maps.push_back(std::move(m));
  }
  return maps;
}

int face_next(const PlanarMap& map, int h) {
  const int t = map.twin[static_cast<std::size_t>(h)];
  return 4 * (t / 4) + (t % 4 + 3) % 4;
}

Faces compute_faces(const PlanarMap& map) {
  Faces f;
  f.face_of.assign(static_cast<std::size_t>(map.half_edge_count()), -1);
  for (int h = 0; h < map.half_edge_count(); ++h) {
    if (f.face_of[static_cast<std::size_t>(h)] >= 0) continue;
    const int id = static_cast<int>(f.boundary.size());
    f.boundary.emplace_back();
    int cur = h;
    do {
      f.face_of[static_cast<std::size_t>(cur)] = id;
      f.boundary.back().push_back(cur);
      cur = face_next(map, cur);
    } while (cur != h);
  }
  // 4-valent and connected: V - 2V + F = 2.
  if (static_cast<int>(f.boundary.size()) != map.vertex_count() + 2) {
    throw std::logic_error("planar map is not a sphere embedding");
  }
  return f;
}

Circles compute_circles(const PlanarMap& map) {
  Circles c;
  c.circle_of.assign(static_cast<std::size_t>(map.half_edge_count()), -1);
  for (int h = 0; h < map.half_edge_count(); ++h) {
    if (!map.out[static_cast<std::size_t>(h)] || c.circle_of[static_cast<std::size_t>(h)] >= 0) {
      continue;
    }
    const int id = static_cast<int>(c.sequence.size());
    c.sequence.emplace_back();
    int cur = h;
    do {
      const int t = map.twin[static_cast<std::size_t>(cur)];
      c.circle_of[static_cast<std::size_t>(cur)] = id;
      c.circle_of[static_cast<std::size_t>(t)] = id;
      c.sequence.back().push_back(cur);
      // Oriented smoothing: leave through the outgoing slot next to the
      // incoming one.
      const int v = t / 4;
      const int left = 4 * v + (t % 4 + 1) % 4;
      const int right = 4 * v + (t % 4 + 3) % 4;
      cur = map.out[static_cast<std::size_t>(left)] ? left : right;
    } while (cur != h);
  }
  return c;
}

int crossing_sign(const PlanarMap& map, int v) {
  const int p = map.over_slot[static_cast<std::size_t>(v)];
  const int over_out = map.out[static_cast<std::size_t>(4 * v + p)] ? p : p + 2;
  const int q = (p + 1) % 4;
  const int under_out = map.out[static_cast<std::size_t>(4 * v + q)] ? q : (q + 2) % 4;
  return under_out == (over_out + 1) % 4 ? 1 : -1;
}

void push_over(PlanarMap& map, int h1, int h2) {
  const int t1 = map.twin[static_cast<std::size_t>(h1)];
  const int t2 = map.twin[static_cast<std::size_t>(h2)];
  const bool o1 = map.out[static_cast<std::size_t>(h1)];
  const bool o2 = map.out[static_cast<std::size_t>(h2)];
  const int x = 4 * map.vertex_count();
  const int y = x + 4;
  map.over_slot.push_back(1);
  map.over_slot.push_back(1);
  map.twin.resize(map.twin.size() + 8, -1);
  map.out.resize(map.out.size() + 8, false);
  auto link = [&](int a, int b) {
    map.twin[static_cast<std::size_t>(a)] = b;
    map.twin[static_cast<std::size_t>(b)] = a;
  };
  auto set_out = [&](int h, bool value) { map.out[static_cast<std::size_t>(h)] = value; };
  // Slots of the new vertices: 0 east, 1 north, 2 west, 3 south. The edge
  // of h1 runs south to north through x, loops back and runs north to south
  // through y; the edge of h2 runs east to west through y, then x.
  link(h1, x + 3);
  link(x + 1, y + 1);
  link(y + 3, t1);
  link(h2, y + 0);
  link(y + 2, x + 0);
  link(x + 2, t2);
  set_out(x + 3, !o1);
  set_out(x + 1, o1);
  set_out(y + 1, !o1);
  set_out(y + 3, o1);
  set_out(y + 0, !o2);
  set_out(y + 2, o2);
  set_out(x + 0, !o2);
  set_out(x + 2, o2);
}

}  // namespace knotgirth::detail
