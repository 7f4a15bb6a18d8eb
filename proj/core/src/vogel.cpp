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
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotgirth/seifert.hpp"
#include "planar_map.hpp"

namespace knotgirth {

namespace {

using detail::Circles;
using detail::Faces;
using detail::PlanarMap;

std::size_t at(int i) { return static_cast<std::size_t>(i); }

// Cup(0) .. Cup(n-1), crossings among the first n strands, Cap(n-1) .. Cap(0).
std::optional<BraidWord> as_trace_closure(const MorseLink& diagram) {
  const auto events = diagram.events();
  std::size_t n = 0;
  while (n < events.size() && events[n].kind == EventKind::Cup &&
         events[n].pos == static_cast<int>(n)) {
    ++n;
  }
  if (n == 0 || events.size() < 2 * n) return std::nullopt;
  const auto caps_begin = events.size() - n;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = events[caps_begin + i];
    if (e.kind != EventKind::Cap || e.pos != static_cast<int>(n - 1 - i)) return std::nullopt;
  }
  std::vector<BraidLetter> letters;
  for (std::size_t i = n; i < caps_begin; ++i) {
    const auto& e = events[i];
    if (!e.is_crossing() || e.pos + 1 >= static_cast<int>(n)) return std::nullopt;
    letters.push_back({e.pos + 1, e.kind == EventKind::CrossPos ? 1 : -1});
  }
  return BraidWord(static_cast<int>(n), std::move(letters));
}

struct Defect {
  int h1 = -1;
  int h2 = -1;
};

// First face, in face order, holding arcs of two different Seifert circles
// that run the same way around it.
std::optional<Defect> find_defect(const PlanarMap& map, const Faces& faces,
                                  const Circles& circles) {
  for (const auto& walk : faces.boundary) {
    for (std::size_t i = 0; i < walk.size(); ++i) {
      for (std::size_t j = i + 1; j < walk.size(); ++j) {
        const int a = walk[i];
        const int b = walk[j];
        if (circles.circle_of[at(a)] != circles.circle_of[at(b)] &&
            map.out[at(a)] == map.out[at(b)]) {
          return Defect{a, b};
        }
      }
    }
  }
  return std::nullopt;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[at(x)] != x) x = parent[at(x)] = parent[at(parent[at(x)])];
  return x;
}

[[noreturn]] void fail(const std::string& what) {
  throw std::logic_error("vogel read-off: " + what);
}

// Reads the braid off a map whose Seifert circles are coherently nested.
BraidWord read_off(const PlanarMap& map, const Faces& faces, const Circles& circles) {
  const int s = static_cast<int>(circles.sequence.size());
  const int face_count = static_cast<int>(faces.boundary.size());

  // Seifert regions: at each crossing the sector between the two incoming
  // slots and the one between the two outgoing slots are joined by the band.
  std::vector<int> parent(at(face_count));
  std::iota(parent.begin(), parent.end(), 0);
  for (int v = 0; v < map.vertex_count(); ++v) {
    for (int i = 0; i < 4; ++i) {
      if (!map.out[at(4 * v + i)] && !map.out[at(4 * v + (i + 1) % 4)]) {
        const int a = find_root(parent, faces.face_of[at(4 * v + i)]);
        const int b = find_root(parent, faces.face_of[at(4 * v + (i + 2) % 4)]);
        parent[at(a)] = b;
      }
    }
  }
  auto region = [&](int face) { return find_root(parent, face); };

  std::vector<int> left(at(s));
  std::vector<int> right(at(s));
  std::vector<std::vector<int>> incident(at(face_count));
  for (int c = 0; c < s; ++c) {
    const int h = circles.sequence[at(c)].front();
    left[at(c)] = region(faces.face_of[at(h)]);
    right[at(c)] = region(faces.face_of[at(map.twin[at(h)])]);
    if (left[at(c)] == right[at(c)]) fail("circle with one region on both sides");
    incident[at(left[at(c)])].push_back(c);
    incident[at(right[at(c)])].push_back(c);
  }

  // The region graph is a tree; braided means it is a path.
  int end = -1;
  int region_count = 0;
  for (int f = 0; f < face_count; ++f) {
    if (region(f) != f) continue;
    ++region_count;
    if (incident[at(f)].size() > 2) fail("Seifert circles are not nested");
    if (incident[at(f)].size() == 1 && end < 0) end = f;
  }
  if (region_count != s + 1 || end < 0) fail("region graph is not a path");

  std::vector<int> chain_region{end};
  std::vector<int> chain_circle;
  std::vector<int> position(at(s), -1);  // 1-based level of each circle
  std::vector<bool> used(at(s), false);
  for (int k = 1; k <= s; ++k) {
    const int r = chain_region.back();
    int next = -1;
    for (int c : incident[at(r)]) {
      if (!used[at(c)]) next = c;
    }
    if (next < 0) fail("region chain breaks early");
    used[at(next)] = true;
    position[at(next)] = k;
    chain_circle.push_back(next);
    chain_region.push_back(left[at(next)] == r ? right[at(next)] : left[at(next)]);
  }
  const bool end_on_left = left[at(chain_circle[0])] == end;
  for (int k = 0; k < s; ++k) {
    const bool inner_left = left[at(chain_circle[at(k)])] == chain_region[at(k)];
    if (inner_left != end_on_left) fail("Seifert circles are not coherently oriented");
  }

  // Cut every circle along a path of faces leaving the end region.
  int face = -1;
  for (int f = 0; f < face_count && face < 0; ++f) {
    if (region(f) == end) face = f;
  }
  std::vector<std::vector<int>> order(at(s));
  for (int k = 0; k < s; ++k) {
    const int c = chain_circle[at(k)];
    int cut = -1;
    for (int h : faces.boundary[at(face)]) {
      if (circles.circle_of[at(h)] == c) {
        cut = h;
        break;
      }
    }
    if (cut < 0) fail("no face path across the circles");
    face = faces.face_of[at(map.twin[at(cut)])];
    if (region(face) != chain_region[at(k + 1)]) fail("cut left the region chain");
    if (!map.out[at(cut)]) cut = map.twin[at(cut)];
    const auto& seq = circles.sequence[at(c)];
    const auto start = std::find(seq.begin(), seq.end(), cut) - seq.begin();
    for (std::size_t j = 0; j < seq.size(); ++j) {
      const int h = seq[(static_cast<std::size_t>(start) + j) % seq.size()];
      order[at(c)].push_back(map.twin[at(h)] / 4);
    }
  }

  // Merge the per-circle crossing orders.
  const int n = map.vertex_count();
  std::vector<std::vector<int>> after(at(n));
  std::vector<int> indegree(at(n), 0);
  for (const auto& seq : order) {
    for (std::size_t j = 1; j < seq.size(); ++j) {
      after[at(seq[j - 1])].push_back(seq[j]);
      ++indegree[at(seq[j])];
    }
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[at(v)] == 0) ready.push(v);
  }
  std::vector<BraidLetter> letters;
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    int lo = s + 1;
    int hi = 0;
    for (int i = 0; i < 4; ++i) {
      const int k = position[at(circles.circle_of[at(4 * v + i)])];
      lo = std::min(lo, k);
      hi = std::max(hi, k);
    }
    if (hi != lo + 1) fail("crossing between non-adjacent circles");
    letters.push_back({end_on_left ? lo : s - lo, detail::crossing_sign(map, v)});
    for (int w : after[at(v)]) {
      if (--indegree[at(w)] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(letters.size()) != n) fail("crossing orders are cyclic");
  return BraidWord(s, std::move(letters));
}

}  // namespace

VogelResult vogel_braiding(const MorseLink& diagram) {
  if (diagram.empty()) throw std::invalid_argument("cannot braid the empty diagram");
  VogelResult result;
  result.seifert_circles = seifert_circles(diagram);
  if (auto braid = as_trace_closure(diagram)) {
    result.braid = std::move(*braid);
    return result;
  }

  int free_loops = 0;
  auto maps = detail::planar_components(diagram, free_loops);
  std::optional<BraidWord> braid;
  for (auto& map : maps) {
    auto faces = detail::compute_faces(map);
    auto circles = detail::compute_circles(map);
    const auto s = circles.sequence.size();
    const auto limit = 4 * s * s + 64;
    std::size_t moves = 0;
    while (auto defect = find_defect(map, faces, circles)) {
      if (++moves > limit) throw std::logic_error("vogel moves did not terminate");
      detail::push_over(map, defect->h1, defect->h2);
      faces = detail::compute_faces(map);
      circles = detail::compute_circles(map);
      if (circles.sequence.size() != s) {
        throw std::logic_error("vogel move changed the Seifert circle count");
      }
    }
    result.rii_moves += static_cast<int>(moves);
    auto piece = read_off(map, faces, circles);
    braid = braid ? braid->tensor(piece) : std::move(piece);
  }
  for (int i = 0; i < free_loops; ++i) {
    braid = braid ? braid->tensor(BraidWord::identity(1)) : BraidWord::identity(1);
  }
  if (braid->strand_count() != result.seifert_circles) {
    throw std::logic_error("braid strand count differs from the Seifert circle count");
  }
  result.braid = std::move(*braid);
  result.within_budget =
      result.rii_moves <= result.seifert_circles * result.seifert_circles;
  return result;
}

}  // namespace knotgirth
