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

#include <array>
#include <vector>

#include "knotgirth/link.hpp"

namespace knotgirth::detail {

/// 4-valent planar map of one connected projection component. Vertex v owns
/// half-edges 4v..4v+3 in counterclockwise order; half-edge h leaves its
/// vertex along slot h % 4. The strand through slots (0, 2) and the one
/// through (1, 3) cross at every vertex.
struct PlanarMap {
  std::vector<int> twin;
  /// The oriented strand leaves the vertex through this half-edge.
  std::vector<bool> out;
  /// The over strand occupies slots (p, p + 2) with p = over_slot[v].
  std::vector<int> over_slot;

  int vertex_count() const { return static_cast<int>(over_slot.size()); }
  int half_edge_count() const { return static_cast<int>(twin.size()); }
};

/// Splits a diagram into its connected projection components (those with
/// at least one crossing). `free_loops` receives the number of crossingless
/// loops.
std::vector<PlanarMap> planar_components(const MorseLink& diagram, int& free_loops);

/// Next half-edge along the face to the left of h.
int face_next(const PlanarMap& map, int h);

struct Faces {
  std::vector<int> face_of;               // per half-edge, the face on its left
  std::vector<std::vector<int>> boundary; // per face, its half-edges in walk order
};
Faces compute_faces(const PlanarMap& map);

struct Circles {
  std::vector<int> circle_of;             // per half-edge
  std::vector<std::vector<int>> sequence; // per circle, outgoing half-edges in order
};
Circles compute_circles(const PlanarMap& map);

/// Writhe sign of the crossing at v.
int crossing_sign(const PlanarMap& map, int v);

/// Reidemeister II move pushing the edge of h1 over the edge of h2 across
/// the face to the left of both. Adds two vertices.
void push_over(PlanarMap& map, int h1, int h2);

}  // namespace knotgirth::detail
