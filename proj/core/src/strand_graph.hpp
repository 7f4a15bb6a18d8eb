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
#include <cstddef>
#include <vector>

#include "knotgirth/link.hpp"

namespace knotgirth::detail {

/// Terminal graph of a Morse diagram: cup legs and the four legs of every
/// crossing are terminals, joined by links. Once built, every terminal has
/// exactly two incident links and every link component is a cycle.
class StrandGraph {
 public:
  enum class LinkKind : unsigned char { Cup, Cap, Segment, Through };

  struct Link {
    int a = -1;
    int b = -1;
    LinkKind kind = LinkKind::Segment;
  };

  // Crossing legs in counterclockwise order starting at top-right.
  enum Slot : int { TopRight = 0, TopLeft = 1, BottomLeft = 2, BottomRight = 3 };

  struct Crossing {
    std::size_t event_index = 0;
    std::array<int, 4> slot{};  // terminal id per Slot
    int left_through = -1;      // link BottomLeft -> TopRight
    int right_through = -1;     // link BottomRight -> TopLeft
    bool positive_kind = true;  // CrossPos
  };

  struct Cup {
    std::size_t event_index = 0;
    int left = -1;
    int right = -1;
    int link = -1;
  };

  explicit StrandGraph(const MorseLink& diagram);

  std::size_t terminal_count() const { return incident_.size(); }
  const std::vector<Link>& links() const { return links_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Cup>& cups() const { return cups_; }
  const std::array<int, 2>& incident(int terminal) const {
    return incident_[static_cast<std::size_t>(terminal)];
  }
  int other_end(int link, int terminal) const {
    const auto& l = links_[static_cast<std::size_t>(link)];
    return l.a == terminal ? l.b : l.a;
  }
  int other_link(int terminal, int link) const {
    const auto& inc = incident(terminal);
    return inc[0] == link ? inc[1] : inc[0];
  }

  /// Canonical orientation. direction()[link] is +1 when the link is
  /// traversed from a to b, -1 otherwise.
  const std::vector<int>& direction() const { return direction_; }
  /// Link component of every link.
  const std::vector<int>& component_of_link() const { return component_; }
  int component_count() const { return component_count_; }

 private:
  int add_terminal();
  int connect(int a, int b, LinkKind kind);
  void orient();

  std::vector<std::array<int, 2>> incident_;
  std::vector<Link> links_;
  std::vector<Crossing> crossings_;
  std::vector<Cup> cups_;
  std::vector<int> direction_;
  std::vector<int> component_;
  int component_count_ = 0;
};

}  // namespace knotgirth::detail
