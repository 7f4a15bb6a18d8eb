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

#include "strand_graph.hpp"

#include <stdexcept>

namespace knotgirth::detail {

int StrandGraph::add_terminal() {
  incident_.push_back({-1, -1});
  return static_cast<int>(incident_.size()) - 1;
}

int StrandGraph::connect(int a, int b, LinkKind kind) {
  const int id = static_cast<int>(links_.size());
  links_.push_back({a, b, kind});
  for (int t : {a, b}) {
    auto& inc = incident_[static_cast<std::size_t>(t)];
    if (inc[0] < 0) {
      inc[0] = id;
    } else if (inc[1] < 0) {
      inc[1] = id;
    } else {
      throw std::logic_error("terminal already has two links");
    }
  }
  return id;
}

StrandGraph::StrandGraph(const MorseLink& diagram) {
  // open[p] = terminal at the lower end of the segment currently at position p
  std::vector<int> open;
  const auto events = diagram.events();
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& e = events[i];
    const auto p = static_cast<std::size_t>(e.pos);
    switch (e.kind) {
      case EventKind::Cup: {
        const int left = add_terminal();
        const int right = add_terminal();
        const int link = connect(left, right, LinkKind::Cup);
        cups_.push_back({i, left, right, link});
        open.insert(open.begin() + static_cast<std::ptrdiff_t>(p), {left, right});
        break;
      }
      case EventKind::Cap:
        connect(open[p], open[p + 1], LinkKind::Cap);
        open.erase(open.begin() + static_cast<std::ptrdiff_t>(p),
                   open.begin() + static_cast<std::ptrdiff_t>(p) + 2);
        break;
      case EventKind::CrossPos:
      case EventKind::CrossNeg: {
        Crossing c;
        c.event_index = i;
        c.positive_kind = e.kind == EventKind::CrossPos;
        for (auto& t : c.slot) t = add_terminal();
        connect(open[p], c.slot[BottomLeft], LinkKind::Segment);
        connect(open[p + 1], c.slot[BottomRight], LinkKind::Segment);
        c.left_through = connect(c.slot[BottomLeft], c.slot[TopRight], LinkKind::Through);
        c.right_through = connect(c.slot[BottomRight], c.slot[TopLeft], LinkKind::Through);
        open[p] = c.slot[TopLeft];
        open[p + 1] = c.slot[TopRight];
        crossings_.push_back(c);
        break;
      }
    }
  }
  if (!open.empty()) throw std::logic_error("diagram does not close");
  orient();
}

void StrandGraph::orient() {
  direction_.assign(links_.size(), 0);
  component_.assign(links_.size(), -1);
  component_count_ = 0;
  for (const auto& cup : cups_) {
    if (component_[static_cast<std::size_t>(cup.link)] >= 0) continue;
    const int comp = component_count_++;
    // Leave the left leg upward; the walk ends by crossing the cup itself.
    int terminal = cup.left;
    int link = other_link(cup.left, cup.link);
    while (true) {
      const auto& l = links_[static_cast<std::size_t>(link)];
      direction_[static_cast<std::size_t>(link)] = l.a == terminal ? 1 : -1;
      component_[static_cast<std::size_t>(link)] = comp;
      terminal = other_end(link, terminal);
      if (link == cup.link) break;
      link = other_link(terminal, link);
    }
  }
}

}  // namespace knotgirth::detail
