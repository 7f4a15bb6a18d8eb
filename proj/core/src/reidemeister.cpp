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

#include <stdexcept>
#include <string>
#include <vector>

#include "knotgirth/link.hpp"

namespace knotgirth {

namespace {

int kind_sign(EventKind kind) { return kind == EventKind::CrossPos ? 1 : -1; }

[[noreturn]] void mismatch(const ReidemeisterMove& move, const std::string& why) {
  throw std::invalid_argument(std::string(move_kind_name(move.kind)) + " at event " +
                              std::to_string(move.index) + ": " + why);
}

struct Footprint {
  int begin = 0;
  int end = 0;
};

// Positions an event occupies on the level just after it.
Footprint post_footprint(const MorseEvent& e) {
  return e.kind == EventKind::Cap ? Footprint{e.pos, e.pos} : Footprint{e.pos, e.pos + 2};
}

// Positions an event consumes on the level just before it.
Footprint pre_footprint(const MorseEvent& e) {
  return e.kind == EventKind::Cup ? Footprint{e.pos, e.pos} : Footprint{e.pos, e.pos + 2};
}

std::vector<MorseEvent> exchange(std::vector<MorseEvent> events,
                                 const ReidemeisterMove& move) {
  if (move.index + 1 >= events.size()) mismatch(move, "needs two events");
  auto first = events[move.index];
  auto second = events[move.index + 1];
  const auto a = post_footprint(first);
  const auto b = pre_footprint(second);
  if (b.end <= a.begin) {
    first.pos += second.width_delta();
  } else if (b.begin >= a.end) {
    second.pos -= first.width_delta();
  } else {
    mismatch(move, "events share strands and do not commute");
  }
  events[move.index] = second;
  events[move.index + 1] = first;
  return events;
}

std::vector<MorseEvent> r3(std::vector<MorseEvent> events, const ReidemeisterMove& move) {
  if (move.index + 2 >= events.size()) mismatch(move, "needs three events");
  const auto& x = events[move.index];
  const auto& y = events[move.index + 1];
  const auto& z = events[move.index + 2];
  if (!x.is_crossing() || !y.is_crossing() || !z.is_crossing()) {
    mismatch(move, "needs three crossings");
  }
  if (x.pos != z.pos || (y.pos != x.pos + 1 && y.pos != x.pos - 1)) {
    mismatch(move, "crossings are not in braid-relation position");
  }
  const int a = kind_sign(x.kind);
  const int b = kind_sign(y.kind);
  const int c = kind_sign(z.kind);
  const int outer = x.pos;
  const int middle = y.pos;
  if (a == b && b == c) {
    events[move.index] = MorseEvent::cross(middle, a);
    events[move.index + 1] = MorseEvent::cross(outer, a);
    events[move.index + 2] = MorseEvent::cross(middle, a);
  } else if (c == -a) {
    // s_i^a s_j^b s_i^-a = s_j^-a s_i^b s_j^a for |i - j| = 1
    events[move.index] = MorseEvent::cross(middle, -a);
    events[move.index + 1] = MorseEvent::cross(outer, b);
    events[move.index + 2] = MorseEvent::cross(middle, a);
  } else {
    mismatch(move, "crossing signs admit no third Reidemeister move");
  }
  return events;
}

}  // namespace

std::string_view move_kind_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Add: return "R1+";
    case MoveKind::R1Remove: return "R1-";
    case MoveKind::R2Add: return "R2+";
    case MoveKind::R2Remove: return "R2-";
    case MoveKind::R3: return "R3";
    case MoveKind::Exchange: return "exchange";
  }
  return "?";
}

RewriteResult apply_reidemeister(const MorseLink& diagram, const ReidemeisterMove& move) {
  std::vector<MorseEvent> events(diagram.events().begin(), diagram.events().end());
  const auto at = static_cast<std::ptrdiff_t>(move.index);
  const int sign = move.sign >= 0 ? 1 : -1;
  int cost = 1;
  switch (move.kind) {
    case MoveKind::R1Add: {
      if (move.index > events.size()) mismatch(move, "index past the end");
      const int width = diagram.widths()[move.index];
      if (move.pos < 0 || move.pos >= width) mismatch(move, "no strand at that position");
      const int p = move.pos;
      events.insert(events.begin() + at, {MorseEvent::cup(p + 1), MorseEvent::cross(p, sign),
                                          MorseEvent::cap(p + 1)});
      break;
    }
    case MoveKind::R1Remove: {
      if (move.index + 2 >= events.size()) mismatch(move, "needs three events");
      const auto& cup = events[move.index];
      const auto& x = events[move.index + 1];
      const auto& cap = events[move.index + 2];
      if (cup.kind != EventKind::Cup || !x.is_crossing() || cap.kind != EventKind::Cap ||
          cap.pos != cup.pos || x.pos != cup.pos - 1) {
        mismatch(move, "no kink here");
      }
      events.erase(events.begin() + at, events.begin() + at + 3);
      break;
    }
    case MoveKind::R2Add: {
      if (move.index > events.size()) mismatch(move, "index past the end");
      const int width = diagram.widths()[move.index];
      if (move.pos < 0 || move.pos + 1 >= width) mismatch(move, "needs two adjacent strands");
      events.insert(events.begin() + at,
                    {MorseEvent::cross(move.pos, sign), MorseEvent::cross(move.pos, -sign)});
      break;
    }
    case MoveKind::R2Remove: {
      if (move.index + 1 >= events.size()) mismatch(move, "needs two events");
      const auto& x = events[move.index];
      const auto& y = events[move.index + 1];
      if (!x.is_crossing() || !y.is_crossing() || x.pos != y.pos || x.kind == y.kind) {
        mismatch(move, "no cancelling crossing pair here");
      }
      events.erase(events.begin() + at, events.begin() + at + 2);
      break;
    }
    case MoveKind::R3:
      events = r3(std::move(events), move);
      break;
    case MoveKind::Exchange:
      events = exchange(std::move(events), move);
      cost = 0;
      break;
  }
  return {MorseLink(std::move(events)), cost};
}

}  // namespace knotgirth
