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
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "knotgirth/link.hpp"
#include "strand_graph.hpp"

namespace knotgirth {

std::string validate_events(std::span<const MorseEvent> events) {
  int width = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& e = events[i];
    const auto where = "event " + std::to_string(i) + ": ";
    if (e.pos < 0) return where + "negative position";
    if (e.kind == EventKind::Cup) {
      if (e.pos > width) {
        return where + "cup at " + std::to_string(e.pos) + " beyond width " +
               std::to_string(width);
      }
    } else if (e.pos + 1 >= width) {
      return where + std::string(event_kind_name(e.kind)) + " at " +
             std::to_string(e.pos) + " needs strands " + std::to_string(e.pos) +
             "," + std::to_string(e.pos + 1) + " but width is " +
             std::to_string(width);
    }
    width += e.width_delta();
  }
  if (width != 0) {
    return "diagram ends with " + std::to_string(width) + " open strands";
  }
  return {};
}

MorseLink::MorseLink(std::vector<MorseEvent> events) : events_(std::move(events)) {
  if (auto err = validate_events(events_); !err.empty()) {
    throw std::invalid_argument("invalid Morse diagram: " + err);
  }
}

std::vector<int> MorseLink::widths() const {
  std::vector<int> out;
  out.reserve(events_.size() + 1);
  int width = 0;
  for (const auto& e : events_) {
    out.push_back(width);
    width += e.width_delta();
  }
  out.push_back(width);
  return out;
}

MorseLink plat_closure(const BraidWord& braid) {
  const int strands = braid.strand_count();
  if (strands % 2 != 0) {
    throw std::invalid_argument("plat closure needs an even strand count, got " +
                                std::to_string(strands));
  }
  std::vector<MorseEvent> events;
  events.reserve(braid.length() + static_cast<std::size_t>(strands));
  for (int p = 0; p < strands; p += 2) events.push_back(MorseEvent::cup(p));
  for (const auto& letter : braid.letters()) {
    events.push_back(MorseEvent::cross(letter.generator - 1, letter.sign));
  }
  for (int p = strands - 2; p >= 0; p -= 2) events.push_back(MorseEvent::cap(p));
  return MorseLink(std::move(events));
}

MorseLink trace_closure(const BraidWord& braid) {
  const int n = braid.strand_count();
  std::vector<MorseEvent> events;
  events.reserve(braid.length() + 2 * static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) events.push_back(MorseEvent::cup(p));
  for (const auto& letter : braid.letters()) {
    events.push_back(MorseEvent::cross(letter.generator - 1, letter.sign));
  }
  for (int p = n - 1; p >= 0; --p) events.push_back(MorseEvent::cap(p));
  return MorseLink(std::move(events));
}

int girth(const MorseLink& diagram) {
  const auto w = diagram.widths();
  return *std::max_element(w.begin(), w.end());
}

int crossing_count(const MorseLink& diagram) {
  const auto events = diagram.events();
  return static_cast<int>(std::count_if(events.begin(), events.end(),
                                        [](const MorseEvent& e) { return e.is_crossing(); }));
}

int component_count(const MorseLink& diagram) {
  // Union-find over segment ids; crossings only permute positions.
  std::vector<int> parent;
  const auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::vector<int> at;
  int components = 0;
  for (const auto& e : diagram.events()) {
    const auto p = static_cast<std::size_t>(e.pos);
    switch (e.kind) {
      case EventKind::Cup: {
        const int id = static_cast<int>(parent.size());
        parent.push_back(id);
        ++components;
        at.insert(at.begin() + static_cast<std::ptrdiff_t>(p), {id, id});
        break;
      }
      case EventKind::Cap: {
        const int a = find(at[p]);
        const int b = find(at[p + 1]);
        if (a != b) {
          parent[static_cast<std::size_t>(a)] = b;
          --components;
        }
        at.erase(at.begin() + static_cast<std::ptrdiff_t>(p),
                 at.begin() + static_cast<std::ptrdiff_t>(p) + 2);
        break;
      }
      default:
        std::swap(at[p], at[p + 1]);
    }
  }
  return components;
}

DiagramStats diagram_stats(const MorseLink& diagram) {
  return {girth(diagram), crossing_count(diagram), component_count(diagram)};
}

MorseLink disjoint_union(const MorseLink& a, const MorseLink& b) {
  std::vector<MorseEvent> events(a.events().begin(), a.events().end());
  events.insert(events.end(), b.events().begin(), b.events().end());
  return MorseLink(std::move(events));
}

MorseLink mirror(const MorseLink& diagram) {
  std::vector<MorseEvent> events(diagram.events().begin(), diagram.events().end());
  for (auto& e : events) {
    if (e.kind == EventKind::CrossPos) {
      e.kind = EventKind::CrossNeg;
    } else if (e.kind == EventKind::CrossNeg) {
      e.kind = EventKind::CrossPos;
    }
  }
  return MorseLink(std::move(events));
}

std::vector<CrossingOrientation> crossing_orientations(const MorseLink& diagram) {
  const detail::StrandGraph graph(diagram);
  const auto& dir = graph.direction();
  std::vector<CrossingOrientation> out;
  out.reserve(graph.crossings().size());
  for (const auto& c : graph.crossings()) {
    CrossingOrientation o;
    o.event_index = c.event_index;
    o.left_strand_up = dir[static_cast<std::size_t>(c.left_through)] > 0;
    o.right_strand_up = dir[static_cast<std::size_t>(c.right_through)] > 0;
    const int base = c.positive_kind ? 1 : -1;
    o.sign = o.left_strand_up == o.right_strand_up ? base : -base;
    out.push_back(o);
  }
  return out;
}

int writhe(const MorseLink& diagram) {
  int w = 0;
  for (const auto& o : crossing_orientations(diagram)) w += o.sign;
  return w;
}

std::string_view event_kind_name(EventKind kind) {
  switch (kind) {
    case EventKind::Cup: return "cup";
    case EventKind::Cap: return "cap";
    case EventKind::CrossPos: return "x+";
    case EventKind::CrossNeg: return "x-";
  }
  return "?";
}

std::string to_json(const MorseLink& diagram) {
  nlohmann::ordered_json events = nlohmann::ordered_json::array();
  for (const auto& e : diagram.events()) {
    nlohmann::ordered_json item;
    item["type"] = event_kind_name(e.kind);
    item["pos"] = e.pos;
    events.push_back(std::move(item));
  }
  nlohmann::ordered_json doc;
  doc["events"] = std::move(events);
  return doc.dump();
}

MorseLink morse_link_from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("diagram JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("events") || !doc["events"].is_array()) {
    throw std::invalid_argument("diagram JSON needs an \"events\" array");
  }
  std::vector<MorseEvent> events;
  for (const auto& item : doc["events"]) {
    if (!item.is_object() || !item.contains("type") || !item.contains("pos") ||
        !item["type"].is_string() || !item["pos"].is_number_integer()) {
      throw std::invalid_argument("diagram event needs string \"type\" and integer \"pos\"");
    }
    const auto type = item["type"].get<std::string>();
    MorseEvent e;
    if (type == "cup") {
      e.kind = EventKind::Cup;
    } else if (type == "cap") {
      e.kind = EventKind::Cap;
    } else if (type == "x+") {
      e.kind = EventKind::CrossPos;
    } else if (type == "x-") {
      e.kind = EventKind::CrossNeg;
    } else {
      throw std::invalid_argument("unknown diagram event type '" + type + "'");
    }
    e.pos = item["pos"].get<int>();
    events.push_back(e);
  }
  return MorseLink(std::move(events));
}

}  // namespace knotgirth
