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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace knotgirth {

/// One letter of a braid word: sigma_generator raised to sign (+1 or -1).
/// Generators are 1-based, so sigma_i crosses strands i-1 and i (0-based).
struct BraidLetter {
  int generator = 1;
  int sign = 1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// A word in the braid group B_n. Immutable once constructed.
class BraidWord {
 public:
  /// Throws std::invalid_argument unless strand_count >= 1, every generator
  /// lies in [1, strand_count) and every sign is +-1.
  BraidWord(int strand_count, std::vector<BraidLetter> letters);

  static BraidWord identity(int strand_count);

  int strand_count() const { return strand_count_; }
  std::span<const BraidLetter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  /// perm[i] is the top position reached by the strand starting at bottom
  /// position i.
  std::vector<int> permutation() const;
  int cycle_count() const;

  BraidWord inverse() const;
  /// Flips every crossing.
  BraidWord mirror() const;
  /// Juxtaposes `other` to the right (strand indices shifted).
  BraidWord tensor(const BraidWord& other) const;

  /// Whitespace-separated signed generator indices, e.g. "1 -2 1".
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strand_count_ = 1;
  std::vector<BraidLetter> letters_;
};

/// Parses whitespace-separated nonzero integers; |k| names the generator and
/// the sign of k its exponent.
BraidWord parse_braid(std::string_view text, int strand_count);

enum class EventKind : std::uint8_t { Cup, Cap, CrossPos, CrossNeg };

/// One level change of a Morse-encoded diagram, read bottom to top.
///
/// Cup(p) inserts two new strands at positions p, p+1. Cap(p) joins the
/// strands at p, p+1. CrossPos(p) swaps strands p and p+1 with the strand
/// coming from bottom-left passing over; CrossNeg(p) has the strand from
/// bottom-right over. With both strands pointing up, CrossPos is a positive
/// crossing, so sigma_{p+1} maps to CrossPos(p).
struct MorseEvent {
  EventKind kind = EventKind::Cup;
  int pos = 0;

  bool is_crossing() const {
    return kind == EventKind::CrossPos || kind == EventKind::CrossNeg;
  }
  /// Net change of the strand count.
  int width_delta() const {
    return kind == EventKind::Cup ? 2 : kind == EventKind::Cap ? -2 : 0;
  }

  static MorseEvent cup(int p) { return {EventKind::Cup, p}; }
  static MorseEvent cap(int p) { return {EventKind::Cap, p}; }
  static MorseEvent cross(int p, int sign) {
    return {sign > 0 ? EventKind::CrossPos : EventKind::CrossNeg, p};
  }

  friend bool operator==(const MorseEvent&, const MorseEvent&) = default;
};

/// A closed link diagram in layered Morse form. The strand count starts and
/// ends at zero; the constructor rejects anything else.
class MorseLink {
 public:
  MorseLink() = default;
  explicit MorseLink(std::vector<MorseEvent> events);

  std::span<const MorseEvent> events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }

  /// Strand count before each event, plus the final level (always 0).
  std::vector<int> widths() const;

  friend bool operator==(const MorseLink&, const MorseLink&) = default;

 private:
  std::vector<MorseEvent> events_;
};

/// Validates an event list without constructing; returns an empty string on
/// success or a description of the first violation.
std::string validate_events(std::span<const MorseEvent> events);

struct DiagramStats {
  int girth = 0;
  int crossings = 0;
  int components = 0;

  friend bool operator==(const DiagramStats&, const DiagramStats&) = default;
};

/// n cups, the braid letters as crossings, then n caps. Throws
/// std::invalid_argument for an odd strand count.
MorseLink plat_closure(const BraidWord& braid);

/// Braid strands at positions 0..n-1 with nested return strands on the
/// right. Strand i closes up through return strand 2n-1-i.
MorseLink trace_closure(const BraidWord& braid);

int girth(const MorseLink& diagram);
int crossing_count(const MorseLink& diagram);
int component_count(const MorseLink& diagram);
DiagramStats diagram_stats(const MorseLink& diagram);

/// Stacks b above a; as links this is the split union.
MorseLink disjoint_union(const MorseLink& a, const MorseLink& b);
/// Flips every crossing.
MorseLink mirror(const MorseLink& diagram);

/// Orientation data for one crossing event.
///
/// Orientation is fixed per component by strand tracing: at the first cup
/// (in event order) that belongs to the component, the left leg points up.
/// For a trace closure this makes every braid strand point up.
struct CrossingOrientation {
  std::size_t event_index = 0;
  bool left_strand_up = true;   // strand entering from bottom-left
  bool right_strand_up = true;  // strand entering from bottom-right
  int sign = 1;                 // writhe sign of the crossing
};

std::vector<CrossingOrientation> crossing_orientations(const MorseLink& diagram);
int writhe(const MorseLink& diagram);

/// JSON interchange: {"events": [{"type": "cup", "pos": 0}, ...]} with
/// type one of "cup", "cap", "x+", "x-".
std::string to_json(const MorseLink& diagram);
MorseLink morse_link_from_json(std::string_view json_text);

std::string_view event_kind_name(EventKind kind);

// --- Reidemeister rewrites --------------------------------------------------

enum class MoveKind : std::uint8_t {
  R1Add,     // kink on the strand at `pos`, inserted before event `index`
  R1Remove,  // events index..index+2 form Cup(q) Cross(q-1) Cap(q)
  R2Add,     // Cross(pos, sign) Cross(pos, -sign) inserted before `index`
  R2Remove,  // events index, index+1 are opposite crossings at one position
  R3,        // events index..index+2 form a braid-relation triple
  Exchange,  // swaps the commuting events index and index+1
};

struct ReidemeisterMove {
  MoveKind kind = MoveKind::Exchange;
  std::size_t index = 0;
  int pos = 0;
  int sign = 1;
};

struct RewriteResult {
  MorseLink diagram;
  /// 1 for R1/R2/R3, 0 for an exchange (planar isotopy).
  int reidemeister_moves = 0;
};

/// Throws std::invalid_argument if the pattern does not match at the given
/// location.
RewriteResult apply_reidemeister(const MorseLink& diagram,
                                 const ReidemeisterMove& move);

std::string_view move_kind_name(MoveKind kind);

}  // namespace knotgirth
