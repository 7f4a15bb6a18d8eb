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

#include "knotgirth/jones.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "word_ring.hpp"

namespace knotgirth {

namespace {

constexpr int kMaxContractionWidth = 62;

using Code = std::uint64_t;
using State = std::map<Code, Cyclotomic>;
using Partners = std::array<int, 64>;

void decode(Code code, int width, Partners& partner) {
  std::array<int, 64> stack;
  int top = 0;
  for (int i = 0; i < width; ++i) {
    if ((code >> i) & 1U) {
      stack[top++] = i;
    } else {
      const int j = stack[--top];
      partner[i] = j;
      partner[j] = i;
    }
  }
}

Code insert_pair(Code code, int p) {
  const Code low = code & ((Code{1} << p) - 1);
  return low | (Code{1} << p) | ((code >> p) << (p + 2));
}

// Joins points p and p+1. Returns the new code; sets `loop` when the two
// points were matched to each other.
Code join_pair(Code code, int width, int p, bool& loop) {
  Partners partner{};
  decode(code, width, partner);
  loop = partner[p] == p + 1;
  if (!loop) {
    const int a = partner[p];
    const int b = partner[p + 1];
    partner[a] = b;
    partner[b] = a;
  }
  Code out = 0;
  int k = 0;
  for (int i = 0; i < width; ++i) {
    if (i == p || i == p + 1) continue;
    if (partner[i] > i) out |= Code{1} << k;
    ++k;
  }
  return out;
}

void accumulate(State& state, Code code, Cyclotomic value) {
  if (value.is_zero()) return;
  auto [it, inserted] = state.try_emplace(code, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) state.erase(it);
  }
}

Cyclotomic times_d(const Cyclotomic& v, int r) {
  auto a = v;
  a.mul_zeta_power(2LL * (r - 1));
  auto b = v;
  b.mul_zeta_power(-2LL * (r - 1));
  return -(a + b);
}

Cyclotomic times_a(Cyclotomic v, int r, int power) {
  v.mul_zeta_power(static_cast<long long>(power) * (r - 1));
  return v;
}


}  // namespace

std::string_view closure_name(Closure closure) {
  return closure == Closure::Plat ? "plat" : "trace";
}

Closure parse_closure(std::string_view name) {
  if (name == "plat") return Closure::Plat;
  if (name == "trace") return Closure::Trace;
  throw std::invalid_argument("closure must be 'plat' or 'trace', got '" +
                              std::string(name) + "'");
}

MorseLink close_braid(const BraidWord& braid, Closure closure) {
  return closure == Closure::Plat ? plat_closure(braid) : trace_closure(braid);
}

void require_valid_root(int r) {
  if (r < 5 || r == 6) {
    throw std::invalid_argument("r must be an integer >= 5 other than 6, got " +
                                std::to_string(r));
  }
}

Cyclotomic bracket_variable(int r) {
  require_valid_root(r);
  return CyclotomicRing::for_root(r).zeta_power(r - 1);
}

Cyclotomic loop_value(int r) {
  require_valid_root(r);
  return times_d(CyclotomicRing::for_root(r).one(), r);
}

double loop_value_real(int r) {
  require_valid_root(r);
  return 2.0 * std::cos(std::numbers::pi / r);
}

namespace {

void check_width(int g) {
  if (g > kMaxContractionWidth) {
    throw std::invalid_argument("diagram girth " + std::to_string(g) +
                                " exceeds the contraction limit of " +
                                std::to_string(kMaxContractionWidth));
  }
}

Cyclotomic contract_big(const MorseLink& diagram, int r, std::size_t& peak) {
  const auto& ring = CyclotomicRing::for_root(r);
  State state;
  state.emplace(Code{0}, ring.one());
  peak = 1;
  int width = 0;
  for (const auto& ev : diagram.events()) {
    State next;
    const int p = ev.pos;
    switch (ev.kind) {
      case EventKind::Cup:
        for (auto& [code, v] : state) next.emplace(insert_pair(code, p), std::move(v));
        break;
      case EventKind::Cap:
        for (auto& [code, v] : state) {
          bool loop = false;
          const auto c = join_pair(code, width, p, loop);
          accumulate(next, c, loop ? times_d(v, r) : std::move(v));
        }
        break;
      case EventKind::CrossPos:
      case EventKind::CrossNeg: {
        const int s = ev.kind == EventKind::CrossPos ? 1 : -1;
        for (const auto& [code, v] : state) {
          accumulate(next, code, times_a(v, r, s));
          bool loop = false;
          const auto joined = join_pair(code, width, p, loop);
          auto e = times_a(v, r, -s);
          if (loop) {
            accumulate(next, code, times_d(e, r));
          } else {
            accumulate(next, insert_pair(joined, p), std::move(e));
          }
        }
        break;
      }
    }
    width += ev.width_delta();
    state = std::move(next);
    peak = std::max(peak, state.size());
  }
  auto it = state.find(Code{0});
  return it == state.end() ? ring.zero() : it->second;
}

// Coefficient vectors keyed by matching code, in insertion order, with an
// open-addressing index for accumulation.
class WordState {
 public:
  WordState() = default;

  std::size_t size() const { return codes_.size(); }
  Code code(std::size_t k) const { return codes_[k]; }
  const std::int64_t* value(std::size_t k) const { return vals_.data() + k * deg_; }
  std::int64_t* mutable_value(std::size_t k) { return vals_.data() + k * deg_; }

  void reset(std::size_t expected, std::size_t degree) {
    deg_ = degree;
    codes_.clear();
    used_ = 0;
    std::size_t cap = 16;
    while (cap < 2 * expected) cap *= 2;
    if (table_.size() == cap) {
      std::fill(table_.begin(), table_.end(), -1);
    } else {
      table_.assign(cap, -1);
    }
  }

  // Slot for `code`; `fresh` is set when it was just created, in which case
  // its contents are unspecified.
  std::int64_t* find_or_insert(Code code, bool& fresh) {
    if (2 * (codes_.size() + 1) > table_.size()) grow();
    const std::size_t mask = table_.size() - 1;
    for (std::size_t h = hash(code) & mask;; h = (h + 1) & mask) {
      const auto idx = table_[h];
      if (idx < 0) {
        table_[h] = static_cast<std::int32_t>(codes_.size());
        codes_.push_back(code);
        used_ += deg_;
        if (vals_.size() < used_) vals_.resize(2 * used_);
        fresh = true;
        return vals_.data() + used_ - deg_;
      }
      if (codes_[static_cast<std::size_t>(idx)] == code) {
        fresh = false;
        return vals_.data() + static_cast<std::size_t>(idx) * deg_;
      }
    }
  }

  // Drops entries that are zero in the ring. Invalidates the index, so only
  // call once the level is complete.
  void drop_zeros(const detail::WordRing& ring) {
    std::size_t w = 0;
    for (std::size_t k = 0; k < codes_.size(); ++k) {
      auto* v = mutable_value(k);
      if (is_zero(ring, v)) continue;
      if (w != k) {
        codes_[w] = codes_[k];
        std::copy_n(v, deg_, vals_.data() + w * deg_);
      }
      ++w;
    }
    codes_.resize(w);
    used_ = w * deg_;
  }

 private:
  // An unreduced value can be a nonzero multiple of Phi; test a reduced copy.
  bool is_zero(const detail::WordRing& ring, const std::int64_t* v) {
    if (std::all_of(v, v + deg_, [](std::int64_t x) { return x == 0; })) return true;
    probe_.assign(v, v + deg_);
    return ring.canonicalize(probe_.data()) &&
           std::all_of(probe_.begin(), probe_.end(), [](std::int64_t x) { return x == 0; });
  }

  static std::size_t hash(Code code) {
    return static_cast<std::size_t>((code * 0x9E3779B97F4A7C15ULL) >> 17);
  }
  void grow() {
    table_.assign(table_.size() * 2, -1);
    const std::size_t mask = table_.size() - 1;
    for (std::size_t k = 0; k < codes_.size(); ++k) {
      std::size_t h = hash(codes_[k]) & mask;
      while (table_[h] >= 0) h = (h + 1) & mask;
      table_[h] = static_cast<std::int32_t>(k);
    }
  }

  std::size_t deg_ = 0;
  std::vector<Code> codes_;
  // Only the first used_ entries are live; the rest is spare capacity.
  std::vector<std::int64_t> vals_;
  std::size_t used_ = 0;
  std::vector<std::int32_t> table_;
  std::vector<std::int64_t> probe_;
};

// Same contraction with int64 coefficients; nullopt on overflow. Values are
// held unreduced modulo z^(2r) + 1 and brought to canonical form when they
// grow large and at the end.
std::optional<Cyclotomic> contract_words(const MorseLink& diagram, int r, std::size_t& peak) {
  constexpr std::int64_t kCanonicalizeAbove = std::int64_t{1} << 40;
  const auto& ring = detail::WordRing::for_root(r);
  const auto deg = static_cast<std::size_t>(ring.wide_size());
  // Buffers are reused across calls; contraction of small diagrams is
  // dominated by allocation otherwise.
  thread_local WordState state;
  thread_local WordState next;
  thread_local std::vector<std::int64_t> scratch;
  scratch.assign(deg, 0);
  state.reset(1, deg);
  bool fresh = false;
  std::int64_t* one = state.find_or_insert(0, fresh);
  std::fill(one, one + deg, 0);
  one[0] = 1;
  peak = 1;
  int width = 0;

  // Adds `f(dst)` into the slot for `code`.
  auto deposit = [&](Code code, auto&& f) {
    std::int64_t* dst = next.find_or_insert(code, fresh);
    if (fresh) return f(dst);
    return f(scratch.data()) && ring.wide_add(dst, scratch.data());
  };

  for (const auto& ev : diagram.events()) {
    const int p = ev.pos;
    next.reset(2 * state.size(), deg);
    for (std::size_t k = 0; k < state.size(); ++k) {
      const Code code = state.code(k);
      const std::int64_t* v = state.value(k);
      auto copy = [&](std::int64_t* dst) {
        std::copy_n(v, deg, dst);
        return true;
      };
      bool ok = true;
      switch (ev.kind) {
        case EventKind::Cup:
          ok = deposit(insert_pair(code, p), copy);
          break;
        case EventKind::Cap: {
          bool loop = false;
          const auto c = join_pair(code, width, p, loop);
          ok = loop ? deposit(c, [&](std::int64_t* dst) { return ring.wide_mul_d(v, dst); })
                    : deposit(c, copy);
          break;
        }
        case EventKind::CrossPos:
        case EventKind::CrossNeg: {
          const int s = ev.kind == EventKind::CrossPos ? 1 : -1;
          ok = deposit(code, [&](std::int64_t* dst) { return ring.wide_mul_a(v, s, dst); });
          bool loop = false;
          const auto joined = join_pair(code, width, p, loop);
          if (loop) {
            ok = ok && deposit(code, [&](std::int64_t* dst) {
                   thread_local std::vector<std::int64_t> e;
                   e.resize(deg);
                   return ring.wide_mul_a(v, -s, e.data()) && ring.wide_mul_d(e.data(), dst);
                 });
          } else {
            ok = ok && deposit(insert_pair(joined, p),
                               [&](std::int64_t* dst) { return ring.wide_mul_a(v, -s, dst); });
          }
          break;
        }
      }
      if (!ok) return std::nullopt;
    }
    for (std::size_t k = 0; k < next.size(); ++k) {
      auto* v = next.mutable_value(k);
      const bool large = std::any_of(v, v + deg, [](std::int64_t x) {
        return x > kCanonicalizeAbove || x < -kCanonicalizeAbove;
      });
      if (large && !ring.canonicalize(v)) return std::nullopt;
    }
    next.drop_zeros(ring);
    std::swap(state, next);
    width += ev.width_delta();
    peak = std::max(peak, state.size());
  }
  if (state.size() == 0) return ring.ring().zero();
  auto* v = state.mutable_value(0);
  if (!ring.canonicalize(v)) return std::nullopt;
  return ring.to_cyclotomic(v);
}

constexpr int kPortsPerCrossing = 4;
constexpr int kMaxStateSumCrossings = 16;

// Crossing k owns ports 4k + {0: bottom-left, 1: bottom-right, 2: top-left,
// 3: top-right}. `partner` pairs ports joined by an arc of the diagram;
// crossingless components are counted in `free_loops`.
struct PortMatching {
  std::vector<int> partner;
  std::vector<bool> positive;
  int free_loops = 0;
};

PortMatching port_matching(const MorseLink& diagram) {
  // Nodes: ports first, then two virtual ends per cup. Each virtual end has
  // two incident edges, each port one.
  const int c = crossing_count(diagram);
  const int ports = kPortsPerCrossing * c;
  std::vector<std::array<int, 2>> slots(static_cast<std::size_t>(ports), {-1, -1});
  std::vector<std::array<int, 2>> edges;
  auto add_node = [&] {
    slots.push_back({-1, -1});
    return static_cast<int>(slots.size()) - 1;
  };
  auto add_edge = [&](int a, int b) {
    const int e = static_cast<int>(edges.size());
    edges.push_back({a, b});
    for (int x : {a, b}) {
      auto& sl = slots[static_cast<std::size_t>(x)];
      (sl[0] < 0 ? sl[0] : sl[1]) = e;
    }
  };

  PortMatching m;
  std::vector<int> level;
  int k = 0;
  for (const auto& ev : diagram.events()) {
    const auto p = static_cast<std::size_t>(ev.pos);
    switch (ev.kind) {
      case EventKind::Cup: {
        const int u = add_node();
        const int v = add_node();
        add_edge(u, v);
        level.insert(level.begin() + ev.pos, {u, v});
        break;
      }
      case EventKind::Cap:
        add_edge(level[p], level[p + 1]);
        level.erase(level.begin() + ev.pos, level.begin() + ev.pos + 2);
        break;
      case EventKind::CrossPos:
      case EventKind::CrossNeg: {
        const int base = kPortsPerCrossing * k++;
        add_edge(level[p], base);
        add_edge(level[p + 1], base + 1);
        level[p] = base + 2;
        level[p + 1] = base + 3;
        m.positive.push_back(ev.kind == EventKind::CrossPos);
        break;
      }
    }
  }

  m.partner.assign(static_cast<std::size_t>(ports), -1);
  std::vector<bool> seen(slots.size(), false);
  auto walk = [&](int start, int edge) {
    int node = start;
    while (true) {
      const auto& e = edges[static_cast<std::size_t>(edge)];
      node = e[0] == node ? e[1] : e[0];
      seen[static_cast<std::size_t>(node)] = true;
      if (node < ports || node == start) return node;
      const auto& sl = slots[static_cast<std::size_t>(node)];
      edge = sl[0] == edge ? sl[1] : sl[0];
    }
  };
  for (int x = 0; x < ports; ++x) {
    seen[static_cast<std::size_t>(x)] = true;
    m.partner[static_cast<std::size_t>(x)] = walk(x, slots[static_cast<std::size_t>(x)][0]);
  }
  for (int x = ports; x < static_cast<int>(slots.size()); ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    seen[static_cast<std::size_t>(x)] = true;
    walk(x, slots[static_cast<std::size_t>(x)][0]);
    ++m.free_loops;
  }
  return m;
}

}  // namespace

Cyclotomic jones_at_root(const MorseLink& diagram, int r, ContractionStats* stats,
                         const ContractionOptions& options) {
  require_valid_root(r);
  const auto g = girth(diagram);
  check_width(g);
  std::size_t peak = 0;
  std::optional<Cyclotomic> value;
  if (!options.force_big_integers) value = contract_words(diagram, r, peak);
  const bool big = !value.has_value();
  if (big) value = contract_big(diagram, r, peak);
  if (stats != nullptr) {
    stats->peak_dimension = peak;
    stats->girth = g;
    stats->used_big_integers = big;
  }
  return *std::move(value);
}

std::int64_t StateSumTally::count(int a_exponent, int loops) const {
  if (a_exponent < -crossings || a_exponent > crossings || loops < 0 || loops > max_loops) {
    return 0;
  }
  return counts[static_cast<std::size_t>((a_exponent + crossings) * (max_loops + 1) + loops)];
}

StateSumTally bracket_statesum_tally(const MorseLink& diagram, int crossing_cap) {
  const int c = crossing_count(diagram);
  if (c > crossing_cap || c > kMaxStateSumCrossings) {
    throw std::invalid_argument("state sum over " + std::to_string(c) +
                                " crossings exceeds the cap of " +
                                std::to_string(std::min(crossing_cap, kMaxStateSumCrossings)));
  }
  const auto m = port_matching(diagram);
  const int ports = kPortsPerCrossing * c;
  StateSumTally t;
  t.crossings = c;
  t.max_loops = ports / 2 + m.free_loops;
  const int stride = t.max_loops + 1;
  t.counts.assign(static_cast<std::size_t>((2 * c + 1) * stride), 0);

  std::uint64_t positive_mask = 0;
  for (int k = 0; k < c; ++k) {
    if (m.positive[static_cast<std::size_t>(k)]) positive_mask |= std::uint64_t{1} << k;
  }
  // Index 2x + v, with v = 1 for the vertical smoothing: `step` crosses the
  // smoothing from port x and then follows the diagram arc; `covered` marks
  // both ports of the smoothing arc.
  std::vector<int> step(static_cast<std::size_t>(2 * ports));
  std::vector<std::uint64_t> covered(static_cast<std::size_t>(2 * ports));
  for (int x = 0; x < ports; ++x) {
    for (int v = 0; v < 2; ++v) {
      const int across = (x & ~3) | (v == 1 ? (x & 3) ^ 2 : (x & 3) ^ 1);
      const auto i = static_cast<std::size_t>(2 * x + v);
      step[i] = m.partner[static_cast<std::size_t>(across)];
      covered[i] = (std::uint64_t{1} << x) | (std::uint64_t{1} << across);
    }
  }
  const std::uint64_t all = ports == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ports) - 1;
  // Bit set: vertical smoothing (bottom-left to top-left). That is the
  // A-smoothing of CrossPos and the B-smoothing of CrossNeg.
  std::uint64_t mask = 0;
  std::uint64_t visited = 0;
  int loops = m.free_loops;
  while (visited != all) {
    const int x = std::countr_zero(~visited);
    ++loops;
    int y = x;
    do {
      const auto i = static_cast<std::size_t>(2 * y);
      visited |= covered[i];
      y = step[i];
    } while (y != x);
  }
  // Gray-code order: each state differs from the previous one at a single
  // crossing. Re-smoothing one crossing of a planar diagram splits a loop
  // when both smoothing arcs lie on it and merges two loops otherwise.
  const std::uint64_t states = std::uint64_t{1} << c;
  for (std::uint64_t g = 0;;) {
    const int a_count = c - std::popcount(mask ^ positive_mask);
    const int e = 2 * a_count - c;
    ++t.counts[static_cast<std::size_t>((e + c) * stride + loops)];
    if (++g == states) break;
    const int k = std::countr_zero(g);
    const int x = kPortsPerCrossing * k;
    int y = x;
    do {
      y = step[static_cast<std::size_t>(2 * y) + ((mask >> (y >> 2)) & 1U)];
    } while ((y >> 2) != k);
    loops += y != x ? 1 : -1;
    mask ^= std::uint64_t{1} << k;
  }
  return t;
}

Cyclotomic evaluate_tally(const StateSumTally& tally, int r) {
  require_valid_root(r);
  const auto& words = detail::WordRing::for_root(r);
  const auto deg = static_cast<std::size_t>(words.degree());
  // Machine words first; the coefficients only outgrow them for diagrams far
  // larger than a brute-force sum can reach.
  std::vector<std::int64_t> acc(deg, 0);
  std::vector<std::int64_t> inner(deg);
  std::vector<std::int64_t> term(deg);
  const auto stride = static_cast<std::size_t>(tally.max_loops + 1);
  bool ok = true;
  for (int e = -tally.crossings; e <= tally.crossings && ok; ++e) {
    const auto* row = tally.counts.data() + static_cast<std::size_t>(e + tally.crossings) * stride;
    bool any = false;
    for (std::size_t l = 0; l < stride && ok; ++l) {
      if (row[l] == 0) continue;
      if (!any) std::fill(inner.begin(), inner.end(), 0);
      any = true;
      const auto* dl = words.d_power(static_cast<int>(l));
      ok = dl != nullptr && words.add_scaled(inner.data(), dl, row[l]);
    }
    if (any && ok) {
      ok = words.mul_a(inner.data(), e, term.data()) && words.add_scaled(acc.data(), term.data(), 1);
    }
  }
  if (ok) return words.to_cyclotomic(acc.data());

  const auto& ring = CyclotomicRing::for_root(r);
  std::vector<Cyclotomic> big_pow{ring.one()};
  for (int l = 1; l <= tally.max_loops; ++l) big_pow.push_back(times_d(big_pow.back(), r));
  auto total = ring.zero();
  for (int e = -tally.crossings; e <= tally.crossings; ++e) {
    for (int l = 0; l <= tally.max_loops; ++l) {
      const auto n = tally.count(e, l);
      if (n != 0) total += times_a(big_pow[static_cast<std::size_t>(l)], r, e) * BigInt(n);
    }
  }
  return total;
}

Cyclotomic bracket_statesum_oracle(const MorseLink& diagram, int r, int crossing_cap) {
  require_valid_root(r);
  return evaluate_tally(bracket_statesum_tally(diagram, crossing_cap), r);
}

Cyclotomic writhe_normalized(const MorseLink& diagram, int r) {
  const int w = writhe(diagram);
  auto v = jones_at_root(diagram, r);
  v.mul_zeta_power(-3LL * w * (r - 1));
  return (w % 2 == 0) ? v : -v;
}

double normalized_abs(const BraidWord& braid, Closure closure, int r) {
  const int n = closure == Closure::Plat ? braid.strand_count() / 2 : braid.strand_count();
  const auto value = jones_at_root(close_braid(braid, closure), r);
  return std::abs(value.to_complex()) / std::pow(loop_value_real(r), n);
}

std::uint64_t catalan(int k) {
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) {
    c = c * 2 * static_cast<std::uint64_t>(2 * i + 1) / static_cast<std::uint64_t>(i + 2);
  }
  return c;
}

}  // namespace knotgirth
