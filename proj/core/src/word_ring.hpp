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

#include <cstdint>
#include <utility>
#include <vector>

#include "knotgirth/cyclotomic.hpp"

namespace knotgirth::detail {

/// Reduced elements of Z[z]/(Phi_4r) held as machine words. Every operation
/// reports overflow instead of wrapping, so callers can retry with BigInt.
class WordRing {
 public:
  explicit WordRing(int r);
  /// Per-thread instance; the scratch buffers make sharing across threads
  /// unsafe.
  static const WordRing& for_root(int r);

  int degree() const { return degree_; }
  const CyclotomicRing& ring() const { return *ring_; }

  /// out = z^k * in. Returns false on overflow.
  bool mul_zeta(const std::int64_t* in, long long k, std::int64_t* out) const;
  /// out = d * in with d = -A^2 - A^-2.
  bool mul_d(const std::int64_t* in, std::int64_t* out) const;
  /// out = A^e * in.
  bool mul_a(const std::int64_t* in, long long e, std::int64_t* out) const;
  /// d^l, memoized; nullptr once the power overflows.
  const std::int64_t* d_power(int l) const;
  /// acc += scale * v.
  bool add_scaled(std::int64_t* acc, const std::int64_t* v, std::int64_t scale) const;

  // Unreduced representatives in Z[z]/(z^(2r) + 1), of length wide_size().
  // Multiplying by z^k is a signed rotation there; canonicalize() reduces
  // modulo Phi_4r. `in` and `out` must not alias.
  int wide_size() const { return half_; }
  bool wide_mul_zeta(const std::int64_t* in, long long k, std::int64_t* out) const;
  bool wide_mul_a(const std::int64_t* in, long long e, std::int64_t* out) const;
  bool wide_mul_d(const std::int64_t* in, std::int64_t* out) const;
  bool wide_add(std::int64_t* acc, const std::int64_t* v) const;
  /// Reduces in place; entries from degree() on become zero.
  bool canonicalize(std::int64_t* v) const;

  Cyclotomic to_cyclotomic(const std::int64_t* v) const;

 private:
  int r_;
  int degree_;
  int half_;  // z^half = -1
  const CyclotomicRing* ring_;
  std::vector<std::int64_t> modulus_;
  // Nonzero coefficients of Phi below the leading term.
  std::vector<std::pair<int, std::int64_t>> sparse_modulus_;
  mutable std::vector<std::int64_t> wide_;
  mutable std::vector<std::int64_t> tmp_;
  mutable std::vector<std::int64_t> tmp2_;
  mutable std::vector<std::vector<std::int64_t>> d_powers_;
  mutable int d_overflow_at_ = -1;
};

}  // namespace knotgirth::detail
