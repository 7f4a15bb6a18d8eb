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

#include "word_ring.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>

namespace knotgirth::detail {

WordRing::WordRing(int r)
    : r_(r),
      ring_(&CyclotomicRing::for_root(r)),
      modulus_(ring_->modulus().begin(), ring_->modulus().end()) {
  degree_ = ring_->degree();
  for (int i = 0; i < degree_; ++i) {
    const auto m = modulus_[static_cast<std::size_t>(i)];
    if (m != 0) sparse_modulus_.emplace_back(i, m);
  }
  half_ = 2 * r;
  wide_.assign(static_cast<std::size_t>(half_), 0);
  tmp_.assign(static_cast<std::size_t>(degree_), 0);
  tmp2_.assign(static_cast<std::size_t>(degree_), 0);
}

const WordRing& WordRing::for_root(int r) {
  thread_local std::map<int, std::unique_ptr<WordRing>> cache;
  auto& slot = cache[r];
  if (!slot) slot = std::make_unique<WordRing>(r);
  return *slot;
}

bool WordRing::mul_zeta(const std::int64_t* in, long long k, std::int64_t* out) const {
  const long long n = 2LL * half_;
  long long shift = k % n;
  if (shift < 0) shift += n;
  // z^half = -1, so a shift by half or more is a negated shorter shift.
  const std::int64_t sign = shift >= half_ ? -1 : 1;
  const int s = static_cast<int>(sign < 0 ? shift - half_ : shift);
  std::int64_t* w = wide_.data();
  bool too_big = false;
  const int straight = std::min(degree_, half_ - s);
  for (int i = 0; i < straight; ++i) {
    too_big |= in[i] == std::numeric_limits<std::int64_t>::min();
    w[i + s] = sign * in[i];
  }
  for (int i = straight; i < degree_; ++i) {
    too_big |= in[i] == std::numeric_limits<std::int64_t>::min();
    w[i + s - half_] = -sign * in[i];
  }
  if (too_big) return false;
  if (s + degree_ <= half_) {
    std::fill(w, w + s, 0);
    std::fill(w + s + degree_, w + half_, 0);
  } else {
    std::fill(w + (s + degree_ - half_), w + s, 0);
  }
  for (int top = half_ - 1; top >= degree_; --top) {
    const auto c = w[top];
    if (c == 0) continue;
    std::int64_t* base = w + (top - degree_);
    for (const auto& [i, m] : sparse_modulus_) {
      std::int64_t prod = 0;
      if (__builtin_mul_overflow(c, m, &prod) || __builtin_sub_overflow(base[i], prod, &base[i])) {
        return false;
      }
    }
  }
  std::copy_n(w, degree_, out);
  return true;
}

bool WordRing::mul_a(const std::int64_t* in, long long e, std::int64_t* out) const {
  return mul_zeta(in, e * (r_ - 1), out);
}

bool WordRing::mul_d(const std::int64_t* in, std::int64_t* out) const {
  if (!mul_zeta(in, 2LL * (r_ - 1), tmp_.data())) return false;
  if (!mul_zeta(in, -2LL * (r_ - 1), tmp2_.data())) return false;
  for (int i = 0; i < degree_; ++i) {
    std::int64_t s = 0;
    if (__builtin_add_overflow(tmp_[static_cast<std::size_t>(i)],
                               tmp2_[static_cast<std::size_t>(i)], &s) ||
        __builtin_sub_overflow(std::int64_t{0}, s, &out[i])) {
      return false;
    }
  }
  return true;
}

const std::int64_t* WordRing::d_power(int l) const {
  if (d_powers_.empty()) {
    d_powers_.emplace_back(static_cast<std::size_t>(degree_), 0);
    d_powers_[0][0] = 1;
  }
  while (static_cast<int>(d_powers_.size()) <= l) {
    if (d_overflow_at_ >= 0) return nullptr;
    std::vector<std::int64_t> next(static_cast<std::size_t>(degree_));
    if (!mul_d(d_powers_.back().data(), next.data())) {
      d_overflow_at_ = static_cast<int>(d_powers_.size());
      return nullptr;
    }
    d_powers_.push_back(std::move(next));
  }
  return d_powers_[static_cast<std::size_t>(l)].data();
}

bool WordRing::add_scaled(std::int64_t* acc, const std::int64_t* v, std::int64_t scale) const {
  for (int i = 0; i < degree_; ++i) {
    std::int64_t prod = 0;
    if (__builtin_mul_overflow(v[i], scale, &prod) ||
        __builtin_add_overflow(acc[i], prod, &acc[i])) {
      return false;
    }
  }
  return true;
}

bool WordRing::wide_mul_zeta(const std::int64_t* in, long long k, std::int64_t* out) const {
  const long long n = 2LL * half_;
  long long shift = k % n;
  if (shift < 0) shift += n;
  const std::int64_t sign = shift >= half_ ? -1 : 1;
  const int s = static_cast<int>(sign < 0 ? shift - half_ : shift);
  bool too_big = false;
  for (int i = 0; i < half_ - s; ++i) {
    too_big |= in[i] == std::numeric_limits<std::int64_t>::min();
    out[i + s] = sign * in[i];
  }
  for (int i = half_ - s; i < half_; ++i) {
    too_big |= in[i] == std::numeric_limits<std::int64_t>::min();
    out[i + s - half_] = -sign * in[i];
  }
  return !too_big;
}

bool WordRing::wide_mul_a(const std::int64_t* in, long long e, std::int64_t* out) const {
  return wide_mul_zeta(in, e * (r_ - 1), out);
}

bool WordRing::wide_mul_d(const std::int64_t* in, std::int64_t* out) const {
  if (static_cast<int>(tmp_.size()) < half_) {
    tmp_.resize(static_cast<std::size_t>(half_));
    tmp2_.resize(static_cast<std::size_t>(half_));
  }
  if (!wide_mul_zeta(in, 2LL * (r_ - 1), tmp_.data()) ||
      !wide_mul_zeta(in, -2LL * (r_ - 1), tmp2_.data())) {
    return false;
  }
  for (int i = 0; i < half_; ++i) {
    std::int64_t s = 0;
    if (__builtin_add_overflow(tmp_[static_cast<std::size_t>(i)],
                               tmp2_[static_cast<std::size_t>(i)], &s) ||
        __builtin_sub_overflow(std::int64_t{0}, s, &out[i])) {
      return false;
    }
  }
  return true;
}

bool WordRing::wide_add(std::int64_t* acc, const std::int64_t* v) const {
  bool overflow = false;
  for (int i = 0; i < half_; ++i) overflow |= __builtin_add_overflow(acc[i], v[i], &acc[i]);
  return !overflow;
}

bool WordRing::canonicalize(std::int64_t* w) const {
  for (int top = half_ - 1; top >= degree_; --top) {
    const auto c = w[top];
    if (c == 0) continue;
    std::int64_t* base = w + (top - degree_);
    for (const auto& [i, m] : sparse_modulus_) {
      std::int64_t prod = 0;
      if (__builtin_mul_overflow(c, m, &prod) || __builtin_sub_overflow(base[i], prod, &base[i])) {
        return false;
      }
    }
    w[top] = 0;
  }
  return true;
}

Cyclotomic WordRing::to_cyclotomic(const std::int64_t* v) const {
  std::vector<BigInt> c(v, v + degree_);
  return {*ring_, std::move(c)};
}

}  // namespace knotgirth::detail
