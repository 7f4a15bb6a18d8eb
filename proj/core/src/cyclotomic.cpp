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

#include "knotgirth/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace knotgirth {

namespace {

using Poly = std::vector<std::int64_t>;

// Exact division of integer polynomials with a monic divisor.
Poly divide_exact(Poly num, const Poly& den) {
  const auto dn = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("cyclotomic division underflow");
  Poly quot(num.size() - dn, 0);
  for (auto k = num.size(); k-- > dn;) {
    const auto c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return quot;
}

const Poly& cyclotomic_polynomial(int n) {
  static std::map<int, Poly> cache;
  static std::recursive_mutex mu;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  return cache.emplace(n, std::move(p)).first->second;
}

}  // namespace

const CyclotomicRing& CyclotomicRing::of_order(int order) {
  if (order < 2 || order % 2 != 0) {
    throw std::invalid_argument("cyclotomic order must be even and >= 2");
  }
  static std::map<int, std::unique_ptr<CyclotomicRing>> rings;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto& slot = rings[order];
  if (!slot) slot.reset(new CyclotomicRing(order));
  return *slot;
}

CyclotomicRing::CyclotomicRing(int order)
    : order_(order), modulus_(cyclotomic_polynomial(order)) {}

Cyclotomic CyclotomicRing::zero() const {
  return {*this, std::vector<BigInt>(static_cast<std::size_t>(degree()))};
}

Cyclotomic CyclotomicRing::one() const { return from_integer(1); }

Cyclotomic CyclotomicRing::from_integer(const BigInt& value) const {
  std::vector<BigInt> c(static_cast<std::size_t>(degree()));
  c[0] = value;
  return {*this, std::move(c)};
}

Cyclotomic CyclotomicRing::zeta_power(long long k) const {
  auto v = one();
  v.mul_zeta_power(k);
  return v;
}

Cyclotomic::Cyclotomic(const CyclotomicRing& ring, std::vector<BigInt> coefficients)
    : ring_(&ring), coeffs_(std::move(coefficients)) {
  const auto deg = static_cast<std::size_t>(ring.degree());
  if (coeffs_.size() > deg) {
    reduce(coeffs_);
  } else {
    coeffs_.resize(deg);
  }
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

void Cyclotomic::require_same_ring(const Cyclotomic& other) const {
  if (ring_ != other.ring_) {
    throw std::invalid_argument("cyclotomic values from different rings");
  }
}

void Cyclotomic::reduce(std::vector<BigInt>& wide) const {
  const auto modulus = ring_->modulus();
  const auto deg = modulus.size() - 1;
  for (auto k = wide.size(); k-- > deg;) {
    if (wide[k] == 0) continue;
    const BigInt top = wide[k];
    for (std::size_t i = 0; i < deg; ++i) {
      if (modulus[i] != 0) wide[k - deg + i] -= top * modulus[i];
    }
    wide[k] = 0;
  }
  wide.resize(deg);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  require_same_ring(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  require_same_ring(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  require_same_ring(other);
  std::vector<BigInt> wide(coeffs_.size() * 2);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (other.coeffs_[j] != 0) wide[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  reduce(wide);
  coeffs_ = std::move(wide);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  auto out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

void Cyclotomic::shift_once() {
  const auto modulus = ring_->modulus();
  const auto deg = coeffs_.size();
  BigInt top = std::move(coeffs_[deg - 1]);
  for (auto i = deg - 1; i > 0; --i) coeffs_[i] = std::move(coeffs_[i - 1]);
  coeffs_[0] = 0;
  if (top == 0) return;
  for (std::size_t i = 0; i < deg; ++i) {
    if (modulus[i] != 0) coeffs_[i] -= top * modulus[i];
  }
}

Cyclotomic& Cyclotomic::mul_zeta_power(long long k) {
  const long long n = ring_->order();
  k %= n;
  if (k < 0) k += n;
  // z^(N/2) = -1
  if (k >= n / 2) {
    for (auto& c : coeffs_) c = -c;
    k -= n / 2;
  }
  for (long long i = 0; i < k; ++i) shift_once();
  return *this;
}

Cyclotomic Cyclotomic::pow(unsigned exponent) const {
  auto result = ring_->one();
  auto base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Cyclotomic Cyclotomic::conjugate() const {
  auto out = ring_->zero();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    auto term = ring_->zeta_power(-static_cast<long long>(i));
    term *= coeffs_[i];
    out += term;
  }
  return out;
}

std::complex<double> Cyclotomic::to_complex() const {
  const long double step = 2.0L * std::numbers::pi_v<long double> / ring_->order();
  long double re = 0;
  long double im = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto c = coeffs_[i].convert_to<long double>();
    re += c * std::cos(step * static_cast<long double>(i));
    im += c * std::sin(step * static_cast<long double>(i));
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'z';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

Cyclotomic abs_squared(const Cyclotomic& value) { return value * value.conjugate(); }

std::complex<double> to_complex(const Cyclotomic& value) { return value.to_complex(); }

}  // namespace knotgirth
