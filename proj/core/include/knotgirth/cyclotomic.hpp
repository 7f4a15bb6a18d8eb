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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotgirth {

using BigInt = boost::multiprecision::cpp_int;

class Cyclotomic;

/// The ring Z[z] / (Phi_N(z)) of integers adjoined a primitive N-th root of
/// unity, with N even. Instances are interned per N and live for the whole
/// program, so values may hold a plain pointer to their ring.
class CyclotomicRing {
 public:
  static const CyclotomicRing& of_order(int order);
  /// The ring at level N = 4r, where bracket values at omega_r live.
  static const CyclotomicRing& for_root(int r) { return of_order(4 * r); }

  int order() const { return order_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  /// Coefficients of Phi_N, lowest degree first (monic).
  std::span<const std::int64_t> modulus() const { return modulus_; }

  Cyclotomic zero() const;
  Cyclotomic one() const;
  Cyclotomic from_integer(const BigInt& value) const;
  /// z^k for any integer k, reduced.
  Cyclotomic zeta_power(long long k) const;

  CyclotomicRing(const CyclotomicRing&) = delete;
  CyclotomicRing& operator=(const CyclotomicRing&) = delete;

 private:
  explicit CyclotomicRing(int order);

  int order_;
  std::vector<std::int64_t> modulus_;
};

/// Exact element of a CyclotomicRing in canonical reduced form
/// (degree < phi(N)). Equality is coefficient-wise.
class Cyclotomic {
 public:
  Cyclotomic(const CyclotomicRing& ring, std::vector<BigInt> coefficients);

  const CyclotomicRing& ring() const { return *ring_; }
  std::span<const BigInt> coefficients() const { return coeffs_; }
  bool is_zero() const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator*=(const BigInt& scalar);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const BigInt& s) { return a *= s; }
  Cyclotomic operator-() const;

  /// Multiplies by z^k in place; cheaper than a general product.
  Cyclotomic& mul_zeta_power(long long k);
  Cyclotomic pow(unsigned exponent) const;

  /// The substitution z -> z^-1 (complex conjugation under every embedding).
  Cyclotomic conjugate() const;
  bool is_real() const { return conjugate() == *this; }

  /// Evaluates at z = exp(2 pi i / N).
  std::complex<double> to_complex() const;

  std::string to_string() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void require_same_ring(const Cyclotomic& other) const;
  void reduce(std::vector<BigInt>& wide) const;
  void shift_once();

  const CyclotomicRing* ring_;
  std::vector<BigInt> coeffs_;
};

/// value * conjugate(value): the exact squared modulus.
Cyclotomic abs_squared(const Cyclotomic& value);

std::complex<double> to_complex(const Cyclotomic& value);

}  // namespace knotgirth
