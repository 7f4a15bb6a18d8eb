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

#include "knotgirth/jones_rep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace knotgirth::qsim {

namespace {

void extend(std::vector<int>& walk, int length, int top, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(walk.size()) == length + 1) {
    out.push_back(walk);
    return;
  }
  const int last = walk.back();
  for (int next : {last - 1, last + 1}) {
    if (next < 1 || next > top) continue;
    walk.push_back(next);
    extend(walk, length, top, out);
    walk.pop_back();
  }
}

Complex bracket_variable_complex(int r) {
  return std::polar(1.0, std::numbers::pi * (r - 1) / (2.0 * r));
}

}  // namespace

PathBasis::PathBasis(int strands, int r, Closure closure) : strands_(strands), r_(r) {
  require_valid_root(r);
  if (strands < 1) throw std::invalid_argument("need at least one strand");
  if (closure == Closure::Plat && strands % 2 != 0) {
    throw std::invalid_argument("plat basis needs an even strand count");
  }
  std::vector<int> walk{1};
  std::vector<std::vector<int>> all;
  extend(walk, strands, r - 1, all);
  for (auto& p : all) {
    if (closure == Closure::Trace || p.back() == 1) paths_.push_back(std::move(p));
  }
}

int PathBasis::index_of(const std::vector<int>& path) const {
  const auto it = std::lower_bound(paths_.begin(), paths_.end(), path);
  if (it == paths_.end() || *it != path) return -1;
  return static_cast<int>(it - paths_.begin());
}

double quantum_integer(int m, int r) {
  return std::sin(m * std::numbers::pi / r) / std::sin(std::numbers::pi / r);
}

Matrix tl_generator(const PathBasis& basis, int generator) {
  const int n = basis.strands();
  if (generator < 1 || generator >= n) {
    throw std::invalid_argument("generator " + std::to_string(generator) +
                                " outside [1, " + std::to_string(n) + ")");
  }
  const auto i = static_cast<std::size_t>(generator);
  const int r = basis.r();
  Matrix e = Matrix::Zero(basis.size(), basis.size());
  for (int a = 0; a < basis.size(); ++a) {
    const auto& p = basis.path(a);
    if (p[i - 1] != p[i + 1]) continue;
    const int label = p[i - 1];
    auto q = p;
    for (int mid : {label - 1, label + 1}) {
      if (mid < 1 || mid > r - 1) continue;
      q[i] = mid;
      const int b = basis.index_of(q);
      if (b < 0) continue;
      e(a, b) = std::sqrt(quantum_integer(p[i], r) * quantum_integer(mid, r)) /
                quantum_integer(label, r);
    }
  }
  return e;
}

Unitary jones_rep_generator(const PathBasis& basis, int generator, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  const Complex a = bracket_variable_complex(basis.r());
  const Complex s = sign > 0 ? a : std::conj(a);
  const auto dim = basis.size();
  Matrix m = s * Matrix::Identity(dim, dim) + std::conj(s) * tl_generator(basis, generator);
  return Unitary(std::move(m));
}

Unitary jones_rep_generator(int strands, int generator, int r, Closure closure, int sign) {
  return jones_rep_generator(PathBasis(strands, r, closure), generator, sign);
}

Unitary compile_braid(const BraidWord& braid, const PathBasis& basis) {
  if (braid.strand_count() != basis.strands()) {
    throw std::invalid_argument("braid and basis strand counts differ");
  }
  std::vector<Unitary> cache;
  for (int s : {1, -1}) {
    for (int g = 1; g < basis.strands(); ++g) cache.push_back(jones_rep_generator(basis, g, s));
  }
  const auto width = static_cast<std::size_t>(basis.strands() - 1);
  Matrix u = Matrix::Identity(basis.size(), basis.size());
  for (const auto& letter : braid.letters()) {
    const auto k = (letter.sign > 0 ? 0 : width) + static_cast<std::size_t>(letter.generator - 1);
    u = cache[k].matrix() * u;
  }
  // Long words drift; re-check against a looser bound than single gates.
  return Unitary(std::move(u), 1e-8);
}

std::vector<double> markov_weights(const PathBasis& basis) {
  const double dn = std::pow(loop_value_real(basis.r()), basis.strands());
  std::vector<double> w;
  w.reserve(static_cast<std::size_t>(basis.size()));
  for (int i = 0; i < basis.size(); ++i) {
    w.push_back(quantum_integer(basis.path(i).back(), basis.r()) / dn);
  }
  return w;
}

Vector plat_boundary_state(const PathBasis& basis) {
  std::vector<int> zig;
  for (int i = 0; i <= basis.strands(); ++i) zig.push_back(i % 2 == 0 ? 1 : 2);
  const int k = basis.index_of(zig);
  if (k < 0) throw std::invalid_argument("zigzag walk is not in this basis");
  Vector v = Vector::Zero(basis.size());
  v(k) = 1.0;
  return v;
}

Complex normalized_amplitude(const BraidWord& braid, int r, Closure closure) {
  const PathBasis basis(braid.strand_count(), r, closure);
  const auto u = compile_braid(braid, basis);
  if (closure == Closure::Plat) {
    const auto zig = plat_boundary_state(basis);
    return zig.dot(u.matrix() * zig);
  }
  const auto w = markov_weights(basis);
  Complex total = 0;
  for (int i = 0; i < basis.size(); ++i) total += w[static_cast<std::size_t>(i)] * u.matrix()(i, i);
  return total;
}

}  // namespace knotgirth::qsim
