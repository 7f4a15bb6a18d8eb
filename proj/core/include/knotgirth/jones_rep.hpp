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

#include <vector>

#include "knotgirth/circuit.hpp"
#include "knotgirth/jones.hpp"
#include "knotgirth/link.hpp"

namespace knotgirth::qsim {

/// Walks of length n on the labels 1..r-1 (steps of +-1) starting at 1. The
/// trace basis keeps every walk; the plat basis keeps those ending at 1.
/// Walks are listed in lexicographic order.
class PathBasis {
 public:
  PathBasis(int strands, int r, Closure closure);

  int strands() const { return strands_; }
  int r() const { return r_; }
  int size() const { return static_cast<int>(paths_.size()); }
  /// Labels p[0] = 1, ..., p[n].
  const std::vector<int>& path(int index) const {
    return paths_[static_cast<std::size_t>(index)];
  }
  /// -1 when the walk is not in the basis.
  int index_of(const std::vector<int>& path) const;

 private:
  int strands_;
  int r_;
  std::vector<std::vector<int>> paths_;
};

/// Quantum integer [m] = sin(m pi / r) / sin(pi / r).
double quantum_integer(int m, int r);

/// Image of the Temperley-Lieb generator E_i on the path basis.
Matrix tl_generator(const PathBasis& basis, int generator);

/// Image of sigma_i^sign: A^sign I + A^-sign E_i with A = exp(i pi (r-1) / 2r).
/// Throws std::invalid_argument for a generator outside [1, n) or an
/// invalid r.
Unitary jones_rep_generator(int strands, int generator, int r, Closure closure, int sign = 1);
Unitary jones_rep_generator(const PathBasis& basis, int generator, int sign = 1);

/// rho(w_m) ... rho(w_1) for the word w_1 ... w_m.
Unitary compile_braid(const BraidWord& braid, const PathBasis& basis);

/// Markov weights [p_n] / d^n of the trace basis; they sum to 1.
std::vector<double> markov_weights(const PathBasis& basis);

/// The zigzag walk 1,2,1,2,...,1 as a unit vector of the plat basis.
Vector plat_boundary_state(const PathBasis& basis);

/// J / d^n as a complex number: <zig|U|zig> for plat closures and
/// sum_p w_p <p|U|p> for trace closures.
Complex normalized_amplitude(const BraidWord& braid, int r, Closure closure);

}  // namespace knotgirth::qsim
