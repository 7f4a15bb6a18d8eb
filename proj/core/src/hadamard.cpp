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

#include "knotgirth/hadamard.hpp"

#include <stdexcept>
#include <string>

namespace knotgirth::qsim {

StatePrep StatePrep::basis(int index) {
  if (index < 0) throw std::invalid_argument("basis index must be nonnegative");
  StatePrep p;
  p.kind_ = Kind::Basis;
  p.index_ = index;
  return p;
}

StatePrep StatePrep::pure(Vector psi) {
  StatePrep p;
  p.kind_ = Kind::Pure;
  p.psi_ = std::move(psi);
  return p;
}

StatePrep StatePrep::maximally_mixed() {
  StatePrep p;
  p.kind_ = Kind::MaximallyMixed;
  return p;
}

StatePrep StatePrep::mixed(MixedState rho) {
  StatePrep p;
  p.kind_ = Kind::Mixed;
  p.rho_ = std::move(rho);
  return p;
}

std::optional<Vector> StatePrep::vector(int dimension) const {
  switch (kind_) {
    case Kind::Basis: {
      if (index_ >= dimension) throw std::invalid_argument("basis index out of range");
      Vector v = Vector::Zero(dimension);
      v(index_) = 1.0;
      return v;
    }
    case Kind::Pure:
      if (psi_.size() != dimension) throw std::invalid_argument("state dimension mismatch");
      return psi_;
    default:
      return std::nullopt;
  }
}

MixedState StatePrep::density(int dimension) const {
  switch (kind_) {
    case Kind::MaximallyMixed:
      return MixedState::maximally_mixed(dimension);
    case Kind::Mixed:
      if (rho_->dimension() != dimension) throw std::invalid_argument("state dimension mismatch");
      return *rho_;
    default:
      return MixedState::pure(*vector(dimension));
  }
}

Circuit hadamard_circuit(const Unitary& u, Part part) {
  Circuit c({2, u.dimension()});
  c.add(hadamard_gate(), {0});
  if (part == Part::Imaginary) c.add(phase_dagger(), {0});
  c.add_controlled(u, 0, {1});
  c.add(hadamard_gate(), {0});
  return c;
}

double hadamard_test(const Unitary& u, const StatePrep& prep, Part part) {
  const auto circuit = hadamard_circuit(u, part);
  const int dim = u.dimension();
  if (auto psi = prep.vector(dim)) {
    Vector state = Vector::Zero(2 * dim);
    state.head(dim) = *psi;
    return circuit.probability(circuit.apply(state), 0, 0);
  }
  const auto control = MixedState::pure(Vector::Unit(2, 0));
  const auto out = circuit.apply(control.tensor(prep.density(dim)));
  return circuit.probability(out, 0, 0);
}

double dqc1_prob0(const Unitary& u) {
  const int dim = u.dimension();
  if (dim % 2 != 0) throw std::invalid_argument("U must act on a clean qubit and a register");
  const int d = dim / 2;
  Matrix p = Matrix::Zero(dim, dim);
  p.topLeftCorner(d, d).setIdentity();
  const Matrix& m = u.matrix();
  return (p * m * p * m.adjoint()).trace().real() / d;
}

double dqc1_prob0_density(const Unitary& u) {
  const int dim = u.dimension();
  if (dim % 2 != 0) throw std::invalid_argument("U must act on a clean qubit and a register");
  Circuit c({2, dim / 2});
  c.add(u, {0, 1});
  const auto rho = MixedState::pure(Vector::Unit(2, 0)).tensor(MixedState::maximally_mixed(dim / 2));
  return c.probability(c.apply(rho), 0, 0);
}

Circuit uprime_construct(const Unitary& u) {
  int qubits = 0;
  while ((1 << qubits) < u.dimension()) ++qubits;
  if ((1 << qubits) != u.dimension() || qubits < 1) {
    throw std::invalid_argument("U' needs U on qubits, got dimension " +
                                std::to_string(u.dimension()));
  }
  const int n = qubits - 1;
  Circuit c(std::vector<int>(static_cast<std::size_t>(n + 3), 2));
  std::vector<int> work(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) work[static_cast<std::size_t>(i)] = i;
  c.add(u.adjoint(), work);
  c.add_controlled(pauli_x(), 0, {n + 1});
  c.add(u, work);
  c.add_controlled(pauli_x(), 0, {n + 2});
  return c;
}

double uprime_normalized_trace(const Circuit& uprime) {
  return uprime.to_matrix().trace().real() / (uprime.dimension() / 2);
}

}  // namespace knotgirth::qsim
