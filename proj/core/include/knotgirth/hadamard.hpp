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
#include <optional>

#include "knotgirth/circuit.hpp"

namespace knotgirth::qsim {

enum class Part : std::uint8_t { Real, Imaginary };

/// Register input for the Hadamard test.
class StatePrep {
 public:
  static StatePrep basis(int index);
  static StatePrep pure(Vector psi);
  static StatePrep maximally_mixed();
  static StatePrep mixed(MixedState rho);

  /// The register density matrix at the given dimension.
  MixedState density(int dimension) const;
  /// The register vector for pure preparations, nullopt otherwise.
  std::optional<Vector> vector(int dimension) const;

 private:
  enum class Kind : std::uint8_t { Basis, Pure, MaximallyMixed, Mixed };
  Kind kind_ = Kind::Basis;
  int index_ = 0;
  Vector psi_;
  std::optional<MixedState> rho_;
};

/// Registers {control qubit, U register}: H on the control (then S^dagger
/// for the imaginary part), controlled-U, H on the control.
Circuit hadamard_circuit(const Unitary& u, Part part);

/// Probability of reading 0 on the control after hadamard_circuit, by
/// statevector simulation for pure inputs and density-matrix simulation
/// otherwise. For a pure |psi> this is (1 + Re<psi|U|psi>)/2, or with Im for
/// the imaginary part.
double hadamard_test(const Unitary& u, const StatePrep& prep, Part part);

/// p0 = (1/D) Tr[(|0><0| x I) U (|0><0| x I) U^dagger] for U acting on a
/// clean qubit tensored with a D-dimensional register (dimension 2D).
double dqc1_prob0(const Unitary& u);
/// The same probability by evolving |0><0| x I/D through U and measuring.
double dqc1_prob0_density(const Unitary& u);

/// For U on a clean qubit and n qubits (dimension 2^(n+1)), the circuit on
/// n + 3 qubits: U^dagger on the first n + 1, CNOT from the clean qubit to
/// qubit n + 1, U, CNOT from the clean qubit to qubit n + 2. Its trace over
/// 2^(n+2) equals dqc1_prob0(U).
Circuit uprime_construct(const Unitary& u);
/// Re Tr(U') / 2^(n+2).
double uprime_normalized_trace(const Circuit& uprime);

}  // namespace knotgirth::qsim
