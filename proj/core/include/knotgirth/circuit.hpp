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
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace knotgirth::qsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kUnitaryTolerance = 1e-10;

/// Largest entry of |U U^dagger - I|.
double unitarity_defect(const Matrix& m);

/// A square matrix checked to be unitary on construction.
class Unitary {
 public:
  /// Throws std::invalid_argument if m is not square or
  /// unitarity_defect(m) > tolerance.
  explicit Unitary(Matrix m, double tolerance = kUnitaryTolerance);
  static Unitary identity(int dimension);

  int dimension() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  Unitary adjoint() const;
  /// Matrix product: (a * b) applies b first.
  friend Unitary operator*(const Unitary& a, const Unitary& b);

 private:
  struct Trusted {};
  Unitary(Matrix m, Trusted) : m_(std::move(m)) {}
  Matrix m_;
};

Unitary hadamard_gate();
Unitary pauli_x();
/// diag(1, -i)
Unitary phase_dagger();

/// QR of a complex Gaussian matrix with the phases of R divided out.
Unitary random_unitary(int dimension, std::mt19937_64& rng);

/// Density matrix: Hermitian, unit trace, positive semidefinite.
class MixedState {
 public:
  /// Throws std::invalid_argument if any property fails beyond tolerance.
  explicit MixedState(Matrix rho, double tolerance = kUnitaryTolerance);
  static MixedState pure(const Vector& psi);
  static MixedState maximally_mixed(int dimension);
  /// diag(weights); weights must be nonnegative and sum to 1.
  static MixedState diagonal(const std::vector<double>& weights);

  int dimension() const { return static_cast<int>(rho_.rows()); }
  const Matrix& density() const { return rho_; }
  MixedState tensor(const MixedState& other) const;

 private:
  struct Trusted {};
  MixedState(Matrix rho, Trusted) : rho_(std::move(rho)) {}
  friend class Circuit;
  Matrix rho_;
};

struct Gate {
  Unitary op;
  /// Registers the operator acts on, most significant first.
  std::vector<int> targets;
  /// Dimension-2 register that must read 1 for the gate to act.
  std::optional<int> control;
};

/// A gate list over registers of given dimensions. Register 0 is the most
/// significant digit of the basis index.
class Circuit {
 public:
  explicit Circuit(std::vector<int> register_dims);

  /// Throws std::invalid_argument on dimension mismatch, repeated or
  /// out-of-range registers, or a control that is not a qubit.
  Circuit& add(Unitary op, std::vector<int> targets);
  Circuit& add_controlled(Unitary op, int control, std::vector<int> targets);

  const std::vector<int>& registers() const { return dims_; }
  const std::vector<Gate>& gates() const { return gates_; }
  int dimension() const;

  Vector apply(const Vector& state) const;
  MixedState apply(const MixedState& state) const;
  /// The full operator, built column by column.
  Matrix to_matrix() const;

  /// Probability that register `reg` reads `value`.
  double probability(const Vector& state, int reg, int value) const;
  double probability(const MixedState& state, int reg, int value) const;

  /// {"registers": [...], "gates": [{"targets": [...], "control": c|null,
  ///  "matrix": {"re": [[...]], "im": [[...]]}}]}
  std::string to_json() const;
  static Circuit from_json(std::string_view text);

 private:
  void validate(const Gate& gate) const;
  void apply_gate(const Gate& gate, Matrix& columns) const;

  std::vector<int> dims_;
  std::vector<Gate> gates_;
};

}  // namespace knotgirth::qsim
