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


#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "knotgirth/circuit.hpp"
#include "knotgirth/hadamard.hpp"

namespace knotgirth::qsim {
namespace {

Vector random_state(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(g(rng), g(rng));
  return v / v.norm();
}

Matrix direct_kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return k;
}

TEST(Circuit, UnitaryValidation) {
  Matrix m = Matrix::Identity(2, 2);
  m(0, 1) = 0.5;
  EXPECT_THROW(Unitary{m}, std::invalid_argument);
  EXPECT_THROW(Unitary{Matrix::Identity(2, 3)}, std::invalid_argument);
  EXPECT_NO_THROW(Unitary{Matrix::Identity(3, 3)});
  std::mt19937_64 rng(1);
  for (int d : {1, 2, 5, 16}) {
    const auto u = random_unitary(d, rng);
    EXPECT_LE(unitarity_defect(u.matrix()), 1e-12);
    EXPECT_LE(((u * u.adjoint()).matrix() - Matrix::Identity(d, d)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Circuit, MixedStateValidation) {
  Matrix bad = Matrix::Identity(2, 2);
  EXPECT_THROW(MixedState{bad}, std::invalid_argument);
  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_THROW(MixedState{neg}, std::invalid_argument);
  EXPECT_THROW(MixedState::diagonal({0.5, 0.6}), std::invalid_argument);
  const auto mm = MixedState::maximally_mixed(4);
  EXPECT_NEAR(mm.density().trace().real(), 1.0, 1e-15);
  const auto t = MixedState::maximally_mixed(2).tensor(MixedState::diagonal({0.25, 0.75}));
  EXPECT_EQ(t.dimension(), 4);
  EXPECT_NEAR(t.density()(1, 1).real(), 0.375, 1e-15);
}

TEST(Circuit, GateValidation) {
  Circuit c({2, 3});
  EXPECT_THROW(c.add(Unitary::identity(2), {1}), std::invalid_argument);
  EXPECT_THROW(c.add(Unitary::identity(2), {2}), std::invalid_argument);
  EXPECT_THROW(c.add(Unitary::identity(6), {0, 0}), std::invalid_argument);
  EXPECT_THROW(c.add_controlled(Unitary::identity(2), 1, {0}), std::invalid_argument);
  EXPECT_THROW(c.add_controlled(Unitary::identity(3), 1, {1}), std::invalid_argument);
  EXPECT_NO_THROW(c.add(Unitary::identity(6), {0, 1}));
  EXPECT_NO_THROW(c.add_controlled(Unitary::identity(3), 0, {1}));
}

TEST(Circuit, MatrixMatchesKroneckerProducts) {
  std::mt19937_64 rng(2);
  const auto a = random_unitary(2, rng);
  const auto b = random_unitary(3, rng);
  const auto ab = random_unitary(6, rng);
  Circuit c({2, 3});
  c.add(b, {1}).add(a, {0}).add(ab, {0, 1});
  const Matrix expected = ab.matrix() * direct_kron(a.matrix(), Matrix::Identity(3, 3)) *
                          direct_kron(Matrix::Identity(2, 2), b.matrix());
  EXPECT_LE((c.to_matrix() - expected).cwiseAbs().maxCoeff(), 1e-12);

  Circuit order({3, 2});
  order.add(b, {0});
  EXPECT_LE((order.to_matrix() - direct_kron(b.matrix(), Matrix::Identity(2, 2))).cwiseAbs().maxCoeff(),
            1e-12);
}

TEST(Circuit, ControlledGate) {
  std::mt19937_64 rng(3);
  const auto u = random_unitary(3, rng);
  Circuit c({2, 3});
  c.add_controlled(u, 0, {1});
  Matrix expected = Matrix::Identity(6, 6);
  expected.block(3, 3, 3, 3) = u.matrix();
  EXPECT_LE((c.to_matrix() - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Circuit, StateAndDensityEvolutionAgree) {
  std::mt19937_64 rng(4);
  Circuit c({2, 2, 3});
  c.add(hadamard_gate(), {0}).add_controlled(random_unitary(6, rng), 0, {2, 1});
  const auto psi = random_state(12, rng);
  const auto out = c.apply(psi);
  const auto rho = c.apply(MixedState::pure(psi));
  EXPECT_LE((rho.density() - out * out.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
  for (int v = 0; v < 3; ++v) {
    EXPECT_NEAR(c.probability(out, 2, v), c.probability(rho, 2, v), 1e-12);
  }
  double total = 0;
  for (int v = 0; v < 2; ++v) total += c.probability(out, 0, v);
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Circuit, JsonRoundTrip) {
  std::mt19937_64 rng(5);
  Circuit c({2, 3});
  c.add(random_unitary(3, rng), {1}).add_controlled(random_unitary(3, rng), 0, {1});
  const auto back = Circuit::from_json(c.to_json());
  EXPECT_EQ(back.registers(), c.registers());
  ASSERT_EQ(back.gates().size(), 2U);
  EXPECT_EQ(back.gates()[1].control, 0);
  EXPECT_LE((back.to_matrix() - c.to_matrix()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_THROW(Circuit::from_json("{\"registers\": []}"), std::exception);
}

TEST(Hadamard, IdentityAndReflection) {
  std::mt19937_64 rng(6);
  const auto psi = random_state(4, rng);
  EXPECT_NEAR(hadamard_test(Unitary::identity(4), StatePrep::pure(psi), Part::Real), 1.0, 1e-12);
  EXPECT_NEAR(hadamard_test(Unitary::identity(4), StatePrep::pure(psi), Part::Imaginary), 0.5,
              1e-12);
  Matrix z = Matrix::Identity(2, 2);
  z(1, 1) = -1;
  EXPECT_NEAR(hadamard_test(Unitary{z}, StatePrep::basis(1), Part::Real), 0.0, 1e-12);
  EXPECT_THROW(hadamard_test(Unitary{z}, StatePrep::basis(2), Part::Real), std::invalid_argument);
}

TEST(Hadamard, PureStateFormula) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const int dim = 1 + static_cast<int>(rng() % 9);
    const auto u = random_unitary(dim, rng);
    const auto psi = random_state(dim, rng);
    const Complex e = psi.dot(u.matrix() * psi);  // <psi|U|psi>
    EXPECT_NEAR(hadamard_test(u, StatePrep::pure(psi), Part::Real), (1 + e.real()) / 2, 1e-10);
    EXPECT_NEAR(hadamard_test(u, StatePrep::pure(psi), Part::Imaginary), (1 + e.imag()) / 2, 1e-10);
  }
}

TEST(Hadamard, MixedStateFormula) {
  std::mt19937_64 rng(8);
  for (int dim : {2, 5, 8}) {
    const auto u = random_unitary(dim, rng);
    const Complex tr = u.matrix().trace();
    EXPECT_NEAR(hadamard_test(u, StatePrep::maximally_mixed(), Part::Real),
                0.5 + tr.real() / (2 * dim), 1e-10);
    EXPECT_NEAR(hadamard_test(u, StatePrep::maximally_mixed(), Part::Imaginary),
                0.5 + tr.imag() / (2 * dim), 1e-10);
  }
  // A diagonal mixture is the weighted sum of basis-state tests.
  const auto u = random_unitary(3, rng);
  const std::vector<double> w{0.2, 0.3, 0.5};
  double expected = 0;
  for (int i = 0; i < 3; ++i) expected += w[i] * hadamard_test(u, StatePrep::basis(i), Part::Real);
  EXPECT_NEAR(hadamard_test(u, StatePrep::mixed(MixedState::diagonal(w)), Part::Real), expected,
              1e-12);
}

double eq1_direct(const Matrix& u) {
  const auto dim = u.rows();
  Matrix p = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim / 2; ++i) p(i, i) = 1;
  return (p * u * p * u.adjoint()).trace().real() / static_cast<double>(dim / 2);
}

TEST(Dqc1, TrivialCases) {
  EXPECT_NEAR(dqc1_prob0(Unitary::identity(8)), 1.0, 1e-12);
  const Matrix x = direct_kron(pauli_x().matrix(), Matrix::Identity(4, 4));
  EXPECT_NEAR(dqc1_prob0(Unitary{x}), 0.0, 1e-12);
  EXPECT_NEAR(dqc1_prob0_density(Unitary{x}), 0.0, 1e-12);
  EXPECT_THROW(dqc1_prob0(Unitary::identity(3)), std::invalid_argument);
}

TEST(Dqc1, FormulaMatchesDensityEvolution) {
  std::mt19937_64 rng(9);
  for (int dim : {2, 6, 16, 32}) {
    const auto u = random_unitary(2 * dim, rng);
    EXPECT_NEAR(dqc1_prob0(u), eq1_direct(u.matrix()), 1e-10);
    EXPECT_NEAR(dqc1_prob0(u), dqc1_prob0_density(u), 1e-10);
  }
}

TEST(Uprime, TrivialCases) {
  EXPECT_NEAR(uprime_normalized_trace(uprime_construct(Unitary::identity(4))), 1.0, 1e-12);
  const Matrix x = direct_kron(pauli_x().matrix(), Matrix::Identity(4, 4));
  EXPECT_NEAR(uprime_normalized_trace(uprime_construct(Unitary{x})), 0.0, 1e-12);
  EXPECT_THROW(uprime_construct(Unitary::identity(6)), std::invalid_argument);
}

TEST(Uprime, TraceEqualsCleanQubitProbability) {
  std::mt19937_64 rng(10);
  for (int n = 0; n <= 4; ++n) {
    const auto u = random_unitary(2 << n, rng);
    const auto c = uprime_construct(u);
    EXPECT_EQ(static_cast<int>(c.registers().size()), n + 3);
    const Complex tr = c.to_matrix().trace();
    EXPECT_NEAR(tr.real() / std::ldexp(1.0, n + 2), dqc1_prob0(u), 1e-10);
    EXPECT_NEAR(tr.imag(), 0.0, 1e-9);
    EXPECT_NEAR(uprime_normalized_trace(c), dqc1_prob0(u), 1e-10);
  }
}

}  // namespace
}  // namespace knotgirth::qsim
