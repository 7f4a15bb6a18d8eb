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

#include "knotgirth/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <nlohmann/json.hpp>

namespace knotgirth::qsim {

namespace {

Eigen::Index idx(int i) { return static_cast<Eigen::Index>(i); }

nlohmann::ordered_json matrix_to_json(const Matrix& m) {
  nlohmann::ordered_json re = nlohmann::ordered_json::array();
  nlohmann::ordered_json im = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json rr = nlohmann::ordered_json::array();
    nlohmann::ordered_json ir = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ir.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  nlohmann::ordered_json out;
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  const auto n = static_cast<Eigen::Index>(re.size());
  if (static_cast<Eigen::Index>(im.size()) != n) throw std::invalid_argument("re/im row mismatch");
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& rr = re.at(static_cast<std::size_t>(i));
    const auto& ir = im.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(rr.size()) != n || static_cast<Eigen::Index>(ir.size()) != n) {
      throw std::invalid_argument("gate matrix must be square");
    }
    for (Eigen::Index c = 0; c < n; ++c) {
      m(i, c) = Complex(rr.at(static_cast<std::size_t>(c)).get<double>(),
                        ir.at(static_cast<std::size_t>(c)).get<double>());
    }
  }
  return m;
}

}  // namespace

double unitarity_defect(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) return INFINITY;
  return (m * m.adjoint() - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

Unitary::Unitary(Matrix m, double tolerance) : m_(std::move(m)) {
  const double defect = unitarity_defect(m_);
  if (!(defect <= tolerance)) {
    throw std::invalid_argument("matrix is not unitary (defect " + std::to_string(defect) + ")");
  }
}

Unitary Unitary::identity(int dimension) {
  if (dimension < 1) throw std::invalid_argument("dimension must be positive");
  return {Matrix::Identity(idx(dimension), idx(dimension)), Trusted{}};
}

Unitary Unitary::adjoint() const { return {m_.adjoint(), Trusted{}}; }

Unitary operator*(const Unitary& a, const Unitary& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("unitary dimension mismatch");
  return {a.m_ * b.m_, Unitary::Trusted{}};
}

Unitary hadamard_gate() {
  Matrix h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return Unitary(h);
}

Unitary pauli_x() {
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  return Unitary(x);
}

Unitary phase_dagger() {
  Matrix s(2, 2);
  s << 1, 0, 0, Complex(0, -1);
  return Unitary(s);
}

Unitary random_unitary(int dimension, std::mt19937_64& rng) {
  if (dimension < 1) throw std::invalid_argument("dimension must be positive");
  std::normal_distribution<double> normal;
  Matrix g(idx(dimension), idx(dimension));
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    if (a > 0) q.col(j) *= d / a;
  }
  return Unitary(q);
}

MixedState::MixedState(Matrix rho, double tolerance) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
    throw std::invalid_argument("density matrix must be square and nonempty");
  }
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > tolerance) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(rho_.trace() - Complex(1.0)) > tolerance) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(rho_, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -tolerance) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }
}

MixedState MixedState::pure(const Vector& psi) {
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > kUnitaryTolerance) throw std::invalid_argument("state is not normalized");
  return {psi * psi.adjoint(), Trusted{}};
}

MixedState MixedState::maximally_mixed(int dimension) {
  if (dimension < 1) throw std::invalid_argument("dimension must be positive");
  return {Matrix::Identity(idx(dimension), idx(dimension)) / static_cast<double>(dimension),
          Trusted{}};
}

MixedState MixedState::diagonal(const std::vector<double>& weights) {
  if (weights.empty()) throw std::invalid_argument("no weights");
  double total = 0;
  for (double w : weights) {
    if (w < 0) throw std::invalid_argument("negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > kUnitaryTolerance) throw std::invalid_argument("weights do not sum to 1");
  Vector d(static_cast<Eigen::Index>(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i) d(static_cast<Eigen::Index>(i)) = weights[i];
  return {d.asDiagonal(), Trusted{}};
}

MixedState MixedState::tensor(const MixedState& other) const {
  Matrix out(rho_.rows() * other.rho_.rows(), rho_.cols() * other.rho_.cols());
  for (Eigen::Index i = 0; i < rho_.rows(); ++i) {
    for (Eigen::Index j = 0; j < rho_.cols(); ++j) {
      out.block(i * other.rho_.rows(), j * other.rho_.cols(), other.rho_.rows(),
                other.rho_.cols()) = rho_(i, j) * other.rho_;
    }
  }
  return {std::move(out), Trusted{}};
}

Circuit::Circuit(std::vector<int> register_dims) : dims_(std::move(register_dims)) {
  if (dims_.empty()) throw std::invalid_argument("circuit needs at least one register");
  for (int d : dims_) {
    if (d < 1) throw std::invalid_argument("register dimension must be positive");
  }
}

int Circuit::dimension() const {
  return std::accumulate(dims_.begin(), dims_.end(), 1, std::multiplies<>());
}

void Circuit::validate(const Gate& gate) const {
  const int n = static_cast<int>(dims_.size());
  if (gate.targets.empty()) throw std::invalid_argument("gate needs a target register");
  std::vector<bool> seen(dims_.size(), false);
  int dim = 1;
  for (int t : gate.targets) {
    if (t < 0 || t >= n || seen[static_cast<std::size_t>(t)]) {
      throw std::invalid_argument("bad or repeated target register " + std::to_string(t));
    }
    seen[static_cast<std::size_t>(t)] = true;
    dim *= dims_[static_cast<std::size_t>(t)];
  }
  if (dim != gate.op.dimension()) {
    throw std::invalid_argument("gate dimension " + std::to_string(gate.op.dimension()) +
                                " does not match target dimension " + std::to_string(dim));
  }
  if (gate.control) {
    const int c = *gate.control;
    if (c < 0 || c >= n || seen[static_cast<std::size_t>(c)]) {
      throw std::invalid_argument("bad control register " + std::to_string(c));
    }
    if (dims_[static_cast<std::size_t>(c)] != 2) throw std::invalid_argument("control must be a qubit");
  }
}

Circuit& Circuit::add(Unitary op, std::vector<int> targets) {
  Gate g{std::move(op), std::move(targets), std::nullopt};
  validate(g);
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::add_controlled(Unitary op, int control, std::vector<int> targets) {
  Gate g{std::move(op), std::move(targets), control};
  validate(g);
  gates_.push_back(std::move(g));
  return *this;
}

void Circuit::apply_gate(const Gate& gate, Matrix& columns) const {
  const int total = dimension();
  std::vector<int> stride(dims_.size(), 1);
  for (auto k = dims_.size() - 1; k-- > 0;) stride[k] = stride[k + 1] * dims_[k + 1];
  auto digit = [&](int index, int reg) {
    const auto r = static_cast<std::size_t>(reg);
    return index / stride[r] % dims_[r];
  };
  // Offsets of the target sub-basis, first target most significant.
  std::vector<int> offset{0};
  for (int t : gate.targets) {
    std::vector<int> next;
    for (int o : offset) {
      for (int v = 0; v < dims_[static_cast<std::size_t>(t)]; ++v) {
        next.push_back(o + v * stride[static_cast<std::size_t>(t)]);
      }
    }
    offset = std::move(next);
  }
  const auto& u = gate.op.matrix();
  const auto sub = static_cast<Eigen::Index>(offset.size());
  Matrix gathered(sub, columns.cols());
  for (int base = 0; base < total; ++base) {
    bool is_base = true;
    for (int t : gate.targets) is_base = is_base && digit(base, t) == 0;
    if (!is_base) continue;
    if (gate.control && digit(base, *gate.control) != 1) continue;
    for (Eigen::Index k = 0; k < sub; ++k) {
      gathered.row(k) = columns.row(base + offset[static_cast<std::size_t>(k)]);
    }
    const Matrix result = u * gathered;
    for (Eigen::Index k = 0; k < sub; ++k) {
      columns.row(base + offset[static_cast<std::size_t>(k)]) = result.row(k);
    }
  }
}

Vector Circuit::apply(const Vector& state) const {
  if (state.size() != dimension()) throw std::invalid_argument("state dimension mismatch");
  Matrix cols = state;
  for (const auto& g : gates_) apply_gate(g, cols);
  return cols.col(0);
}

MixedState Circuit::apply(const MixedState& state) const {
  if (state.dimension() != dimension()) throw std::invalid_argument("state dimension mismatch");
  Matrix rho = state.density();
  for (const auto& g : gates_) {
    // G (G rho)^dagger = G rho G^dagger, which is Hermitian.
    apply_gate(g, rho);
    Matrix t = rho.adjoint();
    apply_gate(g, t);
    rho = std::move(t);
  }
  return {std::move(rho), MixedState::Trusted{}};
}

Matrix Circuit::to_matrix() const {
  Matrix m = Matrix::Identity(idx(dimension()), idx(dimension()));
  for (const auto& g : gates_) apply_gate(g, m);
  return m;
}

double Circuit::probability(const Vector& state, int reg, int value) const {
  if (state.size() != dimension()) throw std::invalid_argument("state dimension mismatch");
  int stride = 1;
  for (auto k = dims_.size(); k-- > static_cast<std::size_t>(reg) + 1;) stride *= dims_[k];
  double p = 0;
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    if (static_cast<int>(i) / stride % dims_[static_cast<std::size_t>(reg)] == value) {
      p += std::norm(state(i));
    }
  }
  return p;
}

double Circuit::probability(const MixedState& state, int reg, int value) const {
  if (state.dimension() != dimension()) throw std::invalid_argument("state dimension mismatch");
  int stride = 1;
  for (auto k = dims_.size(); k-- > static_cast<std::size_t>(reg) + 1;) stride *= dims_[k];
  double p = 0;
  for (Eigen::Index i = 0; i < state.density().rows(); ++i) {
    if (static_cast<int>(i) / stride % dims_[static_cast<std::size_t>(reg)] == value) {
      p += state.density()(i, i).real();
    }
  }
  return p;
}

std::string Circuit::to_json() const {
  nlohmann::ordered_json doc;
  doc["registers"] = dims_;
  nlohmann::ordered_json gates = nlohmann::ordered_json::array();
  for (const auto& g : gates_) {
    nlohmann::ordered_json item;
    item["targets"] = g.targets;
    item["control"] = g.control ? nlohmann::ordered_json(*g.control) : nlohmann::ordered_json();
    item["matrix"] = matrix_to_json(g.op.matrix());
    gates.push_back(std::move(item));
  }
  doc["gates"] = std::move(gates);
  return doc.dump();
}

Circuit Circuit::from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    Circuit c(doc.at("registers").get<std::vector<int>>());
    for (const auto& item : doc.at("gates")) {
      Unitary u(matrix_from_json(item.at("matrix")));
      auto targets = item.at("targets").get<std::vector<int>>();
      if (item.contains("control") && !item["control"].is_null()) {
        c.add_controlled(std::move(u), item["control"].get<int>(), std::move(targets));
      } else {
        c.add(std::move(u), std::move(targets));
      }
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("circuit JSON: ") + e.what());
  }
}

}  // namespace knotgirth::qsim
