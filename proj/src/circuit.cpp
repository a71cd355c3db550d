// Copyright 2026 The stirap-chain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stirap/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace stirap {
namespace {

constexpr double kTol = 1e-12;

void check_distinct(const std::vector<int>& targets) {
  for (size_t a = 0; a < targets.size(); ++a) {
    if (targets[a] < 0) throw InvalidArgument("negative qubit index");
    for (size_t b = a + 1; b < targets.size(); ++b) {
      if (targets[a] == targets[b]) throw InvalidArgument("gate targets must be distinct");
    }
  }
}

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::Hadamard: return "h";
    case GateKind::PiOver8: return "t";
    case GateKind::Rotation: return "rot";
    case GateKind::CNOT: return "cnot";
    case GateKind::CustomUnitary: return "custom";
  }
  return "?";
}

Gate::Gate(GateKind kind, std::vector<int> targets, CMatrix local)
    : kind_(kind), targets_(std::move(targets)), local_(std::move(local)) {
  check_distinct(targets_);
}

Gate Gate::hadamard(int qubit) {
  CMatrix m(2, 2);
  m << 1, 1, 1, -1;
  return Gate(GateKind::Hadamard, {qubit}, m / std::sqrt(2.0));
}

Gate Gate::pi_over_8(int qubit) {
  CMatrix m = CMatrix::Identity(2, 2);
  m(1, 1) = std::polar(1.0, std::numbers::pi / 4);
  return Gate(GateKind::PiOver8, {qubit}, m);
}

Gate Gate::rotation(int qubit, std::array<double, 3> axis, double angle) {
  const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (!std::isfinite(angle) || std::abs(norm - 1.0) > kTol) {
    throw InvalidArgument("rotation axis must have unit norm");
  }
  const CMatrix n_sigma = axis[0] * pauli::x() + axis[1] * pauli::y() + axis[2] * pauli::z();
  CMatrix m = std::cos(angle / 2) * pauli::identity() - kI * std::sin(angle / 2) * n_sigma;
  Gate g(GateKind::Rotation, {qubit}, m);
  g.axis_ = axis;
  g.angle_ = angle;
  return g;
}

Gate Gate::cnot(int control, int target) {
  // local index = control + 2 * target
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = 1;
  m(2, 2) = 1;
  m(3, 1) = 1;
  m(1, 3) = 1;
  return Gate(GateKind::CNOT, {control, target}, m);
}

Gate Gate::custom(std::vector<int> targets, CMatrix matrix) {
  if (targets.empty() || targets.size() > 2) {
    throw InvalidArgument("custom gates act on 1 or 2 qubits");
  }
  const Index dim = Index{1} << targets.size();
  if (matrix.rows() != dim || matrix.cols() != dim) {
    throw InvalidArgument("custom gate matrix must be " + std::to_string(dim) + "x" +
                          std::to_string(dim));
  }
  if (unitarity_defect(matrix) > kTol) throw InvalidArgument("custom gate matrix is not unitary");
  return Gate(GateKind::CustomUnitary, std::move(targets), std::move(matrix));
}

bool Gate::operator==(const Gate& other) const {
  return kind_ == other.kind_ && targets_ == other.targets_ && axis_ == other.axis_ &&
         angle_ == other.angle_ && local_.rows() == other.local_.rows() &&
         local_ == other.local_;
}

Circuit::Circuit(int register_width, std::vector<Gate> gates)
    : width_(register_width), gates_(std::move(gates)) {
  if (width_ < 1 || width_ > 20) throw InvalidArgument("register width must be in [1, 20]");
  if (gates_.size() < 2 || gates_.size() % 2 != 0) {
    throw InvalidArgument("n must be even and at least 2 (got " +
                          std::to_string(gates_.size()) + " gates)");
  }
  for (const Gate& g : gates_) {
    for (int q : g.targets()) {
      if (q >= width_) {
        throw InvalidArgument("qubit index " + std::to_string(q) + " out of range for " +
                              std::to_string(width_) + " qubits");
      }
    }
  }
}

CMatrix gate_unitary(const Gate& gate, int register_width) {
  const auto& targets = gate.targets();
  for (int q : targets) {
    if (q < 0 || q >= register_width) throw InvalidArgument("gate target out of range");
  }
  const Index dim = Index{1} << register_width;
  const CMatrix& local = gate.local_matrix();
  const Index k = static_cast<Index>(targets.size());

  Index target_mask = 0;
  for (int q : targets) target_mask |= Index{1} << q;

  auto local_index = [&](Index full) {
    Index li = 0;
    for (Index j = 0; j < k; ++j) li |= ((full >> targets[static_cast<size_t>(j)]) & 1) << j;
    return li;
  };
  auto scatter = [&](Index base, Index li) {
    Index full = base;
    for (Index j = 0; j < k; ++j) full |= ((li >> j) & 1) << targets[static_cast<size_t>(j)];
    return full;
  };

  CMatrix u = CMatrix::Zero(dim, dim);
  for (Index col = 0; col < dim; ++col) {
    const Index base = col & ~target_mask;
    const Index lc = local_index(col);
    for (Index lr = 0; lr < local.rows(); ++lr) {
      u(scatter(base, lr), col) = local(lr, lc);
    }
  }
  return u;
}

CMatrix circuit_product(const Circuit& circuit) {
  CMatrix p = CMatrix::Identity(circuit.register_dim(), circuit.register_dim());
  for (const Gate& g : circuit.gates()) p = (gate_unitary(g, circuit.register_width()) * p).eval();
  return p;
}

HermitianParts gate_hermitian_parts(const CMatrix& u) {
  if (unitarity_defect(u) > kTol) throw InvalidArgument("matrix is not unitary");
  const CMatrix ud = u.adjoint();
  return {0.5 * (u + ud), (0.5 * kI) * (u - ud)};
}

}  // namespace stirap
