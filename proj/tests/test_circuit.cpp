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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stirap/circuit.hpp"

using namespace stirap;

namespace {

const double kR2 = std::sqrt(2.0);

Gate random_gate(std::mt19937_64& rng, int width) {
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_int_distribution<int> q(0, width - 1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int a = q(rng);
  int b = q(rng);
  if (width > 1) while (b == a) b = q(rng);
  switch (width > 1 ? kind(rng) : kind(rng) % 3) {
    case 0: return Gate::hadamard(a);
    case 1: return Gate::pi_over_8(a);
    case 2: {
      const double z = 2 * u(rng) - 1, phi = 2 * std::numbers::pi * u(rng);
      const double r = std::sqrt(1 - z * z);
      std::array<double, 3> axis{r * std::cos(phi), r * std::sin(phi), z};
      const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
      for (double& x : axis) x /= norm;
      return Gate::rotation(a, axis, 2 * std::numbers::pi * u(rng));
    }
    case 3: return Gate::cnot(a, b);
    default: return Gate::custom({a, b}, oracle::random_unitary(4, rng));
  }
}

}  // namespace

TEST_CASE("hadamard embeds as the standard matrix") {
  const CMatrix u = gate_unitary(Gate::hadamard(0), 1);
  CMatrix expected(2, 2);
  expected << 1, 1, 1, -1;
  CHECK(max_abs(u - expected / kR2) < 1e-15);
}

TEST_CASE("zero-angle rotation is the identity") {
  const CMatrix u = gate_unitary(Gate::rotation(0, {0, 0, 1}, 0.0), 1);
  CHECK(max_abs(u - CMatrix::Identity(2, 2)) == 0.0);
}

TEST_CASE("cnot basis convention is little endian") {
  // control qubit 0 = least-significant bit; in |q0 q1> labels this swaps |10> and |11>
  const CMatrix u = gate_unitary(Gate::cnot(0, 1), 2);
  CMatrix expected = CMatrix::Zero(4, 4);
  expected(0, 0) = 1;
  expected(2, 2) = 1;
  expected(3, 1) = 1;
  expected(1, 3) = 1;
  CHECK(max_abs(u - expected) == 0.0);

  // reversed roles: control 1 flips qubit 0 when bit 1 is set, swapping indices 2 and 3
  const CMatrix r = gate_unitary(Gate::cnot(1, 0), 2);
  CHECK(r(3, 2) == complex_t(1.0));
  CHECK(r(2, 3) == complex_t(1.0));
  CHECK(r(0, 0) == complex_t(1.0));
  CHECK(r(1, 1) == complex_t(1.0));
}

TEST_CASE("single-qubit embedding matches the kronecker product") {
  const CMatrix h = Gate::hadamard(0).local_matrix();
  const CMatrix i2 = CMatrix::Identity(2, 2);
  CHECK(max_abs(gate_unitary(Gate::hadamard(1), 2) - oracle::kron_chain({i2, h})) < 1e-15);
  CHECK(max_abs(gate_unitary(Gate::hadamard(0), 2) - oracle::kron_chain({h, i2})) < 1e-15);
  CHECK(max_abs(gate_unitary(Gate::hadamard(1), 3) - oracle::kron_chain({i2, h, i2})) < 1e-15);
}

TEST_CASE("circuit product ordering") {
  const auto id = Gate::rotation(0, {0, 0, 1}, 0.0);
  CHECK(max_abs(circuit_product(Circuit(1, {id, id})) - CMatrix::Identity(2, 2)) == 0.0);
  CHECK(max_abs(circuit_product(Circuit(1, {Gate::hadamard(0), Gate::hadamard(0)})) - CMatrix::Identity(2, 2)) <
        1e-15);

  // [H, T, H, T] -> T H T H by explicit 2x2 arithmetic
  using oracle::cd;
  const double r = 1 / kR2;
  const oracle::Mat2 H{{{cd(r), cd(r)}, {cd(r), cd(-r)}}};
  const oracle::Mat2 T{{{cd(1), cd(0)}, {cd(0), std::polar(1.0, std::numbers::pi / 4)}}};
  const oracle::Mat2 expected = oracle::mul(T, oracle::mul(H, oracle::mul(T, H)));
  const CMatrix p = circuit_product(
      Circuit(1, {Gate::hadamard(0), Gate::pi_over_8(0), Gate::hadamard(0), Gate::pi_over_8(0)}));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(std::abs(p(i, j) - expected[i][j]) < 1e-15);
  // order matters for a non-commuting pair
  const CMatrix q = circuit_product(Circuit(1, {Gate::hadamard(0), Gate::pi_over_8(0)}));
  CHECK(max_abs(q - Gate::pi_over_8(0).local_matrix() * Gate::hadamard(0).local_matrix()) < 1e-15);
}

TEST_CASE("hermitian parts of the tabulated gates") {
  SUBCASE("hadamard") {
    const auto p = gate_hermitian_parts(Gate::hadamard(0).local_matrix());
    CMatrix x(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    z << 1, 0, 0, -1;
    CHECK(max_abs(p.symmetric - (x + z) / kR2) < 1e-15);
    CHECK(max_abs(p.antisymmetric) == 0.0);
  }
  SUBCASE("rotation") {
    const std::array<double, 3> axis{0.6, 0.0, 0.8};
    const double theta = 1.7;
    const auto p = gate_hermitian_parts(Gate::rotation(0, axis, theta).local_matrix());
    const CMatrix ns = 0.6 * pauli::x() + 0.8 * pauli::z();
    CHECK(max_abs(p.symmetric - std::cos(theta / 2) * CMatrix::Identity(2, 2)) < 1e-15);
    CHECK(max_abs(p.antisymmetric - std::sin(theta / 2) * ns) < 1e-15);
  }
  SUBCASE("pi/8") {
    const auto p = gate_hermitian_parts(Gate::pi_over_8(0).local_matrix());
    CHECK(std::abs(p.symmetric(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(p.symmetric(1, 1) - 1.0 / kR2) < 1e-15);
    CHECK(std::abs(p.symmetric(0, 1)) == 0.0);
    CHECK(std::abs(p.antisymmetric(0, 0)) == 0.0);
    CHECK(std::abs(p.antisymmetric(1, 1) + 1.0 / kR2) < 1e-15);
  }
}

TEST_CASE("hermitian decomposition invariants over random gates") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int width = 1 + trial % 3;
    const Gate g = random_gate(rng, width);
    const CMatrix u = gate_unitary(g, width);
    CHECK(unitarity_defect(u) < 1e-12);
    const auto p = gate_hermitian_parts(u);
    CHECK(max_abs(p.symmetric - kI * p.antisymmetric - u) < 1e-12);
    CHECK(hermiticity_defect(p.symmetric) < 1e-12);
    CHECK(hermiticity_defect(p.antisymmetric) < 1e-12);
    // antisymmetric part vanishes exactly for the Hermitian gates
    if (g.kind() == GateKind::Hadamard || g.kind() == GateKind::CNOT) CHECK(max_abs(p.antisymmetric) < 1e-15);
  }
  CHECK(max_abs(gate_hermitian_parts(Gate::pi_over_8(0).local_matrix()).antisymmetric) > 0.1);
}

TEST_CASE("random circuit products stay unitary") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int width = 1 + trial % 3;
    const int n = 2 * (1 + trial % 10);
    std::vector<Gate> gates;
    for (int i = 0; i < n; ++i) gates.push_back(random_gate(rng, width));
    const Circuit c(width, gates);
    CHECK(unitarity_defect(circuit_product(c)) < n * 1e-12);
  }
}

TEST_CASE("gate and circuit validation") {
  CHECK_THROWS_AS(Gate::rotation(0, {1, 1, 0}, 0.3), InvalidArgument);
  CHECK_THROWS_AS(Gate::rotation(0, {0, 0, 1 + 1e-9}, 0.3), InvalidArgument);
  CHECK_NOTHROW(Gate::rotation(0, {0, 0, 1 + 1e-13}, 0.3));
  CHECK_THROWS_AS(Gate::cnot(1, 1), InvalidArgument);
  CMatrix bad = CMatrix::Identity(2, 2);
  bad(0, 0) = 1.001;
  CHECK_THROWS_AS(Gate::custom({0}, bad), InvalidArgument);
  CHECK_THROWS_AS(Gate::custom({0}, CMatrix::Identity(4, 4)), InvalidArgument);
  CHECK_THROWS_AS(Gate::custom({0, 1, 2}, CMatrix::Identity(8, 8)), InvalidArgument);
  CHECK_THROWS_AS(gate_unitary(Gate::hadamard(2), 2), InvalidArgument);
  CHECK_THROWS_AS(gate_hermitian_parts(bad), InvalidArgument);

  const auto h = Gate::hadamard(0);
  CHECK_THROWS_AS(Circuit(1, {h}), InvalidArgument);
  CHECK_THROWS_AS(Circuit(1, {h, h, h}), InvalidArgument);
  CHECK_THROWS_AS(Circuit(1, {}), InvalidArgument);
  CHECK_THROWS_AS(Circuit(1, {h, Gate::hadamard(1)}), InvalidArgument);
  CHECK_THROWS_AS(Circuit(0, {h, h}), InvalidArgument);
}
