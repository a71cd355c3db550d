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

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "stirap/spectral.hpp"

using namespace stirap;

namespace {

std::vector<double> chain_bonds(int n, double s, double J, double M) {
  std::vector<double> b{s * J};
  for (int i = 0; i < n; ++i) b.push_back(M);
  b.push_back((1 - s) * J);
  return b;
}

GapScanOptions coarse_options() {
  GapScanOptions o;
  o.s_grid = uniform_grid(21);
  return o;
}

}  // namespace

TEST_CASE("n = 2 spectrum against the Sturm oracle") {
  const PointerModel m(identity_circuit(2), 1.0, 10.0);
  const SpectrumResult r = eigendecompose(m.dense(0.5), default_zero_tol(m));
  // each chain level appears once per register state
  std::vector<double> expected;
  for (double l : oracle::chain_eigenvalues(chain_bonds(2, 0.5, 1.0, 10.0))) {
    expected.push_back(l);
    expected.push_back(l);
  }
  REQUIRE(r.eigenvalues.size() == 10);
  for (int i = 0; i < 10; ++i) CHECK(r.eigenvalues(i) == doctest::Approx(expected[static_cast<size_t>(i)]).epsilon(1e-12));
  // closed form: 0, +-0.5, +-sqrt(200.25)
  CHECK(r.eigenvalues(9) == doctest::Approx(std::sqrt(200.25)).epsilon(1e-13));
  CHECK(r.gap == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.zero_space.cols() == 2);
  CHECK(r.max_residual < 1e-12);
  CHECK(gap_at(m, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("spectrum is symmetric about zero") {
  const PointerModel m(Circuit(2, {Gate::hadamard(0), Gate::cnot(0, 1), Gate::pi_over_8(1), Gate::hadamard(1)}), 1.0,
                       10.0);
  for (double s : {0.0, 0.2, 0.5, 0.9, 1.0}) {
    const RVector e = eigendecompose(m.dense(s), default_zero_tol(m)).eigenvalues;
    const Index k = e.size();
    for (Index i = 0; i < k; ++i) CHECK(std::abs(e(i) + e(k - 1 - i)) < 1e-10);
  }
}

TEST_CASE("gap at the endpoints matches the isolated sub-chain") {
  for (int n : {2, 4, 6}) {
    const PointerModel m(identity_circuit(n), 1.0, 10.0);
    // s = 0: site 0 decouples; gap is set by the chain on sites 1..n+2
    std::vector<double> tail(static_cast<size_t>(n), 10.0);
    tail.push_back(1.0);
    const double expected = oracle::chain_gap(tail, 1e-6);
    const SpectrumResult r = eigendecompose(m.dense(0.0), default_zero_tol(m));
    CHECK(r.zero_space.cols() >= m.register_dim());
    CHECK(r.gap == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("gap is mirror symmetric in s and scales with J") {
  const PointerModel m(identity_circuit(4), 1.0, 10.0);
  for (double s : {0.1, 0.3, 0.45}) CHECK(gap_at(m, s) == doctest::Approx(gap_at(m, 1 - s)).epsilon(1e-10));
  const PointerModel m2(identity_circuit(2), 2.0, 20.0);
  CHECK(gap_at(m2, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
  // interior gap against the oracle
  for (double s : {0.25, 0.5}) {
    CHECK(gap_at(m, s) == doctest::Approx(oracle::chain_gap(chain_bonds(4, s, 1.0, 10.0), 1e-6)).epsilon(1e-10));
  }
}

TEST_CASE("gap does not depend on the circuit") {
  for (int n : {2, 4, 6}) {
    const PointerModel id(identity_circuit(n, 2), 1.0, 10.0);
    const PointerModel rnd(random_rotation_circuit(n, 2, 123), 1.0, 10.0);
    for (double s : {0.2, 0.5, 0.8}) CHECK(std::abs(gap_at(id, s) - gap_at(rnd, s)) < 1e-9);
  }
}

TEST_CASE("zero space is spanned by the analytic dark states") {
  const PointerModel m(random_rotation_circuit(4, 2, 7), 1.0, 10.0);
  for (double s : {0.1, 0.5, 0.9}) {
    const SpectrumResult r = eigendecompose(m.dense(s), default_zero_tol(m));
    REQUIRE(r.zero_space.cols() == m.register_dim());
    for (Index k = 0; k < m.register_dim(); ++k) {
      const PointerState v = analytic_dark_state(m, s, register_basis_state(m, k));
      const CVector u = v.amplitudes / v.norm();
      CHECK(1.0 - (r.zero_space.adjoint() * u).squaredNorm() < 1e-10);
    }
  }
}

TEST_CASE("identity-family scan") {
  const std::vector<int> ns{2, 4, 6, 8};
  const CircuitFamily family = [](int n) { return identity_circuit(n); };
  const GapScanResult a = gap_scan(family, ns, coarse_options());
  const GapScanResult b = gap_scan_serial(family, ns, coarse_options());
  REQUIRE(a.rows.size() == 4);
  CHECK(a.points.size() == 4 * 21);
  for (size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i].n == b.points[i].n);
    CHECK(a.points[i].s == b.points[i].s);
    CHECK(a.points[i].gap == b.points[i].gap);
  }
  CHECK(a.alpha == b.alpha);
  for (size_t i = 1; i < a.rows.size(); ++i) CHECK(a.rows[i].min_gap < a.rows[i - 1].min_gap);
  CHECK(a.rows[0].min_gap == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(a.rows[0].argmin_s == doctest::Approx(0.5));
  CHECK(a.alpha < 0.0);
  for (const auto& row : a.rows) {
    CHECK(row.min_gap == doctest::Approx(oracle::chain_gap(chain_bonds(row.n, 0.5, 1.0, 10.0), 1e-6)).epsilon(1e-9));
  }
}

TEST_CASE("power-law fit recovers an exact exponent") {
  std::vector<double> x{2, 4, 8, 16}, y;
  for (double v : x) y.push_back(3.0 * std::pow(v, -1.25));
  const PowerLawFit f = fit_power_law(x, y);
  CHECK(f.alpha == doctest::Approx(-1.25).epsilon(1e-12));
  CHECK(f.prefactor == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(f.residual < 1e-12);
  CHECK_THROWS_AS(fit_power_law({1.0}, {1.0}), InvalidArgument);
}

TEST_CASE("input validation") {
  const CircuitFamily family = [](int n) { return identity_circuit(n); };
  CHECK_THROWS_AS(gap_scan(family, {2, 4}, coarse_options()), InvalidArgument);
  CHECK_THROWS_AS(gap_scan(family, {2, 3, 4}, coarse_options()), InvalidArgument);
  CHECK_THROWS_AS(gap_scan(family, {4, 2, 6}, coarse_options()), InvalidArgument);
  GapScanOptions o;
  o.s_grid = uniform_grid(11);
  CHECK_THROWS_AS(gap_scan(family, {2, 4, 6}, o), InvalidArgument);
  CMatrix nh = CMatrix::Zero(2, 2);
  nh(0, 1) = 1.0;
  CHECK_THROWS_AS(eigendecompose(nh, 1e-6), InvalidArgument);
  // a tolerance too large to separate the zero level is reported, not ignored
  const PointerModel m(identity_circuit(2), 1.0, 10.0);
  CHECK_THROWS_AS(gap_at(m, 0.5, 1.0), InvariantViolation);
}
