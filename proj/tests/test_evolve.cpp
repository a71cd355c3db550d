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

#include "doctest.h"
#include "oracles.hpp"
#include "stirap/evolve.hpp"
#include "stirap/spectral.hpp"

using namespace stirap;

namespace {

Circuit htht() { return Circuit(1, {Gate::hadamard(0), Gate::pi_over_8(0), Gate::hadamard(0), Gate::pi_over_8(0)}); }

CVector ket0() {
  CVector v = CVector::Zero(2);
  v(0) = 1;
  return v;
}

EvolveOptions fixed(long steps, Propagator p = Propagator::TaylorMatrixFree) {
  EvolveOptions o;
  o.fixed_steps = steps;
  o.propagator = p;
  o.record_trace = false;
  return o;
}

}  // namespace

TEST_CASE("fidelity") {
  CVector a(3), b(3);
  a << 1, kI, 0;
  b << 0, 0, 2;
  CHECK(fidelity(a, a) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fidelity(a, std::polar(3.0, 0.7) * a) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fidelity(a, b) == 0.0);
  CVector c(3);
  c << 1, 0, 0;
  CHECK(fidelity(a, c) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(fidelity(a, CVector::Zero(3)), InvalidArgument);
  CHECK_THROWS_AS(fidelity(a, CVector::Zero(2)), InvalidArgument);
}

TEST_CASE("schedules") {
  const Schedule lin(10.0), smooth(10.0, ScheduleShape::Smoothstep);
  CHECK(lin.s(0) == 0.0);
  CHECK(lin.s(10) == 1.0);
  CHECK(lin.s(2.5) == 0.25);
  CHECK(smooth.s(0) == 0.0);
  CHECK(smooth.s(10) == 1.0);
  CHECK(smooth.s(5) == doctest::Approx(0.5));
  CHECK(smooth.s(2.5) == doctest::Approx(3 * 0.0625 - 2 * 0.015625));
  for (double t = 0; t < 10; t += 0.5) CHECK(smooth.s(t + 0.5) >= smooth.s(t));
  CHECK_THROWS_AS(Schedule(0.0), InvalidArgument);
  CHECK_THROWS_AS(Schedule(-1.0), InvalidArgument);
}

TEST_CASE("sudden quench leaves the state on the input site") {
  const PointerModel m(Circuit(1, {Gate::hadamard(0), Gate::hadamard(0)}), 1.0, 10.0);
  const EvolveResult r = propagate(m, Schedule(1e-6), ket0());
  CHECK(r.report.final_fidelity < 1e-10);
  CHECK(site_populations(r.final_state)[0] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("adiabatic transfer improves with T") {
  const PointerModel m(Circuit(1, {Gate::hadamard(0), Gate::hadamard(0)}), 1.0, 10.0);
  const std::vector<double> times{10, 30, 100, 300, 1000};
  const auto rows = adiabaticity_sweep(m, times, ket0());
  REQUIRE(rows.size() == times.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].total_time == times[i]);
    CHECK(rows[i].report.norm_drift < 1e-9);
    if (i > 0) CHECK(rows[i].final_fidelity >= rows[i - 1].final_fidelity - 0.02);
  }
  CHECK(rows.back().final_fidelity >= 0.99);
  CHECK(rows.back().report.register_fidelity >= 0.99);
  // the state follows the dark state throughout the slowest run
  CHECK(rows.back().report.min_dark_overlap >= 0.98);
  // sweep rows agree with individual runs
  const EvolveResult single = propagate(m, Schedule(30.0), ket0());
  CHECK(single.report.final_fidelity == doctest::Approx(rows[1].final_fidelity).epsilon(1e-12));
}

TEST_CASE("taylor and dense exponential propagators agree") {
  const PointerModel m(htht(), 1.0, 10.0);
  const auto a = propagate(m, Schedule(10.0), ket0(), fixed(300));
  const auto b = propagate(m, Schedule(10.0), ket0(), fixed(300, Propagator::DenseExponential));
  CHECK((a.final_state.amplitudes - b.final_state.amplitudes).norm() < 1e-11);
  CHECK(a.report.steps == 300);
  CHECK(a.report.dt == doctest::Approx(10.0 / 300));
}

TEST_CASE("midpoint stepping is second order") {
  const PointerModel m(htht(), 1.0, 10.0);
  const double f1 = propagate(m, Schedule(10.0), ket0(), fixed(100)).report.final_fidelity;
  const double f2 = propagate(m, Schedule(10.0), ket0(), fixed(200)).report.final_fidelity;
  const double f3 = propagate(m, Schedule(10.0), ket0(), fixed(400)).report.final_fidelity;
  const double ratio = (f1 - f2) / (f2 - f3);
  CHECK(ratio >= 3.0);
  CHECK(ratio <= 5.0);
}

TEST_CASE("default step count follows the phase budget") {
  const PointerModel m(htht(), 1.0, 10.0);
  EvolveOptions o;
  o.record_trace = false;
  const auto r = propagate(m, Schedule(10.0), ket0(), o);
  CHECK(r.report.steps == static_cast<long>(std::ceil(10.0 * m.norm_bound() / 0.1)));
  CHECK(r.report.norm_drift < 1e-10);
  o.max_steps = 100;
  CHECK_THROWS_AS(propagate(m, Schedule(10.0), ket0(), o), InvalidArgument);
  CHECK_THROWS_AS(propagate(m, Schedule(10.0), CVector::Ones(2)), InvalidArgument);
}

TEST_CASE("trace sampling") {
  const PointerModel m(htht(), 1.0, 10.0);
  EvolveOptions o = fixed(1000);
  o.record_trace = true;
  const auto r = propagate(m, Schedule(5.0), ket0(), o);
  REQUIRE(r.report.trace.size() == 200);
  CHECK(r.report.trace.front().t == 0.0);
  CHECK(r.report.trace.back().t == doctest::Approx(5.0));
  CHECK(r.report.trace.back().s == doctest::Approx(1.0));
  CHECK(r.report.trace.front().fidelity_to_dark == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto& row : r.report.trace) {
    CHECK(row.populations.size() == 7);
    double total = 0;
    for (double p : row.populations) total += p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
  const auto tiny = propagate(m, Schedule(5.0), ket0(), [] {
    EvolveOptions t = fixed(3);
    t.record_trace = true;
    return t;
  }());
  CHECK(tiny.report.trace.size() == 4);
}

TEST_CASE("interior leakage shrinks as M grows") {
  auto leak = [](double M) {
    const PointerModel m(htht(), 1.0, M);
    EvolveOptions o;
    o.record_trace = false;
    return propagate(m, Schedule(300.0), ket0(), o).report.max_interior_population;
  };
  const double l10 = leak(10.0), l20 = leak(20.0);
  CHECK(l20 < l10);
  CHECK(l10 < 0.05);
}
