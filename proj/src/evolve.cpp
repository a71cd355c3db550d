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

#include "stirap/evolve.hpp"

#include <cmath>

#include <fmt/format.h>
#include <unsupported/Eigen/MatrixFunctions>

namespace stirap {
namespace {

constexpr int kMaxTaylorOrder = 40;
constexpr double kTaylorTol = 1e-17;

class TaylorStepper {
 public:
  explicit TaylorStepper(const PointerModel& model)
      : model_(model), term_(model.dimension()), next_(model.dimension()), out_(model.dimension()) {}

  // psi <- exp(-i H(s) dt) psi
  void step(double s, double dt, CVector& psi) {
    const auto w = model_.weights(s);
    const auto chain = model_.chain(w);
    const double scale = psi.norm();
    out_ = psi;
    term_ = psi;
    for (int k = 1; k <= kMaxTaylorOrder; ++k) {
      kernels::chain_apply_serial(chain, view(term_), mut(next_));
      term_ = (complex_t(0.0, -dt / k)) * next_;
      out_ += term_;
      if (term_.norm() < kTaylorTol * scale) break;
    }
    psi.swap(out_);
  }

 private:
  static std::span<const complex_t> view(const CVector& v) {
    return {v.data(), static_cast<size_t>(v.size())};
  }
  static std::span<complex_t> mut(CVector& v) { return {v.data(), static_cast<size_t>(v.size())}; }

  const PointerModel& model_;
  CVector term_;
  CVector next_;
  CVector out_;
};

double interior_population(const CVector& psi, const PointerModel& model) {
  const Index d = model.register_dim();
  const double total = psi.squaredNorm();
  const double interior = psi.segment(d, (model.sites() - 2) * d).squaredNorm();
  return interior / total;
}

}  // namespace

Schedule::Schedule(double total_time, ScheduleShape shape) : total_time_(total_time), shape_(shape) {
  if (!(total_time_ > 0.0) || !std::isfinite(total_time_)) throw InvalidArgument("total time must be positive");
}

double Schedule::s(double t) const {
  const double u = std::clamp(t / total_time_, 0.0, 1.0);
  switch (shape_) {
    case ScheduleShape::Linear: return u;
    case ScheduleShape::Smoothstep: return u * u * (3.0 - 2.0 * u);
  }
  return u;
}

double fidelity(const CVector& psi, const CVector& chi) {
  if (psi.size() != chi.size()) throw InvalidArgument("fidelity: dimension mismatch");
  const double np = psi.squaredNorm();
  const double nc = chi.squaredNorm();
  if (!(np > 0.0) || !(nc > 0.0)) throw InvalidArgument("fidelity: zero vector");
  return std::norm(chi.dot(psi)) / (np * nc);
}

double fidelity(const PointerState& psi, const PointerState& chi) {
  return fidelity(psi.amplitudes, chi.amplitudes);
}

EvolveResult propagate(const PointerModel& model, const Schedule& schedule, const CVector& phi,
                       const EvolveOptions& options) {
  const double T = schedule.total_time();
  long steps = 0;
  if (options.fixed_steps) {
    steps = *options.fixed_steps;
    if (steps < 1) throw InvalidArgument("fixed step count must be positive");
  } else {
    const double needed = std::ceil(T * model.norm_bound() / options.max_phase_per_step);
    if (!(needed <= static_cast<double>(options.max_steps))) {
      throw InvalidArgument(fmt::format("T = {} needs {} steps, above the cap of {}", T, needed, options.max_steps));
    }
    steps = std::max(1L, static_cast<long>(needed));
  }
  if (steps > options.max_steps) {
    throw InvalidArgument(fmt::format("{} steps exceeds the cap of {}", steps, options.max_steps));
  }
  const double dt = T / static_cast<double>(steps);

  PointerState psi = initial_state(model, phi);
  const PointerState target = target_state(model, phi);

  EvolveReport report;
  report.total_time = T;
  report.steps = steps;
  report.dt = dt;

  // trace sample step indices, evenly spaced over [0, steps]
  std::vector<long> sample_steps;
  if (options.record_trace) {
    const long count = std::min<long>(options.trace_samples, steps + 1);
    for (long j = 0; j < count; ++j) {
      sample_steps.push_back(count == 1 ? 0 : std::lround(static_cast<double>(j) * steps / (count - 1)));
    }
  }
  size_t next_sample = 0;
  auto record = [&](long step) {
    while (next_sample < sample_steps.size() && sample_steps[next_sample] == step) {
      const double t = step * dt;
      const double s = schedule.s(t);
      TraceRow row;
      row.t = t;
      row.s = s;
      row.populations = site_populations(psi);
      row.fidelity_to_dark = fidelity(psi, analytic_dark_state(model, s, phi));
      report.min_dark_overlap = std::min(report.min_dark_overlap, row.fidelity_to_dark);
      report.trace.push_back(std::move(row));
      ++next_sample;
    }
  };

  TaylorStepper taylor(model);
  record(0);
  for (long k = 0; k < steps; ++k) {
    const double s_mid = schedule.s((static_cast<double>(k) + 0.5) * dt);
    if (options.propagator == Propagator::TaylorMatrixFree) {
      taylor.step(s_mid, dt, psi.amplitudes);
    } else {
      const CMatrix u = (complex_t(0.0, -dt) * model.dense(s_mid)).exp();
      psi.amplitudes = (u * psi.amplitudes).eval();
    }
    report.norm_drift = std::max(report.norm_drift, std::abs(psi.norm() - 1.0));
    report.max_interior_population = std::max(report.max_interior_population, interior_population(psi.amplitudes, model));
    record(k + 1);
  }

  report.final_fidelity = fidelity(psi, target);
  const auto pops = site_populations(psi);
  report.output_population = pops.back();
  const CVector out_register = psi.site(model.sites() - 1);
  const CVector expected = model.full_product() * phi;
  report.register_fidelity = out_register.squaredNorm() > 0 ? fidelity(out_register, expected) : 0.0;

  return {std::move(psi), std::move(report)};
}

std::vector<SweepRow> adiabaticity_sweep(const PointerModel& model, const std::vector<double>& times,
                                         const CVector& phi, ScheduleShape shape, const EvolveOptions& options) {
  if (times.empty()) throw InvalidArgument("adiabaticity sweep needs at least one T");
  for (size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw InvalidArgument("adiabaticity sweep times must be ascending");
  }
  std::vector<SweepRow> rows(times.size());
  std::exception_ptr failure;
  const auto count = static_cast<long>(times.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      auto result = propagate(model, Schedule(times[static_cast<size_t>(i)], shape), phi, options);
      auto& row = rows[static_cast<size_t>(i)];
      row.total_time = times[static_cast<size_t>(i)];
      row.final_fidelity = result.report.final_fidelity;
      row.max_interior_population = result.report.max_interior_population;
      row.report = std::move(result.report);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace stirap
