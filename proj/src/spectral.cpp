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

#include "stirap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <fmt/format.h>

namespace stirap {

SpectrumResult eigendecompose(const CMatrix& h, double zero_tol) {
  if (h.rows() != h.cols()) throw InvalidArgument("eigendecompose: matrix is not square");
  if (h.rows() > kDenseEigenCap) {
    throw InvalidArgument(fmt::format("eigendecompose: dimension {} exceeds cap {}", h.rows(), kDenseEigenCap));
  }
  if (hermiticity_defect(h) > 1e-10) throw InvalidArgument("eigendecompose: matrix is not Hermitian");

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw InvariantViolation("eigendecompose: solver did not converge");

  SpectrumResult r;
  r.eigenvalues = solver.eigenvalues();
  r.eigenvectors = solver.eigenvectors();
  r.zero_tol = zero_tol;

  const Index dim = h.rows();
  std::vector<Index> zero_cols;
  r.gap_below = std::numeric_limits<double>::infinity();
  r.gap_above = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < dim; ++i) {
    const double lam = r.eigenvalues(i);
    if (std::abs(lam) < zero_tol) {
      zero_cols.push_back(i);
    } else if (lam < 0) {
      r.gap_below = std::min(r.gap_below, -lam);
    } else {
      r.gap_above = std::min(r.gap_above, lam);
    }
  }
  r.zero_space.resize(dim, static_cast<Index>(zero_cols.size()));
  for (size_t j = 0; j < zero_cols.size(); ++j) {
    r.zero_space.col(static_cast<Index>(j)) = r.eigenvectors.col(zero_cols[j]);
  }
  const double gap = std::min(r.gap_below, r.gap_above);
  r.gap = std::isfinite(gap) ? gap : 0.0;
  if (!std::isfinite(r.gap_below)) r.gap_below = 0.0;
  if (!std::isfinite(r.gap_above)) r.gap_above = 0.0;

  for (Index i = 0; i < dim; ++i) {
    const CVector res = h * r.eigenvectors.col(i) - r.eigenvalues(i) * r.eigenvectors.col(i);
    r.max_residual = std::max(r.max_residual, res.cwiseAbs().maxCoeff());
  }
  return r;
}

double default_zero_tol(const PointerModel& model) { return 1e-6 * std::max(model.J(), model.M()); }

double gap_at(const PointerModel& model, double s, double zero_tol) {
  const SpectrumResult eig = eigendecompose(model.dense(s), zero_tol);
  if (eig.zero_space.cols() != model.register_dim()) {
    throw InvariantViolation(fmt::format("zero space at s = {} has dimension {}, expected {}", s,
                                         eig.zero_space.cols(), model.register_dim()));
  }
  if (std::abs(eig.gap_above - eig.gap_below) > 1e-9) {
    throw InvariantViolation(fmt::format("gap above ({}) and below ({}) differ at s = {}", eig.gap_above,
                                         eig.gap_below, s));
  }
  return eig.gap;
}

double gap_at(const PointerModel& model, double s) { return gap_at(model, s, default_zero_tol(model)); }

std::vector<double> uniform_grid(int points) {
  if (points < 2) throw InvalidArgument("grid needs at least 2 points");
  std::vector<double> g(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i) g[static_cast<size_t>(i)] = static_cast<double>(i) / (points - 1);
  return g;
}

Circuit identity_circuit(int n, int register_width) {
  std::vector<Gate> gates;
  for (int i = 0; i < n; ++i) gates.push_back(Gate::rotation(i % register_width, {0, 0, 1}, 0.0));
  return Circuit(register_width, std::move(gates));
}

Circuit random_rotation_circuit(int n, int register_width, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Gate> gates;
  for (int i = 0; i < n; ++i) {
    const double cos_theta = 2.0 * unit(rng) - 1.0;
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
    std::array<double, 3> axis{sin_theta * std::cos(phi), sin_theta * std::sin(phi), cos_theta};
    // renormalize so the unit-norm check holds to rounding
    const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    for (double& a : axis) a /= norm;
    const double angle = 2.0 * std::numbers::pi * unit(rng);
    gates.push_back(Gate::rotation(i % register_width, axis, angle));
  }
  return Circuit(register_width, std::move(gates));
}

PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 3) throw InvalidArgument("power-law fit needs at least 3 points");
  const auto m = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) throw InvalidArgument("power-law fit needs positive data");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = m * sxx - sx * sx;
  if (std::abs(denom) < 1e-14) throw InvalidArgument("power-law fit is degenerate");
  PowerLawFit fit;
  fit.alpha = (m * sxy - sx * sy) / denom;
  const double intercept = (sy - fit.alpha * sx) / m;
  fit.prefactor = std::exp(intercept);
  double ss = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double r = std::log(y[i]) - (intercept + fit.alpha * std::log(x[i]));
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / m);
  return fit;
}

namespace {

void check_scan(const std::vector<int>& n_values, const GapScanOptions& opt) {
  if (n_values.size() < 3) throw InvalidArgument("gap scan needs at least 3 n values");
  for (size_t i = 0; i < n_values.size(); ++i) {
    if (n_values[i] < 2 || n_values[i] % 2 != 0) throw InvalidArgument("gap scan n values must be even and >= 2");
    if (i > 0 && n_values[i] <= n_values[i - 1]) throw InvalidArgument("gap scan n values must be increasing");
  }
  if (opt.s_grid.size() < 21) throw InvalidArgument("gap scan needs at least 21 s points");
  for (double s : opt.s_grid) check_schedule_parameter(s);
}

GapScanResult summarize(const std::vector<int>& n_values, const GapScanOptions& opt,
                        std::vector<GapPoint> points) {
  GapScanResult r;
  r.points = std::move(points);
  const size_t ns = opt.s_grid.size();
  std::vector<double> xs, ys;
  for (size_t a = 0; a < n_values.size(); ++a) {
    GapScanRow row{n_values[a], std::numeric_limits<double>::infinity(), 0.0};
    for (size_t b = 0; b < ns; ++b) {
      const GapPoint& p = r.points[a * ns + b];
      if (p.gap < row.min_gap) {
        row.min_gap = p.gap;
        row.argmin_s = p.s;
      }
    }
    r.rows.push_back(row);
    xs.push_back(row.n);
    ys.push_back(row.min_gap);
  }
  const PowerLawFit fit = fit_power_law(xs, ys);
  r.alpha = fit.alpha;
  r.prefactor = fit.prefactor;
  r.residual = fit.residual;
  return r;
}

std::vector<PointerModel> build_models(const CircuitFamily& family, const std::vector<int>& n_values,
                                       const GapScanOptions& opt) {
  std::vector<PointerModel> models;
  for (int n : n_values) models.emplace_back(family(n), opt.J, opt.M);
  return models;
}

}  // namespace

GapScanResult gap_scan(const CircuitFamily& family, const std::vector<int>& n_values,
                       const GapScanOptions& options) {
  check_scan(n_values, options);
  const auto models = build_models(family, n_values, options);
  const double tol = options.zero_tol > 0 ? options.zero_tol : 1e-6 * std::max(options.J, options.M);
  const auto ns = static_cast<long>(options.s_grid.size());
  const long total = static_cast<long>(models.size()) * ns;
  std::vector<GapPoint> points(static_cast<size_t>(total));

  // each slot is written by exactly one iteration, so the merge order is fixed
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < total; ++idx) {
    const auto a = static_cast<size_t>(idx / ns);
    const auto b = static_cast<size_t>(idx % ns);
    try {
      const double s = options.s_grid[b];
      points[static_cast<size_t>(idx)] = {n_values[a], s, gap_at(models[a], s, tol)};
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return summarize(n_values, options, std::move(points));
}

GapScanResult gap_scan_serial(const CircuitFamily& family, const std::vector<int>& n_values,
                              const GapScanOptions& options) {
  check_scan(n_values, options);
  const auto models = build_models(family, n_values, options);
  const double tol = options.zero_tol > 0 ? options.zero_tol : 1e-6 * std::max(options.J, options.M);
  std::vector<GapPoint> points;
  for (size_t a = 0; a < models.size(); ++a) {
    for (double s : options.s_grid) points.push_back({n_values[a], s, gap_at(models[a], s, tol)});
  }
  return summarize(n_values, options, std::move(points));
}

}  // namespace stirap
