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

#pragma once

#include <functional>
#include <vector>

#include "stirap/pointer_model.hpp"

namespace stirap {

/// Dimension cap for the dense Hermitian eigensolver.
inline constexpr Index kDenseEigenCap = 8192;

struct SpectrumResult {
  RVector eigenvalues;    // ascending
  CMatrix eigenvectors;   // orthonormal columns, same order
  CMatrix zero_space;     // columns with |lambda| < zero_tol
  double zero_tol = 0.0;
  double gap = 0.0;       // min |lambda| outside the zero space (0 if none)
  double gap_below = 0.0; // distance to the nearest negative level outside the zero space
  double gap_above = 0.0; // distance to the nearest positive level outside the zero space
  double max_residual = 0.0;
};

/// Full spectrum of a Hermitian matrix. Throws InvalidArgument if `h` is not
/// Hermitian within 1e-10 or exceeds kDenseEigenCap.
SpectrumResult eigendecompose(const CMatrix& h, double zero_tol);

/// Default zero tolerance 1e-6 * max(J, M).
double default_zero_tol(const PointerModel& model);

/// Gap between the 2^N-fold zero level and the nearest other level at s.
/// Throws InvariantViolation if the zero space does not have dimension 2^N
/// or the gaps above and below differ by more than 1e-9.
double gap_at(const PointerModel& model, double s, double zero_tol);
double gap_at(const PointerModel& model, double s);

/// Uniform grid of `points` values from 0 to 1 inclusive.
std::vector<double> uniform_grid(int points);

using CircuitFamily = std::function<Circuit(int n)>;

/// n identity gates on a `register_width`-qubit register (rotations by 0).
Circuit identity_circuit(int n, int register_width = 1);

/// n single-qubit rotations with axis uniform on the sphere (from two
/// uniform deviates) and angle uniform in [0, 2 pi), seeded mt19937_64,
/// targets cycling over the register.
Circuit random_rotation_circuit(int n, int register_width, std::uint64_t seed);

struct GapPoint {
  int n = 0;
  double s = 0.0;
  double gap = 0.0;
};

struct GapScanRow {
  int n = 0;
  double min_gap = 0.0;
  double argmin_s = 0.0;
};

struct GapScanResult {
  std::vector<GapPoint> points;  // ordered by (n, s)
  std::vector<GapScanRow> rows;  // ordered by n
  double alpha = 0.0;            // gap ~ prefactor * n^alpha
  double prefactor = 0.0;
  double residual = 0.0;         // RMS residual of the log-log fit
};

struct GapScanOptions {
  double J = 1.0;
  double M = 10.0;
  std::vector<double> s_grid = uniform_grid(101);
  double zero_tol = 0.0;  // 0 selects 1e-6 * max(J, M)
};

/// Minimum gap over the s grid for each n, plus a least-squares fit of
/// log(gap) against log(n). Points are evaluated in parallel and merged in
/// (n, s) order. Throws InvalidArgument for odd or unsorted n, fewer than 3
/// n values, or fewer than 21 grid points.
GapScanResult gap_scan(const CircuitFamily& family, const std::vector<int>& n_values,
                       const GapScanOptions& options);
/// Single-threaded reference for gap_scan.
GapScanResult gap_scan_serial(const CircuitFamily& family, const std::vector<int>& n_values,
                              const GapScanOptions& options);

struct PowerLawFit {
  double alpha = 0.0;
  double prefactor = 0.0;
  double residual = 0.0;
};

PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace stirap
