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

// Test-only reference computations. None of these call into the code paths
// they are used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cd = std::complex<double>;
using Mat2 = std::array<std::array<cd, 2>, 2>;

inline Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

/// Sturm count: number of eigenvalues below x of the symmetric tridiagonal
/// matrix with zero diagonal and off-diagonals `bonds`.
inline int count_below(const std::vector<double>& bonds, double x) {
  int count = 0;
  double q = -x;
  if (q < 0) ++count;
  for (double b : bonds) {
    if (q == 0) q = 1e-300;
    q = -x - b * b / q;
    if (q < 0) ++count;
  }
  return count;
}

/// All eigenvalues of the zero-diagonal tridiagonal chain by bisection on
/// the Sturm sequence, ascending.
inline std::vector<double> chain_eigenvalues(const std::vector<double>& bonds) {
  const int n = static_cast<int>(bonds.size()) + 1;
  double bound = 0.0;
  for (double b : bonds) bound = std::max(bound, 2 * b);
  bound += 1.0;
  std::vector<double> out;
  for (int k = 0; k < n; ++k) {
    double lo = -bound, hi = bound;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(bonds, mid) > k) hi = mid; else lo = mid;
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

/// Smallest |lambda| above `zero_tol` among the chain eigenvalues.
inline double chain_gap(const std::vector<double>& bonds, double zero_tol) {
  double gap = 1e300;
  for (double l : chain_eigenvalues(bonds)) {
    if (std::abs(l) >= zero_tol) gap = std::min(gap, std::abs(l));
  }
  return gap;
}

/// Orthonormal basis of the numerical null space of `h` via SVD.
inline Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& h, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(h, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) if (sv(i) > tol) ++rank;
  return svd.matrixV().rightCols(h.cols() - rank);
}

/// Haar-ish random unitary from the QR of a Gaussian matrix.
inline Eigen::MatrixXcd random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = cd(g(rng), g(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim);
}

/// Kronecker product of 2x2 factors; factors[0] acts on bit 0.
inline Eigen::MatrixXcd kron_chain(const std::vector<Eigen::MatrixXcd>& factors) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (const auto& f : factors) {
    Eigen::MatrixXcd next(out.rows() * f.rows(), out.cols() * f.cols());
    for (int i = 0; i < f.rows(); ++i)
      for (int j = 0; j < f.cols(); ++j) next.block(i * out.rows(), j * out.cols(), out.rows(), out.cols()) = f(i, j) * out;
    out = next;
  }
  return out;
}

}  // namespace oracle
