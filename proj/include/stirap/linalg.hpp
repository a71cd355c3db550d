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

#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

namespace stirap {

using complex_t = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr complex_t kI{0.0, 1.0};

/// Raised when a documented precondition on an input value is violated.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computed result fails one of its own contracts
/// (e.g. a zero space of unexpected dimension).
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// max |A - A^dagger|
inline double hermiticity_defect(const CMatrix& a) {
  return max_abs(a - a.adjoint());
}

/// max |U^dagger U - I|
inline double unitarity_defect(const CMatrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols()));
}

namespace pauli {

inline CMatrix identity() { return CMatrix::Identity(2, 2); }

inline CMatrix x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline CMatrix y() {
  CMatrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

inline CMatrix z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

/// 2x2 matrix for letter 'I', 'X', 'Y' or 'Z' in the computational basis.
inline CMatrix letter(char c) {
  switch (c) {
    case 'I': return identity();
    case 'X': return x();
    case 'Y': return y();
    case 'Z': return z();
    default: throw InvalidArgument(std::string("unknown Pauli letter '") + c + "'");
  }
}

/// Tensor product of single-qubit letters, letters[0] acting on the
/// least-significant bit of the index.
inline CMatrix string_matrix(const std::string& letters) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (char c : letters) {
    // new letter becomes the more significant factor
    out = Eigen::kroneckerProduct(letter(c), out).eval();
  }
  return out;
}

}  // namespace pauli

}  // namespace stirap
