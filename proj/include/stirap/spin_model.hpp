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

#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "stirap/pointer_model.hpp"

namespace stirap {

enum class SpinSpace { Counter, Register };

struct SiteLetter {
  SpinSpace space;
  int index;
  char letter;  // 'X', 'Y' or 'Z'

  auto operator<=>(const SiteLetter&) const = default;
};

struct PauliTerm {
  double coefficient = 0.0;
  std::vector<SiteLetter> sites;  // sorted, at most one letter per site
};

/// Real-weighted sum of Pauli strings over counter spins 0..counter_spins-1
/// and register qubits 0..register_qubits-1.
///
/// Counter spins use the physical convention where spin up (Z = +1) is the
/// excitation. In the dense/sparse representation the counter spin c is bit
/// register_qubits + c of the basis index with bit value 1 = up; register
/// qubit r is bit r in the ordinary computational basis.
class PauliTermSum {
 public:
  PauliTermSum(int counter_spins, int register_qubits);

  int counter_spins() const { return counter_; }
  int register_qubits() const { return register_; }
  int total_spins() const { return counter_ + register_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }

  /// Adds a term, merging with an existing identical string. Terms whose
  /// merged coefficient falls below 1e-15 in magnitude are dropped.
  void add(double coefficient, std::vector<SiteLetter> sites);

  Eigen::SparseMatrix<complex_t> sparse() const;
  /// Dense matrix; throws above kDenseSpinCap spins.
  CMatrix dense() const;

  /// Largest number of letters in any term.
  int max_weight() const;

 private:
  int counter_;
  int register_;
  std::vector<PauliTerm> terms_;
};

/// Spin count limit for spin-model assembly.
inline constexpr int kSpinCap = 14;
/// Spin count limit for dense spin-model matrices.
inline constexpr int kDenseSpinCap = 12;

/// Expansion of a Hermitian matrix on k qubits in the Pauli basis; returns
/// (coefficient, letters) with letters[j] acting on local qubit j.
std::vector<std::pair<double, std::string>> pauli_expand(const CMatrix& hermitian);

/// Spin realization of H(s): boundary bonds (s J/2)(XX+YY) on counter (0,1)
/// and ((1-s) J/2)(XX+YY) on (n+1,n+2); gate bond i carries
/// (M/2)[H^s (XX+YY) + H^a (XY - YX)] on counter (i, i+1).
PauliTermSum build_spin_h(const PointerModel& model, double s);

/// Rows/columns of the sparse spin matrix with exactly one counter spin up,
/// ordered like PointerState (excitation site major, register index minor).
std::vector<Index> single_excitation_indices(int gate_count, int register_qubits);
/// Basis indices with no counter excitation.
std::vector<Index> zero_excitation_indices(int gate_count, int register_qubits);

CMatrix restrict_to_single_excitation(const Eigen::SparseMatrix<complex_t>& h_spin, int gate_count,
                                      int register_qubits);
CMatrix restrict_to_single_excitation(const CMatrix& h_spin, int gate_count, int register_qubits);
CMatrix restrict_to_indices(const Eigen::SparseMatrix<complex_t>& h_spin,
                            const std::vector<Index>& indices);

/// max |[H, sum_c Z_c]| over counter spins c.
double excitation_defect(const Eigen::SparseMatrix<complex_t>& h_spin, int counter_spins,
                         int register_qubits);

struct AuditEntry {
  std::string gate;
  std::string part;        // "symmetric" or "antisymmetric"
  std::string tabulated;   // printed form being checked
  double deviation = 0.0;  // max-abs difference, computed vs tabulated
  double scale = 1.0;      // factor applied to the tabulated form before comparing
  double scaled_deviation = 0.0;
  bool matches = false;
  std::string note;
};

/// Compares the computed Hermitian parts of the Hadamard, pi/8, rotation
/// and CNOT gates against the tabulated reference forms.
std::vector<AuditEntry> gate_table_audit();

}  // namespace stirap
