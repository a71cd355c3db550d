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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stirap/circuit.hpp"
#include "stirap/kernels.hpp"

namespace stirap {

/// Amplitudes on the (counter chain) x (register) space. Composite index is
/// counter_site * 2^N + register_index, counter sites 0..n+2.
struct PointerState {
  CVector amplitudes;
  Index sites = 0;
  Index register_dim = 0;

  double norm() const { return amplitudes.norm(); }
  /// Register amplitudes on one counter site.
  CVector site(Index k) const { return amplitudes.segment(k * register_dim, register_dim); }
};

/// The interpolated pointer Hamiltonian
///
///   H(s) = (1 - s) H_init + s H_final
///
/// on n + 3 counter sites. Bond (0,1) carries s*J, bond (n+1,n+2) carries
/// (1-s)*J, and bond (i,i+1) for i = 1..n carries M with hopping
/// i -> i+1 applying U_i and i+1 -> i applying U_i^dagger. Energies use
/// hbar = 1.
class PointerModel {
 public:
  /// Throws InvalidArgument unless J > 0 and M > 0.
  PointerModel(Circuit circuit, double J = 1.0, double M = 10.0);

  const Circuit& circuit() const { return circuit_; }
  double J() const { return J_; }
  double M() const { return M_; }
  int gate_count() const { return circuit_.gate_count(); }
  Index sites() const { return gate_count() + 3; }
  Index register_dim() const { return circuit_.register_dim(); }
  Index dimension() const { return sites() * register_dim(); }

  /// Non-fatal advisory when M/J < 5.
  std::optional<std::string> warning() const;

  /// Hopping strength of bond (k, k+1) at s; throws on s outside [0,1].
  double bond_weight(Index bond, double s) const;
  /// Block applied when hopping k -> k+1 across bond k.
  const CMatrix& bond_block(Index bond) const { return blocks_[static_cast<size_t>(bond)]; }

  /// Dense H(s).
  CMatrix dense(double s) const;
  /// out = H(s) in, matrix-free.
  void apply(double s, std::span<const complex_t> in, std::span<complex_t> out) const;
  CVector apply(double s, const CVector& in) const;

  /// Chain view at s. `weights` must outlive the view.
  kernels::ChainView chain(std::span<const double> weights) const;
  std::vector<double> weights(double s) const;

  /// Upper bound on the spectral norm of H(s): max_k (w_{k-1} + w_k).
  double norm_bound(double s) const;
  /// max over s in [0,1] of norm_bound(s).
  double norm_bound() const;

  /// U_n ... U_1
  const CMatrix& full_product() const { return product_; }
  /// U_k ... U_1 for k = 0..n (k = 0 is the identity).
  const CMatrix& prefix_product(int k) const { return prefix_[static_cast<size_t>(k)]; }

 private:
  Circuit circuit_;
  double J_;
  double M_;
  std::vector<CMatrix> blocks_;
  std::vector<char> is_identity_;
  std::vector<CMatrix> prefix_;
  CMatrix product_;
};

void check_schedule_parameter(double s);

/// |0>_c |phi>_r. phi must have dimension 2^N and unit norm within 1e-12.
PointerState initial_state(const PointerModel& model, const CVector& phi);

/// |n+2>_c (U_n ... U_1) |phi>_r.
PointerState target_state(const PointerModel& model, const CVector& phi);

/// Exact zero mode of H(s) seeded by phi (unnormalized):
///   site 0:      (1-s) J phi
///   site 2i:     (-1)^i s(1-s) J^2/M (U_{2i-1} ... U_1) phi,  i = 1..n/2
///   site n+2:    (-1)^{n/2+1} s J (U_n ... U_1) phi
/// and zero on odd sites.
PointerState analytic_dark_state(const PointerModel& model, double s, const CVector& phi);

/// Normalized population of each counter site. Throws on the zero vector.
std::vector<double> site_populations(const PointerState& psi);

/// Computational basis vector e_r of the register.
CVector register_basis_state(const PointerModel& model, Index r);

}  // namespace stirap
