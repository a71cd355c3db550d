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

#include <span>
#include <vector>

#include "stirap/linalg.hpp"

/// Data-parallel inner loops. Every kernel has a serial reference version
/// that the tests compare the OpenMP version against.
namespace stirap::kernels {

/// Read-only view of a nearest-neighbour hopping chain whose sites carry a
/// block_dim-dimensional internal space. Bond k joins sites k and k+1:
/// hopping k -> k+1 applies weights[k] * blocks[k], hopping k+1 -> k applies
/// weights[k] * blocks[k]^dagger. No on-site terms.
struct ChainView {
  Index sites = 0;
  Index block_dim = 0;
  std::span<const double> weights;     // sites - 1
  std::span<const CMatrix> blocks;     // sites - 1, each block_dim x block_dim
  std::span<const char> is_identity;   // sites - 1; skips the block product

  Index dimension() const { return sites * block_dim; }
};

/// out = H in. `in` and `out` must not alias.
void chain_apply_serial(const ChainView& chain, std::span<const complex_t> in,
                        std::span<complex_t> out);
void chain_apply_omp(const ChainView& chain, std::span<const complex_t> in,
                     std::span<complex_t> out);

/// Dimension above which chain_apply() switches to the OpenMP kernel.
inline constexpr Index kOmpThreshold = Index{1} << 12;

inline void chain_apply(const ChainView& chain, std::span<const complex_t> in,
                        std::span<complex_t> out) {
  if (chain.dimension() >= kOmpThreshold) {
    chain_apply_omp(chain, in, out);
  } else {
    chain_apply_serial(chain, in, out);
  }
}

/// Per-site populations sum_r |psi(k, r)|^2 (unnormalized).
std::vector<double> site_weights_serial(std::span<const complex_t> psi, Index sites,
                                        Index block_dim);
std::vector<double> site_weights_omp(std::span<const complex_t> psi, Index sites,
                                     Index block_dim);

/// Number of OpenMP threads available (1 when built without OpenMP).
int omp_max_threads();

}  // namespace stirap::kernels
