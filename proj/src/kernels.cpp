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

#include "stirap/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stirap::kernels {
namespace {

using ConstBlock = Eigen::Map<const CVector>;
using Block = Eigen::Map<CVector>;

void check(const ChainView& chain, std::span<const complex_t> in, std::span<complex_t> out) {
  const auto dim = static_cast<size_t>(chain.dimension());
  const auto bonds = static_cast<size_t>(chain.sites > 0 ? chain.sites - 1 : 0);
  if (in.size() != dim || out.size() != dim) throw InvalidArgument("chain_apply: dimension mismatch");
  if (chain.weights.size() != bonds || chain.blocks.size() != bonds ||
      chain.is_identity.size() != bonds) {
    throw InvalidArgument("chain_apply: malformed chain");
  }
}

// out_k = w_{k-1} B_{k-1} in_{k-1} + w_k B_k^dagger in_{k+1}
inline void apply_site(const ChainView& c, Index k, const complex_t* in, complex_t* out) {
  const Index d = c.block_dim;
  Block dst(out + k * d, d);
  dst.setZero();
  if (k > 0) {
    const auto b = static_cast<size_t>(k - 1);
    const double w = c.weights[b];
    if (w != 0.0) {
      ConstBlock src(in + (k - 1) * d, d);
      if (c.is_identity[b]) {
        dst.noalias() += w * src;
      } else {
        dst.noalias() += w * (c.blocks[b] * src);
      }
    }
  }
  if (k + 1 < c.sites) {
    const auto b = static_cast<size_t>(k);
    const double w = c.weights[b];
    if (w != 0.0) {
      ConstBlock src(in + (k + 1) * d, d);
      if (c.is_identity[b]) {
        dst.noalias() += w * src;
      } else {
        dst.noalias() += w * (c.blocks[b].adjoint() * src);
      }
    }
  }
}

}  // namespace

void chain_apply_serial(const ChainView& chain, std::span<const complex_t> in,
                        std::span<complex_t> out) {
  check(chain, in, out);
  for (Index k = 0; k < chain.sites; ++k) apply_site(chain, k, in.data(), out.data());
}

void chain_apply_omp(const ChainView& chain, std::span<const complex_t> in,
                     std::span<complex_t> out) {
  check(chain, in, out);
  const Index sites = chain.sites;
  const complex_t* src = in.data();
  complex_t* dst = out.data();
#pragma omp parallel for schedule(static)
  for (Index k = 0; k < sites; ++k) apply_site(chain, k, src, dst);
}

std::vector<double> site_weights_serial(std::span<const complex_t> psi, Index sites,
                                        Index block_dim) {
  if (static_cast<Index>(psi.size()) != sites * block_dim) {
    throw InvalidArgument("site_weights: dimension mismatch");
  }
  std::vector<double> w(static_cast<size_t>(sites), 0.0);
  for (Index k = 0; k < sites; ++k) {
    double acc = 0.0;
    for (Index r = 0; r < block_dim; ++r) acc += std::norm(psi[static_cast<size_t>(k * block_dim + r)]);
    w[static_cast<size_t>(k)] = acc;
  }
  return w;
}

std::vector<double> site_weights_omp(std::span<const complex_t> psi, Index sites,
                                     Index block_dim) {
  if (static_cast<Index>(psi.size()) != sites * block_dim) {
    throw InvalidArgument("site_weights: dimension mismatch");
  }
  std::vector<double> w(static_cast<size_t>(sites), 0.0);
  // one writer per site; the inner sum order matches the serial kernel
#pragma omp parallel for schedule(static)
  for (Index k = 0; k < sites; ++k) {
    double acc = 0.0;
    for (Index r = 0; r < block_dim; ++r) acc += std::norm(psi[static_cast<size_t>(k * block_dim + r)]);
    w[static_cast<size_t>(k)] = acc;
  }
  return w;
}

int omp_max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace stirap::kernels
