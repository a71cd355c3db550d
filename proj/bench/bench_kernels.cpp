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

// Serial reference kernels against their OpenMP counterparts.

#include <random>

#include <benchmark/benchmark.h>

#include "stirap/kernels.hpp"
#include "stirap/pointer_model.hpp"
#include "stirap/spectral.hpp"

using namespace stirap;

namespace {

struct Fixture {
  PointerModel model;
  CVector in, out;
  explicit Fixture(int n, int width) : model(random_rotation_circuit(n, width, 3), 1.0, 10.0) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    in.resize(model.dimension());
    for (Index i = 0; i < in.size(); ++i) in(i) = complex_t(g(rng), g(rng));
    out.resize(in.size());
  }
};

template <bool Parallel>
void BM_ChainApply(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto weights = f.model.weights(0.5);
  const auto chain = f.model.chain(weights);
  std::span<const complex_t> in(f.in.data(), static_cast<size_t>(f.in.size()));
  std::span<complex_t> out(f.out.data(), static_cast<size_t>(f.out.size()));
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::chain_apply_omp(chain, in, out);
    } else {
      kernels::chain_apply_serial(chain, in, out);
    }
    benchmark::DoNotOptimize(f.out.data());
  }
  state.SetItemsProcessed(state.iterations() * f.in.size());
}

template <bool Parallel>
void BM_GapScan(benchmark::State& state) {
  GapScanOptions opt;
  opt.s_grid = uniform_grid(21);
  const CircuitFamily family = [](int n) { return identity_circuit(n); };
  const std::vector<int> ns{4, 8, 12, 16, 20};
  for (auto _ : state) {
    auto r = Parallel ? gap_scan(family, ns, opt) : gap_scan_serial(family, ns, opt);
    benchmark::DoNotOptimize(r.alpha);
  }
}

}  // namespace

BENCHMARK(BM_ChainApply<false>)->Args({16, 4})->Args({32, 6})->Args({48, 8});
BENCHMARK(BM_ChainApply<true>)->Args({16, 4})->Args({32, 6})->Args({48, 8});
BENCHMARK(BM_GapScan<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GapScan<true>)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
