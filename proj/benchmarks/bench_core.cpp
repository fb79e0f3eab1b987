// Copyright 2026 The lct Authors
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


#include <cmath>
#include <cstdint>

#include <benchmark/benchmark.h>

#include "lct/lct.hpp"

namespace {

lct::Signature signature_for(std::int64_t n) {
  return lct::Signature(1, static_cast<std::size_t>(n - 1));
}

void BM_Compose(benchmark::State& state) {
  const lct::Signature sig = signature_for(state.range(0));
  const lct::BlockLCT x = lct::random_lct(sig, 1, 0.5, lct::GeneratorFamily::Full);
  const lct::BlockLCT y = lct::random_lct(sig, 2, 0.5, lct::GeneratorFamily::Full);
  for (auto _ : state) benchmark::DoNotOptimize(lct::compose(x, y));
}
BENCHMARK(BM_Compose)->DenseRange(1, 4);

void BM_MatrixExponential(benchmark::State& state) {
  const lct::Signature sig = signature_for(state.range(0));
  const lct::Generator g = lct::random_generator(sig, 3, 0.5, lct::GeneratorFamily::Full);
  const lct::Matrix x = g.assembled();
  for (auto _ : state) benchmark::DoNotOptimize(lct::matrix_exponential(x));
}
BENCHMARK(BM_MatrixExponential)->DenseRange(1, 4);

lct::SampledSignal gaussian(std::size_t n) {
  const lct::Grid grid(-12.0, 24.0 / static_cast<double>(n - 1), n);
  lct::CVector v(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const double t = grid.at(k);
    v(static_cast<Eigen::Index>(k)) = std::exp(-0.5 * t * t);
  }
  return lct::SampledSignal(grid, v);
}

void BM_ApplyLct(benchmark::State& state) {
  const lct::SampledSignal s = gaussian(static_cast<std::size_t>(state.range(0)));
  const lct::LCT1D l = lct::fractional_fourier_params(0.4);
  for (auto _ : state) benchmark::DoNotOptimize(lct::apply_lct(l, s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApplyLct)->RangeMultiplier(2)->Range(128, 1024)->Complexity(benchmark::oNSquared);

void BM_DftOracle(benchmark::State& state) {
  const lct::SampledSignal s = gaussian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lct::dft_oracle(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DftOracle)->RangeMultiplier(2)->Range(128, 1024)->Complexity(benchmark::oNSquared);

}  // namespace

BENCHMARK_MAIN();
