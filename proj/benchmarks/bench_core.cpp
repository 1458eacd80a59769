// Copyright 2026 The aunital Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "aunital/bounds.hpp"
#include "aunital/detect.hpp"
#include "aunital/gallery.hpp"

using namespace aunital;

namespace {

// Argument: local dimension d of a d x d bipartite system.
void BM_HermitianEig(benchmark::State &state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto rho = random_state(SubsystemLayout::bipartite(d, d), d * d, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eig(rho.matrix()));
  }
}
BENCHMARK(BM_HermitianEig)->DenseRange(2, 4);

void BM_ApplyChannel(benchmark::State &state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto layout = SubsystemLayout::bipartite(d, d);
  const auto ch = random_channel(layout, d * d, 2);
  const auto rho = random_state(layout, d * d, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply(ch, rho));
  }
}
BENCHMARK(BM_ApplyChannel)->DenseRange(2, 4);

void BM_ConditionalEntropy(benchmark::State &state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto rho = random_state(SubsystemLayout::bipartite(d, d), d * d, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(conditional_entropy(rho, {"A"}));
  }
}
BENCHMARK(BM_ConditionalEntropy)->DenseRange(2, 4);

void BM_IsAUnital(benchmark::State &state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto sp = swap_and_prepare(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_a_unital(sp));
  }
}
BENCHMARK(BM_IsAUnital)->DenseRange(2, 4);

void BM_FindCveDecrease(benchmark::State &state) {
  const auto sp = swap_and_prepare(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_cve_decrease(sp, 100, 5));
  }
}
BENCHMARK(BM_FindCveDecrease);

void BM_CveBounds(benchmark::State &state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cve_bounds(0.7 * std::log2(static_cast<double>(d)), d));
  }
}
BENCHMARK(BM_CveBounds)->DenseRange(2, 4);

} // namespace

BENCHMARK_MAIN();
