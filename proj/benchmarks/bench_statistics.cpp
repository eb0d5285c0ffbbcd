// Copyright 2026 The Authors.
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

#include <benchmark/benchmark.h>

#include <random>

#include "agora/statistics.hpp"

namespace {

std::vector<double> sample(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z;
  std::vector<double> out(n);
  for (auto& v : out) v = z(rng);
  return out;
}

void BM_MannWhitney(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = sample(n, 1), b = sample(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(agora::mann_whitney_u(a, b));
}
BENCHMARK(BM_MannWhitney)->Arg(10)->Arg(35)->Arg(1000);

void BM_Wilcoxon(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = sample(n, 3), b = sample(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(agora::wilcoxon_signed_rank(a, b));
}
BENCHMARK(BM_Wilcoxon)->Arg(20)->Arg(35)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
