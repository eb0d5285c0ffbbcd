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

#include "agora/clustering.hpp"

namespace {

void BM_Project2d(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(7);
  std::bernoulli_distribution b(0.3);
  agora::DenseMatrix x(n, m);
  std::vector<agora::VoterId> ids;
  for (std::size_t r = 0; r < n; ++r) {
    ids.push_back("v" + std::to_string(r));
    for (std::size_t c = 0; c < m; ++c) x(r, c) = b(rng) ? 1.0 : 0.0;
  }
  for (auto _ : state) benchmark::DoNotOptimize(agora::project_2d(x, ids));
}
BENCHMARK(BM_Project2d)->Args({35, 56})->Args({40, 60})->Args({1000, 200});

void BM_RadialPartitionAndMix(benchmark::State& state) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> a(0, 360);
  std::vector<agora::OpinionPoint> pts;
  for (int i = 0; i < state.range(0); ++i) pts.push_back({"v" + std::to_string(i), 0, 0, a(rng)});
  for (auto _ : state) {
    const auto h = agora::radial_partition(pts, 6);
    benchmark::DoNotOptimize(agora::mix_groups(h));
  }
}
BENCHMARK(BM_RadialPartitionAndMix)->Arg(35)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
