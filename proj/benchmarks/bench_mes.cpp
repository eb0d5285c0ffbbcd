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

#include "agora/mes.hpp"

namespace {

// Bloc-structured election with costs in whole francs.
agora::Election make(int voters, int projects, agora::Money budget) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<agora::Money> cost(20, 600);
  std::bernoulli_distribution own(0.5), other(0.08);
  agora::ElectionDraft d;
  for (int p = 0; p < projects; ++p) {
    const std::string id = "P" + std::to_string(p);
    d.projects.push_back({id, id, cost(rng) * 100, {}});
  }
  for (int v = 0; v < voters; ++v) {
    const std::string id = "V" + std::to_string(v);
    d.voters.push_back({id, {}});
    agora::ApprovalBallot b{id, {}};
    for (int p = 0; p < projects; ++p) {
      if ((p % 4 == v % 4) ? own(rng) : other(rng)) b.approved.insert(d.projects[p].id);
    }
    d.ballots.push_back(std::move(b));
  }
  d.total_budget = budget;
  return agora::validate_election(std::move(d));
}

void BM_MesFixedStart(benchmark::State& state) {
  const auto e = make(static_cast<int>(state.range(0)), 56, 380000);
  const agora::Rational start(380000, static_cast<agora::Money>(e.voter_count()));
  for (auto _ : state) benchmark::DoNotOptimize(agora::mes_fixed_start(e, start));
}
BENCHMARK(BM_MesFixedStart)->Arg(35)->Arg(200)->Arg(1000);

void BM_MesComplete(benchmark::State& state) {
  const auto e = make(static_cast<int>(state.range(0)), 56, 380000);
  for (auto _ : state) benchmark::DoNotOptimize(agora::mes_complete(e, {state.range(1)}));
}
BENCHMARK(BM_MesComplete)->Args({35, 1})->Args({35, 100})->Unit(benchmark::kMillisecond);

void BM_Greedy(benchmark::State& state) {
  const auto e = make(1000, 56, 380000);
  for (auto _ : state) benchmark::DoNotOptimize(agora::greedy(e));
}
BENCHMARK(BM_Greedy);

}  // namespace

BENCHMARK_MAIN();
