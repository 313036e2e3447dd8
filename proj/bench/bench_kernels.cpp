// Copyright 2026 The Lookahead Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial reference versus OpenMP kernels over full profile spaces.

#include <benchmark/benchmark.h>

#include "lookahead/analysis.hpp"
#include "lookahead/games.hpp"
#include "lookahead/kernels.hpp"

namespace {

using namespace lookahead;

const CongestionGame& bench_game() {
  static const CongestionGame game = [] {
    SncgParams p;
    p.players = 6;
    p.term_size = 9;
    p.max_delay = 100;
    p.ep_only = false;
    return random_sncg(2026, p).game;
  }();
  return game;
}

void BM_NashSerial(benchmark::State& state) {
  const CongestionCosts costs(bench_game());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::enumerate_nash(costs, {}));
  state.counters["profiles"] = static_cast<double>(profile_count(costs.action_counts()));
}

void BM_NashParallel(benchmark::State& state) {
  const CongestionCosts costs(bench_game());
  kernels::set_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::enumerate_nash(costs, {}));
  state.counters["profiles"] = static_cast<double>(profile_count(costs.action_counts()));
}

void BM_PotentialSerial(benchmark::State& state) {
  const CongestionGame& g = bench_game();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::serial::argmin_profiles(
        g.action_counts(), [&](const ActionProfile& a) { return rosenthal_potential(g, a); }, {}));
  }
}

void BM_PotentialParallel(benchmark::State& state) {
  const CongestionGame& g = bench_game();
  kernels::set_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::argmin_profiles(
        g.action_counts(), [&](const ActionProfile& a) { return rosenthal_potential(g, a); }, {}));
  }
}

}  // namespace

BENCHMARK(BM_NashSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NashParallel)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PotentialSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PotentialParallel)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
