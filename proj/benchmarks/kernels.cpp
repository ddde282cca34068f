// Copyright 2026 The Rainbow Authors
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

// Micro-benchmarks for the main pipeline stages. Each kernel builds its
// instance outside the timed loop from a fixed seed.

#include <cmath>
#include <cstdint>

#include <benchmark/benchmark.h>

#include "rainbow/census.hpp"
#include "rainbow/colouring.hpp"
#include "rainbow/oracles.hpp"
#include "rainbow/path_forest.hpp"
#include "rainbow/rotation_glue.hpp"
#include "rainbow/tree.hpp"
#include "rainbow/tree_embed.hpp"

namespace rainbow {
namespace {

void BM_RandomLatinSquare(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_latin_square(n, seed++));
}
BENCHMARK(BM_RandomLatinSquare)->Arg(256)->Arg(1024);

void BM_PathForest(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EdgeColouring c = latin_to_colouring(random_latin_square(n, 1));
  const double gamma = std::cbrt(1.0 / n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(long_rainbow_path_forest(c, full_mask(c), gamma, 2 * gamma));
  }
}
BENCHMARK(BM_PathForest)->Arg(125)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_RainbowCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EdgeColouring c = latin_to_colouring(random_latin_square(n, 2));
  const CycleParams params = cycle_preset("desk", n);
  for (auto _ : state) benchmark::DoNotOptimize(long_rainbow_cycle(c, params, 3));
}
BENCHMARK(BM_RainbowCycle)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

void BM_EmbedTree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EdgeColouring c = round_robin_colouring(n);
  const TreeSpec t = random_tree(n, 4, 4);
  const EmbedParams params = embed_preset("desk");
  for (auto _ : state) benchmark::DoNotOptimize(embed_tree(c, t, 5, params));
}
BENCHMARK(BM_EmbedTree)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_ExactCensus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EdgeColouring c = round_robin_colouring(n);
  const TreeSpec t = random_tree(n, 4, 6);
  const PartialEmbedding partial = rge(c, t, order_vertices(t), 6).partial;
  for (auto _ : state) benchmark::DoNotOptimize(bad_event_census(c, t, partial, CensusMode::exact));
}
BENCHMARK(BM_ExactCensus)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ForestOracle(benchmark::State& state) {
  const EdgeColouring c = latin_to_colouring(random_latin_square(static_cast<int>(state.range(0)), 7));
  for (auto _ : state) benchmark::DoNotOptimize(brute_max_rainbow_path_forest(c));
}
BENCHMARK(BM_ForestOracle)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace rainbow

BENCHMARK_MAIN();
