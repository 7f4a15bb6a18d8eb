// Copyright 2026 The knotgirth Authors
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


#include <random>

#include <benchmark/benchmark.h>

#include "knotgirth/estimators.hpp"
#include "knotgirth/jones.hpp"
#include "knotgirth/jones_rep.hpp"
#include "knotgirth/random_diagrams.hpp"
#include "knotgirth/seifert.hpp"

namespace {

using namespace knotgirth;

// Linear in length at fixed girth while coefficients fit in 64 bits; past
// roughly 250 crossings they do not (see BM_JonesBigIntegers).
void BM_JonesTraceByLength(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto d = trace_closure(random_braid(rng, 6, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(jones_at_root(d, 5));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_JonesTraceByLength)->Arg(25)->Arg(50)->Arg(100)->Arg(200)->Complexity(benchmark::oN);

// ...and exponential in girth at fixed length.
void BM_JonesTraceByStrands(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto d = trace_closure(random_braid(rng, static_cast<int>(state.range(0)), 100));
  for (auto _ : state) benchmark::DoNotOptimize(jones_at_root(d, 7));
}
BENCHMARK(BM_JonesTraceByStrands)->DenseRange(2, 9);

void BM_JonesBigIntegers(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto d = trace_closure(random_braid(rng, 6, 200));
  for (auto _ : state) {
    benchmark::DoNotOptimize(jones_at_root(d, 5, nullptr, {.force_big_integers = true}));
  }
}
BENCHMARK(BM_JonesBigIntegers);

void BM_StateSumOracle(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto d = trace_closure(random_braid(rng, 4, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(bracket_statesum_tally(d));
}
BENCHMARK(BM_StateSumOracle)->DenseRange(8, 16, 4);

void BM_Vogel(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const auto d = plat_closure(random_braid(rng, 6, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(vogel_braiding(d));
}
BENCHMARK(BM_Vogel)->Arg(10)->Arg(40);

void BM_CompileBraid(benchmark::State& state) {
  std::mt19937_64 rng(6);
  const int n = static_cast<int>(state.range(0));
  const auto b = random_braid(rng, n, 50);
  const qsim::PathBasis basis(n, 5, Closure::Trace);
  for (auto _ : state) benchmark::DoNotOptimize(qsim::compile_braid(b, basis));
}
BENCHMARK(BM_CompileBraid)->DenseRange(2, 8, 2);

void BM_TraceEstimator(benchmark::State& state) {
  const auto b = parse_braid("1 -2 3 -2 1", 4);
  const auto model = qsim::trace_outcome_model(b, 5);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsim::sample_estimate(model, {0.05, ++seed, std::nullopt}));
  }
}
BENCHMARK(BM_TraceEstimator);

}  // namespace

BENCHMARK_MAIN();
