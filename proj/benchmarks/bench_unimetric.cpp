// Copyright 2026 The unimetric Authors
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

#include "unimetric/metrics.hpp"
#include "unimetric/numrange.hpp"
#include "unimetric/pauli.hpp"
#include "unimetric/subsets.hpp"

namespace {

using namespace unimetric;

void BM_ValidateUnitary(benchmark::State& state) {
  const auto n = static_cast<Index>(state.range(0));
  const ComplexMatrix m = haar_random_unitary(n, 1).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(validate_unitary(m));
}
BENCHMARK(BM_ValidateUnitary)->RangeMultiplier(2)->Range(2, 256);

void BM_SupDistance(benchmark::State& state) {
  const auto n = static_cast<Index>(state.range(0));
  const auto u = haar_random_unitary(n, 1), v = haar_random_unitary(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(sup_distance(u, v).value);
}
BENCHMARK(BM_SupDistance)->RangeMultiplier(2)->Range(2, 256);

void BM_NumericalRange(benchmark::State& state) {
  const auto n = static_cast<Index>(state.range(0));
  std::mt19937_64 rng(3);
  const ComplexMatrix m = haar_random_unitary(n, rng).matrix().topLeftCorner(n / 2 + 1, n / 2 + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(numrange_origin_distance(NumericalRangeQuery{m}).distance);
  }
}
BENCHMARK(BM_NumericalRange)->RangeMultiplier(2)->Range(2, 64);

void BM_SeparableDistance(benchmark::State& state) {
  const auto m = static_cast<Index>(state.range(0));
  const auto u = haar_random_unitary(m * m, 4), v = haar_random_unitary(m * m, 5);
  SeparableProblem p;
  p.dim_a = p.dim_b = m;
  p.restarts = 8;
  for (auto _ : state) benchmark::DoNotOptimize(separable_distance(u, v, p).value);
}
BENCHMARK(BM_SeparableDistance)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_StabilizerFaces(benchmark::State& state) {
  const PauliSubgroup k(parse_pauli_list("ZZIIII,IZZIII,IIZZII,IIIZZI,IIIIZZ"));
  for (auto _ : state) benchmark::DoNotOptimize(stabilizer_subspace(k).faces.size());
}
BENCHMARK(BM_StabilizerFaces)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
