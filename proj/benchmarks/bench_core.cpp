/*
 * Copyright 2026 The flatstring Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "flatstring/canonical.hpp"
#include "flatstring/corpus.hpp"
#include "flatstring/equivalence.hpp"
#include "flatstring/moves.hpp"
#include "flatstring/search.hpp"
#include "flatstring/surface.hpp"

using namespace flatstring;

namespace {

const GaussCode& left_code() {
  static const auto code = builtin_entry("interchange_left").code();
  return code;
}

GaussCode scrambled(std::size_t added) {
  const auto seed = builtin_entry("irreducible_1string").code();
  return scramble(seed, 7, 3 * added, seed.crossing_count() + added).code;
}

void BM_CanonicalForm(benchmark::State& state) {
  const auto code = scrambled(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(code));
  state.counters["crossings"] = static_cast<double>(code.crossing_count());
}
BENCHMARK(BM_CanonicalForm)->Arg(0)->Arg(4)->Arg(8);

void BM_CanonicalInterchange(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(left_code()));
}
BENCHMARK(BM_CanonicalInterchange);

void BM_TraceFaces(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(trace_faces(left_code()));
}
BENCHMARK(BM_TraceFaces);

void BM_EnumerateAll(benchmark::State& state) {
  const auto budget = left_code().crossing_count() + static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(left_code(), budget));
}
BENCHMARK(BM_EnumerateAll)->Arg(0)->Arg(2);

void BM_Type3Orbit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(type3_orbit(left_code()));
}
BENCHMARK(BM_Type3Orbit);

void BM_Reduce(benchmark::State& state) {
  const auto code = scrambled(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_monotone(code));
}
BENCHMARK(BM_Reduce)->Arg(4)->Arg(8);

void BM_InterchangeWitness(benchmark::State& state) {
  const auto right = builtin_entry("interchange_right").code();
  EquivalenceLimits lim;
  lim.budget = 10;
  for (auto _ : state) benchmark::DoNotOptimize(equivalent_bounded(left_code(), right, lim));
}
BENCHMARK(BM_InterchangeWitness)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
