// Copyright 2026 The utree Authors
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

// Compares the OpenMP triple scan against the serial reference on random
// valid spaces (worst case: no early exit).

#include <random>

#include "benchmark/benchmark.h"
#include "utree/random_gen.hpp"
#include "utree/ultrametric.hpp"

namespace utree {
namespace {

FiniteUltrametricSpace MakeSpace(int n) {
  std::mt19937 rng(12345);
  return RandomUltrametric(rng, n);
}

void BM_ValidateParallel(benchmark::State& state) {
  const FiniteUltrametricSpace u = MakeSpace(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ValidateUltrametric(u.labels(), u.matrix()));
  }
}
BENCHMARK(BM_ValidateParallel)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

void BM_ValidateSerial(benchmark::State& state) {
  const FiniteUltrametricSpace u = MakeSpace(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ValidateUltrametricSerial(u.labels(), u.matrix()));
  }
}
BENCHMARK(BM_ValidateSerial)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

}  // namespace
}  // namespace utree

BENCHMARK_MAIN();
