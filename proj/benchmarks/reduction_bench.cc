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
//
// Offline primitives: greedy over an intersection and the sample-based
// weight reduction that every online phase starts from.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "secretary/harness.h"
#include "secretary/matroid.h"
#include "secretary/offline.h"
#include "secretary/overlap.h"
#include "secretary/rng.h"

namespace secretary {
namespace {

void BM_GreedyIntersection(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SecretaryInstance instance =
      GenerateInstance(InstanceFamily::kBipartiteMatchingIntersection, n, 23);
  const TieBreakOrder order(instance.weights);
  for (auto _ : state) {
    benchmark::DoNotOptimize(GreedyIntersection(instance.constraint, instance.weights, order));
  }
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_ReducedWeights(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SecretaryInstance instance =
      GenerateInstance(InstanceFamily::kPartitionTransversal, n, 23);
  const TieBreakOrder order(instance.weights);
  Rng rng(5);
  const ElementSet sample = rng.SampleIndexSubset(n, n / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ComputeReducedWeights(instance.constraint, instance.weights, order, sample));
  }
  state.SetItemsProcessed(state.iterations() * n);
}

BENCHMARK(BM_GreedyIntersection)->Arg(32)->Arg(128)->Arg(512);
BENCHMARK(BM_ReducedWeights)->Arg(32)->Arg(128)->Arg(512);

}  // namespace
}  // namespace secretary
