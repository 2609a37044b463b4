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
// Full online trials: one end-to-end execution per iteration, including
// arrival shuffling, sample merging, and the per-matroid inner algorithms.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "secretary/harness.h"
#include "secretary/rng.h"

namespace secretary {
namespace {

void RunTrials(benchmark::State& state, InstanceFamily family, AlgorithmKind kind) {
  const int n = static_cast<int>(state.range(0));
  const SecretaryInstance instance = GenerateInstance(family, n, 31);
  const TrialAlgorithm algorithm = MakeTrialAlgorithm(instance, kind, AlgorithmParams{});
  std::vector<ElementId> arrival(n);
  std::iota(arrival.begin(), arrival.end(), 0);
  std::uint64_t trial = 0;
  for (auto _ : state) {
    Rng rng(DeriveStream(77, trial++));
    rng.Shuffle(arrival);
    benchmark::DoNotOptimize(algorithm(rng, arrival));
  }
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_SimplePartitionTrial(benchmark::State& state) {
  RunTrials(state, InstanceFamily::kRandomPartition, AlgorithmKind::kSimplePartition);
}
void BM_GraphicRnsTrial(benchmark::State& state) {
  RunTrials(state, InstanceFamily::kRandomGraph, AlgorithmKind::kGraphicRns);
}
void BM_CombineOptTrial(benchmark::State& state) {
  RunTrials(state, InstanceFamily::kBipartiteMatchingIntersection, AlgorithmKind::kCombineOpt);
}
void BM_CombineRnsTrial(benchmark::State& state) {
  RunTrials(state, InstanceFamily::kPartitionTransversal, AlgorithmKind::kCombineRns);
}

BENCHMARK(BM_SimplePartitionTrial)->Arg(32)->Arg(128);
BENCHMARK(BM_GraphicRnsTrial)->Arg(32)->Arg(128);
BENCHMARK(BM_CombineOptTrial)->Arg(32)->Arg(128);
BENCHMARK(BM_CombineRnsTrial)->Arg(32)->Arg(128);

}  // namespace
}  // namespace secretary
