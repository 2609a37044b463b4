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
// Independence-oracle throughput on the matroid classes the online
// algorithms query in their inner loops.

#include <benchmark/benchmark.h>

#include <vector>

#include "secretary/harness.h"
#include "secretary/matroid.h"
#include "secretary/rng.h"

namespace secretary {
namespace {

std::vector<ElementSet> QueryMix(int n, int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ElementSet> queries;
  queries.reserve(count);
  for (int i = 0; i < count; ++i) {
    const int m = rng.UniformInt(n + 1);
    queries.push_back(rng.SampleIndexSubset(n, m));
  }
  return queries;
}

void RunOracle(benchmark::State& state, InstanceFamily family) {
  const int n = static_cast<int>(state.range(0));
  const SecretaryInstance instance = GenerateInstance(family, n, 17);
  const MatroidPtr matroid = instance.constraint.matroids.front();
  const std::vector<ElementSet> queries = QueryMix(n, 256, 99);
  std::size_t next = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(matroid->IsIndependent(queries[next]));
    next = (next + 1) % queries.size();
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_PartitionOracle(benchmark::State& state) {
  RunOracle(state, InstanceFamily::kRandomPartition);
}
void BM_GraphicOracle(benchmark::State& state) {
  RunOracle(state, InstanceFamily::kRandomGraph);
}
void BM_TransversalOracle(benchmark::State& state) {
  RunOracle(state, InstanceFamily::kRandomBipartite);
}
void BM_LinearOracle(benchmark::State& state) {
  RunOracle(state, InstanceFamily::kRandomSparseMatrix);
}

BENCHMARK(BM_PartitionOracle)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(BM_GraphicOracle)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(BM_TransversalOracle)->Arg(16)->Arg(64);
BENCHMARK(BM_LinearOracle)->Arg(16)->Arg(64);

}  // namespace
}  // namespace secretary
