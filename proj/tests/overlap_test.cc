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

#include "secretary/overlap.h"

#include <cmath>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include <doctest.h>

#include "secretary/harness.h"
#include "secretary/matroid.h"
#include "secretary/offline.h"

namespace secretary {
namespace {

IntersectionConstraint SingleUniform(int n, int r) {
  IntersectionConstraint constraint;
  constraint.matroids.push_back(std::make_shared<UniformMatroid>(n, r));
  return constraint;
}

TEST_CASE("reduction zeroes the sample and the irrelevant rest") {
  const IntersectionConstraint constraint = SingleUniform(3, 1);
  const std::vector<Rational> weights = {Rational(5), Rational(3), Rational(2)};
  const TieBreakOrder order(weights);
  const ReducedWeights reduced = ComputeReducedWeights(constraint, weights, order, {1});
  CHECK(reduced.weights == std::vector<Rational>{Rational(5), Rational(0), Rational(0)});
  CHECK(reduced.provenance[0] == WeightProvenance::kGreedyRelevant);
  CHECK(reduced.provenance[1] == WeightProvenance::kSampled);
  CHECK(reduced.provenance[2] == WeightProvenance::kZeroed);
}

TEST_CASE("sampling everything zeroes everything") {
  const IntersectionConstraint constraint = SingleUniform(3, 1);
  const std::vector<Rational> weights = {Rational(5), Rational(3), Rational(2)};
  const ReducedWeights reduced =
      ComputeReducedWeights(constraint, weights, TieBreakOrder(weights), {0, 1, 2});
  CHECK(reduced.weights == std::vector<Rational>(3, Rational(0)));
}

TEST_CASE("empty sample keeps positive non-loops") {
  IntersectionConstraint constraint;
  constraint.matroids.push_back(
      std::make_shared<GraphicMatroid>(2, std::vector<std::pair<int, int>>{{0, 1}, {1, 1}}));
  const std::vector<Rational> weights = {Rational(4), Rational(9)};
  const ReducedWeights reduced =
      ComputeReducedWeights(constraint, weights, TieBreakOrder(weights), {});
  CHECK(reduced.weights[0] == Rational(4));
  CHECK(reduced.weights[1] == Rational(0));  // the self-loop never enters a greedy run
}

TEST_CASE("reduced weights never rise") {
  for (std::uint64_t seed = 20; seed < 26; ++seed) {
    const SecretaryInstance instance =
        GenerateInstance(InstanceFamily::kBipartiteMatchingIntersection, 8, seed);
    const TieBreakOrder order(instance.weights);
    Rng rng(seed * 3 + 1);
    ElementSet sample;
    for (ElementId e = 0; e < instance.GroundSize(); ++e) {
      if (rng.Bernoulli(CoinBias::FromRational(Rational(1, 2)))) sample.push_back(e);
    }
    const ReducedWeights reduced =
        ComputeReducedWeights(instance.constraint, instance.weights, order, sample);
    for (ElementId e = 0; e < instance.GroundSize(); ++e) {
      CHECK(reduced.weights[e] <= instance.weights[e]);
      if (SetContains(sample, e)) CHECK(reduced.weights[e] == Rational(0));
    }
  }
}

TEST_CASE("all-heads coins reproduce plain greedy") {
  const SecretaryInstance instance =
      GenerateInstance(InstanceFamily::kPartitionTransversal, 8, 33);
  const TieBreakOrder order(instance.weights);
  const CoupledRun run = RunCoupledGreedyWithCoins(
      instance.constraint, instance.weights, order, [](ElementId) { return true; });
  CHECK(SameSet(run.greedy_set,
                GreedyIntersection(instance.constraint, instance.weights, order).SelectedSet()));
  CHECK(run.common_opt.empty());
  CHECK(run.certified_common.empty());
}

TEST_CASE("all-tails coins at one matroid give the plain optimum") {
  SecretaryInstance instance = GenerateInstance(InstanceFamily::kRandomGraph, 8, 34);
  const TieBreakOrder order(instance.weights);
  const CoupledRun run = RunCoupledGreedyWithCoins(
      instance.constraint, instance.weights, order, [](ElementId) { return false; });
  CHECK(run.greedy_set.empty());
  CHECK(SameSet(run.common_opt,
                GreedySingle(*instance.constraint.matroids[0], instance.weights, order)));
}

TEST_CASE("coupled runs keep their invariants and span certificates") {
  const SecretaryInstance instance =
      GenerateInstance(InstanceFamily::kBipartiteMatchingIntersection, 9, 35);
  const TieBreakOrder order(instance.weights);
  const int k = instance.constraint.MatroidCount();
  for (int t = 0; t < 40; ++t) {
    Rng rng(DeriveStream(42, t));
    int steps = 0;
    const CoupledRun run = RunCoupledGreedy(
        instance.constraint, instance.weights, order, Rational(3, 4), rng,
        [&](ElementId, const CoupledRun& state) {
          ++steps;
          for (int j = 0; j < k; ++j) {
            CHECK(instance.constraint.matroids[j]->IsIndependent(state.span_trackers[j]));
          }
        });
    CHECK(steps > 0);
    CheckCoupledRunInvariants(instance.constraint, run);
    for (int j = 0; j < k; ++j) {
      for (ElementId e : run.single_opts[j]) {
        CHECK(instance.constraint.matroids[j]->InSpan(run.span_trackers[j], e));
      }
    }
    for (ElementId e : run.certified_common) CHECK(SetContains(run.common_opt, e));
  }
}

TEST_CASE("overlap estimation validates trial counts") {
  const IntersectionConstraint constraint = SingleUniform(2, 1);
  const std::vector<Rational> weights = {Rational(2), Rational(1)};
  CHECK_THROWS_AS(EstimateOverlap(constraint, weights, TieBreakOrder(weights), Rational(1, 2),
                                  0, 1),
                  std::invalid_argument);
}

TEST_CASE("one-element overlap ratio is one minus p") {
  const IntersectionConstraint constraint = SingleUniform(1, 1);
  const std::vector<Rational> weights = {Rational(7)};
  const Rational p(1, 3);
  const int trials = 20000;
  const OverlapEstimate estimate =
      EstimateOverlap(constraint, weights, TieBreakOrder(weights), p, trials, 77);
  CHECK(estimate.trials == trials);
  CHECK(estimate.opt_weight == Rational(7));
  const double expected = ToDouble(Rational(1) - p);
  CHECK(std::abs(estimate.ratio - expected) <= 3 * estimate.std_error / 7.0 + 1e-12);
}

TEST_CASE("single-matroid overlap meets the quarter bound") {
  const SecretaryInstance instance = GenerateInstance(InstanceFamily::kRandomPartition, 9, 36);
  const TieBreakOrder order(instance.weights);
  const OverlapEstimate estimate = EstimateOverlap(instance.constraint, instance.weights, order,
                                                   Rational(1, 2), 4000, 78);
  CHECK(estimate.mean >= ToDouble(estimate.opt_weight) / 4 - 3 * estimate.std_error);
}

}  // namespace
}  // namespace secretary
