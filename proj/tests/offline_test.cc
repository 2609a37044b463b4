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

#include "secretary/offline.h"

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include <doctest.h>

#include "secretary/errors.h"
#include "secretary/harness.h"
#include "secretary/matroid.h"
#include "secretary/rng.h"

namespace secretary {
namespace {

// Two partition matroids over three edges (1,1):3, (1,2):2, (2,1):2 of a
// bipartite graph, grouped by left and by right endpoint.
IntersectionConstraint BipartiteTriple() {
  IntersectionConstraint constraint;
  constraint.matroids.push_back(std::make_shared<PartitionMatroid>(
      std::vector<std::vector<ElementId>>{{0, 1}, {2}}, std::vector<int>{1, 1}));
  constraint.matroids.push_back(std::make_shared<PartitionMatroid>(
      std::vector<std::vector<ElementId>>{{0, 2}, {1}}, std::vector<int>{1, 1}));
  return constraint;
}

TEST_CASE("greedy over one partition matroid") {
  const PartitionMatroid matroid({{0, 1}, {2}}, {1, 1});
  const std::vector<Rational> weights = {Rational(3), Rational(1), Rational(2)};
  const ElementSet picked = GreedySingle(matroid, weights, TieBreakOrder(weights));
  CHECK(SameSet(picked, ElementSet{0, 2}));
  CHECK(SetWeight(weights, picked) == Rational(5));
}

TEST_CASE("greedy over a uniform matroid takes the heaviest") {
  const UniformMatroid matroid(3, 2);
  const std::vector<Rational> weights = {Rational(5), Rational(3), Rational(2)};
  CHECK(SameSet(GreedySingle(matroid, weights, TieBreakOrder(weights)), ElementSet{0, 1}));
}

TEST_CASE("zero weights are skipped entirely") {
  const UniformMatroid matroid(3, 2);
  const std::vector<Rational> weights(3, Rational(0));
  const TieBreakOrder order(weights);
  CHECK(GreedySingle(matroid, weights, order).empty());
  IntersectionConstraint constraint;
  constraint.matroids.push_back(std::make_shared<UniformMatroid>(3, 2));
  CHECK(GreedyIntersection(constraint, weights, order).selected.empty());
  CHECK(BruteForceOpt(constraint, weights, order).empty());
}

TEST_CASE("two-matroid greedy versus the exact optimum") {
  const IntersectionConstraint constraint = BipartiteTriple();
  const std::vector<Rational> weights = {Rational(3), Rational(2), Rational(2)};
  const TieBreakOrder order(weights);
  const ElementSet greedy = GreedyIntersection(constraint, weights, order).SelectedSet();
  CHECK(SameSet(greedy, ElementSet{0}));
  const ElementSet opt = BruteForceOpt(constraint, weights, order);
  CHECK(SameSet(opt, ElementSet{1, 2}));
  CHECK(SetWeight(weights, opt) == Rational(4));
  CHECK(SetWeight(weights, greedy) * 2 >= SetWeight(weights, opt));
}

TEST_CASE("one matroid makes the intersection greedy exact") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const SecretaryInstance instance =
        GenerateInstance(InstanceFamily::kRandomLaminar, 4 + seed % 7, seed);
    const TieBreakOrder order(instance.weights);
    CHECK(SameSet(GreedyIntersection(instance.constraint, instance.weights, order).SelectedSet(),
                  GreedySingle(*instance.constraint.matroids[0], instance.weights, order)));
  }
}

TEST_CASE("empty ground set") {
  IntersectionConstraint constraint;
  constraint.matroids.push_back(std::make_shared<UniformMatroid>(0, 0));
  const std::vector<Rational> weights;
  const TieBreakOrder order(weights);
  CHECK(GreedyIntersection(constraint, weights, order).selected.empty());
  CHECK(BruteForceOpt(constraint, weights, order).empty());
}

TEST_CASE("greedy trace records prefixes in tie-break order") {
  const SecretaryInstance instance =
      GenerateInstance(InstanceFamily::kBipartiteMatchingIntersection, 8, 7);
  const TieBreakOrder order(instance.weights);
  const GreedyTrace trace = GreedyIntersection(instance.constraint, instance.weights, order);
  CHECK(instance.constraint.Feasible(trace.SelectedSet()));
  for (int i = 1; i < static_cast<int>(trace.selected.size()); ++i) {
    CHECK(order.Precedes(trace.selected[i - 1], trace.selected[i]));
    CHECK(static_cast<int>(trace.PrefixBefore(i).size()) == i);
  }
}

TEST_CASE("brute force rejects oversized instances") {
  IntersectionConstraint constraint;
  constraint.matroids.push_back(std::make_shared<UniformMatroid>(21, 5));
  const std::vector<Rational> weights(21, Rational(1));
  CHECK_THROWS_AS(BruteForceOpt(constraint, weights, TieBreakOrder(weights)),
                  ResourceLimitError);
}

TEST_CASE("greedy-relevant elements of a rank-one uniform matroid") {
  IntersectionConstraint constraint;
  constraint.matroids.push_back(std::make_shared<UniformMatroid>(3, 1));
  const std::vector<Rational> weights = {Rational(5), Rational(3), Rational(2)};
  const TieBreakOrder order(weights);
  CHECK(SameSet(GreedyRelevantElements(constraint, weights, order, {1}), ElementSet{0}));
  // With an empty sample, every positive-weight non-loop stands alone.
  CHECK(SameSet(GreedyRelevantElements(constraint, weights, order, {}), ElementSet{0, 1, 2}));
}

TEST_CASE("loops are never greedy-relevant") {
  IntersectionConstraint constraint;
  constraint.matroids.push_back(
      std::make_shared<GraphicMatroid>(2, std::vector<std::pair<int, int>>{{0, 1}, {1, 1}}));
  const std::vector<Rational> weights = {Rational(1), Rational(9)};
  const TieBreakOrder order(weights);
  CHECK(SameSet(GreedyRelevantElements(constraint, weights, order, {}), ElementSet{0}));
  CHECK(SameSet(GreedyRelevantElements(constraint, weights, order, {0}), ElementSet{}));
}

TEST_CASE("relevance matches literal greedy re-runs") {
  for (std::uint64_t seed = 50; seed < 58; ++seed) {
    const SecretaryInstance instance =
        GenerateInstance(InstanceFamily::kPartitionTransversal, 7, seed);
    const TieBreakOrder order(instance.weights);
    Rng rng(seed);
    ElementSet sample;
    for (ElementId e = 0; e < instance.GroundSize(); ++e) {
      if (rng.Bernoulli(CoinBias::FromRational(Rational(1, 2)))) sample.push_back(e);
    }
    const ElementSet relevant =
        GreedyRelevantElements(instance.constraint, instance.weights, order, sample);
    const ElementSet base =
        GreedyIntersection(instance.constraint, instance.weights, order, &sample).SelectedSet();
    for (ElementId e = 0; e < instance.GroundSize(); ++e) {
      if (SetContains(sample, e)) continue;
      const ElementSet extended = SetWith(sample, e);
      const ElementSet with_e =
          GreedyIntersection(instance.constraint, instance.weights, order, &extended)
              .SelectedSet();
      CHECK(SetContains(relevant, e) == !SameSet(with_e, base));
      CHECK(SetContains(relevant, e) == SetContains(with_e, e));
    }
  }
}

TEST_CASE("greedy is stable under weight-threshold truncation") {
  for (std::uint64_t seed = 70; seed < 76; ++seed) {
    const SecretaryInstance instance =
        GenerateInstance(InstanceFamily::kBipartiteMatchingIntersection, 9, seed);
    const TieBreakOrder order(instance.weights);
    const ElementSet full =
        GreedyIntersection(instance.constraint, instance.weights, order).SelectedSet();
    for (const Rational& threshold : instance.weights) {
      ElementSet heavy;
      for (ElementId e = 0; e < instance.GroundSize(); ++e) {
        if (instance.weights[e] >= threshold) heavy.push_back(e);
      }
      const ElementSet truncated =
          GreedyIntersection(instance.constraint, instance.weights, order, &heavy).SelectedSet();
      CHECK(SameSet(truncated, SetIntersection(full, heavy)));
    }
  }
}

}  // namespace
}  // namespace secretary
