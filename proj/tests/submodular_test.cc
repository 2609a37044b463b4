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

#include "secretary/submodular.h"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include <doctest.h>

#include "secretary/errors.h"
#include "secretary/matroid.h"
#include "secretary/offline.h"
#include "secretary/overlap.h"

namespace secretary {
namespace {

ElementSet FromMask(unsigned mask, int n) {
  ElementSet set;
  for (int e = 0; e < n; ++e) {
    if (mask >> e & 1u) set.push_back(e);
  }
  return set;
}

// The convolution of f with a weight vector, wrapped as a function of its
// own so the submodularity checker can consume it.
class ConvolutionFunction : public SubmodularFunction {
 public:
  ConvolutionFunction(const SubmodularFunction& base, std::vector<Rational> weights)
      : base_(&base), weights_(std::move(weights)) {}
  int GroundSize() const override { return base_->GroundSize(); }
  Rational Value(const ElementSet& set) const override {
    return ConvolutionValue(*base_, weights_, set);
  }

 private:
  const SubmodularFunction* base_;
  std::vector<Rational> weights_;
};

IntersectionConstraint SingleMatroid(MatroidPtr matroid) {
  IntersectionConstraint constraint;
  constraint.matroids.push_back(std::move(matroid));
  return constraint;
}

TEST_CASE("coverage greedy picks the classic pair") {
  // Covers {1,2}, {2,3}, {3} of a universe of three items, rank-two cap.
  const CoverageFunction f(3, {{0, 1}, {1, 2}, {2}});
  const IntersectionConstraint constraint = SingleMatroid(std::make_shared<UniformMatroid>(3, 2));
  const ElementSet picked = SubmodularGreedy(constraint, f);
  CHECK(SameSet(picked, ElementSet{0, 1}));
  CHECK(f.Value(picked) == Rational(3));
}

TEST_CASE("modular greedy coincides with the weight greedy") {
  IntersectionConstraint constraint;
  constraint.matroids.push_back(std::make_shared<PartitionMatroid>(
      std::vector<std::vector<ElementId>>{{0, 1}, {2, 3}}, std::vector<int>{1, 1}));
  constraint.matroids.push_back(std::make_shared<UniformMatroid>(4, 2));
  const std::vector<Rational> weights = {Rational(4), Rational(6), Rational(1), Rational(3)};
  const ModularFunction f(weights);
  CHECK(SameSet(SubmodularGreedy(constraint, f),
                GreedyIntersection(constraint, weights, TieBreakOrder(weights)).SelectedSet()));
}

TEST_CASE("zero objective selects nothing") {
  const ModularFunction f(std::vector<Rational>(3, Rational(0)));
  CHECK(SubmodularGreedy(SingleMatroid(std::make_shared<UniformMatroid>(3, 2)), f).empty());
}

TEST_CASE("cut functions are nonmonotone but submodular") {
  const CutFunction cut(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(cut.Value({}) == Rational(0));
  CHECK(cut.Value({0, 1, 2, 3}) == Rational(0));
  CHECK(cut.Value({0}) == Rational(2));
  CHECK(IsSubmodular(cut));
  CHECK(IsNonnegative(cut));
}

TEST_CASE("weighted rank tracks the matroid") {
  const auto triangle = std::make_shared<GraphicMatroid>(
      3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}});
  const WeightedRankFunction f(triangle, {Rational(5), Rational(3), Rational(2)});
  CHECK(f.Value({0, 1}) == Rational(8));
  CHECK(f.Value({0, 1, 2}) == Rational(8));  // the cycle drops its lightest edge
  CHECK(IsSubmodular(f));
}

TEST_CASE("convolution boundary cases") {
  const CoverageFunction f(3, {{0, 1}, {1, 2}, {2}});
  const std::vector<Rational> zero(3, Rational(0));
  const std::vector<Rational> huge(3, Rational(1000));
  const std::vector<Rational> weights = {Rational(1), Rational(2), Rational(3)};
  CHECK(ConvolutionValue(f, weights, {}) == f.Value({}));
  // Zero weights: the minimum over subsets of f alone.
  CHECK(ConvolutionValue(f, zero, {0, 1, 2}) == Rational(0));
  // Huge weights: keeping everything in the f-part wins.
  CHECK(ConvolutionValue(f, huge, {0, 1, 2}) == f.Value({0, 1, 2}));
}

TEST_CASE("convolution rejects oversized sets") {
  const int n = 16;
  const ModularFunction f(std::vector<Rational>(n, Rational(1)));
  ElementSet everything;
  for (int e = 0; e < n; ++e) everything.push_back(e);
  CHECK_THROWS_AS(ConvolutionValue(f, std::vector<Rational>(n, Rational(1)), everything),
                  ResourceLimitError);
}

TEST_CASE("convolution is submodular and dominated") {
  const CoverageFunction f(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const std::vector<Rational> weights = {Rational(1), Rational(3), Rational(2), Rational(1)};
  const ConvolutionFunction conv(f, weights);
  CHECK(IsSubmodular(conv));
  const Rational offset = f.Value({});
  for (unsigned mask = 0; mask < 16; ++mask) {
    const ElementSet set = FromMask(mask, 4);
    Rational weight_sum = 0;
    for (ElementId e : set) weight_sum += weights[e];
    CHECK(conv.Value(set) <= f.Value(set));
    CHECK(conv.Value(set) <= weight_sum + offset);
  }
}

TEST_CASE("reveal guard blocks premature queries") {
  const CoverageFunction f(3, {{0}, {1}, {2}});
  RevealGuard guard(f);
  guard.Reveal(0);
  guard.Reveal(2);
  CHECK(guard.Value({0, 2}) == Rational(2));
  CHECK_THROWS_AS(guard.Value({0, 1}), std::logic_error);
  guard.RevealSet({1});
  CHECK(guard.Value({0, 1}) == Rational(2));
}

TEST_CASE("brute force maximization honors limits and ties") {
  const CoverageFunction f(2, {{0}, {1}, {0}});
  const IntersectionConstraint constraint = SingleMatroid(std::make_shared<UniformMatroid>(3, 2));
  // Elements 0 and 2 are interchangeable; the tie goes to the smaller ids.
  CHECK(BruteForceSubmodularOpt(constraint, f) == ElementSet{0, 1});
  const ModularFunction big(std::vector<Rational>(21, Rational(1)));
  CHECK_THROWS_AS(
      BruteForceSubmodularOpt(SingleMatroid(std::make_shared<UniformMatroid>(21, 3)), big),
      ResourceLimitError);
}

TEST_CASE("insertion probes match a literal greedy re-run") {
  const CoverageFunction f(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}});
  IntersectionConstraint constraint;
  constraint.matroids.push_back(std::make_shared<PartitionMatroid>(
      std::vector<std::vector<ElementId>>{{0, 1, 2}, {3, 4, 5}}, std::vector<int>{1, 2}));
  constraint.matroids.push_back(std::make_shared<UniformMatroid>(6, 3));
  for (unsigned mask = 0; mask < (1u << 6); ++mask) {
    const ElementSet ground = FromMask(mask, 6);
    const ElementSet greedy = SubmodularGreedy(constraint, f, &ground);
    for (ElementId u = 0; u < 6; ++u) {
      if (SetContains(ground, u)) continue;
      // Probing around the greedy set equals probing around the full
      // ground set: only picked elements influence later decisions.
      const GreedyInsertion fast = ProbeGreedyInsertion(constraint, f, greedy, u);
      const GreedyInsertion slow = ProbeGreedyInsertion(constraint, f, ground, u);
      CHECK(fast.inserted == slow.inserted);
      CHECK(fast.prefix == slow.prefix);
      // And the probe agrees with a traced run over ground + u.
      const ElementSet widened = SetWith(ground, u);
      const SubmodularGreedyTrace trace = SubmodularGreedyTraced(constraint, f, &widened);
      bool inserted = false;
      std::vector<ElementId> prefix;
      for (ElementId e : trace.selected) {
        if (e == u) {
          inserted = true;
          break;
        }
        prefix.push_back(e);
      }
      CHECK(fast.inserted == inserted);
      if (inserted) CHECK(fast.prefix == prefix);
    }
  }
}

TEST_CASE("default boost probability") {
  CHECK(DefaultBoostProbability(Rational(1, 4), 1) == Rational(1, 12));
  CHECK(DefaultBoostProbability(Rational(1, 2), 2) == Rational(1, 12));
  CHECK_THROWS_AS(DefaultBoostProbability(Rational(2), 1), std::invalid_argument);
  CHECK_THROWS_AS(DefaultBoostProbability(Rational(1, 4), 0), std::invalid_argument);
}

TEST_CASE("online selections stay feasible") {
  const CoverageFunction f(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}});
  const auto partition = std::make_shared<PartitionMatroid>(
      std::vector<std::vector<ElementId>>{{0, 1}, {2, 3}, {4, 5}}, std::vector<int>{1, 1, 1});
  const IntersectionConstraint constraint = SingleMatroid(partition);
  std::vector<int> block_of(6);
  for (ElementId e = 0; e < 6; ++e) block_of[e] = partition->BlockOf(e);
  const AlgorithmFactory factory = [block_of]() {
    return std::make_unique<SimplePartitionSecretary>(block_of, 3, Rational(1, 2));
  };
  for (int t = 0; t < 60; ++t) {
    Rng rng(DeriveStream(55, t));
    std::vector<ElementId> arrival = {0, 1, 2, 3, 4, 5};
    rng.Shuffle(arrival);
    const OnlineSubmodularResult run =
        RunOnlineSubmodular(constraint, f, factory, Rational(1, 12), arrival, rng);
    CHECK(constraint.Feasible(run.selected));
    for (ElementId e : run.selected) {
      CHECK(SetContains(run.inner_accepted, e));
      CHECK(SetContains(run.boosted, e));
      CHECK(run.synthetic_weights[e] > 0);
    }
    for (ElementId e : run.learning_sample) CHECK(run.synthetic_weights[e] == 0);
  }
}

TEST_CASE("modular objectives reduce to thinned overlap weights") {
  // With a modular objective the online reduction must feed its inner
  // algorithm exactly the overlap-reduced weights, thinned by the boost
  // coins; enumerate every coin outcome and compare runs.
  const std::vector<Rational> weights = {Rational(7), Rational(4), Rational(6), Rational(2)};
  const ModularFunction f(weights);
  const TieBreakOrder order(weights);
  const auto partition = std::make_shared<PartitionMatroid>(
      std::vector<std::vector<ElementId>>{{0, 1}, {2, 3}}, std::vector<int>{1, 1});
  const IntersectionConstraint constraint = SingleMatroid(partition);
  const std::vector<int> block_of = {0, 0, 1, 1};
  const std::vector<ElementId> arrival = {2, 0, 3, 1};

  for (unsigned learn_mask = 0; learn_mask < 16; ++learn_mask) {
    for (unsigned boost_mask = 0; boost_mask < 16; ++boost_mask) {
      for (int sample_size = 0; sample_size <= 2; ++sample_size) {
        SimplePartitionSecretary online_inner(block_of, 2, Rational(1, 2));
        const OnlineSubmodularResult run = RunOnlineSubmodularWithCoins(
            constraint, f, online_inner, arrival,
            [learn_mask](ElementId e) { return (learn_mask >> e & 1u) != 0; },
            [boost_mask](ElementId e) { return (boost_mask >> e & 1u) != 0; }, sample_size);

        // Independent oracle: reduce, thin, and drive a fresh inner the
        // same way the online run promises to.
        const ElementSet learn_set = FromMask(learn_mask, 4);
        const ReducedWeights reduced =
            ComputeReducedWeights(constraint, weights, order, learn_set);
        std::vector<Rational> thinned(4, Rational(0));
        for (ElementId e = 0; e < 4; ++e) {
          if (reduced.provenance[e] == WeightProvenance::kGreedyRelevant &&
              (boost_mask >> e & 1u)) {
            thinned[e] = reduced.weights[e];
          }
        }
        SimplePartitionSecretary oracle_inner(block_of, 2, Rational(1, 2));
        std::vector<ElementId> stream;
        for (ElementId e : arrival) {
          if (!SetContains(learn_set, e)) stream.push_back(e);
        }
        const int m = std::min<int>(sample_size, static_cast<int>(stream.size()));
        std::vector<WeightedElement> observed;
        for (int i = 0; i < m; ++i) observed.push_back({stream[i], thinned[stream[i]]});
        oracle_inner.ObserveSample(observed);
        ElementSet oracle_accepted;
        for (int i = m; i < static_cast<int>(stream.size()); ++i) {
          if (oracle_inner.OnArrival(stream[i], thinned[stream[i]])) {
            oracle_accepted.push_back(stream[i]);
          }
        }
        for (ElementId e : learn_set) {
          if (oracle_inner.OnArrival(e, Rational(0))) oracle_accepted.push_back(e);
        }

        CHECK(SameSet(run.inner_accepted, oracle_accepted));
        for (ElementId e = 0; e < 4; ++e) CHECK(run.synthetic_weights[e] == thinned[e]);
      }
    }
  }
}

}  // namespace
}  // namespace secretary
