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

#include "secretary/matroid.h"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include <doctest.h>

#include "secretary/rng.h"

namespace secretary {
namespace {

ElementSet FromMask(unsigned mask, int n) {
  ElementSet set;
  for (int e = 0; e < n; ++e) {
    if (mask >> e & 1u) set.push_back(e);
  }
  return set;
}

MatroidPtr Triangle() {
  return std::make_shared<GraphicMatroid>(
      3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}});
}

TEST_CASE("set utilities") {
  const ElementSet set = {3, 1};
  CHECK(SetContains(set, 1));
  CHECK_FALSE(SetContains(set, 2));
  CHECK(SameSet(SetWith(set, 2), ElementSet{1, 2, 3}));
  CHECK(SameSet(SetMinus(set, 3), ElementSet{1}));
  CHECK(SameSet(SetUnion({1, 2}, {2, 4}), ElementSet{1, 2, 4}));
  CHECK(SameSet(SetIntersection({1, 2, 3}, {2, 3, 4}), ElementSet{2, 3}));
  CHECK(SameSet(SetDifference({1, 2, 3}, {2}), ElementSet{1, 3}));
  CHECK(SortedCopy({3, 1, 2}) == ElementSet{1, 2, 3});
  CHECK(ComplementSet(4, {1, 3}) == ElementSet{0, 2});
}

TEST_CASE("graphic independence distinguishes forests from cycles") {
  const MatroidPtr triangle = Triangle();
  CHECK(triangle->IsIndependent({0, 1}));
  CHECK_FALSE(triangle->IsIndependent({0, 1, 2}));
  CHECK(triangle->InSpan({0, 1}, 2));

  // A self-loop is a matroid loop.
  const GraphicMatroid with_loop(2, {{0, 1}, {1, 1}});
  CHECK_FALSE(with_loop.IsIndependent({1}));
  CHECK(with_loop.InSpan({}, 1));
  CHECK_FALSE(with_loop.InSpan({}, 0));
}

TEST_CASE("transversal matching limits") {
  // Three elements adjacent to one right node: any two are dependent.
  const TransversalMatroid star(3, 1, {{0}, {0}, {0}});
  CHECK(star.IsIndependent({1}));
  CHECK_FALSE(star.IsIndependent({0, 1}));
  CHECK(star.Rank({0, 1, 2}) == 1);
}

TEST_CASE("rank basics") {
  const UniformMatroid uniform(4, 2);
  CHECK(uniform.Rank({0, 1, 2}) == 2);
  CHECK(uniform.Rank({}) == 0);
  const DualMatroid dual_triangle(Triangle());
  // r*({0}) = 1 + r({1,2}) - r(all) = 1 + 2 - 2.
  CHECK(dual_triangle.Rank({0}) == 1);
  CHECK(dual_triangle.FullRank() == 1);
}

TEST_CASE("span queries") {
  const PartitionMatroid partition({{0, 1}, {2}}, {1, 1});
  CHECK_FALSE(partition.InSpan({0}, 2));
  CHECK(partition.InSpan({0}, 1));
  CHECK_FALSE(partition.InSpan({}, 0));
}

TEST_CASE("dual of uniform is uniform") {
  const int n = 6;
  const DualMatroid dual(std::make_shared<UniformMatroid>(n, 2));
  const UniformMatroid expected(n, n - 2);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const ElementSet set = FromMask(mask, n);
    CHECK(dual.IsIndependent(set) == expected.IsIndependent(set));
  }
}

TEST_CASE("dual is an involution") {
  const std::vector<MatroidPtr> bases = {
      Triangle(),
      std::make_shared<TransversalMatroid>(
          4, 2, std::vector<std::vector<int>>{{0}, {0, 1}, {1}, {1}}),
      std::make_shared<PartitionMatroid>(
          std::vector<std::vector<ElementId>>{{0, 1, 2}, {3, 4}}, std::vector<int>{2, 1}),
  };
  for (const MatroidPtr& base : bases) {
    const DualMatroid double_dual(std::make_shared<DualMatroid>(base));
    const int n = base->GroundSize();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      const ElementSet set = FromMask(mask, n);
      CHECK(double_dual.IsIndependent(set) == base->IsIndependent(set));
    }
  }
}

TEST_CASE("rank is monotone and submodular") {
  const std::vector<MatroidPtr> matroids = {
      std::make_shared<LaminarMatroid>(
          6,
          std::vector<std::vector<ElementId>>{{0, 1, 2, 3, 4, 5}, {0, 1, 2}, {3, 4}},
          std::vector<int>{3, 2, 1}),
      std::make_shared<GraphicMatroid>(
          4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}),
  };
  for (const MatroidPtr& matroid : matroids) {
    const int n = matroid->GroundSize();
    std::vector<int> rank(1u << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      rank[mask] = matroid->Rank(FromMask(mask, n));
    }
    for (unsigned a = 0; a < (1u << n); ++a) {
      for (unsigned b = 0; b < (1u << n); ++b) {
        if ((a & b) == a) CHECK(rank[a] <= rank[b]);
        CHECK(rank[a] + rank[b] >= rank[a | b] + rank[a & b]);
      }
    }
  }
}

TEST_CASE("linear independence is pivot-order independent") {
  std::vector<std::vector<Rational>> columns = {
      {1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {2, 2, 0}, {0, 0, 1}, {Rational(1, 2), 0, 1}};
  const LinearMatroid matroid(std::move(columns));
  Rng rng(99);
  const int n = matroid.GroundSize();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<ElementId> cols = FromMask(mask, n);
    const int rank = matroid.RankInOrder(cols);
    CHECK(matroid.IsIndependent(cols) == (rank == static_cast<int>(cols.size())));
    for (int shuffle = 0; shuffle < 4; ++shuffle) {
      rng.Shuffle(cols);
      CHECK(matroid.RankInOrder(cols) == rank);
    }
  }
}

TEST_CASE("restriction keeps only listed elements") {
  const RestrictionMatroid restricted(std::make_shared<UniformMatroid>(5, 3), {0, 2, 4});
  CHECK(restricted.IsIndependent({0, 2, 4}));
  CHECK_FALSE(restricted.IsIndependent({0, 1}));
  CHECK(restricted.InSpan({}, 1));  // dropped elements become loops
  CHECK(SameSet(restricted.Kept(), ElementSet{0, 2, 4}));
}

TEST_CASE("direct sum decomposes by component") {
  std::vector<MatroidPtr> parts;
  parts.push_back(std::make_shared<UniformMatroid>(2, 1));
  parts.push_back(Triangle());
  const DirectSumMatroid sum(std::move(parts));
  CHECK(sum.GroundSize() == 5);
  CHECK(sum.IsIndependent({0, 2, 3}));
  CHECK_FALSE(sum.IsIndependent({0, 1}));
  CHECK_FALSE(sum.IsIndependent({2, 3, 4}));
  CHECK(sum.FullRank() == 3);
}

TEST_CASE("constructors validate their structure") {
  // Partition blocks must partition the ground set.
  CHECK_THROWS_AS(PartitionMatroid({{0, 1}, {1, 2}}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PartitionMatroid({{0, 2}}, {1}), std::invalid_argument);
  // Laminar sets must be nested or disjoint.
  CHECK_THROWS_AS(
      LaminarMatroid(4, {{0, 1, 2}, {2, 3}}, {1, 1}), std::invalid_argument);
  // Caps must be positive.
  CHECK_THROWS_AS(PartitionMatroid({{0}}, {0}), std::invalid_argument);
  // Edge endpoints must be valid vertices.
  CHECK_THROWS_AS(GraphicMatroid(2, {{0, 2}}), std::invalid_argument);
  // Uniform rank within range.
  CHECK_THROWS_AS(UniformMatroid(3, -1), std::invalid_argument);
}

TEST_CASE("queries validate ids") {
  const UniformMatroid uniform(3, 2);
  CHECK_THROWS_AS(uniform.IsIndependent({3}), std::invalid_argument);
  CHECK_THROWS_AS(uniform.IsIndependent({-1}), std::invalid_argument);
  CHECK_THROWS_AS(uniform.IsIndependent({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(uniform.Rank({0, 5}), std::invalid_argument);
  CHECK_THROWS_AS(uniform.InSpan({0}, 7), std::invalid_argument);
}

TEST_CASE("tie-break order sorts by weight then id") {
  const std::vector<Rational> weights = {Rational(3), Rational(5), Rational(3), Rational(1)};
  const TieBreakOrder order(weights);
  CHECK(order.Ordered() == std::vector<ElementId>{1, 0, 2, 3});
  CHECK(order.PositionOf(1) == 0);
  CHECK(order.AtPosition(1) == 0);
  CHECK(order.Precedes(0, 2));
  CHECK_FALSE(order.Precedes(2, 0));
  CHECK(HeavierThan(0, weights[0], 2, weights[2]));
  CHECK(HeavierThan(1, weights[1], 0, weights[0]));
  CHECK_FALSE(HeavierThan(3, weights[3], 2, weights[2]));
}

}  // namespace
}  // namespace secretary
