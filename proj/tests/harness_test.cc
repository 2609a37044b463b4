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

#include "secretary/harness.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "secretary/errors.h"
#include "secretary/instance_io.h"
#include "secretary/matroid.h"
#include "secretary/offline.h"
#include "secretary/stats.h"
#include "secretary/submodular.h"

namespace secretary {
namespace {

bool IsPermutation(const std::vector<ElementId>& order, int n) {
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (ElementId e : order) {
    if (e < 0 || e >= n || seen[e]) return false;
    seen[e] = true;
  }
  return true;
}

SecretaryInstance TinyPartitionInstance() {
  SecretaryInstance instance;
  instance.name = "tiny-partition";
  instance.constraint.matroids.push_back(std::make_shared<PartitionMatroid>(
      std::vector<std::vector<ElementId>>{{0, 1}, {2, 3}, {4}}, std::vector<int>{1, 1, 1}));
  instance.weights = {Rational(9), Rational(4), Rational(7), Rational(2), Rational(5)};
  return instance;
}

TEST_CASE("name parsers round trip and reject junk") {
  for (const char* name : {"uniform-random", "weight-decreasing", "weight-increasing", "opt-last",
                           "opt-first", "explicit"}) {
    CHECK(OrderKindName(ParseOrderKind(name)) == name);
  }
  CHECK_THROWS_AS(ParseOrderKind("sorted"), std::invalid_argument);
  for (const char* name :
       {"greedy-online", "simple-partition", "generalized-partition", "graphic-rns",
        "sparse-linear-rns", "transversal-rns", "combine-opt", "combine-rns",
        "submodular-online"}) {
    CHECK(AlgorithmKindName(ParseAlgorithmKind(name)) == name);
  }
  CHECK_THROWS_AS(ParseAlgorithmKind("dynkin"), std::invalid_argument);
  for (const char* name :
       {"random-partition", "random-laminar", "random-graph", "random-bipartite",
        "random-sparse-matrix", "bipartite-matching-intersection", "partition-transversal"}) {
    CHECK(InstanceFamilyName(ParseInstanceFamily(name)) == name);
  }
  CHECK_THROWS_AS(ParseInstanceFamily("random"), std::invalid_argument);
}

TEST_CASE("order realization per policy") {
  const std::vector<Rational> weights = {Rational(3), Rational(8), Rational(1), Rational(5)};
  const TieBreakOrder order(weights);
  const ElementSet opt = {1, 3};
  Rng rng(7);

  CHECK(RealizeOrder(OrderKind::kWeightDecreasing, order, opt, {}, rng) ==
        std::vector<ElementId>{1, 3, 0, 2});
  CHECK(RealizeOrder(OrderKind::kWeightIncreasing, order, opt, {}, rng) ==
        std::vector<ElementId>{2, 0, 3, 1});

  const auto uniform = RealizeOrder(OrderKind::kUniformRandom, order, opt, {}, rng);
  CHECK(IsPermutation(uniform, 4));

  const auto opt_last = RealizeOrder(OrderKind::kOptLast, order, opt, {}, rng);
  CHECK(IsPermutation(opt_last, 4));
  CHECK(SameSet(SortedCopy({opt_last[2], opt_last[3]}), opt));
  const auto opt_first = RealizeOrder(OrderKind::kOptFirst, order, opt, {}, rng);
  CHECK(IsPermutation(opt_first, 4));
  CHECK(SameSet(SortedCopy({opt_first[0], opt_first[1]}), opt));

  const std::vector<ElementId> wanted = {2, 3, 0, 1};
  CHECK(RealizeOrder(OrderKind::kExplicit, order, opt, wanted, rng) == wanted);
  CHECK_THROWS_AS(RealizeOrder(OrderKind::kExplicit, order, opt, {0, 0, 1, 2}, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(RealizeOrder(OrderKind::kExplicit, order, opt, {0, 1}, rng),
                  std::invalid_argument);
}

TEST_CASE("monte carlo runs are reproducible") {
  const SecretaryInstance instance = TinyPartitionInstance();
  const TrialAlgorithm algo =
      MakeTrialAlgorithm(instance, AlgorithmKind::kSimplePartition, AlgorithmParams{});
  MonteCarloOptions options;
  options.trials = 50;
  options.seed = 99;
  const SimulationReport first = MonteCarlo(instance, algo, options);
  const SimulationReport second = MonteCarlo(instance, algo, options);
  CHECK(ReportToJson(first) == ReportToJson(second));
  CHECK(ReportToCsv(first) == ReportToCsv(second));
  options.seed = 100;
  const SimulationReport shifted = MonteCarlo(instance, algo, options);
  CHECK(ReportToJson(first) != ReportToJson(shifted));
}

TEST_CASE("greedy online is exact under weight-decreasing arrival") {
  const SecretaryInstance instance = TinyPartitionInstance();
  const TrialAlgorithm algo =
      MakeTrialAlgorithm(instance, AlgorithmKind::kGreedyOnline, AlgorithmParams{});
  MonteCarloOptions options;
  options.trials = 20;
  options.order = OrderKind::kWeightDecreasing;
  const SimulationReport report = MonteCarlo(instance, algo, options);
  CHECK(report.has_ratio);
  CHECK(report.opt_value == Rational(21));
  for (const TrialRecord& record : report.records) {
    CHECK(record.ratio == doctest::Approx(1.0));
    CHECK(record.value == Rational(21));
  }
}

TEST_CASE("ratio reporting enforces the brute force limit") {
  const SecretaryInstance instance =
      GenerateInstance(InstanceFamily::kRandomPartition, 24, 3);
  const TrialAlgorithm algo =
      MakeTrialAlgorithm(instance, AlgorithmKind::kGreedyOnline, AlgorithmParams{});
  MonteCarloOptions options;
  options.trials = 2;
  CHECK_THROWS_AS(MonteCarlo(instance, algo, options), ResourceLimitError);
  options.want_ratio = false;
  const SimulationReport report = MonteCarlo(instance, algo, options);
  CHECK_FALSE(report.has_ratio);
  CHECK(report.records.size() == 2);
}

TEST_CASE("csv reports follow the fixed column layout") {
  const SecretaryInstance instance = TinyPartitionInstance();
  const TrialAlgorithm algo =
      MakeTrialAlgorithm(instance, AlgorithmKind::kSimplePartition, AlgorithmParams{});
  MonteCarloOptions options;
  options.trials = 4;
  options.seed = 11;
  const std::string csv = ReportToCsv(MonteCarlo(instance, algo, options));
  std::vector<std::string> lines;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = csv.find("\r\n", start);
    if (pos == std::string::npos) break;
    lines.push_back(csv.substr(start, pos - start));
    start = pos + 2;
  }
  CHECK(start == csv.size());  // terminated by a final CRLF
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "trial,ratio,accepted_ids,seed");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    CHECK(std::count(lines[i].begin(), lines[i].end(), ',') == 3);
    CHECK(lines[i].substr(0, lines[i].find(',')) == std::to_string(i - 1));
  }
}

TEST_CASE("json reports parse and omit wall time") {
  const SecretaryInstance instance = TinyPartitionInstance();
  const TrialAlgorithm algo =
      MakeTrialAlgorithm(instance, AlgorithmKind::kSimplePartition, AlgorithmParams{});
  MonteCarloOptions options;
  options.trials = 3;
  SimulationReport report = MonteCarlo(instance, algo, options);
  report.algorithm_name = "simple-partition";
  const nlohmann::json parsed = nlohmann::json::parse(ReportToJson(report));
  CHECK(parsed.at("instance") == "tiny-partition");
  CHECK(parsed.at("algorithm") == "simple-partition");
  CHECK(parsed.at("trials") == 3);
  CHECK(parsed.at("records").size() == 3);
  CHECK(parsed.at("selection_frequency").size() == 5);
  CHECK_FALSE(parsed.contains("wall_seconds"));
}

TEST_CASE("generated families have the advertised shapes") {
  const SecretaryInstance matching =
      GenerateInstance(InstanceFamily::kBipartiteMatchingIntersection, 8, 5);
  REQUIRE(matching.constraint.MatroidCount() == 2);
  for (const MatroidPtr& matroid : matching.constraint.matroids) {
    const auto* partition = dynamic_cast<const PartitionMatroid*>(matroid.get());
    REQUIRE(partition != nullptr);
    CHECK(partition->IsSimple());
  }

  const SecretaryInstance mixed = GenerateInstance(InstanceFamily::kPartitionTransversal, 8, 5);
  REQUIRE(mixed.constraint.MatroidCount() == 2);
  CHECK(dynamic_cast<const PartitionMatroid*>(mixed.constraint.matroids[0].get()) != nullptr);
  CHECK(dynamic_cast<const TransversalMatroid*>(mixed.constraint.matroids[1].get()) != nullptr);

  for (const InstanceFamily family :
       {InstanceFamily::kRandomPartition, InstanceFamily::kRandomLaminar,
        InstanceFamily::kRandomGraph, InstanceFamily::kRandomBipartite,
        InstanceFamily::kRandomSparseMatrix, InstanceFamily::kBipartiteMatchingIntersection,
        InstanceFamily::kPartitionTransversal}) {
    const SecretaryInstance instance = GenerateInstance(family, 10, 17);
    instance.Validate();
    CHECK(instance.GroundSize() == 10);
    REQUIRE(instance.weights.size() == 10);
    std::vector<Rational> sorted_weights = instance.weights;
    std::sort(sorted_weights.begin(), sorted_weights.end());
    CHECK(sorted_weights.front() > 0);
    CHECK(std::adjacent_find(sorted_weights.begin(), sorted_weights.end()) ==
          sorted_weights.end());
    // Identical parameters regenerate the identical document.
    CHECK(InstanceToJson(instance) == InstanceToJson(GenerateInstance(family, 10, 17)));
  }
}

TEST_CASE("trial algorithm construction rejects mismatched instances") {
  const SecretaryInstance partition = TinyPartitionInstance();
  CHECK_THROWS_AS(MakeTrialAlgorithm(partition, AlgorithmKind::kGraphicRns, AlgorithmParams{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      MakeTrialAlgorithm(partition, AlgorithmKind::kSubmodularOnline, AlgorithmParams{}),
      std::invalid_argument);
  const SecretaryInstance graph = GenerateInstance(InstanceFamily::kRandomGraph, 8, 2);
  CHECK_THROWS_AS(MakeTrialAlgorithm(graph, AlgorithmKind::kSimplePartition, AlgorithmParams{}),
                  std::invalid_argument);
  const SecretaryInstance two = GenerateInstance(InstanceFamily::kPartitionTransversal, 8, 2);
  CHECK_THROWS_AS(
      MakeTrialAlgorithm(two, AlgorithmKind::kGeneralizedPartition, AlgorithmParams{}),
      std::invalid_argument);
}

TEST_CASE("guarantee table") {
  const AlgorithmParams defaults;
  const SecretaryInstance partition = TinyPartitionInstance();
  CHECK(TheoreticalBound(partition, AlgorithmKind::kGreedyOnline, defaults) == Rational(1));
  CHECK(TheoreticalBound(partition, AlgorithmKind::kSimplePartition, defaults) ==
        Rational(1, 4));
  CHECK(TheoreticalBound(partition, AlgorithmKind::kGeneralizedPartition, defaults) ==
        Rational(1, 4));
  AlgorithmParams tuned;
  tuned.p = Rational(1, 3);
  CHECK(TheoreticalBound(partition, AlgorithmKind::kSimplePartition, tuned) == Rational(2, 9));

  const SecretaryInstance graph = GenerateInstance(InstanceFamily::kRandomGraph, 8, 2);
  CHECK(TheoreticalBound(graph, AlgorithmKind::kGraphicRns, defaults) == Rational(4, 27));

  const SecretaryInstance sparse = GenerateInstance(InstanceFamily::kRandomSparseMatrix, 8, 2);
  AlgorithmParams sparse_params;
  sparse_params.sparsity = 2;
  CHECK(TheoreticalBound(sparse, AlgorithmKind::kSparseLinearRns, sparse_params) ==
        Rational(1, 8));

  const SecretaryInstance bipartite = GenerateInstance(InstanceFamily::kRandomBipartite, 8, 2);
  CHECK(TheoreticalBound(bipartite, AlgorithmKind::kTransversalRns, defaults) == Rational(1, 4));

  const SecretaryInstance matching =
      GenerateInstance(InstanceFamily::kBipartiteMatchingIntersection, 8, 2);
  CHECK(TheoreticalBound(matching, AlgorithmKind::kCombineOpt, defaults) == Rational(1, 256));
  CHECK(TheoreticalBound(partition, AlgorithmKind::kCombineOpt, defaults) == Rational(1, 16));
  CHECK(TheoreticalBound(graph, AlgorithmKind::kCombineRns, defaults) == Rational(1, 108));
  const SecretaryInstance mixed = GenerateInstance(InstanceFamily::kPartitionTransversal, 8, 2);
  CHECK(TheoreticalBound(mixed, AlgorithmKind::kCombineRns, defaults) == Rational(1, 768));

  SecretaryInstance coverage = TinyPartitionInstance();
  coverage.objective =
      std::make_shared<CoverageFunction>(4, std::vector<ElementSet>{{0}, {1}, {2}, {3}, {0, 1}});
  CHECK(TheoreticalBound(coverage, AlgorithmKind::kSubmodularOnline, defaults) ==
        Rational(1, 2048));
}

TEST_CASE("instance documents round trip for every matroid type") {
  SecretaryInstance instance;
  instance.name = "zoo";
  const auto graphic = std::make_shared<GraphicMatroid>(
      3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}, {0, 0}});
  instance.constraint.matroids = {
      std::make_shared<UniformMatroid>(4, 2),
      std::make_shared<PartitionMatroid>(std::vector<std::vector<ElementId>>{{0, 2}, {1, 3}},
                                         std::vector<int>{1, 2}),
      std::make_shared<LaminarMatroid>(
          4, std::vector<ElementSet>{{0, 1, 2, 3}, {0, 1}}, std::vector<int>{3, 1}),
      graphic,
      std::make_shared<TransversalMatroid>(4, 2,
                                           std::vector<std::vector<int>>{{0}, {0, 1}, {1}, {}}),
      std::make_shared<LinearMatroid>(std::vector<std::vector<Rational>>{
          {Rational(1), Rational(0)},
          {Rational(0), Rational(1)},
          {Rational(1), Rational(1, 2)},
          {Rational(0), Rational(0)}}),
      std::make_shared<DualMatroid>(std::make_shared<UniformMatroid>(4, 1)),
      std::make_shared<RestrictionMatroid>(std::make_shared<UniformMatroid>(4, 3),
                                           ElementSet{0, 2, 3}),
      std::make_shared<DirectSumMatroid>(std::vector<MatroidPtr>{
          std::make_shared<UniformMatroid>(2, 1), std::make_shared<UniformMatroid>(2, 2)}),
  };
  instance.weights = {Rational(5), Rational(13, 4), Rational(2), Rational(1)};
  instance.Validate();

  const std::string text = InstanceToJson(instance);
  const SecretaryInstance parsed = InstanceFromJson(text);
  CHECK(parsed.name == instance.name);
  CHECK(parsed.weights == instance.weights);
  REQUIRE(parsed.constraint.MatroidCount() == instance.constraint.MatroidCount());
  // Oracle equality over the whole (tiny) ground set.
  for (int j = 0; j < parsed.constraint.MatroidCount(); ++j) {
    for (unsigned mask = 0; mask < 16; ++mask) {
      ElementSet set;
      for (ElementId e = 0; e < 4; ++e) {
        if (mask >> e & 1u) set.push_back(e);
      }
      CHECK(parsed.constraint.matroids[j]->Rank(set) ==
            instance.constraint.matroids[j]->Rank(set));
    }
  }
  CHECK(InstanceToJson(parsed) == text);
}

TEST_CASE("instance documents round trip every objective type") {
  const std::vector<SubmodularPtr> objectives = {
      std::make_shared<CoverageFunction>(3, std::vector<ElementSet>{{0, 1}, {1, 2}, {2}}),
      std::make_shared<CutFunction>(3,
                                    std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}},
                                    std::vector<Rational>{Rational(1), Rational(2), Rational(3)}),
      std::make_shared<WeightedRankFunction>(
          std::make_shared<UniformMatroid>(3, 2),
          std::vector<Rational>{Rational(4), Rational(2), Rational(1)}),
      std::make_shared<ModularFunction>(
          std::vector<Rational>{Rational(1), Rational(5), Rational(2)}, Rational(3)),
  };
  for (const SubmodularPtr& objective : objectives) {
    SecretaryInstance instance;
    instance.name = "objective-case";
    instance.constraint.matroids = {std::make_shared<UniformMatroid>(3, 2)};
    instance.weights = {Rational(1), Rational(2), Rational(3)};
    instance.objective = objective;
    const std::string text = InstanceToJson(instance);
    const SecretaryInstance parsed = InstanceFromJson(text);
    REQUIRE(parsed.objective != nullptr);
    for (unsigned mask = 0; mask < 8; ++mask) {
      ElementSet set;
      for (ElementId e = 0; e < 3; ++e) {
        if (mask >> e & 1u) set.push_back(e);
      }
      CHECK(parsed.objective->Value(set) == objective->Value(set));
    }
    CHECK(InstanceToJson(parsed) == text);
  }
}

TEST_CASE("malformed instance documents are rejected") {
  CHECK_THROWS_AS(InstanceFromJson("not json"), std::invalid_argument);
  CHECK_THROWS_AS(InstanceFromJson("[]"), std::invalid_argument);
  CHECK_THROWS_AS(InstanceFromJson(R"({"name":"x","weights":[1]})"), std::invalid_argument);
  CHECK_THROWS_AS(InstanceFromJson(R"({
    "name": "x", "weights": [1.5],
    "matroids": [{"type": "uniform", "ground_size": 1, "rank": 1}]
  })"),
                  std::invalid_argument);
  CHECK_THROWS_AS(InstanceFromJson(R"({
    "name": "x", "weights": ["1/0"],
    "matroids": [{"type": "uniform", "ground_size": 1, "rank": 1}]
  })"),
                  std::invalid_argument);
  CHECK_THROWS_AS(InstanceFromJson(R"({
    "name": "x", "weights": [1],
    "matroids": [{"type": "moebius", "ground_size": 1}]
  })"),
                  std::invalid_argument);
  CHECK_THROWS_AS(InstanceFromJson(R"({
    "name": "x", "weights": [1, 2],
    "matroids": [{"type": "uniform", "ground_size": 1, "rank": 1}]
  })"),
                  std::invalid_argument);
}

TEST_CASE("running statistics and frequency errors") {
  RunningStat stat;
  for (const double x : {2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0}) stat.Add(x);
  CHECK(stat.Count() == 8);
  CHECK(stat.Mean() == doctest::Approx(5.0));
  CHECK(stat.Variance() == doctest::Approx(32.0 / 7.0));
  CHECK(stat.StdError() == doctest::Approx(std::sqrt(32.0 / 7.0 / 8.0)));
  CHECK(FrequencyStdError(0.5, 100) == doctest::Approx(0.05));
  CHECK(FrequencyStdError(0.0, 100) == doctest::Approx(0.0));
}

TEST_CASE("chi square distinguishes sampling laws") {
  Rng rng(4);
  std::vector<std::int64_t> a(6, 0);
  std::vector<std::int64_t> same(6, 0);
  std::vector<std::int64_t> biased(6, 0);
  for (int i = 0; i < 60000; ++i) {
    a[rng.UniformInt(6)]++;
    same[rng.UniformInt(6)]++;
    biased[rng.UniformInt(2) == 0 ? rng.UniformInt(3) : rng.UniformInt(6)]++;
  }
  CHECK(TwoSampleChiSquarePValue(a, same) > 0.01);
  CHECK(TwoSampleChiSquarePValue(a, biased) < 1e-6);
  CHECK_THROWS_AS(TwoSampleChiSquarePValue(a, std::vector<std::int64_t>(5, 0)),
                  std::invalid_argument);
}

}  // namespace
}  // namespace secretary
