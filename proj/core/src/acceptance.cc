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

#include "secretary/acceptance.h"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iterator>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "secretary/framework.h"
#include "secretary/harness.h"
#include "secretary/instance_io.h"
#include "secretary/matroid.h"
#include "secretary/msp.h"
#include "secretary/offline.h"
#include "secretary/overlap.h"
#include "secretary/stats.h"
#include "secretary/submodular.h"

namespace secretary {

namespace {

struct CheckOutcome {
  bool passed = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

std::string Num(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

ElementSet MaskToSet(unsigned mask, int n) {
  ElementSet set;
  for (int e = 0; e < n; ++e) {
    if (mask >> e & 1u) set.push_back(e);
  }
  return set;
}

unsigned SetToMask(const ElementSet& set) {
  unsigned mask = 0;
  for (ElementId e : set) mask |= 1u << e;
  return mask;
}

std::string SetKey(const ElementSet& set) {
  std::ostringstream key;
  for (ElementId e : SortedCopy(set)) key << e << ' ';
  return key.str();
}

// ---------------------------------------------------------------------------
// Criterion 1: matroid axioms and the dual rank identity, exhaustively.

void CheckAxioms(const Matroid& matroid, const std::string& label, CheckOutcome& outcome) {
  const int n = matroid.GroundSize();
  const unsigned full = 1u << n;
  std::vector<bool> independent(full);
  for (unsigned mask = 0; mask < full; ++mask) {
    independent[mask] = matroid.IsIndependent(MaskToSet(mask, n));
  }
  if (!independent[0]) {
    outcome.Fail(label + ": the empty set must be independent");
    return;
  }
  // Downward closure under single-element removal implies the full property.
  for (unsigned mask = 1; mask < full; ++mask) {
    if (!independent[mask]) continue;
    for (int e = 0; e < n; ++e) {
      if ((mask >> e & 1u) && !independent[mask & ~(1u << e)]) {
        outcome.Fail(label + ": independence is not downward closed at mask " +
                     std::to_string(mask));
        return;
      }
    }
  }
  for (unsigned a = 0; a < full; ++a) {
    if (!independent[a]) continue;
    for (unsigned b = 0; b < full; ++b) {
      if (!independent[b] || __builtin_popcount(b) <= __builtin_popcount(a)) continue;
      bool extended = false;
      for (int e = 0; e < n && !extended; ++e) {
        if ((b >> e & 1u) && !(a >> e & 1u) && independent[a | (1u << e)]) extended = true;
      }
      if (!extended) {
        outcome.Fail(label + ": exchange fails for masks " + std::to_string(a) + ", " +
                     std::to_string(b));
        return;
      }
    }
  }
}

void CheckDualRankIdentity(const DualMatroid& dual, const std::string& label,
                           CheckOutcome& outcome) {
  const Matroid& base = dual.Base();
  const int n = dual.GroundSize();
  const int base_rank = base.FullRank();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const ElementSet set = MaskToSet(mask, n);
    const ElementSet rest = ComplementSet(n, set);
    const int expected = static_cast<int>(set.size()) + base.Rank(rest) - base_rank;
    if (dual.Rank(set) != expected) {
      outcome.Fail(label + ": dual rank identity fails at mask " + std::to_string(mask));
      return;
    }
  }
}

CheckOutcome CheckMatroidAxioms() {
  CheckOutcome outcome;
  std::vector<std::pair<std::string, MatroidPtr>> zoo;
  zoo.emplace_back("uniform", std::make_shared<UniformMatroid>(7, 3));
  zoo.emplace_back("partition",
                   std::make_shared<PartitionMatroid>(
                       std::vector<std::vector<ElementId>>{{0, 1, 2}, {3, 4}, {5, 6, 7}},
                       std::vector<int>{2, 1, 2}));
  zoo.emplace_back("laminar",
                   std::make_shared<LaminarMatroid>(
                       6,
                       std::vector<std::vector<ElementId>>{
                           {0, 1, 2, 3, 4, 5}, {0, 1, 2}, {0, 1}, {3, 4, 5}},
                       std::vector<int>{3, 2, 1, 2}));
  const auto k4 = std::make_shared<GraphicMatroid>(
      4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  zoo.emplace_back("graphic-k4", k4);
  zoo.emplace_back("graphic-multigraph",
                   std::make_shared<GraphicMatroid>(
                       3, std::vector<std::pair<int, int>>{{0, 1}, {0, 1}, {1, 2}, {2, 2}}));
  const auto transversal = std::make_shared<TransversalMatroid>(
      6, 3, std::vector<std::vector<int>>{{0}, {0, 1}, {1}, {1, 2}, {2}, {0, 2}});
  zoo.emplace_back("transversal", transversal);
  {
    std::vector<std::vector<Rational>> columns = {
        {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {0, 0, 0}};
    zoo.emplace_back("linear", std::make_shared<LinearMatroid>(std::move(columns)));
  }
  zoo.emplace_back("dual-of-graphic", std::make_shared<DualMatroid>(k4));
  zoo.emplace_back("dual-of-uniform",
                   std::make_shared<DualMatroid>(std::make_shared<UniformMatroid>(6, 2)));
  zoo.emplace_back("restriction-of-transversal",
                   std::make_shared<RestrictionMatroid>(transversal, ElementSet{0, 2, 4, 5}));
  {
    std::vector<MatroidPtr> parts;
    parts.push_back(std::make_shared<UniformMatroid>(3, 1));
    parts.push_back(std::make_shared<GraphicMatroid>(
        3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}}));
    zoo.emplace_back("direct-sum", std::make_shared<DirectSumMatroid>(std::move(parts)));
  }

  for (const auto& [label, matroid] : zoo) {
    CheckAxioms(*matroid, label, outcome);
    if (!outcome.passed) return outcome;
    if (const auto* dual = dynamic_cast<const DualMatroid*>(matroid.get())) {
      CheckDualRankIdentity(*dual, label, outcome);
      if (!outcome.passed) return outcome;
    }
  }
  outcome.detail = std::to_string(zoo.size()) + " matroids, exhaustive";
  return outcome;
}

// ---------------------------------------------------------------------------
// Criteria 2 and 3: offline baselines against brute force.

const InstanceFamily kSingleFamilies[] = {
    InstanceFamily::kRandomPartition, InstanceFamily::kRandomLaminar, InstanceFamily::kRandomGraph,
    InstanceFamily::kRandomBipartite, InstanceFamily::kRandomSparseMatrix};

CheckOutcome CheckGreedyExactness() {
  CheckOutcome outcome;
  for (int i = 0; i < 200; ++i) {
    const InstanceFamily family = kSingleFamilies[i % 5];
    const int size = 4 + i % 9;
    const SecretaryInstance instance = GenerateInstance(family, size, 9000 + i);
    const TieBreakOrder order(instance.weights);
    const ElementSet greedy =
        GreedySingle(*instance.constraint.matroids[0], instance.weights, order);
    const ElementSet opt = BruteForceOpt(instance.constraint, instance.weights, order);
    if (!SameSet(greedy, opt)) {
      outcome.Fail("greedy differs from brute force on " + instance.name);
      return outcome;
    }
  }
  outcome.detail = "200 instances, exact match";
  return outcome;
}

CheckOutcome CheckGreedyApproximation() {
  CheckOutcome outcome;
  const InstanceFamily families[] = {InstanceFamily::kBipartiteMatchingIntersection,
                                     InstanceFamily::kPartitionTransversal};
  for (int i = 0; i < 200; ++i) {
    const int size = 4 + i % 9;
    const SecretaryInstance instance = GenerateInstance(families[i % 2], size, 11000 + i);
    const TieBreakOrder order(instance.weights);
    const int k = instance.constraint.MatroidCount();
    const Rational greedy_weight = SetWeight(
        instance.weights,
        GreedyIntersection(instance.constraint, instance.weights, order).SelectedSet());
    const Rational opt_weight = SetWeight(
        instance.weights, BruteForceOpt(instance.constraint, instance.weights, order));
    if (greedy_weight * k < opt_weight) {
      outcome.Fail("greedy below OPT/k on " + instance.name);
      return outcome;
    }
  }
  outcome.detail = "200 two-matroid instances";
  return outcome;
}

// ---------------------------------------------------------------------------
// Criterion 4: the reduced weight carried by the intersection of the
// single-matroid optima.

CheckOutcome CheckOverlapBound() {
  CheckOutcome outcome;
  const int trials = 10000;
  const Rational p(3, 4);
  struct Setup {
    InstanceFamily family;
    int size;
    std::uint64_t seed;
  };
  const Setup setups[] = {{InstanceFamily::kBipartiteMatchingIntersection, 8, 21},
                          {InstanceFamily::kBipartiteMatchingIntersection, 10, 22},
                          {InstanceFamily::kBipartiteMatchingIntersection, 12, 23},
                          {InstanceFamily::kPartitionTransversal, 8, 24},
                          {InstanceFamily::kPartitionTransversal, 10, 25}};
  double min_margin = 1e18;
  for (const Setup& setup : setups) {
    const SecretaryInstance instance = GenerateInstance(setup.family, setup.size, setup.seed);
    const TieBreakOrder order(instance.weights);
    const OverlapEstimate estimate =
        EstimateOverlap(instance.constraint, instance.weights, order, p, trials, 500 + setup.seed);
    const double target = ToDouble(estimate.opt_weight) / 16.0;
    const double margin = estimate.mean - (target - 3 * estimate.std_error);
    min_margin = std::min(min_margin, margin);
    if (margin < 0) {
      outcome.Fail("overlap mean below OPT/16 - 3 sigma on " + instance.name);
      return outcome;
    }
  }
  outcome.detail = "5 instances, min margin " + Num(min_margin);
  return outcome;
}

// ---------------------------------------------------------------------------
// Criterion 5: the coupled greedy process dominates every tie-break-order
// prefix and keeps its structural invariants.

CheckOutcome CheckCouplingBound() {
  CheckOutcome outcome;
  const int trials = 10000;
  const Rational p(3, 4);
  const SecretaryInstance instance =
      GenerateInstance(InstanceFamily::kBipartiteMatchingIntersection, 10, 31);
  const TieBreakOrder order(instance.weights);
  const int n = instance.GroundSize();
  const int k = instance.constraint.MatroidCount();
  const double factor = 1.0 / 6.0;  // 1/(k(k+1)) at k = 2

  std::vector<RunningStat> prefix_stats(n + 1);
  for (int t = 0; t < trials; ++t) {
    Rng rng(DeriveStream(600, t));
    const CoupledRun run =
        RunCoupledGreedy(instance.constraint, instance.weights, order, p, rng);
    CheckCoupledRunInvariants(instance.constraint, run);
    for (ElementId e : run.certified_common) {
      if (!SetContains(run.common_opt, e)) {
        outcome.Fail("certified set escapes the common optimum");
        return outcome;
      }
    }
    for (int j = 0; j < k; ++j) {
      if (!instance.constraint.matroids[j]->IsIndependent(run.span_trackers[j])) {
        outcome.Fail("span tracker dependent in its matroid");
        return outcome;
      }
    }
    std::vector<int> common_at(n + 1, 0);
    std::vector<int> greedy_at(n + 1, 0);
    for (ElementId e : run.common_opt) ++common_at[order.PositionOf(e) + 1];
    for (ElementId e : run.greedy_set) ++greedy_at[order.PositionOf(e) + 1];
    int common_prefix = 0;
    int greedy_prefix = 0;
    for (int ell = 1; ell <= n; ++ell) {
      common_prefix += common_at[ell];
      greedy_prefix += greedy_at[ell];
      prefix_stats[ell].Add(common_prefix - factor * greedy_prefix);
    }
  }
  double min_margin = 1e18;
  for (int ell = 1; ell <= n; ++ell) {
    const double margin = prefix_stats[ell].Mean() + 3 * prefix_stats[ell].StdError();
    min_margin = std::min(min_margin, margin);
    if (margin < 0) {
      outcome.Fail("prefix " + std::to_string(ell) + " falls below the coupling bound");
      return outcome;
    }
  }
  outcome.detail = "all prefixes, min margin " + Num(min_margin);
  return outcome;
}

// ---------------------------------------------------------------------------
// Criterion 6: the coupled process and the sample-reduction pipeline induce
// identical outcome distributions, enumerated exactly.

CheckOutcome CheckReductionEquivalence() {
  CheckOutcome outcome;
  const Rational p(3, 4);
  const SecretaryInstance instances[] = {
      GenerateInstance(InstanceFamily::kBipartiteMatchingIntersection, 4, 41),
      GenerateInstance(InstanceFamily::kPartitionTransversal, 4, 42)};
  for (const SecretaryInstance& instance : instances) {
    const TieBreakOrder order(instance.weights);
    const int n = instance.GroundSize();
    const int k = instance.constraint.MatroidCount();
    std::map<std::string, Rational> coupled_law;
    std::map<std::string, Rational> reduced_law;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Rational prob = 1;
      for (int e = 0; e < n; ++e) prob *= (mask >> e & 1u) ? p : 1 - p;

      const CoupledRun run = RunCoupledGreedyWithCoins(
          instance.constraint, instance.weights, order,
          [mask](ElementId e) { return (mask >> e & 1u) != 0; });
      std::string coupled_key;
      for (int j = 0; j < k; ++j) coupled_key += SetKey(run.single_opts[j]) + "|";
      coupled_law[coupled_key] += prob;

      const ElementSet sample = MaskToSet(mask, n);
      const ReducedWeights reduced =
          ComputeReducedWeights(instance.constraint, instance.weights, order, sample);
      std::string reduced_key;
      for (int j = 0; j < k; ++j) {
        reduced_key +=
            SetKey(GreedySingle(*instance.constraint.matroids[j], reduced.weights, order)) + "|";
      }
      reduced_law[reduced_key] += prob;
    }
    if (coupled_law != reduced_law) {
      outcome.Fail("outcome laws differ on " + instance.name);
      return outcome;
    }
  }
  outcome.detail = "2 instances, exact law match";
  return outcome;
}

// ---------------------------------------------------------------------------
// Criterion 7: the unit-capacity partition rule.

// Exact acceptance probabilities: enumerate every sample set (product law)
// and every arrival order of the rest, uniformly weighted.
std::vector<Rational> ExactSimplePartitionAcceptProbs(const std::vector<int>& block_of,
                                                      int block_count, const Rational& p,
                                                      const std::vector<Rational>& weights) {
  const int n = static_cast<int>(weights.size());
  std::vector<Rational> accept(n, 0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Rational sample_prob = 1;
    for (int e = 0; e < n; ++e) sample_prob *= (mask >> e & 1u) ? p : 1 - p;
    std::vector<WeightedElement> sample;
    std::vector<ElementId> rest;
    for (int e = 0; e < n; ++e) {
      if (mask >> e & 1u) {
        sample.push_back({e, weights[e]});
      } else {
        rest.push_back(e);
      }
    }
    std::sort(rest.begin(), rest.end());
    std::vector<std::vector<ElementId>> orders;
    do {
      orders.push_back(rest);
    } while (std::next_permutation(rest.begin(), rest.end()));
    const Rational order_prob = sample_prob / static_cast<int>(orders.size());
    for (const std::vector<ElementId>& arrival : orders) {
      SimplePartitionSecretary algo(block_of, block_count, p);
      algo.ObserveSample(sample);
      for (ElementId e : arrival) algo.OnArrival(e, weights[e]);
      for (ElementId e : algo.Accepted()) accept[e] += order_prob;
    }
  }
  return accept;
}

CheckOutcome CheckSimplePartition() {
  CheckOutcome outcome;
  const Rational p(1, 2);
  const Rational bound = p * (1 - p);

  // Micro cases, exact.
  {
    struct Micro {
      std::vector<int> block_of;
      int block_count;
      std::vector<Rational> weights;
      ElementSet opt;
    };
    const Micro micros[] = {{{0}, 1, {5}, {0}},
                            {{0, 0}, 1, {5, 3}, {0}},
                            {{0, 1}, 2, {5, 3}, {0, 1}}};
    for (const Micro& micro : micros) {
      const std::vector<Rational> probs =
          ExactSimplePartitionAcceptProbs(micro.block_of, micro.block_count, p, micro.weights);
      for (ElementId e : micro.opt) {
        if (probs[e] < bound) {
          outcome.Fail("exact micro-case probability below p(1-p)");
          return outcome;
        }
      }
    }
  }

  // Monte Carlo under every arrival order.
  SecretaryInstance instance;
  instance.name = "simple-partition-8";
  instance.weights = {Rational(8), Rational(3), Rational(5), Rational(2),
                      Rational(7), Rational(1), Rational(6), Rational(4)};
  instance.constraint.matroids.push_back(std::make_shared<PartitionMatroid>(
      std::vector<std::vector<ElementId>>{{0, 1, 2}, {3, 4, 5}, {6, 7}},
      std::vector<int>{1, 1, 1}));
  const TieBreakOrder order(instance.weights);
  const ElementSet opt = GreedySingle(*instance.constraint.matroids[0], instance.weights, order);
  const TrialAlgorithm algo =
      MakeTrialAlgorithm(instance, AlgorithmKind::kSimplePartition, AlgorithmParams{});
  const OrderKind orders[] = {OrderKind::kUniformRandom, OrderKind::kWeightDecreasing,
                              OrderKind::kWeightIncreasing, OrderKind::kOptLast,
                              OrderKind::kOptFirst};
  const double target = ToDouble(bound);
  double min_margin = 1e18;
  for (OrderKind order_kind : orders) {
    MonteCarloOptions options;
    options.trials = 10000;
    options.seed = 700 + static_cast<int>(order_kind);
    options.order = order_kind;
    const SimulationReport report = MonteCarlo(instance, algo, options);
    for (ElementId e : opt) {
      const double freq = report.selection_frequency[e];
      const double margin = freq - (target - 3 * FrequencyStdError(freq, options.trials));
      min_margin = std::min(min_margin, margin);
      if (margin < 0) {
        outcome.Fail("element frequency below 1/4 - 3 sigma under " + OrderKindName(order_kind));
        return outcome;
      }
    }
  }
  outcome.detail = "exact micro-cases; 5 orders, min margin " + Num(min_margin);
  return outcome;
}

// ---------------------------------------------------------------------------
// Criterion 8: the oracle-derived threshold equals the direct circuit
// computation, and the generalized rule keeps the frequency guarantee.

// Direct threshold: find the unique minimal dependent subset of opt + e
// containing e, then take its lightest member besides e.
std::optional<WeightedElement> DirectCircuitThreshold(const Matroid& matroid,
                                                      const std::vector<WeightedElement>& sample,
                                                      ElementId e) {
  // Greedy optimum of the sample, heaviest first.
  std::vector<WeightedElement> sorted = sample;
  std::sort(sorted.begin(), sorted.end(), [](const WeightedElement& a, const WeightedElement& b) {
    return HeavierThan(a.id, a.weight, b.id, b.weight);
  });
  std::vector<WeightedElement> opt;
  ElementSet opt_set;
  for (const WeightedElement& candidate : sorted) {
    ElementSet next = SetWith(opt_set, candidate.id);
    if (matroid.IsIndependent(next)) {
      opt.push_back(candidate);
      opt_set = std::move(next);
    }
  }
  if (matroid.IsIndependent(SetWith(opt_set, e))) return std::nullopt;

  const int m = static_cast<int>(opt.size());
  std::optional<unsigned> circuit;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    ElementSet subset = {e};
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1u) subset.push_back(opt[i].id);
    }
    if (matroid.IsIndependent(subset)) continue;
    bool minimal = true;
    for (int i = 0; i < m && minimal; ++i) {
      if (!(mask >> i & 1u)) continue;
      ElementSet smaller = {e};
      for (int j = 0; j < m; ++j) {
        if (j != i && (mask >> j & 1u)) smaller.push_back(opt[j].id);
      }
      if (!matroid.IsIndependent(smaller)) minimal = false;
    }
    if (!minimal) continue;
    if (circuit.has_value()) throw std::logic_error("circuit through e is not unique");
    circuit = mask;
  }
  if (!circuit.has_value()) throw std::logic_error("dependent extension has no circuit");

  std::optional<WeightedElement> lightest;
  for (int i = 0; i < m; ++i) {
    if (!(*circuit >> i & 1u)) continue;
    if (!lightest.has_value() ||
        HeavierThan(lightest->id, lightest->weight, opt[i].id, opt[i].weight)) {
      lightest = opt[i];
    }
  }
  return lightest;
}

CheckOutcome CheckGeneralizedPartition() {
  CheckOutcome outcome;
  const auto matroid = std::make_shared<PartitionMatroid>(
      std::vector<std::vector<ElementId>>{{0, 1, 2, 3}, {4, 5}}, std::vector<int>{2, 1});
  const std::vector<Rational> weights = {Rational(6), Rational(5), Rational(5),
                                         Rational(3), Rational(2), Rational(2)};
  const int n = 6;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<WeightedElement> sample;
    for (int e = 0; e < n; ++e) {
      if (mask >> e & 1u) sample.push_back({e, weights[e]});
    }
    for (int e = 0; e < n; ++e) {
      if (mask >> e & 1u) continue;
      const auto oracle = OracleSampleThreshold(*matroid, sample, e);
      const auto direct = DirectCircuitThreshold(*matroid, sample, e);
      if (oracle.has_value() != direct.has_value() ||
          (oracle.has_value() &&
           (oracle->id != direct->id || oracle->weight != direct->weight))) {
        outcome.Fail("oracle threshold differs from the circuit computation");
        return outcome;
      }
    }
  }

  SecretaryInstance instance;
  instance.name = "generalized-partition-6";
  instance.weights = weights;
  instance.constraint.matroids.push_back(matroid);
  const TieBreakOrder order(weights);
  const ElementSet opt = GreedySingle(*matroid, weights, order);
  MonteCarloOptions options;
  options.trials = 10000;
  options.seed = 800;
  const SimulationReport report = MonteCarlo(
      instance, MakeTrialAlgorithm(instance, AlgorithmKind::kGeneralizedPartition, {}), options);
  double min_margin = 1e18;
  for (ElementId e : opt) {
    const double freq = report.selection_frequency[e];
    const double margin = freq - (0.25 - 3 * FrequencyStdError(freq, options.trials));
    min_margin = std::min(min_margin, margin);
    if (margin < 0) {
      outcome.Fail("optimum-element frequency below 1/4 - 3 sigma");
      return outcome;
    }
  }
  outcome.detail = "64 samples exact; min margin " + Num(min_margin);
  return outcome;
}

// ---------------------------------------------------------------------------
// Criteria 9 and 10: reduce-and-solve procedures standing alone.

// Shared frequency check: run `kind` on the instance and require every
// optimum element to be selected with frequency >= target - 3 sigma, plus
// source-matroid independence of every output.
bool FrequencyCheck(const SecretaryInstance& instance, AlgorithmKind kind, double target,
                    std::uint64_t seed, double& min_margin, CheckOutcome& outcome) {
  const TieBreakOrder order(instance.weights);
  const ElementSet opt =
      GreedySingle(*instance.constraint.matroids[0], instance.weights, order);
  MonteCarloOptions options;
  options.trials = 10000;
  options.seed = seed;
  options.want_ratio = false;
  const SimulationReport report =
      MonteCarlo(instance, MakeTrialAlgorithm(instance, kind, {}), options);
  for (const TrialRecord& record : report.records) {
    if (!instance.constraint.matroids[0]->IsIndependent(record.accepted)) {
      outcome.Fail("an output is dependent in the source matroid on " + instance.name);
      return false;
    }
  }
  for (ElementId e : opt) {
    const double freq = report.selection_frequency[e];
    const double margin = freq - (target - 3 * FrequencyStdError(freq, options.trials));
    min_margin = std::min(min_margin, margin);
    if (margin < 0) {
      outcome.Fail("optimum-element frequency below target on " + instance.name);
      return false;
    }
  }
  return true;
}

CheckOutcome CheckGraphicReduceAndSolve() {
  CheckOutcome outcome;
  double min_margin = 1e18;
  const double target = 4.0 / 27.0;

  SecretaryInstance k4;
  k4.name = "k4";
  k4.weights = {Rational(6), Rational(5), Rational(4), Rational(3), Rational(2), Rational(1)};
  k4.constraint.matroids.push_back(std::make_shared<GraphicMatroid>(
      4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  if (!FrequencyCheck(k4, AlgorithmKind::kGraphicRns, target, 900, min_margin, outcome)) {
    return outcome;
  }
  for (std::uint64_t seed : {901, 902}) {
    const SecretaryInstance random = GenerateInstance(InstanceFamily::kRandomGraph, 8, seed);
    if (!FrequencyCheck(random, AlgorithmKind::kGraphicRns, target, seed, min_margin, outcome)) {
      return outcome;
    }
  }
  outcome.detail = "forests on every run; min margin " + Num(min_margin);
  return outcome;
}

CheckOutcome CheckLinearAndTransversal() {
  CheckOutcome outcome;
  double min_margin = 1e18;

  // Interval matrices (consecutive ones) are totally unimodular.
  SecretaryInstance tu;
  tu.name = "interval-matrix";
  tu.weights = {Rational(8), Rational(7), Rational(6), Rational(5),
                Rational(4), Rational(3), Rational(2), Rational(1)};
  {
    const std::vector<std::vector<int>> supports = {{0},    {0, 1}, {1},    {1, 2},
                                                    {2},    {2, 3}, {3},    {0}};
    std::vector<std::vector<Rational>> columns(8, std::vector<Rational>(4, Rational(0)));
    for (int c = 0; c < 8; ++c) {
      for (int r : supports[c]) columns[c][r] = 1;
    }
    tu.constraint.matroids.push_back(std::make_shared<LinearMatroid>(std::move(columns)));
  }
  if (!FrequencyCheck(tu, AlgorithmKind::kSparseLinearRns, 1.0 / 8.0, 910, min_margin, outcome)) {
    return outcome;
  }

  const SecretaryInstance bipartite =
      GenerateInstance(InstanceFamily::kRandomBipartite, 8, 911);
  if (!FrequencyCheck(bipartite, AlgorithmKind::kTransversalRns, 1.0 / 4.0, 911, min_margin,
                      outcome)) {
    return outcome;
  }
  outcome.detail = "min margin " + Num(min_margin);
  return outcome;
}

// ---------------------------------------------------------------------------
// Criterion 11: combining optimum-competitive algorithms.

CheckOutcome CheckOptCombiner() {
  CheckOutcome outcome;

  const SecretaryInstance two =
      GenerateInstance(InstanceFamily::kBipartiteMatchingIntersection, 6, 51);
  MonteCarloOptions options;
  options.trials = 10000;
  options.seed = 1000;
  const SimulationReport report = MonteCarlo(
      two, MakeTrialAlgorithm(two, AlgorithmKind::kCombineOpt, {}), options);
  for (const TrialRecord& record : report.records) {
    for (const MatroidPtr& matroid : two.constraint.matroids) {
      if (!matroid->IsIndependent(record.accepted)) {
        outcome.Fail("combined output dependent in a constraint matroid");
        return outcome;
      }
    }
  }
  const double two_margin =
      report.mean_ratio - (1.0 / 256.0 - 3 * report.std_error);
  if (two_margin < 0) {
    outcome.Fail("two-matroid mean ratio below 1/256 - 3 sigma");
    return outcome;
  }

  SecretaryInstance one;
  one.name = "single-simple-partition";
  one.weights = {Rational(6), Rational(5), Rational(4), Rational(3), Rational(2), Rational(1)};
  one.constraint.matroids.push_back(std::make_shared<PartitionMatroid>(
      std::vector<std::vector<ElementId>>{{0, 1}, {2, 3}, {4, 5}}, std::vector<int>{1, 1, 1}));
  MonteCarloOptions one_options;
  one_options.trials = 10000;
  one_options.seed = 1001;
  const SimulationReport one_report = MonteCarlo(
      one, MakeTrialAlgorithm(one, AlgorithmKind::kCombineOpt, {}), one_options);
  const double one_margin =
      one_report.mean_ratio - (1.0 / 16.0 - 3 * one_report.std_error);
  if (one_margin < 0) {
    outcome.Fail("degenerate single-matroid ratio below 1/16 - 3 sigma");
    return outcome;
  }
  outcome.detail = "margins " + Num(two_margin) + " (k=2), " + Num(one_margin) + " (k=1)";
  return outcome;
}

// ---------------------------------------------------------------------------
// Criterion 12: combining reduce-and-solve procedures, with per-run
// transcript invariants.

double CombinedRatioRun(const std::vector<ReduceAndSolveProcedure>& procedures,
                        const std::vector<Rational>& weights, int trials, std::uint64_t seed,
                        CheckOutcome& outcome) {
  const int n = static_cast<int>(weights.size());
  const TieBreakOrder order(weights);
  IntersectionConstraint constraint;
  for (const ReduceAndSolveProcedure& procedure : procedures) {
    constraint.matroids.push_back(procedure.source_matroid);
  }
  const Rational opt = SetWeight(weights, BruteForceOpt(constraint, weights, order));
  RunningStat ratios;
  for (int t = 0; t < trials; ++t) {
    Rng rng(DeriveStream(seed, t));
    std::vector<ElementId> arrival(n);
    std::iota(arrival.begin(), arrival.end(), 0);
    rng.Shuffle(arrival);
    const CombinedRunResult run =
        RunReduceAndSolveCombiner(procedures, weights, order, arrival, rng);
    CheckCombinedRunInvariants(procedures, weights, run);
    ratios.Add(ToDouble(SetWeight(weights, run.selected) / opt));
  }
  (void)outcome;
  return ratios.Mean() + 3 * ratios.StdError();
}

CheckOutcome CheckReduceAndSolveCombiner() {
  CheckOutcome outcome;
  const int trials = 10000;

  // k = 1, graphic.
  {
    const auto graphic = std::make_shared<GraphicMatroid>(
        4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const std::vector<Rational> weights = {Rational(6), Rational(5), Rational(4),
                                           Rational(3), Rational(2), Rational(1)};
    std::vector<ReduceAndSolveProcedure> procedures;
    procedures.push_back(MakeGraphicReduceAndSolve(graphic, Rational(2, 3)));
    const double upper = CombinedRatioRun(procedures, weights, trials, 1100, outcome);
    if (!outcome.passed) return outcome;
    if (upper < 1.0 / 108.0) {
      outcome.Fail("graphic combiner ratio below 1/108 - 3 sigma");
      return outcome;
    }
  }

  // k = 2, simple partition x transversal.
  {
    const auto partition = std::make_shared<PartitionMatroid>(
        std::vector<std::vector<ElementId>>{{0, 1}, {2, 3}, {4, 5}}, std::vector<int>{1, 1, 1});
    const auto transversal = std::make_shared<TransversalMatroid>(
        6, 3, std::vector<std::vector<int>>{{0}, {0, 1}, {1}, {1, 2}, {2}, {0, 2}});
    const std::vector<Rational> weights = {Rational(9), Rational(4), Rational(7),
                                           Rational(2), Rational(5), Rational(1)};
    std::vector<int> block_of(6);
    for (ElementId e = 0; e < 6; ++e) block_of[e] = partition->BlockOf(e);
    const int block_count = partition->BlockCount();
    std::vector<ReduceAndSolveProcedure> procedures;
    procedures.push_back(MakeTrivialReduceAndSolve(
        partition,
        [block_of, block_count]() {
          return std::make_unique<SimplePartitionSecretary>(block_of, block_count,
                                                            Rational(1, 2));
        },
        Rational(1, 4)));
    procedures.push_back(MakeTransversalReduceAndSolve(transversal, Rational(1, 2)));
    const double upper = CombinedRatioRun(procedures, weights, trials, 1101, outcome);
    if (!outcome.passed) return outcome;
    if (upper < 1.0 / 768.0) {
      outcome.Fail("partition x transversal combiner ratio below 1/768 - 3 sigma");
      return outcome;
    }
  }
  outcome.detail = "transcript invariants held on all " + std::to_string(2 * trials) + " runs";
  return outcome;
}

// ---------------------------------------------------------------------------
// Criterion 13: the merged sample matches independent draws in joint law.

CheckOutcome CheckSampleMerging() {
  CheckOutcome outcome;
  const int n = 3;
  const Rational p(3, 4);
  const std::vector<int> inner_sizes = {2, 1};
  const int draws = 100000;
  const int cells = 8 * 8 * 8;
  std::vector<std::int64_t> merged_counts(cells, 0);
  std::vector<std::int64_t> independent_counts(cells, 0);

  Rng merged_rng(1300);
  for (int t = 0; t < draws; ++t) {
    const MergedSamplePlan plan = MergeSamples(n, p, inner_sizes, merged_rng);
    const unsigned cell = SetToMask(plan.outer_sample) * 64 +
                          SetToMask(plan.inner_samples[0]) * 8 +
                          SetToMask(plan.inner_samples[1]);
    ++merged_counts[cell];
  }

  Rng independent_rng(1301);
  const CoinBias bias = CoinBias::FromRational(p);
  for (int t = 0; t < draws; ++t) {
    unsigned outer = 0;
    for (int e = 0; e < n; ++e) {
      if (independent_rng.Bernoulli(bias)) outer |= 1u << e;
    }
    const unsigned first = SetToMask(independent_rng.SampleIndexSubset(n, inner_sizes[0]));
    const unsigned second = SetToMask(independent_rng.SampleIndexSubset(n, inner_sizes[1]));
    ++independent_counts[outer * 64 + first * 8 + second];
  }

  const double p_value = TwoSampleChiSquarePValue(merged_counts, independent_counts);
  if (p_value <= 0.01) {
    outcome.Fail("chi-square p-value " + Num(p_value) + " rejects equality");
    return outcome;
  }
  outcome.detail = "p-value " + Num(p_value);
  return outcome;
}

// ---------------------------------------------------------------------------
// Criterion 14: the submodular extension.

CheckOutcome CheckSubmodularExtension() {
  CheckOutcome outcome;

  const auto coverage = std::make_shared<CoverageFunction>(
      5, std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}});
  const auto partition = std::make_shared<PartitionMatroid>(
      std::vector<std::vector<ElementId>>{{0, 1}, {2, 3}, {4, 5}}, std::vector<int>{1, 1, 1});
  const auto transversal = std::make_shared<TransversalMatroid>(
      6, 3, std::vector<std::vector<int>>{{0}, {0, 1}, {1}, {1, 2}, {2}, {0, 2}});

  // Submodularity, exhaustively.
  {
    const auto k4 = std::make_shared<GraphicMatroid>(
        4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const std::vector<Rational> rank_weights = {Rational(6), Rational(5), Rational(4),
                                                Rational(3), Rational(2), Rational(1)};
    const CutFunction cut(
        5, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2}, {1, 4}});
    const WeightedRankFunction rank(k4, rank_weights);
    const ModularFunction modular(std::vector<Rational>(8, Rational(3)), Rational(1));
    if (!IsSubmodular(*coverage) || !IsSubmodular(cut) || !IsSubmodular(rank) ||
        !IsSubmodular(modular)) {
      outcome.Fail("a concrete objective fails the exhaustive submodularity check");
      return outcome;
    }
  }

  IntersectionConstraint one_matroid;
  one_matroid.matroids.push_back(partition);
  IntersectionConstraint two_matroids;
  two_matroids.matroids.push_back(partition);
  two_matroids.matroids.push_back(transversal);

  // Greedy lemma: (k+1) f(greedy) >= f(C + greedy) for every feasible C.
  for (const IntersectionConstraint* constraint : {&one_matroid, &two_matroids}) {
    const int k = constraint->MatroidCount();
    const ElementSet greedy = SubmodularGreedy(*constraint, *coverage);
    const Rational lhs = Rational(k + 1) * coverage->Value(greedy);
    for (unsigned mask = 0; mask < (1u << 6); ++mask) {
      const ElementSet candidate = MaskToSet(mask, 6);
      if (!constraint->Feasible(candidate)) continue;
      if (lhs < coverage->Value(SetUnion(candidate, greedy))) {
        outcome.Fail("greedy set loses to a feasible union at k = " + std::to_string(k));
        return outcome;
      }
    }
  }

  // Random restriction: greedy on a half-density subset keeps a 1/(4(k+1))
  // share of the optimum in expectation.
  {
    const int k = two_matroids.MatroidCount();
    const Rational opt_value =
        coverage->Value(BruteForceSubmodularOpt(two_matroids, *coverage));
    const double target = ToDouble(opt_value) / (4.0 * (k + 1));
    RunningStat values;
    const CoinBias half = CoinBias::FromRational(Rational(1, 2));
    Rng rng(1400);
    for (int t = 0; t < 10000; ++t) {
      ElementSet restriction;
      for (ElementId e = 0; e < 6; ++e) {
        if (rng.Bernoulli(half)) restriction.push_back(e);
      }
      values.Add(ToDouble(coverage->Value(SubmodularGreedy(two_matroids, *coverage, &restriction))));
    }
    if (values.Mean() < target - 3 * values.StdError()) {
      outcome.Fail("random-restriction mean below OPT/(4(k+1)) - 3 sigma");
      return outcome;
    }
  }

  // Online run with a 1/4-competitive inner algorithm at k = 1.
  SecretaryInstance instance;
  instance.name = "submodular-online-6";
  instance.weights = std::vector<Rational>(6, Rational(1));
  instance.constraint = one_matroid;
  instance.objective = coverage;
  MonteCarloOptions options;
  options.trials = 10000;
  options.seed = 1401;
  const SimulationReport report = MonteCarlo(
      instance, MakeTrialAlgorithm(instance, AlgorithmKind::kSubmodularOnline, {}), options);
  const double margin = report.mean_ratio - (1.0 / 2048.0 - 3 * report.std_error);
  if (margin < 0) {
    outcome.Fail("online mean ratio below 1/2048 - 3 sigma");
    return outcome;
  }
  outcome.detail = "online margin " + Num(margin);
  return outcome;
}

// ---------------------------------------------------------------------------
// Criterion 15: byte-identical reports under one seed.

CheckOutcome CheckDeterminism() {
  CheckOutcome outcome;
  const SecretaryInstance instance = GenerateInstance(InstanceFamily::kRandomPartition, 8, 77);
  const TrialAlgorithm algo =
      MakeTrialAlgorithm(instance, AlgorithmKind::kGeneralizedPartition, {});
  MonteCarloOptions options;
  options.trials = 300;
  options.seed = 4242;

  auto run = [&](int threads) {
    MonteCarloOptions local = options;
    local.threads = threads;
    SimulationReport report = MonteCarlo(instance, algo, local);
    report.algorithm_name = AlgorithmKindName(AlgorithmKind::kGeneralizedPartition);
    return report;
  };
  const SimulationReport first = run(1);
  const SimulationReport second = run(2);
  const SimulationReport third = run(1);
  if (ReportToJson(first) != ReportToJson(second) ||
      ReportToJson(first) != ReportToJson(third) ||
      ReportToCsv(first) != ReportToCsv(second) || ReportToCsv(first) != ReportToCsv(third)) {
    outcome.Fail("reports differ across re-runs with one seed");
    return outcome;
  }
  outcome.detail = "JSON and CSV identical across re-runs and thread counts";
  return outcome;
}

// ---------------------------------------------------------------------------

struct CriterionEntry {
  const char* name;
  double budget_seconds;
  CheckOutcome (*fn)();
};

const CriterionEntry kCriteria[] = {
    {"matroid-axioms", 10, CheckMatroidAxioms},
    {"greedy-exactness", 30, CheckGreedyExactness},
    {"greedy-k-approximation", 60, CheckGreedyApproximation},
    {"overlap-bound", 120, CheckOverlapBound},
    {"coupling-bound", 120, CheckCouplingBound},
    {"reduction-equivalence", 10, CheckReductionEquivalence},
    {"simple-partition", 120, CheckSimplePartition},
    {"generalized-partition", 120, CheckGeneralizedPartition},
    {"graphic-reduce-and-solve", 120, CheckGraphicReduceAndSolve},
    {"linear-and-transversal", 180, CheckLinearAndTransversal},
    {"optimum-combiner", 180, CheckOptCombiner},
    {"reduce-and-solve-combiner", 300, CheckReduceAndSolveCombiner},
    {"sample-merging", 60, CheckSampleMerging},
    {"submodular-extension", 300, CheckSubmodularExtension},
    {"determinism", 0, CheckDeterminism},
};

}  // namespace

int AcceptanceCriterionCount() { return static_cast<int>(std::size(kCriteria)); }

const char* AcceptanceCriterionName(int index) {
  if (index < 1 || index > AcceptanceCriterionCount()) {
    throw std::invalid_argument("criterion index out of range");
  }
  return kCriteria[index - 1].name;
}

CriterionResult RunAcceptanceCriterion(int index) {
  if (index < 1 || index > AcceptanceCriterionCount()) {
    throw std::invalid_argument("criterion index out of range");
  }
  const CriterionEntry& entry = kCriteria[index - 1];
  CriterionResult result;
  result.index = index;
  result.name = entry.name;
  result.budget_seconds = entry.budget_seconds;
  const auto start = std::chrono::steady_clock::now();
  CheckOutcome outcome;
  try {
    outcome = entry.fn();
  } catch (const std::exception& error) {
    outcome.passed = false;
    outcome.detail = std::string("exception: ") + error.what();
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.passed = outcome.passed;
  result.detail = outcome.detail;
  if (result.passed && entry.budget_seconds > 0 && result.seconds >= entry.budget_seconds) {
    result.passed = false;
    result.detail = "over time budget; " + result.detail;
  }
  return result;
}

std::vector<CriterionResult> RunAcceptanceSuite() {
  std::vector<CriterionResult> results;
  results.reserve(AcceptanceCriterionCount());
  for (int i = 1; i <= AcceptanceCriterionCount(); ++i) {
    results.push_back(RunAcceptanceCriterion(i));
  }
  return results;
}

std::string FormatCriterionLine(const CriterionResult& result) {
  std::ostringstream line;
  line << (result.passed ? "PASS" : "FAIL") << ' ';
  line.width(2);
  line << result.index << ' ' << result.name << "  " << Num(result.seconds) << "s";
  if (result.budget_seconds > 0) line << "/" << Num(result.budget_seconds) << "s";
  if (!result.detail.empty()) line << "  " << result.detail;
  return line.str();
}

}  // namespace secretary
