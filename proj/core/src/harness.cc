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
#include <chrono>
#include <exception>
#include <iomanip>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

#include "secretary/framework.h"
#include "secretary/stats.h"

namespace secretary {

namespace {

void ValidateArrival(const std::vector<ElementId>& arrival, int n) {
  if (static_cast<int>(arrival.size()) != n) {
    throw std::invalid_argument("arrival order must cover the ground set");
  }
  std::vector<bool> seen(n, false);
  for (ElementId e : arrival) {
    if (e < 0 || e >= n || seen[e]) {
      throw std::invalid_argument("arrival order must be a permutation");
    }
    seen[e] = true;
  }
}

Rational RationalPow(const Rational& base, int exponent) {
  Rational result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

const PartitionMatroid* AsPartition(const MatroidPtr& matroid) {
  return dynamic_cast<const PartitionMatroid*>(matroid.get());
}

// Inner algorithm for one matroid of an optimum-competitive combination,
// together with its per-optimum-element constant.
struct OptInner {
  AlgorithmFactory factory;
  Rational constant;
};

OptInner MakeOptInner(const MatroidPtr& matroid, const std::optional<Rational>& p_override) {
  const auto* partition = AsPartition(matroid);
  if (partition == nullptr) {
    throw std::invalid_argument(
        "optimum-competitive inner algorithms are available for partition matroids only");
  }
  if (partition->IsSimple()) {
    const Rational p = p_override.value_or(Rational(1, 2));
    const int n = partition->GroundSize();
    std::vector<int> block_of(n);
    for (ElementId e = 0; e < n; ++e) block_of[e] = partition->BlockOf(e);
    const int block_count = partition->BlockCount();
    OptInner inner;
    inner.factory = [block_of, block_count, p]() {
      return std::make_unique<SimplePartitionSecretary>(block_of, block_count, p);
    };
    inner.constant = p * (1 - p);
    return inner;
  }
  OptInner inner;
  inner.factory = [matroid]() { return std::make_unique<GeneralizedPartitionSecretary>(matroid); };
  inner.constant = Rational(1, 4);
  return inner;
}

// The reduce-and-solve procedure matching one matroid's structure.
ReduceAndSolveProcedure MakeProcedureFor(const MatroidPtr& matroid,
                                         const AlgorithmParams& params) {
  if (const auto* graphic = dynamic_cast<const GraphicMatroid*>(matroid.get())) {
    (void)graphic;
    return MakeGraphicReduceAndSolve(matroid, params.p.value_or(Rational(2, 3)));
  }
  if (const auto* linear = dynamic_cast<const LinearMatroid*>(matroid.get())) {
    const int sparsity = params.sparsity.value_or(std::max(1, linear->ColumnSparsity()));
    std::optional<Rational> p = params.p;
    if (!p.has_value() && sparsity < 2) p = Rational(1, 2);
    return MakeSparseLinearReduceAndSolve(matroid, sparsity, p);
  }
  if (dynamic_cast<const TransversalMatroid*>(matroid.get()) != nullptr) {
    return MakeTransversalReduceAndSolve(matroid, params.p.value_or(Rational(1, 2)));
  }
  if (const auto* partition = AsPartition(matroid)) {
    (void)partition;
    OptInner inner = MakeOptInner(matroid, params.p);
    return MakeTrivialReduceAndSolve(matroid, std::move(inner.factory), inner.constant);
  }
  throw std::invalid_argument(
      "no reduce-and-solve procedure for this matroid class; supported: graphic, "
      "column-sparse linear, transversal, partition");
}

std::vector<ReduceAndSolveProcedure> BuildProcedures(const SecretaryInstance& instance,
                                                     const AlgorithmParams& params) {
  std::vector<ReduceAndSolveProcedure> procedures;
  procedures.reserve(instance.constraint.matroids.size());
  for (const MatroidPtr& matroid : instance.constraint.matroids) {
    procedures.push_back(MakeProcedureFor(matroid, params));
  }
  return procedures;
}

// The partition block (vertex, matrix row, or right node) each refined copy
// lives in, mirroring the procedure constructions; -1 for the placeholder
// copies of loops.
std::vector<int> RefinedCopyBlocks(const MatroidPtr& matroid,
                                   const RefinementStructure& refinement) {
  std::vector<int> blocks(refinement.refined_count, -1);
  if (const auto* graphic = dynamic_cast<const GraphicMatroid*>(matroid.get())) {
    for (ElementId e = 0; e < refinement.source_count; ++e) {
      const auto [u, v] = graphic->Endpoints(e);
      blocks[refinement.refinements[e][0]] = u;
      blocks[refinement.refinements[e][1]] = v;
    }
    return blocks;
  }
  if (const auto* linear = dynamic_cast<const LinearMatroid*>(matroid.get())) {
    for (ElementId c = 0; c < refinement.source_count; ++c) {
      const std::vector<int> rows = linear->NonzeroRows(c);
      if (rows.size() != refinement.refinements[c].size()) continue;  // zero column
      for (std::size_t i = 0; i < rows.size(); ++i) {
        blocks[refinement.refinements[c][i]] = rows[i];
      }
    }
    return blocks;
  }
  if (const auto* transversal = dynamic_cast<const TransversalMatroid*>(matroid.get())) {
    for (ElementId u = 0; u < refinement.source_count; ++u) {
      std::vector<int> nbrs = transversal->Neighbors(u);
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      if (nbrs.size() != refinement.refinements[u].size()) continue;  // isolated
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        blocks[refinement.refinements[u][i]] = nbrs[i];
      }
    }
    return blocks;
  }
  throw std::invalid_argument("no copy-block structure for this matroid class");
}

// Kuhn augmenting step: gives `e` a block, evicting lighter-claimed blocks
// recursively.
bool ClaimBlock(ElementId e, const RefinementStructure& refinement,
                const std::vector<int>& copy_block, std::map<int, ElementId>& owner,
                std::set<int>& visited) {
  for (ElementId copy : refinement.refinements[e]) {
    const int block = copy_block[copy];
    if (block < 0 || visited.count(block) > 0) continue;
    visited.insert(block);
    const auto it = owner.find(block);
    if (it == owner.end() || ClaimBlock(it->second, refinement, copy_block, owner, visited)) {
      owner[block] = e;
      return true;
    }
  }
  return false;
}

// Chooses the copy each source element exposes in a standalone run. Every
// optimum element gets a copy on its own block (an injective block choice
// exists for any independent set of the source matroid), and every other
// element is routed first to a block no optimum copy occupies, then to one
// whose optimum copy outweighs it; in a forest, matching, or representative
// system one of the two always exists, so block winners are exactly the
// optimum copies and no optimum element is crowded out.
std::vector<ElementId> OptAlignedAssignment(const MatroidPtr& matroid,
                                            const RefinementStructure& refinement,
                                            const std::vector<Rational>& weights) {
  const std::vector<int> copy_block = RefinedCopyBlocks(matroid, refinement);
  const TieBreakOrder order(weights);
  const ElementSet opt = GreedySingle(*matroid, weights, order);

  std::map<int, ElementId> owner;  // block -> optimum element holding it
  for (ElementId e : order.Ordered()) {
    if (!SetContains(opt, e)) continue;
    std::set<int> visited;
    ClaimBlock(e, refinement, copy_block, owner, visited);
  }

  std::vector<ElementId> assignment(refinement.source_count);
  for (ElementId e = 0; e < refinement.source_count; ++e) {
    const std::vector<ElementId>& copies = refinement.refinements[e];
    assignment[e] = copies.front();
    if (SetContains(opt, e)) {
      for (ElementId copy : copies) {
        const int block = copy_block[copy];
        const auto it = owner.find(block);
        if (block >= 0 && it != owner.end() && it->second == e) {
          assignment[e] = copy;
          break;
        }
      }
      continue;
    }
    ElementId unclaimed = -1;
    ElementId outweighed = -1;
    for (ElementId copy : copies) {
      const int block = copy_block[copy];
      if (block < 0) continue;
      const auto it = owner.find(block);
      if (it == owner.end()) {
        if (unclaimed < 0) unclaimed = copy;
      } else if (order.Precedes(it->second, e) && outweighed < 0) {
        outweighed = copy;
      }
    }
    if (unclaimed >= 0) {
      assignment[e] = unclaimed;
    } else if (outweighed >= 0) {
      assignment[e] = outweighed;
    }
  }
  return assignment;
}

MatroidPtr SoleMatroid(const SecretaryInstance& instance, const char* kind) {
  if (instance.constraint.MatroidCount() != 1) {
    throw std::invalid_argument(std::string(kind) + " requires a single-matroid constraint");
  }
  return instance.constraint.matroids[0];
}

std::string FormatDouble(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

}  // namespace

void SecretaryInstance::Validate() const {
  if (constraint.MatroidCount() < 1) {
    throw std::invalid_argument("instance needs at least one matroid");
  }
  constraint.Validate();
  if (static_cast<int>(weights.size()) != constraint.GroundSize()) {
    throw std::invalid_argument("weights must cover the ground set");
  }
  for (const Rational& w : weights) {
    if (w < 0) throw std::invalid_argument("weights must be nonnegative");
  }
  if (objective != nullptr && objective->GroundSize() != constraint.GroundSize()) {
    throw std::invalid_argument("objective ground size must match the constraint");
  }
}

OrderKind ParseOrderKind(const std::string& name) {
  if (name == "uniform-random") return OrderKind::kUniformRandom;
  if (name == "weight-decreasing") return OrderKind::kWeightDecreasing;
  if (name == "weight-increasing") return OrderKind::kWeightIncreasing;
  if (name == "opt-last") return OrderKind::kOptLast;
  if (name == "opt-first") return OrderKind::kOptFirst;
  if (name == "explicit") return OrderKind::kExplicit;
  throw std::invalid_argument("unknown arrival order: " + name);
}

std::string OrderKindName(OrderKind kind) {
  switch (kind) {
    case OrderKind::kUniformRandom: return "uniform-random";
    case OrderKind::kWeightDecreasing: return "weight-decreasing";
    case OrderKind::kWeightIncreasing: return "weight-increasing";
    case OrderKind::kOptLast: return "opt-last";
    case OrderKind::kOptFirst: return "opt-first";
    case OrderKind::kExplicit: return "explicit";
  }
  throw std::invalid_argument("unknown order kind");
}

std::vector<ElementId> RealizeOrder(OrderKind kind, const TieBreakOrder& order,
                                    const ElementSet& opt,
                                    const std::vector<ElementId>& explicit_order, Rng& rng) {
  const int n = order.Size();
  switch (kind) {
    case OrderKind::kUniformRandom: {
      std::vector<ElementId> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      rng.Shuffle(perm);
      return perm;
    }
    case OrderKind::kWeightDecreasing:
      return order.Ordered();
    case OrderKind::kWeightIncreasing: {
      std::vector<ElementId> perm = order.Ordered();
      std::reverse(perm.begin(), perm.end());
      return perm;
    }
    case OrderKind::kOptLast:
    case OrderKind::kOptFirst: {
      std::vector<ElementId> in_opt = SortedCopy(opt);
      std::vector<ElementId> rest = ComplementSet(n, in_opt);
      rng.Shuffle(in_opt);
      rng.Shuffle(rest);
      std::vector<ElementId> perm;
      perm.reserve(n);
      const auto& head = kind == OrderKind::kOptFirst ? in_opt : rest;
      const auto& tail = kind == OrderKind::kOptFirst ? rest : in_opt;
      perm.insert(perm.end(), head.begin(), head.end());
      perm.insert(perm.end(), tail.begin(), tail.end());
      return perm;
    }
    case OrderKind::kExplicit:
      ValidateArrival(explicit_order, n);
      return explicit_order;
  }
  throw std::invalid_argument("unknown order kind");
}

ElementSet RunOrderOblivious(OrderObliviousAlgorithm& algo,
                             const std::vector<WeightedElement>& elements,
                             const std::vector<ElementId>& arrival, Rng& rng) {
  const int n = static_cast<int>(elements.size());
  ValidateArrival(arrival, n);
  const int m = std::clamp(algo.DrawSampleSize(n, rng), 0, n);
  const std::vector<int> sample = rng.SampleIndexSubset(n, m);
  std::vector<bool> sampled(n, false);
  std::vector<WeightedElement> observed;
  observed.reserve(sample.size());
  for (int e : sample) {
    sampled[e] = true;
    observed.push_back(elements[e]);
  }
  algo.ObserveSample(observed);
  for (ElementId e : arrival) {
    if (sampled[e]) continue;
    algo.OnArrival(elements[e].id, elements[e].weight);
  }
  return SortedCopy(algo.Accepted());
}

ElementSet RunOrderOblivious(OrderObliviousAlgorithm& algo, const std::vector<Rational>& weights,
                             const std::vector<ElementId>& arrival, Rng& rng) {
  std::vector<WeightedElement> elements;
  elements.reserve(weights.size());
  for (ElementId e = 0; e < static_cast<int>(weights.size()); ++e) {
    elements.push_back({e, weights[e]});
  }
  return RunOrderOblivious(algo, elements, arrival, rng);
}

std::vector<ElementId> FirstRefinementAssignment(const RefinementStructure& refinement) {
  std::vector<ElementId> assignment(refinement.source_count);
  for (ElementId e = 0; e < refinement.source_count; ++e) {
    assignment[e] = refinement.refinements[e].front();
  }
  return assignment;
}

ElementSet RunReduceAndSolveStandalone(const ReduceAndSolveProcedure& procedure,
                                       const std::vector<ElementId>& assignment,
                                       const std::vector<Rational>& weights,
                                       const std::vector<ElementId>& arrival, Rng& rng) {
  const int n = procedure.refinement.source_count;
  if (static_cast<int>(assignment.size()) != n || static_cast<int>(weights.size()) != n) {
    throw std::invalid_argument("assignment and weights must cover the source ground set");
  }
  std::vector<WeightedElement> elements;
  elements.reserve(n);
  for (ElementId e = 0; e < n; ++e) {
    const ElementId r = assignment[e];
    if (r < 0 || r >= procedure.refinement.refined_count ||
        procedure.refinement.source_of[r] != e) {
      throw std::invalid_argument("assignment must pick a refinement of each source element");
    }
    elements.push_back({r, weights[e]});
  }
  auto inner = procedure.make_inner();
  const ElementSet refined = RunOrderOblivious(*inner, elements, arrival, rng);
  ElementSet sources;
  sources.reserve(refined.size());
  for (ElementId r : refined) sources.push_back(procedure.refinement.source_of[r]);
  return SortedCopy(sources);
}

AlgorithmKind ParseAlgorithmKind(const std::string& name) {
  if (name == "greedy-online") return AlgorithmKind::kGreedyOnline;
  if (name == "simple-partition") return AlgorithmKind::kSimplePartition;
  if (name == "generalized-partition") return AlgorithmKind::kGeneralizedPartition;
  if (name == "graphic-rns") return AlgorithmKind::kGraphicRns;
  if (name == "sparse-linear-rns") return AlgorithmKind::kSparseLinearRns;
  if (name == "transversal-rns") return AlgorithmKind::kTransversalRns;
  if (name == "combine-opt") return AlgorithmKind::kCombineOpt;
  if (name == "combine-rns") return AlgorithmKind::kCombineRns;
  if (name == "submodular-online") return AlgorithmKind::kSubmodularOnline;
  throw std::invalid_argument("unknown algorithm: " + name);
}

std::string AlgorithmKindName(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::kGreedyOnline: return "greedy-online";
    case AlgorithmKind::kSimplePartition: return "simple-partition";
    case AlgorithmKind::kGeneralizedPartition: return "generalized-partition";
    case AlgorithmKind::kGraphicRns: return "graphic-rns";
    case AlgorithmKind::kSparseLinearRns: return "sparse-linear-rns";
    case AlgorithmKind::kTransversalRns: return "transversal-rns";
    case AlgorithmKind::kCombineOpt: return "combine-opt";
    case AlgorithmKind::kCombineRns: return "combine-rns";
    case AlgorithmKind::kSubmodularOnline: return "submodular-online";
  }
  throw std::invalid_argument("unknown algorithm kind");
}

TrialAlgorithm MakeTrialAlgorithm(const SecretaryInstance& instance, AlgorithmKind kind,
                                  const AlgorithmParams& params) {
  instance.Validate();
  switch (kind) {
    case AlgorithmKind::kGreedyOnline: {
      IntersectionConstraint constraint = instance.constraint;
      std::vector<Rational> weights = instance.weights;
      return [constraint, weights](Rng&, const std::vector<ElementId>& arrival) {
        // Zero-weight elements never raise the objective but can block
        // later arrivals, so the online greedy skips them.
        ElementSet current;
        for (ElementId e : arrival) {
          if (weights[e] == 0) continue;
          ElementSet next = SetWith(current, e);
          if (constraint.Feasible(next)) current = std::move(next);
        }
        return SortedCopy(current);
      };
    }
    case AlgorithmKind::kSimplePartition: {
      const MatroidPtr matroid = SoleMatroid(instance, "simple-partition");
      const auto* partition = AsPartition(matroid);
      if (partition == nullptr || !partition->IsSimple()) {
        throw std::invalid_argument("simple-partition requires unit capacities");
      }
      OptInner inner = MakeOptInner(matroid, params.p);
      std::vector<Rational> weights = instance.weights;
      return [factory = std::move(inner.factory), weights](Rng& rng,
                                                           const std::vector<ElementId>& arrival) {
        auto algo = factory();
        return RunOrderOblivious(*algo, weights, arrival, rng);
      };
    }
    case AlgorithmKind::kGeneralizedPartition: {
      const MatroidPtr matroid = SoleMatroid(instance, "generalized-partition");
      if (AsPartition(matroid) == nullptr) {
        throw std::invalid_argument("generalized-partition requires a partition matroid");
      }
      if (params.p.has_value()) {
        throw std::invalid_argument("generalized-partition has a fixed sampling probability");
      }
      std::vector<Rational> weights = instance.weights;
      return [matroid, weights](Rng& rng, const std::vector<ElementId>& arrival) {
        GeneralizedPartitionSecretary algo(matroid);
        return RunOrderOblivious(algo, weights, arrival, rng);
      };
    }
    case AlgorithmKind::kGraphicRns:
    case AlgorithmKind::kSparseLinearRns:
    case AlgorithmKind::kTransversalRns: {
      const MatroidPtr matroid = SoleMatroid(instance, AlgorithmKindName(kind).c_str());
      const bool matches =
          (kind == AlgorithmKind::kGraphicRns &&
           dynamic_cast<const GraphicMatroid*>(matroid.get()) != nullptr) ||
          (kind == AlgorithmKind::kSparseLinearRns &&
           dynamic_cast<const LinearMatroid*>(matroid.get()) != nullptr) ||
          (kind == AlgorithmKind::kTransversalRns &&
           dynamic_cast<const TransversalMatroid*>(matroid.get()) != nullptr);
      if (!matches) {
        throw std::invalid_argument(AlgorithmKindName(kind) + " does not fit this matroid class");
      }
      ReduceAndSolveProcedure procedure = MakeProcedureFor(matroid, params);
      std::vector<ElementId> assignment =
          OptAlignedAssignment(matroid, procedure.refinement, instance.weights);
      std::vector<Rational> weights = instance.weights;
      return [procedure = std::move(procedure), assignment = std::move(assignment), weights](
                 Rng& rng, const std::vector<ElementId>& arrival) {
        return RunReduceAndSolveStandalone(procedure, assignment, weights, arrival, rng);
      };
    }
    case AlgorithmKind::kCombineOpt: {
      std::vector<AlgorithmFactory> factories;
      factories.reserve(instance.constraint.matroids.size());
      for (const MatroidPtr& matroid : instance.constraint.matroids) {
        factories.push_back(MakeOptInner(matroid, params.p).factory);
      }
      std::vector<MatroidPtr> matroids = instance.constraint.matroids;
      std::vector<Rational> weights = instance.weights;
      TieBreakOrder order(weights);
      return [matroids, factories = std::move(factories), weights, order](
                 Rng& rng, const std::vector<ElementId>& arrival) {
        return RunOptCombiner(matroids, factories, weights, order, arrival, rng).selected;
      };
    }
    case AlgorithmKind::kCombineRns: {
      std::vector<ReduceAndSolveProcedure> procedures = BuildProcedures(instance, params);
      std::vector<Rational> weights = instance.weights;
      TieBreakOrder order(weights);
      return [procedures = std::move(procedures), weights, order](
                 Rng& rng, const std::vector<ElementId>& arrival) {
        return RunReduceAndSolveCombiner(procedures, weights, order, arrival, rng).selected;
      };
    }
    case AlgorithmKind::kSubmodularOnline: {
      if (instance.objective == nullptr) {
        throw std::invalid_argument("submodular-online requires a submodular objective");
      }
      const MatroidPtr matroid = SoleMatroid(instance, "submodular-online");
      OptInner inner = MakeOptInner(matroid, std::nullopt);
      const Rational alpha = params.alpha.value_or(inner.constant);
      const Rational boost =
          params.p.value_or(DefaultBoostProbability(alpha, instance.constraint.MatroidCount()));
      IntersectionConstraint constraint = instance.constraint;
      SubmodularPtr objective = instance.objective;
      return [constraint, objective, factory = std::move(inner.factory), boost](
                 Rng& rng, const std::vector<ElementId>& arrival) {
        return RunOnlineSubmodular(constraint, *objective, factory, boost, arrival, rng).selected;
      };
    }
  }
  throw std::invalid_argument("unknown algorithm kind");
}

Rational TheoreticalBound(const SecretaryInstance& instance, AlgorithmKind kind,
                          const AlgorithmParams& params) {
  const int k = instance.constraint.MatroidCount();
  switch (kind) {
    case AlgorithmKind::kGreedyOnline:
      // Matches the offline greedy guarantee; only meaningful under
      // weight-decreasing arrival.
      return Rational(1, std::max(1, k));
    case AlgorithmKind::kSimplePartition: {
      const Rational p = params.p.value_or(Rational(1, 2));
      return p * (1 - p);
    }
    case AlgorithmKind::kGeneralizedPartition:
      return Rational(1, 4);
    case AlgorithmKind::kGraphicRns: {
      const Rational p = params.p.value_or(Rational(2, 3));
      return p * p * (1 - p);
    }
    case AlgorithmKind::kSparseLinearRns: {
      const MatroidPtr matroid = SoleMatroid(instance, "sparse-linear-rns");
      const auto* linear = dynamic_cast<const LinearMatroid*>(matroid.get());
      if (linear == nullptr) {
        throw std::invalid_argument("sparse-linear-rns requires a linear matroid");
      }
      const int s = params.sparsity.value_or(std::max(1, linear->ColumnSparsity()));
      Rational p;
      if (params.p.has_value()) {
        p = *params.p;
      } else {
        p = s < 2 ? Rational(1, 2) : Rational(s - 1, s);
      }
      return RationalPow(p, s) * (1 - p);
    }
    case AlgorithmKind::kTransversalRns: {
      const Rational p = params.p.value_or(Rational(1, 2));
      return p * (1 - p);
    }
    case AlgorithmKind::kCombineOpt: {
      Rational product = Rational(1, 4 * k * k);
      for (const MatroidPtr& matroid : instance.constraint.matroids) {
        product *= MakeOptInner(matroid, params.p).constant;
      }
      return product;
    }
    case AlgorithmKind::kCombineRns: {
      Rational product = 1;
      Rational augment_sum = 0;
      for (const ReduceAndSolveProcedure& procedure : BuildProcedures(instance, params)) {
        product *= procedure.reduction_ratio * procedure.opt_ratio;
        augment_sum += procedure.augment_ratio;
      }
      const Rational denominator_tail = std::max(augment_sum, Rational(1));
      return product / (Rational(8 * k * (k + 1)) * denominator_tail);
    }
    case AlgorithmKind::kSubmodularOnline: {
      const MatroidPtr matroid = SoleMatroid(instance, "submodular-online");
      const Rational alpha = params.alpha.value_or(MakeOptInner(matroid, std::nullopt).constant);
      return alpha * alpha / Rational(128 * k * k);
    }
  }
  throw std::invalid_argument("unknown algorithm kind");
}

SimulationReport MonteCarlo(const SecretaryInstance& instance, const TrialAlgorithm& algorithm,
                            const MonteCarloOptions& options) {
  instance.Validate();
  if (options.trials < 1) throw std::invalid_argument("trials must be positive");
  const int n = instance.GroundSize();
  const auto start = std::chrono::steady_clock::now();
  const TieBreakOrder order(instance.weights);

  const bool needs_opt = options.want_ratio || options.order == OrderKind::kOptLast ||
                         options.order == OrderKind::kOptFirst;
  ElementSet opt_set;
  Rational opt_value = 0;
  if (needs_opt) {
    if (instance.objective != nullptr) {
      opt_set = BruteForceSubmodularOpt(instance.constraint, *instance.objective,
                                        options.brute_force_limit);
      opt_value = instance.objective->Value(opt_set);
    } else {
      opt_set =
          BruteForceOpt(instance.constraint, instance.weights, order, options.brute_force_limit);
      opt_value = SetWeight(instance.weights, opt_set);
    }
  }
  if (options.order == OrderKind::kExplicit) ValidateArrival(options.explicit_order, n);

  std::vector<TrialRecord> records(options.trials);
  auto run_range = [&](int lo, int hi) {
    for (int t = lo; t < hi; ++t) {
      Rng rng(DeriveStream(options.seed, static_cast<std::uint64_t>(t)));
      const std::vector<ElementId> arrival =
          RealizeOrder(options.order, order, opt_set, options.explicit_order, rng);
      TrialRecord& record = records[t];
      record.trial = t;
      record.accepted = algorithm(rng, arrival);
      if (options.want_ratio) {
        record.value = instance.objective != nullptr
                           ? instance.objective->Value(record.accepted)
                           : SetWeight(instance.weights, record.accepted);
        record.ratio = opt_value == 0 ? 1.0 : ToDouble(record.value / opt_value);
      }
    }
  };

  int threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, options.trials));
  if (threads == 1) {
    run_range(0, options.trials);
  } else {
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> failures(threads);
    const int chunk = (options.trials + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
      const int lo = w * chunk;
      const int hi = std::min(options.trials, lo + chunk);
      workers.emplace_back([&, w, lo, hi]() {
        try {
          run_range(lo, hi);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
    for (std::thread& worker : workers) worker.join();
    for (const std::exception_ptr& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
  }

  SimulationReport report;
  report.instance_name = instance.name;
  report.trials = options.trials;
  report.seed = options.seed;
  report.has_ratio = options.want_ratio;
  report.opt_value = options.want_ratio ? opt_value : Rational(0);
  report.selection_frequency.assign(n, 0.0);
  RunningStat ratio_stat;
  std::vector<std::int64_t> counts(n, 0);
  for (const TrialRecord& record : records) {
    if (options.want_ratio) ratio_stat.Add(record.ratio);
    for (ElementId e : record.accepted) ++counts[e];
  }
  for (ElementId e = 0; e < n; ++e) {
    report.selection_frequency[e] =
        static_cast<double>(counts[e]) / static_cast<double>(options.trials);
  }
  report.mean_ratio = ratio_stat.Mean();
  report.std_error = ratio_stat.StdError();
  report.records = std::move(records);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string ReportToJson(const SimulationReport& report) {
  nlohmann::json doc;
  doc["instance"] = report.instance_name;
  doc["algorithm"] = report.algorithm_name;
  doc["trials"] = report.trials;
  doc["seed"] = report.seed;
  doc["has_ratio"] = report.has_ratio;
  doc["opt"] = RationalToString(report.opt_value);
  doc["mean_ratio"] = report.mean_ratio;
  doc["std_error"] = report.std_error;
  doc["selection_frequency"] = report.selection_frequency;
  nlohmann::json trials = nlohmann::json::array();
  for (const TrialRecord& record : report.records) {
    nlohmann::json row;
    row["trial"] = record.trial;
    row["value"] = RationalToString(record.value);
    row["ratio"] = record.ratio;
    row["accepted"] = record.accepted;
    trials.push_back(std::move(row));
  }
  doc["records"] = std::move(trials);
  return doc.dump(2) + "\n";
}

std::string ReportToCsv(const SimulationReport& report) {
  std::ostringstream out;
  out << "trial,ratio,accepted_ids,seed\r\n";
  for (const TrialRecord& record : report.records) {
    out << record.trial << ',' << FormatDouble(record.ratio) << ',';
    for (std::size_t i = 0; i < record.accepted.size(); ++i) {
      if (i > 0) out << ' ';
      out << record.accepted[i];
    }
    out << ',' << DeriveStream(report.seed, static_cast<std::uint64_t>(record.trial)) << "\r\n";
  }
  return out.str();
}

InstanceFamily ParseInstanceFamily(const std::string& name) {
  if (name == "random-partition") return InstanceFamily::kRandomPartition;
  if (name == "random-laminar") return InstanceFamily::kRandomLaminar;
  if (name == "random-graph") return InstanceFamily::kRandomGraph;
  if (name == "random-bipartite") return InstanceFamily::kRandomBipartite;
  if (name == "random-sparse-matrix") return InstanceFamily::kRandomSparseMatrix;
  if (name == "bipartite-matching-intersection") {
    return InstanceFamily::kBipartiteMatchingIntersection;
  }
  if (name == "partition-transversal") return InstanceFamily::kPartitionTransversal;
  throw std::invalid_argument("unknown instance family: " + name);
}

std::string InstanceFamilyName(InstanceFamily family) {
  switch (family) {
    case InstanceFamily::kRandomPartition: return "random-partition";
    case InstanceFamily::kRandomLaminar: return "random-laminar";
    case InstanceFamily::kRandomGraph: return "random-graph";
    case InstanceFamily::kRandomBipartite: return "random-bipartite";
    case InstanceFamily::kRandomSparseMatrix: return "random-sparse-matrix";
    case InstanceFamily::kBipartiteMatchingIntersection:
      return "bipartite-matching-intersection";
    case InstanceFamily::kPartitionTransversal: return "partition-transversal";
  }
  throw std::invalid_argument("unknown instance family");
}

namespace {

std::vector<Rational> DistinctWeights(int n, Rng& rng) {
  std::vector<int> raw = rng.SampleIndexSubset(8 * n, n);
  rng.Shuffle(raw);
  std::vector<Rational> weights;
  weights.reserve(n);
  for (int v : raw) weights.emplace_back(v + 1);
  return weights;
}

MatroidPtr RandomSimplePartition(int n, Rng& rng) {
  const int block_count = std::max(1, (n + 1) / 2);
  std::vector<std::vector<ElementId>> blocks(block_count);
  for (ElementId e = 0; e < n; ++e) blocks[rng.UniformInt(block_count)].push_back(e);
  return std::make_shared<PartitionMatroid>(std::move(blocks),
                                            std::vector<int>(block_count, 1));
}

MatroidPtr RandomTransversal(int n, Rng& rng) {
  const int right = std::max(1, (n + 1) / 2);
  std::vector<std::vector<int>> adjacency(n);
  for (ElementId e = 0; e < n; ++e) {
    const int degree = std::min(right, 1 + rng.UniformInt(2));
    adjacency[e] = rng.SampleIndexSubset(right, degree);
  }
  return std::make_shared<TransversalMatroid>(n, right, std::move(adjacency));
}

}  // namespace

SecretaryInstance GenerateInstance(InstanceFamily family, int size, std::uint64_t seed) {
  if (size < 1) throw std::invalid_argument("instance size must be positive");
  const int n = size;
  Rng rng(DeriveStream(seed, static_cast<std::uint64_t>(family) + 101));
  SecretaryInstance instance;
  instance.name = InstanceFamilyName(family) + "-" + std::to_string(n) + "-" +
                  std::to_string(seed);
  instance.weights = DistinctWeights(n, rng);

  switch (family) {
    case InstanceFamily::kRandomPartition: {
      const int block_count = std::max(1, n / 3);
      std::vector<std::vector<ElementId>> blocks(block_count);
      for (ElementId e = 0; e < n; ++e) blocks[rng.UniformInt(block_count)].push_back(e);
      std::vector<int> caps(block_count);
      for (int& cap : caps) cap = 1 + rng.UniformInt(2);
      instance.constraint.matroids.push_back(
          std::make_shared<PartitionMatroid>(std::move(blocks), std::move(caps)));
      break;
    }
    case InstanceFamily::kRandomLaminar: {
      std::vector<std::vector<ElementId>> sets;
      std::vector<int> caps;
      std::vector<ElementId> all(n);
      std::iota(all.begin(), all.end(), 0);
      sets.push_back(all);
      caps.push_back(1 + rng.UniformInt(std::max(1, n / 2)));
      const int half = n / 2;
      if (half > 0) {
        sets.emplace_back(all.begin(), all.begin() + half);
        caps.push_back(1 + rng.UniformInt(2));
        sets.emplace_back(all.begin() + half, all.end());
        caps.push_back(1 + rng.UniformInt(2));
      }
      instance.constraint.matroids.push_back(
          std::make_shared<LaminarMatroid>(n, std::move(sets), std::move(caps)));
      break;
    }
    case InstanceFamily::kRandomGraph: {
      const int vertices = std::max(2, (2 * n + 2) / 3);
      std::vector<std::pair<int, int>> edges;
      edges.reserve(n);
      for (int e = 0; e < n; ++e) {
        const int u = rng.UniformInt(vertices);
        int v = rng.UniformInt(vertices - 1);
        if (v >= u) ++v;
        edges.emplace_back(u, v);
      }
      instance.constraint.matroids.push_back(
          std::make_shared<GraphicMatroid>(vertices, std::move(edges)));
      break;
    }
    case InstanceFamily::kRandomBipartite: {
      instance.constraint.matroids.push_back(RandomTransversal(n, rng));
      break;
    }
    case InstanceFamily::kRandomSparseMatrix: {
      const int rows = std::max(2, (n + 1) / 2);
      std::vector<std::vector<Rational>> columns(n, std::vector<Rational>(rows, Rational(0)));
      for (int c = 0; c < n; ++c) {
        const int degree = 1 + rng.UniformInt(2);
        for (int r : rng.SampleIndexSubset(rows, degree)) {
          columns[c][r] = Rational(1 + rng.UniformInt(3));
        }
      }
      instance.constraint.matroids.push_back(std::make_shared<LinearMatroid>(std::move(columns)));
      break;
    }
    case InstanceFamily::kBipartiteMatchingIntersection: {
      const int side = std::max(1, (n + 1) / 2);
      std::vector<std::vector<ElementId>> left_blocks(side);
      std::vector<std::vector<ElementId>> right_blocks(side);
      for (ElementId e = 0; e < n; ++e) {
        left_blocks[rng.UniformInt(side)].push_back(e);
        right_blocks[rng.UniformInt(side)].push_back(e);
      }
      instance.constraint.matroids.push_back(std::make_shared<PartitionMatroid>(
          std::move(left_blocks), std::vector<int>(side, 1)));
      instance.constraint.matroids.push_back(std::make_shared<PartitionMatroid>(
          std::move(right_blocks), std::vector<int>(side, 1)));
      break;
    }
    case InstanceFamily::kPartitionTransversal: {
      instance.constraint.matroids.push_back(RandomSimplePartition(n, rng));
      instance.constraint.matroids.push_back(RandomTransversal(n, rng));
      break;
    }
  }
  instance.Validate();
  return instance;
}

}  // namespace secretary
