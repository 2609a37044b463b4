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

#ifndef SECRETARY_HARNESS_H_
#define SECRETARY_HARNESS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "secretary/matroid.h"
#include "secretary/msp.h"
#include "secretary/offline.h"
#include "secretary/rational.h"
#include "secretary/rng.h"
#include "secretary/submodular.h"

namespace secretary {

// A simulation instance: a matroid intersection constraint, element weights,
// and optionally a monotone submodular objective replacing the weights.
struct SecretaryInstance {
  std::string name;
  IntersectionConstraint constraint;
  std::vector<Rational> weights;
  SubmodularPtr objective;  // Null for additive objectives.

  int GroundSize() const { return constraint.GroundSize(); }
  void Validate() const;
};

// Arrival-order policies for the online phase.
enum class OrderKind {
  kUniformRandom,
  kWeightDecreasing,
  kWeightIncreasing,
  kOptLast,
  kOptFirst,
  kExplicit,
};

// Parses "uniform-random", "weight-decreasing", "weight-increasing",
// "opt-last", "opt-first", or "explicit". Throws std::invalid_argument on
// anything else.
OrderKind ParseOrderKind(const std::string& name);
std::string OrderKindName(OrderKind kind);

// Materializes one arrival permutation of the full ground set. `opt` is only
// consulted for kOptLast and kOptFirst; `explicit_order` only for kExplicit.
std::vector<ElementId> RealizeOrder(OrderKind kind, const TieBreakOrder& order,
                                    const ElementSet& opt,
                                    const std::vector<ElementId>& explicit_order,
                                    Rng& rng);

// One online execution: consumes randomness and the arrival permutation,
// returns the selected ground-set elements.
using TrialAlgorithm =
    std::function<ElementSet(Rng& rng, const std::vector<ElementId>& arrival)>;

// Runs one two-phase execution of an order-oblivious algorithm. `elements`
// maps each ground element to the (id, weight) pair the algorithm sees for
// it; plain runs use the identity mapping while reduce-and-solve runs pass
// refined ids. The algorithm draws its sample size, a uniform subset of that
// size is observed, and the remaining elements arrive in `arrival` order.
// Returns the accepted algorithm-facing ids.
ElementSet RunOrderOblivious(OrderObliviousAlgorithm& algo,
                             const std::vector<WeightedElement>& elements,
                             const std::vector<ElementId>& arrival, Rng& rng);

// Convenience overload with the identity id mapping.
ElementSet RunOrderOblivious(OrderObliviousAlgorithm& algo,
                             const std::vector<Rational>& weights,
                             const std::vector<ElementId>& arrival, Rng& rng);

// Maps each source element to its first refinement.
std::vector<ElementId> FirstRefinementAssignment(
    const RefinementStructure& refinement);

// Runs a reduce-and-solve procedure alone on the restriction that keeps, for
// each source element e, only the refined copy `assignment[e]`. Returns the
// accepted source ids.
ElementSet RunReduceAndSolveStandalone(const ReduceAndSolveProcedure& procedure,
                                       const std::vector<ElementId>& assignment,
                                       const std::vector<Rational>& weights,
                                       const std::vector<ElementId>& arrival,
                                       Rng& rng);

// Online algorithms the harness can simulate.
enum class AlgorithmKind {
  kGreedyOnline,           // Accept whenever feasible, in arrival order.
  kSimplePartition,        // Partition matroid with unit capacities, k = 1.
  kGeneralizedPartition,   // Arbitrary partition matroid, k = 1.
  kGraphicRns,             // Graphic reduce-and-solve, k = 1.
  kSparseLinearRns,        // Column-sparse linear reduce-and-solve, k = 1.
  kTransversalRns,         // Transversal reduce-and-solve, k = 1.
  kCombineOpt,             // Combine per-matroid optimum-competitive inners.
  kCombineRns,             // Combine per-matroid reduce-and-solve inners.
  kSubmodularOnline,       // Submodular objective via synthetic weights.
};

// Parses "greedy-online", "simple-partition", "generalized-partition",
// "graphic-rns", "sparse-linear-rns", "transversal-rns", "combine-opt",
// "combine-rns", or "submodular-online".
AlgorithmKind ParseAlgorithmKind(const std::string& name);
std::string AlgorithmKindName(AlgorithmKind kind);

struct AlgorithmParams {
  // Sampling probability for the single-matroid algorithms; each kind has
  // its own default when unset.
  std::optional<Rational> p;
  // Column sparsity bound for kSparseLinearRns (default 2).
  std::optional<int> sparsity;
  // Marginal-boost parameter for kSubmodularOnline (default 1/4).
  std::optional<Rational> alpha;
};

// Builds the per-trial runner for `kind` on `instance`. Throws
// std::invalid_argument when the instance does not fit the algorithm (wrong
// matroid class, wrong constraint arity, missing objective).
TrialAlgorithm MakeTrialAlgorithm(const SecretaryInstance& instance,
                                  AlgorithmKind kind,
                                  const AlgorithmParams& params);

// The guarantee proved for `kind` on `instance`: a lower bound on the
// expected selected value relative to the offline optimum.
Rational TheoreticalBound(const SecretaryInstance& instance, AlgorithmKind kind,
                          const AlgorithmParams& params);

struct MonteCarloOptions {
  int trials = 1000;
  std::uint64_t seed = 1;
  OrderKind order = OrderKind::kUniformRandom;
  std::vector<ElementId> explicit_order;
  int threads = 1;  // 0 means hardware concurrency.
  // When true, the offline optimum is computed and per-trial ratios are
  // reported; requires the ground set to fit the brute-force limit.
  bool want_ratio = true;
  int brute_force_limit = 20;
};

struct TrialRecord {
  int trial = 0;
  Rational value;
  double ratio = 0;
  ElementSet accepted;
};

struct SimulationReport {
  std::string instance_name;
  std::string algorithm_name;
  int trials = 0;
  std::uint64_t seed = 0;
  bool has_ratio = false;
  Rational opt_value;
  double mean_ratio = 0;
  double std_error = 0;
  // selection_frequency[e] = fraction of trials that selected element e.
  std::vector<double> selection_frequency;
  std::vector<TrialRecord> records;
  // Wall-clock time; informational only and never serialized, so repeated
  // runs with one seed produce byte-identical reports.
  double wall_seconds = 0;
};

// Runs `options.trials` independent executions. Trial t uses the randomness
// stream derived from (options.seed, t), so reports are reproducible and
// independent of the thread count.
SimulationReport MonteCarlo(const SecretaryInstance& instance,
                            const TrialAlgorithm& algorithm,
                            const MonteCarloOptions& options);

// Serializes a report as JSON (without wall_seconds).
std::string ReportToJson(const SimulationReport& report);

// Serializes per-trial records as RFC 4180 CSV with columns
// trial,ratio,accepted_ids,seed. Accepted ids are space separated.
std::string ReportToCsv(const SimulationReport& report);

// Built-in random instance families.
enum class InstanceFamily {
  kRandomPartition,
  kRandomLaminar,
  kRandomGraph,
  kRandomBipartite,
  kRandomSparseMatrix,
  kBipartiteMatchingIntersection,
  kPartitionTransversal,
};

// Parses "random-partition", "random-laminar", "random-graph",
// "random-bipartite", "random-sparse-matrix",
// "bipartite-matching-intersection", or "partition-transversal".
InstanceFamily ParseInstanceFamily(const std::string& name);
std::string InstanceFamilyName(InstanceFamily family);

// Generates a named instance with `size` ground elements and distinct
// positive integer weights. Deterministic in (family, size, seed).
SecretaryInstance GenerateInstance(InstanceFamily family, int size,
                                   std::uint64_t seed);

}  // namespace secretary

#endif  // SECRETARY_HARNESS_H_
