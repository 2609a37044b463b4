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
// Order-oblivious secretary algorithms for single matroids. Each algorithm
// declares a sample size, observes the sampled elements with their weights,
// and then answers accept/reject for adversarially ordered arrivals. The
// guarantees are per-optimum-element selection probabilities that hold for
// every arrival order.

#ifndef SECRETARY_MSP_H_
#define SECRETARY_MSP_H_

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "secretary/matroid.h"
#include "secretary/rng.h"

namespace secretary {

// Two-sided bookkeeping imposed by the composition framework: accepted
// elements are split into a sub-solution T1 that must stay independent and
// an unconstrained sub-solution T2. Algorithms here keep their whole
// accepted set independent, so any split is safe; the hook only records it.
enum class Placement {
  kT1,
  kT2,
};

struct WeightedElement {
  ElementId id;
  Rational weight;
};

class OrderObliviousAlgorithm {
 public:
  virtual ~OrderObliviousAlgorithm() = default;

  // How many elements to sample out of n; may be randomized.
  virtual int DrawSampleSize(int n, Rng& rng) = 0;

  virtual void ObserveSample(const std::vector<WeightedElement>& sample) = 0;

  // Accept/reject decision for one arriving element.
  virtual bool OnArrival(ElementId e, const Rational& weight) = 0;

  // Where the adversary placed an accepted element. Optional.
  virtual void OnPlacement(ElementId e, Placement placement) { (void)e; (void)placement; }

  // Elements accepted so far.
  virtual const ElementSet& Accepted() const = 0;
};

using AlgorithmFactory = std::function<std::unique_ptr<OrderObliviousAlgorithm>()>;

// Block rule: accept an arriving element iff its block holds no accepted
// element and the element outranks every sampled element of its block.
// Samples Binomial(n, p) elements; every optimum element is selected with
// probability at least p(1-p) under any arrival order.
//
// Subclasses may veto acceptances (the block stays free when they do) and
// observe accepted elements.
class SimplePartitionSecretary : public OrderObliviousAlgorithm {
 public:
  // block_of[e] = block id of element e; ids may exceed the stream's ground
  // set when the algorithm runs on a restriction.
  SimplePartitionSecretary(std::vector<int> block_of, int block_count, const Rational& p);

  int DrawSampleSize(int n, Rng& rng) override;
  void ObserveSample(const std::vector<WeightedElement>& sample) override;
  bool OnArrival(ElementId e, const Rational& weight) override;
  const ElementSet& Accepted() const override { return accepted_; }

  const Rational& SampleProbability() const { return p_; }

 protected:
  virtual bool GuardAllows(ElementId e) { (void)e; return true; }
  virtual void OnAccept(ElementId e) { (void)e; }

  bool BlockTaken(int block) const { return block_taken_[block]; }

 private:
  std::vector<int> block_of_;
  Rational p_;
  std::vector<bool> block_taken_;
  std::vector<std::optional<WeightedElement>> block_best_sampled_;
  ElementSet accepted_;
};

// Oracle-only variant for partition matroids with arbitrary caps; the block
// structure is never consulted, only independence queries on elements the
// algorithm has already seen. Sampling probability is fixed at 1/2. Every
// optimum element is selected with probability at least 1/4 under any
// arrival order.
class GeneralizedPartitionSecretary : public OrderObliviousAlgorithm {
 public:
  explicit GeneralizedPartitionSecretary(MatroidPtr matroid);

  int DrawSampleSize(int n, Rng& rng) override;
  void ObserveSample(const std::vector<WeightedElement>& sample) override;
  bool OnArrival(ElementId e, const Rational& weight) override;
  const ElementSet& Accepted() const override { return accepted_; }

 private:
  MatroidPtr matroid_;
  std::vector<WeightedElement> sample_;
  ElementSet sample_opt_;  // greedy optimum of the sample, with zero weights kept
  std::vector<WeightedElement> sample_opt_elements_;  // ascending rank order
  ElementSet accepted_;
};

// The sampled-threshold an arriving element must beat, derived from
// independence queries alone: the greedy optimum of the sample plus e
// either stays independent (no threshold) or contains a unique lightest
// element other than e whose removal restores independence. Exposed for
// cross-checking against the direct block computation.
std::optional<WeightedElement> OracleSampleThreshold(
    const Matroid& matroid, const std::vector<WeightedElement>& sample, ElementId e);

// A source element refines into one or more copies; a solver works on the
// copies and maps its picks back through the source map.
struct RefinementStructure {
  int source_count = 0;
  int refined_count = 0;
  std::vector<std::vector<ElementId>> refinements;  // per source, ascending refined ids
  std::vector<ElementId> source_of;                 // refined id -> source id

  void Validate() const;
};

// A reduce-and-solve bundle: the refinement, the matroid on the refined
// ground set, an inner order-oblivious algorithm over refined ids, and the
// guarantee parameters (reduction_ratio, opt_ratio, augment_ratio).
struct ReduceAndSolveProcedure {
  RefinementStructure refinement;
  MatroidPtr refined_matroid;
  MatroidPtr source_matroid;
  AlgorithmFactory make_inner;
  Rational reduction_ratio;  // probability that a refined optimum survives mapping back
  Rational opt_ratio;        // per-optimum-element selection probability of the inner algorithm
  Rational augment_ratio;    // weight the inner algorithm may shed to the unconstrained side
};

// Edges refine into their two endpoint copies; the refined matroid is the
// vertex partition (one copy per vertex). The inner algorithm adds a guard
// that keeps the accepted source edges acyclic. Parameters
// (1, p^2(1-p), 0); p = 2/3 maximizes the middle term at 4/27.
ReduceAndSolveProcedure MakeGraphicReduceAndSolve(MatroidPtr matroid, const Rational& p);

// Columns refine into (column, nonzero-row) pairs; the refined matroid is
// the row partition. The inner algorithm accepts only when every nonzero
// row of the column is still free, which forces linear independence of the
// accepted columns. Parameters (1, p^s(1-p), 0) for sparsity bound s;
// default p = (s-1)/s. Throws std::invalid_argument if a column exceeds the
// sparsity bound.
ReduceAndSolveProcedure MakeSparseLinearReduceAndSolve(MatroidPtr matroid, int sparsity,
                                                       std::optional<Rational> p = std::nullopt);

// Elements refine into their incident edges; the refined matroid is the
// right-node partition. Any independent set of the refined matroid maps to
// a matchable set, so no guard is needed. Parameters (1, p(1-p), 0).
ReduceAndSolveProcedure MakeTransversalReduceAndSolve(MatroidPtr matroid, const Rational& p);

// Identity refinement around an existing algorithm with a known
// per-optimum-element guarantee; parameters (1, opt_ratio, 0).
ReduceAndSolveProcedure MakeTrivialReduceAndSolve(MatroidPtr matroid, AlgorithmFactory inner,
                                                  const Rational& opt_ratio);

}  // namespace secretary

#endif  // SECRETARY_MSP_H_
