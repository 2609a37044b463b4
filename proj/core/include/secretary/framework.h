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
// Composition of per-matroid secretary algorithms into one algorithm for
// the intersection: reduced weights make the single-matroid optima overlap,
// merged sampling turns the many sample phases into one, and an arriving
// element is kept only when every inner algorithm accepts it.

#ifndef SECRETARY_FRAMEWORK_H_
#define SECRETARY_FRAMEWORK_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "secretary/msp.h"
#include "secretary/overlap.h"

namespace secretary {

// Per-source refined picks of the greedy sweep over a sample: a source
// element is taken only when every matroid can fit one of its refinements,
// in which case each matroid takes its first feasible refinement.
struct GeneralizedGreedyResult {
  std::vector<ElementSet> refined_sets;  // per matroid, ascending refined ids
  ElementSet taken_sources;              // sources that were added
};

GeneralizedGreedyResult RunGeneralizedGreedy(
    const std::vector<RefinementStructure>& refinements,
    const std::vector<MatroidPtr>& refined_matroids, const std::vector<Rational>& weights,
    const TieBreakOrder& order, const ElementSet& sample);

// Reduced weights plus one designated refinement per source element and
// matroid: sampled and greedy-irrelevant elements are zeroed and get their
// first refinement; greedy-relevant elements keep their weight and get the
// refinement the greedy sweep would have picked for them.
struct GeneralizedReduction {
  std::vector<Rational> weights;
  std::vector<WeightProvenance> provenance;
  std::vector<std::vector<ElementId>> assignment;  // per matroid, source id -> refined id
};

GeneralizedReduction ComputeGeneralizedReducedWeights(
    const std::vector<RefinementStructure>& refinements,
    const std::vector<MatroidPtr>& refined_matroids, const std::vector<Rational>& weights,
    const TieBreakOrder& order, const ElementSet& sample);

// Optimum of a refined matroid restricted to the assigned refinements,
// under the reduced weights of the sources (zero-weight elements excluded).
// Returned in ascending refined-id order.
ElementSet RefinedOptimum(const Matroid& refined_matroid, const std::vector<ElementId>& assignment,
                          const std::vector<Rational>& reduced_weights,
                          const TieBreakOrder& order);

// One pooled sample realizing jointly distributed sample sets: S drawn with
// per-element probability p and one uniform fixed-size sample per inner
// algorithm, all carved out of a single uniform draw A so that a two-phase
// run observes only A during its sample phase.
struct MergedSamplePlan {
  int outer_size = 0;                      // |S|
  std::vector<int> inner_sizes;            // requested inner sample sizes
  std::vector<int> overlap_counts;         // per inner, overlap with the union so far
  ElementSet pooled;                       // A, the single observed sample
  ElementSet outer_sample;                 // S
  std::vector<ElementSet> inner_samples;   // one per inner algorithm
};

// Draws the per-stage counts by simulating independent samples, then
// redraws the actual sets nested inside one pooled uniform sample of size
// |S| + sum of the fresh (non-overlapping) inner counts. The joint
// distribution of (S, S_1, ..., S_k) matches independent draws.
MergedSamplePlan MergeSamples(int n, const Rational& p, const std::vector<int>& inner_sizes,
                              Rng& rng);

// Transcript of one combined run.
struct CombinedRunResult {
  ElementSet selected;                    // sources accepted by every inner algorithm
  std::vector<ElementSet> t1;             // per inner, refined ids placed on the constrained side
  std::vector<ElementSet> t2;             // per inner, refined ids placed on the free side
  std::vector<Rational> reduced_weights;  // weights the inner algorithms saw
  ElementSet outer_sample;                // sample that built the reduced weights
  std::vector<ElementSet> inner_samples;  // per inner, source ids observed as its sample
};

// Combiner for reduce-and-solve procedures, one per matroid, at sampling
// probability p = (2k-1)/(2k). Every arriving non-sampled element is offered
// to each inner algorithm as its assigned refinement with the reduced
// weight; unanimous accepts enter the output and every constrained side,
// partial accepts enter the free side of the algorithms that took them.
// Sampled elements each inner did not observe are fed to it afterwards in
// ascending id order, placed on the free side if taken. `arrival` is a
// permutation of the full ground set; sampled elements are skipped.
CombinedRunResult RunReduceAndSolveCombiner(
    const std::vector<ReduceAndSolveProcedure>& procedures, const std::vector<Rational>& weights,
    const TieBreakOrder& order, const std::vector<ElementId>& arrival, Rng& rng);

// Combiner for algorithms whose per-optimum-element guarantee needs no
// refinement: equivalent to reduce-and-solve with identity refinements,
// with the reduced weights built by the plain sample reduction.
CombinedRunResult RunOptCombiner(const std::vector<MatroidPtr>& matroids,
                                 const std::vector<AlgorithmFactory>& inner_factories,
                                 const std::vector<Rational>& weights, const TieBreakOrder& order,
                                 const std::vector<ElementId>& arrival, Rng& rng);

// Throws std::logic_error unless the run kept its promises: the selected
// set is independent in every source matroid, each constrained side maps
// back to exactly the selected set, and no reduced weight exceeds the
// original.
void CheckCombinedRunInvariants(const std::vector<ReduceAndSolveProcedure>& procedures,
                                const std::vector<Rational>& weights,
                                const CombinedRunResult& run);

}  // namespace secretary

#endif  // SECRETARY_FRAMEWORK_H_
