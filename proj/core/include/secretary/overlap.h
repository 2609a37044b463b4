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
// Weight reduction for matroid intersections. Sampling a random subset and
// zeroing everything except the greedy-relevant leftovers makes the k
// single-matroid optima of the reduced weights overlap: their common
// elements carry, in expectation, a constant fraction of the optimum.

#ifndef SECRETARY_OVERLAP_H_
#define SECRETARY_OVERLAP_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "secretary/offline.h"
#include "secretary/rng.h"

namespace secretary {

enum class WeightProvenance {
  kSampled,         // element of the sample, weight zeroed
  kGreedyRelevant,  // keeps its original weight
  kZeroed,          // outside element that greedy would ignore
};

struct ReducedWeights {
  std::vector<Rational> weights;
  std::vector<WeightProvenance> provenance;
};

// Zeroes sampled and greedy-irrelevant elements; greedy-relevant elements
// keep their weight. Never raises a weight.
ReducedWeights ComputeReducedWeights(const IntersectionConstraint& constraint,
                                     const std::vector<Rational>& weights,
                                     const TieBreakOrder& order, const ElementSet& sample);

// One run of the coupled sampling process. Elements are visited in
// tie-break order; each feasible element joins the greedy solution with
// probability p, and otherwise extends every per-matroid optimum of the
// reduced weights. The span trackers certify, via exchanges, how much of
// the greedy solution the common optimum can pay for.
struct CoupledRun {
  ElementSet greedy_set;                  // sampled side
  std::vector<ElementSet> single_opts;    // per-matroid optimum of the reduced weights
  ElementSet common_opt;                  // elements in every single-matroid optimum
  ElementSet certified_common;            // subset certified through the span trackers
  std::vector<ElementSet> span_trackers;  // per-matroid independent supersets of the greedy set
};

// Called after each element that reached a coin flip.
using CoupledStepObserver = std::function<void(ElementId element, const CoupledRun& state)>;

// Deterministic core: coin(e) says whether element e counts as sampled.
// Coins are only consulted for elements that are feasible at their turn.
CoupledRun RunCoupledGreedyWithCoins(const IntersectionConstraint& constraint,
                                     const std::vector<Rational>& weights,
                                     const TieBreakOrder& order,
                                     const std::function<bool(ElementId)>& coin,
                                     const CoupledStepObserver& observer = nullptr);

CoupledRun RunCoupledGreedy(const IntersectionConstraint& constraint,
                            const std::vector<Rational>& weights, const TieBreakOrder& order,
                            const Rational& p, Rng& rng,
                            const CoupledStepObserver& observer = nullptr);

// Throws std::logic_error if the run violates its invariants: span trackers
// independent, certified set inside the common optimum, every single-opt
// element spanned by its tracker.
void CheckCoupledRunInvariants(const IntersectionConstraint& constraint, const CoupledRun& run);

struct OverlapEstimate {
  int trials = 0;
  double mean = 0;        // mean reduced weight of the common optimum
  double std_error = 0;
  Rational opt_weight;    // exact optimum of the original weights
  double ratio = 0;       // mean / opt_weight
};

// Monte Carlo estimate of the reduced weight carried by the intersection of
// the single-matroid optima, at sampling probability p.
OverlapEstimate EstimateOverlap(const IntersectionConstraint& constraint,
                                const std::vector<Rational>& weights, const TieBreakOrder& order,
                                const Rational& p, int trials, std::uint64_t seed);

}  // namespace secretary

#endif  // SECRETARY_OVERLAP_H_
