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
// Offline baselines over an intersection of matroids: the greedy
// k-approximation, exact optima by exhaustive search, and the set of
// greedy-relevant elements.

#ifndef SECRETARY_OFFLINE_H_
#define SECRETARY_OFFLINE_H_

#include <vector>

#include "secretary/matroid.h"

namespace secretary {

// k matroids over one ground set. Feasible = independent in every matroid.
struct IntersectionConstraint {
  std::vector<MatroidPtr> matroids;

  int GroundSize() const { return matroids.empty() ? 0 : matroids[0]->GroundSize(); }
  int MatroidCount() const { return static_cast<int>(matroids.size()); }
  bool Feasible(const ElementSet& set) const;

  // Throws std::invalid_argument unless all matroids share one ground size.
  void Validate() const;
};

// Selected elements in insertion order (= tie-break order). The prefix of
// the solution immediately before element selected[i] was added is
// selected[0..i).
struct GreedyTrace {
  std::vector<ElementId> selected;

  ElementSet SelectedSet() const { return selected; }
  ElementSet PrefixBefore(int i) const {
    return ElementSet(selected.begin(), selected.begin() + i);
  }
};

// Walks elements in tie-break order, skipping weight-0 elements, and adds
// each element that keeps the set feasible in every matroid. Restricted to
// `ground` when given. For one matroid this is the exact optimum; for k
// matroids it is a k-approximation.
GreedyTrace GreedyIntersection(const IntersectionConstraint& constraint,
                               const std::vector<Rational>& weights, const TieBreakOrder& order,
                               const ElementSet* ground = nullptr);

// Single-matroid special case; returns the unique tie-break optimum.
ElementSet GreedySingle(const Matroid& matroid, const std::vector<Rational>& weights,
                        const TieBreakOrder& order, const ElementSet* ground = nullptr);

Rational SetWeight(const std::vector<Rational>& weights, const ElementSet& set);

// Exact optimum by pruned exhaustive search over positive-weight elements.
// Among equal-weight solutions the tie-break-lexicographic one is returned,
// so for a single matroid the result coincides with GreedySingle. Throws
// ResourceLimitError when more than `limit` positive-weight elements remain.
ElementSet BruteForceOpt(const IntersectionConstraint& constraint,
                         const std::vector<Rational>& weights, const TieBreakOrder& order,
                         int limit = 20);

// Elements outside `sample` whose arrival would change the greedy outcome:
// e is greedy-relevant iff e ends up in greedy(sample + e). Computed with
// one greedy pass over the sample plus one feasibility probe per outside
// element against the memoized greedy prefix.
ElementSet GreedyRelevantElements(const IntersectionConstraint& constraint,
                                  const std::vector<Rational>& weights,
                                  const TieBreakOrder& order, const ElementSet& sample);

}  // namespace secretary

#endif  // SECRETARY_OFFLINE_H_
