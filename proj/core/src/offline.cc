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

#include "secretary/offline.h"

#include <algorithm>
#include <stdexcept>

#include "secretary/errors.h"

namespace secretary {

bool IntersectionConstraint::Feasible(const ElementSet& set) const {
  for (const auto& m : matroids) {
    if (!m->IsIndependent(set)) return false;
  }
  return true;
}

void IntersectionConstraint::Validate() const {
  if (matroids.empty()) throw std::invalid_argument("constraint needs at least one matroid");
  for (const auto& m : matroids) {
    if (m->GroundSize() != matroids[0]->GroundSize()) {
      throw std::invalid_argument("matroids must share one ground set");
    }
  }
}

namespace {

GreedyTrace GreedyOverOracles(const std::vector<const Matroid*>& oracles,
                              const std::vector<Rational>& weights, const TieBreakOrder& order,
                              const ElementSet* ground) {
  std::vector<bool> allowed;
  if (ground != nullptr) {
    allowed.assign(weights.size(), false);
    for (ElementId e : *ground) allowed[e] = true;
  }
  GreedyTrace trace;
  ElementSet current;
  for (ElementId e : order.Ordered()) {
    if (ground != nullptr && !allowed[e]) continue;
    if (weights[e] == 0) continue;
    current.push_back(e);
    bool feasible = true;
    for (const Matroid* m : oracles) {
      if (!m->IsIndependent(current)) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      trace.selected.push_back(e);
    } else {
      current.pop_back();
    }
  }
  return trace;
}

}  // namespace

GreedyTrace GreedyIntersection(const IntersectionConstraint& constraint,
                               const std::vector<Rational>& weights, const TieBreakOrder& order,
                               const ElementSet* ground) {
  std::vector<const Matroid*> oracles;
  for (const auto& m : constraint.matroids) oracles.push_back(m.get());
  return GreedyOverOracles(oracles, weights, order, ground);
}

ElementSet GreedySingle(const Matroid& matroid, const std::vector<Rational>& weights,
                        const TieBreakOrder& order, const ElementSet* ground) {
  return GreedyOverOracles({&matroid}, weights, order, ground).SelectedSet();
}

Rational SetWeight(const std::vector<Rational>& weights, const ElementSet& set) {
  Rational total = 0;
  for (ElementId e : set) total += weights[e];
  return total;
}

namespace {

// Positions sorted ascending; smaller is better on the first difference.
// Only called for equal-weight candidates, which (all weights positive)
// are never nested, so this matches the infinitesimal tie-break
// perturbation of the weights.
bool LexBetter(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct BruteForceState {
  const IntersectionConstraint* constraint;
  const std::vector<Rational>* weights;
  std::vector<ElementId> candidates;  // positive weight, tie-break order
  ElementSet current;
  std::vector<int> current_positions;
  Rational current_weight;

  Rational best_weight;
  std::vector<int> best_positions;
  ElementSet best;

  void Consider() {
    if (current_weight > best_weight ||
        (current_weight == best_weight && LexBetter(current_positions, best_positions))) {
      best_weight = current_weight;
      best_positions = current_positions;
      best = current;
    }
  }

  void Search(int index) {
    if (index == static_cast<int>(candidates.size())) {
      Consider();
      return;
    }
    const ElementId e = candidates[index];
    current.push_back(e);
    if (constraint->Feasible(current)) {
      current_positions.push_back(index);
      current_weight += (*weights)[e];
      Search(index + 1);
      current_weight -= (*weights)[e];
      current_positions.pop_back();
    }
    current.pop_back();
    Search(index + 1);
  }
};

}  // namespace

ElementSet BruteForceOpt(const IntersectionConstraint& constraint,
                         const std::vector<Rational>& weights, const TieBreakOrder& order,
                         int limit) {
  BruteForceState state;
  state.constraint = &constraint;
  state.weights = &weights;
  for (ElementId e : order.Ordered()) {
    if (weights[e] > 0) state.candidates.push_back(e);
  }
  if (static_cast<int>(state.candidates.size()) > limit) {
    throw ResourceLimitError("exhaustive optimum limited to " + std::to_string(limit) +
                             " positive-weight elements");
  }
  state.best_weight = 0;
  state.current_weight = 0;
  state.Search(0);
  return SortedCopy(state.best);
}

ElementSet GreedyRelevantElements(const IntersectionConstraint& constraint,
                                  const std::vector<Rational>& weights,
                                  const TieBreakOrder& order, const ElementSet& sample) {
  std::vector<bool> in_sample(weights.size(), false);
  for (ElementId e : sample) in_sample[e] = true;

  // One sweep in tie-break order: sampled elements replay greedy(sample);
  // an outside element is greedy-relevant iff it fits the prefix built so
  // far, because greedy(sample + e) runs identically up to e's turn.
  ElementSet relevant;
  ElementSet prefix;
  for (ElementId e : order.Ordered()) {
    if (weights[e] == 0) continue;
    prefix.push_back(e);
    const bool fits = constraint.Feasible(prefix);
    if (in_sample[e]) {
      if (!fits) prefix.pop_back();
    } else {
      if (fits) relevant.push_back(e);
      prefix.pop_back();
    }
  }
  return SortedCopy(relevant);
}

}  // namespace secretary
