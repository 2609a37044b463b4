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

#include "secretary/overlap.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace secretary {

ReducedWeights ComputeReducedWeights(const IntersectionConstraint& constraint,
                                     const std::vector<Rational>& weights,
                                     const TieBreakOrder& order, const ElementSet& sample) {
  const int n = static_cast<int>(weights.size());
  ReducedWeights reduced;
  reduced.weights.assign(n, Rational(0));
  reduced.provenance.assign(n, WeightProvenance::kZeroed);
  for (ElementId e : sample) reduced.provenance[e] = WeightProvenance::kSampled;
  for (ElementId e : GreedyRelevantElements(constraint, weights, order, sample)) {
    reduced.weights[e] = weights[e];
    reduced.provenance[e] = WeightProvenance::kGreedyRelevant;
  }
  return reduced;
}

CoupledRun RunCoupledGreedyWithCoins(const IntersectionConstraint& constraint,
                                     const std::vector<Rational>& weights,
                                     const TieBreakOrder& order,
                                     const std::function<bool(ElementId)>& coin,
                                     const CoupledStepObserver& observer) {
  const int k = constraint.MatroidCount();
  CoupledRun run;
  run.single_opts.assign(k, {});
  run.span_trackers.assign(k, {});

  for (ElementId e : order.Ordered()) {
    if (weights[e] == 0) continue;
    ElementSet extended = SetWith(run.greedy_set, e);
    if (!constraint.Feasible(extended)) continue;

    if (coin(e)) {
      // Sampled: joins the greedy solution; each tracker absorbs e, evicting
      // its lowest-id non-greedy element when necessary.
      run.greedy_set.push_back(e);
      for (int j = 0; j < k; ++j) {
        const Matroid& m = *constraint.matroids[j];
        ElementSet& tracker = run.span_trackers[j];
        if (m.IsIndependent(SetWith(tracker, e))) {
          tracker.push_back(e);
          continue;
        }
        ElementSet swappable = SetDifference(tracker, run.greedy_set);
        std::sort(swappable.begin(), swappable.end());
        bool exchanged = false;
        for (ElementId f : swappable) {
          ElementSet candidate = SetWith(SetMinus(tracker, f), e);
          if (m.IsIndependent(candidate)) {
            tracker = std::move(candidate);
            exchanged = true;
            break;
          }
        }
        if (!exchanged) {
          throw std::logic_error("span tracker exchange must succeed for a feasible element");
        }
      }
    } else {
      // Unsampled: extends each single-matroid optimum greedily; trackers
      // grow when they can.
      bool in_all_opts = true;
      bool in_all_trackers = true;
      for (int j = 0; j < k; ++j) {
        const Matroid& m = *constraint.matroids[j];
        if (m.IsIndependent(SetWith(run.single_opts[j], e))) {
          run.single_opts[j].push_back(e);
        } else {
          in_all_opts = false;
        }
        if (m.IsIndependent(SetWith(run.span_trackers[j], e))) {
          run.span_trackers[j].push_back(e);
        } else {
          in_all_trackers = false;
        }
      }
      if (in_all_opts) run.common_opt.push_back(e);
      if (in_all_trackers) run.certified_common.push_back(e);
    }
    if (observer) observer(e, run);
  }
  return run;
}

CoupledRun RunCoupledGreedy(const IntersectionConstraint& constraint,
                            const std::vector<Rational>& weights, const TieBreakOrder& order,
                            const Rational& p, Rng& rng, const CoupledStepObserver& observer) {
  const CoinBias bias = CoinBias::FromRational(p);
  return RunCoupledGreedyWithCoins(
      constraint, weights, order, [&rng, &bias](ElementId) { return rng.Bernoulli(bias); },
      observer);
}

void CheckCoupledRunInvariants(const IntersectionConstraint& constraint, const CoupledRun& run) {
  const int k = constraint.MatroidCount();
  ElementSet certified = SortedCopy(run.certified_common);
  ElementSet common = SortedCopy(run.common_opt);
  if (!std::includes(common.begin(), common.end(), certified.begin(), certified.end())) {
    throw std::logic_error("certified common set must lie inside the common optimum");
  }
  for (int j = 0; j < k; ++j) {
    const Matroid& m = *constraint.matroids[j];
    if (!m.IsIndependent(run.span_trackers[j])) {
      throw std::logic_error("span tracker lost independence");
    }
    for (ElementId e : run.single_opts[j]) {
      if (!m.InSpan(run.span_trackers[j], e)) {
        throw std::logic_error("single-matroid optimum escaped its span tracker");
      }
    }
    ElementSet greedy = SortedCopy(run.greedy_set);
    ElementSet tracker = SortedCopy(run.span_trackers[j]);
    if (!std::includes(tracker.begin(), tracker.end(), greedy.begin(), greedy.end())) {
      throw std::logic_error("span tracker must contain the greedy set");
    }
  }
}

OverlapEstimate EstimateOverlap(const IntersectionConstraint& constraint,
                                const std::vector<Rational>& weights, const TieBreakOrder& order,
                                const Rational& p, int trials, std::uint64_t seed) {
  if (trials <= 1) throw std::invalid_argument("overlap estimation needs at least two trials");
  const int n = static_cast<int>(weights.size());
  const CoinBias bias = CoinBias::FromRational(p);

  OverlapEstimate estimate;
  estimate.trials = trials;
  estimate.opt_weight = SetWeight(weights, BruteForceOpt(constraint, weights, order));

  double sum = 0, sum_sq = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(DeriveStream(seed, t));
    ElementSet sample;
    for (ElementId e = 0; e < n; ++e) {
      if (rng.Bernoulli(bias)) sample.push_back(e);
    }
    const ReducedWeights reduced = ComputeReducedWeights(constraint, weights, order, sample);

    // The tie-break order restricted to the reduced support matches the
    // global order, so the global order can drive each single-matroid
    // greedy optimum.
    ElementSet common;
    bool first = true;
    for (const auto& m : constraint.matroids) {
      ElementSet opt = GreedySingle(*m, reduced.weights, order);
      common = first ? SortedCopy(opt) : SetIntersection(common, SortedCopy(opt));
      first = false;
    }
    const double value = ToDouble(SetWeight(reduced.weights, common));
    sum += value;
    sum_sq += value * value;
  }
  estimate.mean = sum / trials;
  const double variance = std::max(0.0, (sum_sq - sum * sum / trials) / (trials - 1));
  estimate.std_error = std::sqrt(variance / trials);
  estimate.ratio = estimate.opt_weight > 0 ? estimate.mean / ToDouble(estimate.opt_weight) : 0.0;
  return estimate;
}

}  // namespace secretary
