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

#include "secretary/framework.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace secretary {

namespace {

void ValidateRefinedFamily(const std::vector<RefinementStructure>& refinements,
                           const std::vector<MatroidPtr>& refined_matroids, int source_count) {
  if (refinements.empty() || refinements.size() != refined_matroids.size()) {
    throw std::invalid_argument("need one refinement structure per refined matroid");
  }
  for (size_t i = 0; i < refinements.size(); ++i) {
    if (refinements[i].source_count != source_count) {
      throw std::invalid_argument("refinement source counts must match the ground set");
    }
    if (refined_matroids[i] == nullptr ||
        refined_matroids[i]->GroundSize() != refinements[i].refined_count) {
      throw std::invalid_argument("refined matroid ground size must match the refinement");
    }
  }
}

// First refinement of `source` that keeps `current` independent, if any.
std::optional<ElementId> FirstFeasibleRefinement(const RefinementStructure& refinement,
                                                 const Matroid& matroid, const ElementSet& current,
                                                 ElementId source) {
  for (ElementId r : refinement.refinements[source]) {
    if (matroid.IsIndependent(SetWith(current, r))) return r;
  }
  return std::nullopt;
}

}  // namespace

GeneralizedGreedyResult RunGeneralizedGreedy(const std::vector<RefinementStructure>& refinements,
                                             const std::vector<MatroidPtr>& refined_matroids,
                                             const std::vector<Rational>& weights,
                                             const TieBreakOrder& order,
                                             const ElementSet& sample) {
  const int n = order.Size();
  if (static_cast<int>(weights.size()) != n) {
    throw std::invalid_argument("weight count must match the tie-break order");
  }
  ValidateRefinedFamily(refinements, refined_matroids, n);
  const size_t k = refinements.size();

  std::vector<bool> sampled(n, false);
  for (ElementId e : sample) sampled[e] = true;

  GeneralizedGreedyResult result;
  result.refined_sets.assign(k, {});
  std::vector<ElementId> picks(k);
  for (ElementId e : order.Ordered()) {
    if (!sampled[e] || weights[e] == 0) continue;
    bool feasible_everywhere = true;
    for (size_t i = 0; i < k; ++i) {
      auto pick = FirstFeasibleRefinement(refinements[i], *refined_matroids[i],
                                          result.refined_sets[i], e);
      if (!pick.has_value()) {
        feasible_everywhere = false;
        break;
      }
      picks[i] = *pick;
    }
    if (!feasible_everywhere) continue;
    for (size_t i = 0; i < k; ++i) result.refined_sets[i].push_back(picks[i]);
    result.taken_sources.push_back(e);
  }
  for (ElementSet& set : result.refined_sets) std::sort(set.begin(), set.end());
  std::sort(result.taken_sources.begin(), result.taken_sources.end());
  return result;
}

GeneralizedReduction ComputeGeneralizedReducedWeights(
    const std::vector<RefinementStructure>& refinements,
    const std::vector<MatroidPtr>& refined_matroids, const std::vector<Rational>& weights,
    const TieBreakOrder& order, const ElementSet& sample) {
  const int n = order.Size();
  if (static_cast<int>(weights.size()) != n) {
    throw std::invalid_argument("weight count must match the tie-break order");
  }
  ValidateRefinedFamily(refinements, refined_matroids, n);
  const size_t k = refinements.size();

  std::vector<bool> sampled(n, false);
  for (ElementId e : sample) sampled[e] = true;

  GeneralizedReduction out;
  out.weights.assign(n, Rational(0));
  out.provenance.assign(n, WeightProvenance::kZeroed);
  out.assignment.assign(k, std::vector<ElementId>(n, -1));
  for (size_t i = 0; i < k; ++i) {
    for (ElementId e = 0; e < n; ++e) out.assignment[i][e] = refinements[i].refinements[e][0];
  }

  // One sweep re-creates the greedy run on the sample; an outside element is
  // relevant exactly when, at its turn against the memoized prefix, every
  // matroid can still fit one of its refinements.
  std::vector<ElementSet> prefix(k);
  std::vector<ElementId> picks(k);
  for (ElementId e : order.Ordered()) {
    if (sampled[e]) {
      out.provenance[e] = WeightProvenance::kSampled;
      if (weights[e] == 0) continue;
      bool feasible_everywhere = true;
      for (size_t i = 0; i < k; ++i) {
        auto pick = FirstFeasibleRefinement(refinements[i], *refined_matroids[i], prefix[i], e);
        if (!pick.has_value()) {
          feasible_everywhere = false;
          break;
        }
        picks[i] = *pick;
      }
      if (!feasible_everywhere) continue;
      for (size_t i = 0; i < k; ++i) prefix[i].push_back(picks[i]);
      continue;
    }
    if (weights[e] == 0) continue;
    bool feasible_everywhere = true;
    for (size_t i = 0; i < k; ++i) {
      auto pick = FirstFeasibleRefinement(refinements[i], *refined_matroids[i], prefix[i], e);
      if (!pick.has_value()) {
        feasible_everywhere = false;
        break;
      }
      picks[i] = *pick;
    }
    if (!feasible_everywhere) continue;
    out.weights[e] = weights[e];
    out.provenance[e] = WeightProvenance::kGreedyRelevant;
    for (size_t i = 0; i < k; ++i) out.assignment[i][e] = picks[i];
  }
  return out;
}

ElementSet RefinedOptimum(const Matroid& refined_matroid, const std::vector<ElementId>& assignment,
                          const std::vector<Rational>& reduced_weights,
                          const TieBreakOrder& order) {
  if (assignment.size() != reduced_weights.size() ||
      static_cast<int>(assignment.size()) != order.Size()) {
    throw std::invalid_argument("assignment, weights and order must agree on the ground size");
  }
  ElementSet opt;
  for (ElementId e : order.Ordered()) {
    if (reduced_weights[e] == 0) continue;
    opt.push_back(assignment[e]);
    if (!refined_matroid.IsIndependent(opt)) opt.pop_back();
  }
  std::sort(opt.begin(), opt.end());
  return opt;
}

MergedSamplePlan MergeSamples(int n, const Rational& p, const std::vector<int>& inner_sizes,
                              Rng& rng) {
  if (n < 0) throw std::invalid_argument("ground size must be nonnegative");
  if (p <= 0 || p >= 1) throw std::invalid_argument("sampling probability must be in (0, 1)");
  for (int m : inner_sizes) {
    if (m < 0 || m > n) throw std::invalid_argument("inner sample size out of range");
  }

  MergedSamplePlan plan;
  plan.inner_sizes = inner_sizes;

  // Stage counts from one simulation of fully independent draws.
  const CoinBias bias = CoinBias::FromRational(p);
  std::vector<bool> in_union(n, false);
  for (ElementId e = 0; e < n; ++e) {
    if (rng.Bernoulli(bias)) {
      in_union[e] = true;
      ++plan.outer_size;
    }
  }
  int pooled_size = plan.outer_size;
  for (int m : inner_sizes) {
    int overlap = 0;
    for (ElementId e : rng.SampleIndexSubset(n, m)) {
      if (in_union[e]) {
        ++overlap;
      } else {
        in_union[e] = true;
      }
    }
    plan.overlap_counts.push_back(overlap);
    pooled_size += m - overlap;
  }

  // Redraw the actual sets nested inside one pooled sample.
  plan.pooled = rng.SampleIndexSubset(n, pooled_size);
  plan.outer_sample = rng.SampleSubset(plan.pooled, plan.outer_size);
  ElementSet used = plan.outer_sample;
  for (size_t j = 0; j < inner_sizes.size(); ++j) {
    const ElementSet fresh_pool = SetDifference(plan.pooled, used);
    ElementSet inner = rng.SampleSubset(used, plan.overlap_counts[j]);
    for (ElementId e : rng.SampleSubset(fresh_pool, inner_sizes[j] - plan.overlap_counts[j])) {
      inner.push_back(e);
    }
    std::sort(inner.begin(), inner.end());
    used = SetUnion(used, inner);
    plan.inner_samples.push_back(std::move(inner));
  }
  if (!SameSet(used, plan.pooled)) {
    throw std::logic_error("pooled sample must be exactly covered by the drawn sets");
  }
  return plan;
}

namespace {

using ReductionFn = std::function<GeneralizedReduction(const ElementSet& sample)>;

CombinedRunResult RunCombinedCore(const std::vector<ReduceAndSolveProcedure>& procedures,
                                  const std::vector<Rational>& weights, const TieBreakOrder& order,
                                  const std::vector<ElementId>& arrival, Rng& rng,
                                  const ReductionFn& reduce) {
  const size_t k = procedures.size();
  if (k == 0) throw std::invalid_argument("need at least one procedure");
  const int n = order.Size();
  if (static_cast<int>(weights.size()) != n) {
    throw std::invalid_argument("weight count must match the tie-break order");
  }
  for (const ReduceAndSolveProcedure& proc : procedures) {
    if (proc.source_matroid == nullptr || proc.source_matroid->GroundSize() != n) {
      throw std::invalid_argument("procedures must share the ground set");
    }
  }
  std::vector<bool> seen(n, false);
  if (static_cast<int>(arrival.size()) != n) {
    throw std::invalid_argument("arrival order must be a permutation of the ground set");
  }
  for (ElementId e : arrival) {
    if (e < 0 || e >= n || seen[e]) {
      throw std::invalid_argument("arrival order must be a permutation of the ground set");
    }
    seen[e] = true;
  }

  std::vector<std::unique_ptr<OrderObliviousAlgorithm>> inners;
  std::vector<int> sizes;
  for (const ReduceAndSolveProcedure& proc : procedures) {
    inners.push_back(proc.make_inner());
    sizes.push_back(std::clamp(inners.back()->DrawSampleSize(n, rng), 0, n));
  }

  const Rational p(2 * static_cast<int>(k) - 1, 2 * static_cast<int>(k));
  MergedSamplePlan plan = MergeSamples(n, p, sizes, rng);
  GeneralizedReduction reduction = reduce(plan.outer_sample);
  for (ElementId e = 0; e < n; ++e) {
    if (reduction.weights[e] > weights[e]) {
      throw std::logic_error("reduced weights may never exceed the originals");
    }
  }

  CombinedRunResult run;
  run.reduced_weights = reduction.weights;
  run.outer_sample = plan.outer_sample;
  run.inner_samples = plan.inner_samples;
  run.t1.assign(k, {});
  run.t2.assign(k, {});

  for (size_t i = 0; i < k; ++i) {
    std::vector<WeightedElement> observed;
    for (ElementId e : plan.inner_samples[i]) {
      observed.push_back({reduction.assignment[i][e], reduction.weights[e]});
    }
    inners[i]->ObserveSample(observed);
  }

  std::vector<bool> pooled(n, false);
  for (ElementId e : plan.pooled) pooled[e] = true;

  std::vector<bool> took(k);
  for (ElementId e : arrival) {
    if (pooled[e]) continue;
    // Every inner algorithm must see every arrival, accepted or not.
    bool unanimous = true;
    for (size_t i = 0; i < k; ++i) {
      took[i] = inners[i]->OnArrival(reduction.assignment[i][e], reduction.weights[e]);
      unanimous = unanimous && took[i];
    }
    if (unanimous) {
      run.selected.push_back(e);
      for (size_t i = 0; i < k; ++i) {
        run.t1[i].push_back(reduction.assignment[i][e]);
        inners[i]->OnPlacement(reduction.assignment[i][e], Placement::kT1);
      }
    } else {
      for (size_t i = 0; i < k; ++i) {
        if (!took[i]) continue;
        run.t2[i].push_back(reduction.assignment[i][e]);
        inners[i]->OnPlacement(reduction.assignment[i][e], Placement::kT2);
      }
    }
  }

  // Sampled elements an inner algorithm has not observed are shown to it at
  // the end so it sees the whole ground set; anything it takes now stays
  // out of the combined output.
  for (size_t i = 0; i < k; ++i) {
    for (ElementId e : SetDifference(plan.pooled, plan.inner_samples[i])) {
      if (inners[i]->OnArrival(reduction.assignment[i][e], reduction.weights[e])) {
        run.t2[i].push_back(reduction.assignment[i][e]);
        inners[i]->OnPlacement(reduction.assignment[i][e], Placement::kT2);
      }
    }
  }

  std::sort(run.selected.begin(), run.selected.end());
  for (ElementSet& set : run.t1) std::sort(set.begin(), set.end());
  for (ElementSet& set : run.t2) std::sort(set.begin(), set.end());
  return run;
}

}  // namespace

CombinedRunResult RunReduceAndSolveCombiner(
    const std::vector<ReduceAndSolveProcedure>& procedures, const std::vector<Rational>& weights,
    const TieBreakOrder& order, const std::vector<ElementId>& arrival, Rng& rng) {
  std::vector<RefinementStructure> refinements;
  std::vector<MatroidPtr> refined;
  for (const ReduceAndSolveProcedure& proc : procedures) {
    refinements.push_back(proc.refinement);
    refined.push_back(proc.refined_matroid);
  }
  return RunCombinedCore(procedures, weights, order, arrival, rng,
                         [&](const ElementSet& sample) {
                           return ComputeGeneralizedReducedWeights(refinements, refined, weights,
                                                                   order, sample);
                         });
}

CombinedRunResult RunOptCombiner(const std::vector<MatroidPtr>& matroids,
                                 const std::vector<AlgorithmFactory>& inner_factories,
                                 const std::vector<Rational>& weights, const TieBreakOrder& order,
                                 const std::vector<ElementId>& arrival, Rng& rng) {
  if (matroids.size() != inner_factories.size()) {
    throw std::invalid_argument("need one inner algorithm per matroid");
  }
  std::vector<ReduceAndSolveProcedure> procedures;
  for (size_t i = 0; i < matroids.size(); ++i) {
    procedures.push_back(MakeTrivialReduceAndSolve(matroids[i], inner_factories[i], Rational(0)));
  }
  IntersectionConstraint constraint{matroids};
  constraint.Validate();
  const int n = order.Size();
  return RunCombinedCore(procedures, weights, order, arrival, rng,
                         [&](const ElementSet& sample) {
                           ReducedWeights reduced =
                               ComputeReducedWeights(constraint, weights, order, sample);
                           GeneralizedReduction out;
                           out.weights = std::move(reduced.weights);
                           out.provenance = std::move(reduced.provenance);
                           std::vector<ElementId> identity(n);
                           for (ElementId e = 0; e < n; ++e) identity[e] = e;
                           out.assignment.assign(matroids.size(), identity);
                           return out;
                         });
}

void CheckCombinedRunInvariants(const std::vector<ReduceAndSolveProcedure>& procedures,
                                const std::vector<Rational>& weights,
                                const CombinedRunResult& run) {
  for (size_t i = 0; i < procedures.size(); ++i) {
    const ReduceAndSolveProcedure& proc = procedures[i];
    if (!proc.source_matroid->IsIndependent(run.selected)) {
      throw std::logic_error("combined output must be independent in every source matroid");
    }
    ElementSet mapped;
    for (ElementId r : run.t1[i]) mapped.push_back(proc.refinement.source_of[r]);
    std::sort(mapped.begin(), mapped.end());
    if (!SameSet(mapped, run.selected)) {
      throw std::logic_error("constrained side must map back to the combined output");
    }
    if (!proc.refined_matroid->IsIndependent(run.t1[i])) {
      throw std::logic_error("constrained side must stay independent in the refined matroid");
    }
  }
  for (size_t e = 0; e < weights.size(); ++e) {
    if (run.reduced_weights[e] > weights[e]) {
      throw std::logic_error("reduced weights may never exceed the originals");
    }
  }
}

}  // namespace secretary
