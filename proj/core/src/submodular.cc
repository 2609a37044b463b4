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

#include "secretary/submodular.h"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "secretary/errors.h"

namespace secretary {

Rational SubmodularFunction::Marginal(const ElementSet& base, ElementId e) const {
  return Value(SetWith(base, e)) - Value(base);
}

CoverageFunction::CoverageFunction(int universe_size, std::vector<std::vector<int>> covers)
    : universe_size_(universe_size), covers_(std::move(covers)) {
  if (universe_size < 0) throw std::invalid_argument("universe size must be nonnegative");
  for (const std::vector<int>& cover : covers_) {
    for (int point : cover) {
      if (point < 0 || point >= universe_size) {
        throw std::invalid_argument("covered point out of the universe");
      }
    }
  }
}

Rational CoverageFunction::Value(const ElementSet& set) const {
  std::vector<bool> covered(universe_size_, false);
  int total = 0;
  for (ElementId e : set) {
    for (int point : covers_[e]) {
      if (!covered[point]) {
        covered[point] = true;
        ++total;
      }
    }
  }
  return Rational(total);
}

CutFunction::CutFunction(int vertex_count, std::vector<std::pair<int, int>> edges,
                         std::vector<Rational> edge_weights)
    : vertex_count_(vertex_count), edges_(std::move(edges)), edge_weights_(std::move(edge_weights)) {
  if (vertex_count < 0) throw std::invalid_argument("vertex count must be nonnegative");
  if (edge_weights_.empty()) edge_weights_.assign(edges_.size(), Rational(1));
  if (edge_weights_.size() != edges_.size()) {
    throw std::invalid_argument("need one weight per edge");
  }
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
  }
  for (const Rational& w : edge_weights_) {
    if (w < 0) throw std::invalid_argument("edge weights must be nonnegative");
  }
}

Rational CutFunction::Value(const ElementSet& set) const {
  std::vector<bool> inside(vertex_count_, false);
  for (ElementId e : set) inside[e] = true;
  Rational total(0);
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (inside[edges_[i].first] != inside[edges_[i].second]) total += edge_weights_[i];
  }
  return total;
}

WeightedRankFunction::WeightedRankFunction(MatroidPtr matroid, std::vector<Rational> weights)
    : matroid_(std::move(matroid)), weights_(std::move(weights)), order_(weights_) {
  if (static_cast<size_t>(matroid_->GroundSize()) != weights_.size()) {
    throw std::invalid_argument("need one weight per ground element");
  }
  for (const Rational& w : weights_) {
    if (w < 0) throw std::invalid_argument("weights must be nonnegative");
  }
}

Rational WeightedRankFunction::Value(const ElementSet& set) const {
  return SetWeight(weights_, GreedySingle(*matroid_, weights_, order_, &set));
}

ModularFunction::ModularFunction(std::vector<Rational> weights, Rational offset)
    : weights_(std::move(weights)), offset_(std::move(offset)) {
  for (const Rational& w : weights_) {
    if (w < 0) throw std::invalid_argument("weights must be nonnegative");
  }
  if (offset_ < 0) throw std::invalid_argument("offset must be nonnegative");
}

Rational ModularFunction::Value(const ElementSet& set) const {
  Rational total = offset_;
  for (ElementId e : set) total += weights_[e];
  return total;
}

RevealGuard::RevealGuard(const SubmodularFunction& base)
    : base_(&base), revealed_(base.GroundSize(), false) {}

void RevealGuard::Reveal(ElementId e) { revealed_.at(e) = true; }

void RevealGuard::RevealSet(const ElementSet& set) {
  for (ElementId e : set) Reveal(e);
}

Rational RevealGuard::Value(const ElementSet& set) const {
  for (ElementId e : set) {
    if (e < 0 || e >= GroundSize() || !revealed_[e]) {
      throw std::logic_error("objective queried on an unrevealed element");
    }
  }
  return base_->Value(set);
}

ElementSet SubmodularGreedyTrace::SelectedSet() const { return SortedCopy(selected); }

SubmodularGreedyTrace SubmodularGreedyTraced(const IntersectionConstraint& constraint,
                                             const SubmodularFunction& f,
                                             const ElementSet* ground) {
  constraint.Validate();
  const int n = constraint.GroundSize();
  if (f.GroundSize() != n) {
    throw std::invalid_argument("objective and constraint must share the ground set");
  }
  std::vector<bool> allowed(n, ground == nullptr);
  if (ground != nullptr) {
    for (ElementId e : *ground) allowed.at(e) = true;
  }

  SubmodularGreedyTrace trace;
  ElementSet current;
  Rational current_value = f.Value(current);
  std::vector<bool> taken(n, false);
  while (true) {
    std::optional<ElementId> best;
    Rational best_gain(0);
    for (ElementId e = 0; e < n; ++e) {
      if (!allowed[e] || taken[e]) continue;
      if (!constraint.Feasible(SetWith(current, e))) continue;
      const Rational gain = f.Value(SetWith(current, e)) - current_value;
      if (gain > 0 && (!best.has_value() || gain > best_gain)) {
        best = e;
        best_gain = gain;
      }
    }
    if (!best.has_value()) break;
    taken[*best] = true;
    current.push_back(*best);
    std::sort(current.begin(), current.end());
    current_value += best_gain;
    trace.selected.push_back(*best);
  }
  return trace;
}

ElementSet SubmodularGreedy(const IntersectionConstraint& constraint, const SubmodularFunction& f,
                            const ElementSet* ground) {
  return SubmodularGreedyTraced(constraint, f, ground).SelectedSet();
}

GreedyInsertion ProbeGreedyInsertion(const IntersectionConstraint& constraint,
                                     const SubmodularFunction& f, const ElementSet& base_ground,
                                     ElementId candidate) {
  ElementSet ground = SetWith(base_ground, candidate);
  SubmodularGreedyTrace trace = SubmodularGreedyTraced(constraint, f, &ground);
  GreedyInsertion probe;
  for (ElementId e : trace.selected) {
    if (e == candidate) {
      probe.inserted = true;
      return probe;
    }
    probe.prefix.push_back(e);
  }
  probe.prefix.clear();
  return probe;
}

Rational ConvolutionValue(const SubmodularFunction& f, const std::vector<Rational>& weights,
                          const ElementSet& set, int limit) {
  if (static_cast<int>(set.size()) > limit) {
    throw ResourceLimitError("convolution set too large for exhaustive evaluation");
  }
  const int m = static_cast<int>(set.size());
  std::optional<Rational> best;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    ElementSet inside;
    Rational outside_weight(0);
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) {
        inside.push_back(set[i]);
      } else {
        outside_weight += weights[set[i]];
      }
    }
    const Rational value = f.Value(inside) + outside_weight;
    if (!best.has_value() || value < *best) best = value;
  }
  return *best;
}

namespace {

void SearchSubmodularOpt(const IntersectionConstraint& constraint, const SubmodularFunction& f,
                         ElementId next, ElementSet& current, std::optional<Rational>& best_value,
                         ElementSet& best_set) {
  const int n = constraint.GroundSize();
  if (next == n) {
    const Rational value = f.Value(current);
    if (!best_value.has_value() || value > *best_value ||
        (value == *best_value && current < best_set)) {
      best_value = value;
      best_set = current;
    }
    return;
  }
  current.push_back(next);
  if (constraint.Feasible(current)) {
    SearchSubmodularOpt(constraint, f, next + 1, current, best_value, best_set);
  }
  current.pop_back();
  SearchSubmodularOpt(constraint, f, next + 1, current, best_value, best_set);
}

}  // namespace

ElementSet BruteForceSubmodularOpt(const IntersectionConstraint& constraint,
                                   const SubmodularFunction& f, int limit) {
  constraint.Validate();
  if (f.GroundSize() != constraint.GroundSize()) {
    throw std::invalid_argument("objective and constraint must share the ground set");
  }
  if (constraint.GroundSize() > limit) {
    throw ResourceLimitError("ground set too large for exhaustive search");
  }
  ElementSet current;
  ElementSet best_set;
  std::optional<Rational> best_value;
  SearchSubmodularOpt(constraint, f, 0, current, best_value, best_set);
  return best_set;
}

namespace {

std::vector<Rational> AllSubsetValues(const SubmodularFunction& f, int limit) {
  const int n = f.GroundSize();
  if (n > limit) throw ResourceLimitError("ground set too large for exhaustive checks");
  std::vector<Rational> table(size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    ElementSet set;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) set.push_back(i);
    }
    table[mask] = f.Value(set);
  }
  return table;
}

}  // namespace

bool IsSubmodular(const SubmodularFunction& f, int limit) {
  const std::vector<Rational> table = AllSubsetValues(f, limit);
  const std::uint32_t full = static_cast<std::uint32_t>(table.size());
  for (std::uint32_t a = 0; a < full; ++a) {
    for (std::uint32_t b = a; b < full; ++b) {
      if (table[a] + table[b] < table[a | b] + table[a & b]) return false;
    }
  }
  return true;
}

bool IsNonnegative(const SubmodularFunction& f, int limit) {
  for (const Rational& value : AllSubsetValues(f, limit)) {
    if (value < 0) return false;
  }
  return true;
}

OnlineSubmodularResult RunOnlineSubmodularWithCoins(
    const IntersectionConstraint& constraint, const SubmodularFunction& f,
    OrderObliviousAlgorithm& inner, const std::vector<ElementId>& arrival,
    const std::function<bool(ElementId)>& learn_coin,
    const std::function<bool(ElementId)>& boost_coin, int inner_sample_size) {
  constraint.Validate();
  const int n = constraint.GroundSize();
  if (f.GroundSize() != n) {
    throw std::invalid_argument("objective and constraint must share the ground set");
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

  OnlineSubmodularResult run;
  run.synthetic_weights.assign(n, Rational(0));

  RevealGuard guard(f);
  std::vector<bool> learning(n, false);
  for (ElementId e = 0; e < n; ++e) {
    if (learn_coin(e)) {
      learning[e] = true;
      run.learning_sample.push_back(e);
      guard.Reveal(e);
    }
  }
  run.greedy_set = SubmodularGreedy(constraint, guard, &run.learning_sample);

  std::vector<ElementId> stream;
  for (ElementId e : arrival) {
    if (!learning[e]) stream.push_back(e);
  }
  const int sample_size = std::clamp(inner_sample_size, 0, static_cast<int>(stream.size()));

  std::vector<WeightedElement> observed;
  for (int pos = 0; pos < static_cast<int>(stream.size()); ++pos) {
    const ElementId u = stream[pos];
    guard.Reveal(u);
    GreedyInsertion probe = ProbeGreedyInsertion(constraint, guard, run.greedy_set, u);
    if (probe.inserted && boost_coin(u)) {
      run.boosted.push_back(u);
      run.synthetic_weights[u] = guard.Marginal(probe.prefix, u);
    }
    if (pos < sample_size) {
      observed.push_back({u, run.synthetic_weights[u]});
      if (pos + 1 == sample_size) inner.ObserveSample(observed);
      continue;
    }
    if (pos == 0 && sample_size == 0) inner.ObserveSample({});
    if (inner.OnArrival(u, run.synthetic_weights[u])) run.inner_accepted.push_back(u);
  }
  if (stream.empty()) inner.ObserveSample({});

  // Learning elements are shown to the inner algorithm at the end with
  // weight zero; whatever it takes now cannot enter the final selection.
  for (ElementId e : run.learning_sample) {
    if (inner.OnArrival(e, Rational(0))) run.inner_accepted.push_back(e);
  }

  std::sort(run.boosted.begin(), run.boosted.end());
  std::sort(run.inner_accepted.begin(), run.inner_accepted.end());
  run.selected = SetIntersection(run.inner_accepted, run.boosted);
  return run;
}

OnlineSubmodularResult RunOnlineSubmodular(const IntersectionConstraint& constraint,
                                           const SubmodularFunction& f,
                                           const AlgorithmFactory& inner_factory,
                                           const Rational& p,
                                           const std::vector<ElementId>& arrival, Rng& rng) {
  if (p <= 0 || p > 1) throw std::invalid_argument("boost probability must be in (0, 1]");
  const int n = constraint.GroundSize();
  const CoinBias half = CoinBias::FromRational(Rational(1, 2));
  const CoinBias boost = CoinBias::FromRational(p);
  std::vector<bool> learn_coins(n), boost_coins(n);
  for (ElementId e = 0; e < n; ++e) learn_coins[e] = rng.Bernoulli(half);
  for (ElementId e = 0; e < n; ++e) boost_coins[e] = rng.Bernoulli(boost);

  std::unique_ptr<OrderObliviousAlgorithm> inner = inner_factory();
  int learning_count = 0;
  for (bool coin : learn_coins) learning_count += coin ? 1 : 0;
  const int sample_size = inner->DrawSampleSize(n - learning_count, rng);

  return RunOnlineSubmodularWithCoins(
      constraint, f, *inner, arrival, [&](ElementId e) { return learn_coins[e]; },
      [&](ElementId e) { return boost_coins[e]; }, sample_size);
}

Rational DefaultBoostProbability(const Rational& alpha, int k) {
  if (k < 1) throw std::invalid_argument("need at least one matroid");
  if (alpha <= 0 || alpha > 1) throw std::invalid_argument("inner ratio must be in (0, 1]");
  return alpha / (3 * k);
}

}  // namespace secretary
