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
// Nonnegative submodular objectives and the reduction from maximizing one
// online to the weighted problem: a learning-phase greedy builds synthetic
// weights (marginal gains) for the elements that would have extended it,
// and any weighted online algorithm runs on those.

#ifndef SECRETARY_SUBMODULAR_H_
#define SECRETARY_SUBMODULAR_H_

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "secretary/msp.h"
#include "secretary/offline.h"
#include "secretary/rng.h"

namespace secretary {

// Value oracle over subsets of a fixed ground set.
class SubmodularFunction {
 public:
  virtual ~SubmodularFunction() = default;
  virtual int GroundSize() const = 0;
  virtual Rational Value(const ElementSet& set) const = 0;

  // Value(base + e) - Value(base).
  Rational Marginal(const ElementSet& base, ElementId e) const;
};

using SubmodularPtr = std::shared_ptr<const SubmodularFunction>;

// Number of universe points covered by the union of the chosen sets.
// Monotone.
class CoverageFunction : public SubmodularFunction {
 public:
  CoverageFunction(int universe_size, std::vector<std::vector<int>> covers);

  int GroundSize() const override { return static_cast<int>(covers_.size()); }
  Rational Value(const ElementSet& set) const override;

  int UniverseSize() const { return universe_size_; }
  const std::vector<std::vector<int>>& Covers() const { return covers_; }

 private:
  int universe_size_;
  std::vector<std::vector<int>> covers_;
};

// Total weight of edges with exactly one endpoint in the chosen vertex set.
// Nonmonotone.
class CutFunction : public SubmodularFunction {
 public:
  CutFunction(int vertex_count, std::vector<std::pair<int, int>> edges,
              std::vector<Rational> edge_weights = {});

  int GroundSize() const override { return vertex_count_; }
  Rational Value(const ElementSet& set) const override;

  const std::vector<std::pair<int, int>>& Edges() const { return edges_; }
  const std::vector<Rational>& EdgeWeights() const { return edge_weights_; }

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Rational> edge_weights_;
};

// Maximum weight of an independent subset of the chosen set. Monotone.
class WeightedRankFunction : public SubmodularFunction {
 public:
  WeightedRankFunction(MatroidPtr matroid, std::vector<Rational> weights);

  int GroundSize() const override { return matroid_->GroundSize(); }
  Rational Value(const ElementSet& set) const override;

  const Matroid& BaseMatroid() const { return *matroid_; }
  const std::vector<Rational>& Weights() const { return weights_; }

 private:
  MatroidPtr matroid_;
  std::vector<Rational> weights_;
  TieBreakOrder order_;
};

// Plain sum of element weights plus an offset.
class ModularFunction : public SubmodularFunction {
 public:
  explicit ModularFunction(std::vector<Rational> weights, Rational offset = Rational(0));

  int GroundSize() const override { return static_cast<int>(weights_.size()); }
  Rational Value(const ElementSet& set) const override;

  const std::vector<Rational>& Weights() const { return weights_; }
  const Rational& Offset() const { return offset_; }

 private:
  std::vector<Rational> weights_;
  Rational offset_;
};

// Non-owning wrapper that rejects queries mentioning elements that have not
// been revealed yet; online runs query their objective only through this.
class RevealGuard : public SubmodularFunction {
 public:
  explicit RevealGuard(const SubmodularFunction& base);

  void Reveal(ElementId e);
  void RevealSet(const ElementSet& set);

  int GroundSize() const override { return base_->GroundSize(); }
  // Throws std::logic_error when the set contains an unrevealed element.
  Rational Value(const ElementSet& set) const override;

 private:
  const SubmodularFunction* base_;
  std::vector<bool> revealed_;
};

// Greedy for a submodular objective under an intersection constraint:
// repeatedly add the feasible element of maximum positive marginal gain,
// smallest id on ties, until no positive feasible gain remains. `selected`
// is in insertion order.
struct SubmodularGreedyTrace {
  std::vector<ElementId> selected;

  ElementSet SelectedSet() const;
};

SubmodularGreedyTrace SubmodularGreedyTraced(const IntersectionConstraint& constraint,
                                             const SubmodularFunction& f,
                                             const ElementSet* ground = nullptr);

ElementSet SubmodularGreedy(const IntersectionConstraint& constraint, const SubmodularFunction& f,
                            const ElementSet* ground = nullptr);

// Whether `candidate` would be picked by the greedy run on
// `base_ground + candidate`, and the selection prefix immediately before
// that happens. The prefix is in insertion order.
struct GreedyInsertion {
  bool inserted = false;
  std::vector<ElementId> prefix;
};

GreedyInsertion ProbeGreedyInsertion(const IntersectionConstraint& constraint,
                                     const SubmodularFunction& f, const ElementSet& base_ground,
                                     ElementId candidate);

// min over A subset of `set` of f(A) + w(set \ A), evaluated exhaustively.
// Throws ResourceLimitError when |set| exceeds `limit`.
Rational ConvolutionValue(const SubmodularFunction& f, const std::vector<Rational>& weights,
                          const ElementSet& set, int limit = 15);

// Exact maximizer of f over the feasible sets, by exhaustive search with
// feasibility pruning; ties broken toward the lexicographically smallest
// id list. Throws ResourceLimitError when the ground set exceeds `limit`.
ElementSet BruteForceSubmodularOpt(const IntersectionConstraint& constraint,
                                   const SubmodularFunction& f, int limit = 20);

// Exhaustive checks over every subset pair; throw ResourceLimitError above
// `limit` ground elements.
bool IsSubmodular(const SubmodularFunction& f, int limit = 16);
bool IsNonnegative(const SubmodularFunction& f, int limit = 16);

// Transcript of one online run.
struct OnlineSubmodularResult {
  ElementSet selected;        // inner accepts restricted to the boosted set
  ElementSet inner_accepted;  // everything the inner algorithm took
  ElementSet boosted;         // relevant arrivals whose coin came up
  ElementSet learning_sample;
  ElementSet greedy_set;                    // greedy outcome of the learning sample
  std::vector<Rational> synthetic_weights;  // zero outside the boosted set
};

// Deterministic core of the online reduction. Learning elements are those
// with learn_coin true; a non-learning arrival that would extend the
// learned greedy solution gets, when its boost_coin is true, the marginal
// gain it would have contributed as its weight, and zero otherwise. All
// non-learning arrivals stream into the inner algorithm (the first
// inner_sample_size of them as its observed sample); learning elements are
// shown to it afterwards with weight zero. The returned selection is the
// inner acceptance restricted to the boosted set, which keeps it feasible.
// The objective is queried only on revealed elements, enforced by a guard.
OnlineSubmodularResult RunOnlineSubmodularWithCoins(
    const IntersectionConstraint& constraint, const SubmodularFunction& f,
    OrderObliviousAlgorithm& inner, const std::vector<ElementId>& arrival,
    const std::function<bool(ElementId)>& learn_coin,
    const std::function<bool(ElementId)>& boost_coin, int inner_sample_size);

// Randomized wrapper: learning coins at probability 1/2 and boost coins at
// probability p are pre-drawn per element id, then the inner sample size is
// drawn; all from `rng` in that order. p must lie in (0, 1].
OnlineSubmodularResult RunOnlineSubmodular(const IntersectionConstraint& constraint,
                                           const SubmodularFunction& f,
                                           const AlgorithmFactory& inner_factory,
                                           const Rational& p,
                                           const std::vector<ElementId>& arrival, Rng& rng);

// Boost probability that balances the inner guarantee against the learning
// loss: alpha / (3k) for an alpha-competitive inner algorithm and k
// matroids.
Rational DefaultBoostProbability(const Rational& alpha, int k);

}  // namespace secretary

#endif  // SECRETARY_SUBMODULAR_H_
