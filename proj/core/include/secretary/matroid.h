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
// Matroid oracles. Ground sets are dense id ranges [0, n). Every family
// answers independence queries; rank and span are derived from independence
// by greedy extension, which the exchange axiom makes correct. Oracles are
// immutable after construction and safe to query from multiple threads.

#ifndef SECRETARY_MATROID_H_
#define SECRETARY_MATROID_H_

#include <memory>
#include <utility>
#include <vector>

#include "secretary/rational.h"

namespace secretary {

using ElementId = int;

// An element set is a duplicate-free id vector; element order is irrelevant
// to oracles. Canonical (sorted) form is only needed for comparisons.
using ElementSet = std::vector<ElementId>;

bool SetContains(const ElementSet& set, ElementId e);
ElementSet SetWith(const ElementSet& set, ElementId e);
ElementSet SetMinus(const ElementSet& set, ElementId e);
ElementSet SetUnion(const ElementSet& a, const ElementSet& b);
ElementSet SetIntersection(const ElementSet& a, const ElementSet& b);
ElementSet SetDifference(const ElementSet& a, const ElementSet& b);
ElementSet SortedCopy(ElementSet set);
ElementSet ComplementSet(int n, const ElementSet& set);
bool SameSet(const ElementSet& a, const ElementSet& b);

class Matroid {
 public:
  explicit Matroid(int ground_size);
  virtual ~Matroid() = default;

  int GroundSize() const { return ground_size_; }

  // Validates ids (throws std::invalid_argument on out-of-range or
  // duplicate ids) and dispatches to the family implementation.
  bool IsIndependent(const ElementSet& set) const;

  // Size of a maximal independent subset of `set`.
  int Rank(const ElementSet& set) const;

  // Rank of the full ground set.
  int FullRank() const;

  // True iff adding e to set does not increase rank. InSpan({}, e) is true
  // exactly when e is a loop.
  bool InSpan(const ElementSet& set, ElementId e) const;

 protected:
  virtual bool IndependentImpl(const ElementSet& set) const = 0;

 private:
  void ValidateSet(const ElementSet& set) const;

  int ground_size_;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

// |S| <= rank.
class UniformMatroid : public Matroid {
 public:
  UniformMatroid(int ground_size, int rank);
  int UniformRank() const { return rank_; }

 protected:
  bool IndependentImpl(const ElementSet& set) const override;

 private:
  int rank_;
};

// Blocks partition the ground set; at most cap[b] elements per block.
class PartitionMatroid : public Matroid {
 public:
  PartitionMatroid(std::vector<std::vector<ElementId>> blocks, std::vector<int> caps);

  int BlockCount() const { return static_cast<int>(caps_.size()); }
  int BlockOf(ElementId e) const { return block_of_[e]; }
  int CapOf(int block) const { return caps_[block]; }
  const std::vector<std::vector<ElementId>>& Blocks() const { return blocks_; }
  bool IsSimple() const;  // every cap equals one

 protected:
  bool IndependentImpl(const ElementSet& set) const override;

 private:
  std::vector<std::vector<ElementId>> blocks_;
  std::vector<int> caps_;
  std::vector<int> block_of_;
};

// A family of sets, pairwise nested or disjoint, each with a cap.
class LaminarMatroid : public Matroid {
 public:
  LaminarMatroid(int ground_size, std::vector<std::vector<ElementId>> sets, std::vector<int> caps);

  int FamilyCount() const { return static_cast<int>(caps_.size()); }
  int FamilyCap(int i) const { return caps_[i]; }
  std::vector<ElementId> FamilySet(int i) const;

 protected:
  bool IndependentImpl(const ElementSet& set) const override;

 private:
  std::vector<std::vector<bool>> membership_;  // per family set
  std::vector<int> caps_;
};

// Elements are edges of a multigraph; independent = forest. Self-loops are
// matroid loops.
class GraphicMatroid : public Matroid {
 public:
  GraphicMatroid(int vertex_count, std::vector<std::pair<int, int>> edges);

  int VertexCount() const { return vertex_count_; }
  std::pair<int, int> Endpoints(ElementId e) const { return edges_[e]; }

 protected:
  bool IndependentImpl(const ElementSet& set) const override;

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
};

// Elements are left nodes of a bipartite graph; independent = matchable.
class TransversalMatroid : public Matroid {
 public:
  TransversalMatroid(int ground_size, int right_count,
                     std::vector<std::vector<int>> adjacency);

  int RightCount() const { return right_count_; }
  const std::vector<int>& Neighbors(ElementId e) const { return adjacency_[e]; }

 protected:
  bool IndependentImpl(const ElementSet& set) const override;

 private:
  int right_count_;
  std::vector<std::vector<int>> adjacency_;
};

// Elements are matrix columns; independent = linearly independent over the
// rationals. Elimination is exact, so the answer cannot depend on pivot
// order.
class LinearMatroid : public Matroid {
 public:
  // column-major: columns[c] has one entry per row.
  LinearMatroid(std::vector<std::vector<Rational>> columns);

  int RowCount() const { return row_count_; }
  const std::vector<Rational>& Column(ElementId e) const { return columns_[e]; }
  std::vector<int> NonzeroRows(ElementId e) const;
  // Largest number of nonzero entries in any column.
  int ColumnSparsity() const { return column_sparsity_; }

  // Rank of the listed columns, eliminating in the given order.
  int RankInOrder(const std::vector<ElementId>& columns_in_order) const;

 protected:
  bool IndependentImpl(const ElementSet& set) const override;

 private:
  int row_count_;
  int column_sparsity_;
  std::vector<std::vector<Rational>> columns_;
};

// S is independent iff rank(N \ S) equals rank(N) in the base matroid.
class DualMatroid : public Matroid {
 public:
  explicit DualMatroid(MatroidPtr base);
  const Matroid& Base() const { return *base_; }

 protected:
  bool IndependentImpl(const ElementSet& set) const override;

 private:
  MatroidPtr base_;
  int base_full_rank_;
};

// Same id space as the base; elements outside the kept subset are loops.
class RestrictionMatroid : public Matroid {
 public:
  RestrictionMatroid(MatroidPtr base, ElementSet keep);
  const Matroid& Base() const { return *base_; }
  const ElementSet& Kept() const { return keep_; }

 protected:
  bool IndependentImpl(const ElementSet& set) const override;

 private:
  MatroidPtr base_;
  ElementSet keep_;
  std::vector<bool> kept_mask_;
};

// Components over consecutive id ranges; independence componentwise.
class DirectSumMatroid : public Matroid {
 public:
  explicit DirectSumMatroid(std::vector<MatroidPtr> components);

  const std::vector<MatroidPtr>& Components() const { return components_; }

 protected:
  bool IndependentImpl(const ElementSet& set) const override;

 private:
  std::vector<MatroidPtr> components_;
  std::vector<int> offsets_;
};

// The global strict total order on elements: weight descending, id
// ascending. Every weight comparison in the library goes through this
// order, which makes optima unique even with repeated weights.
class TieBreakOrder {
 public:
  explicit TieBreakOrder(const std::vector<Rational>& weights);

  int Size() const { return static_cast<int>(by_position_.size()); }
  int PositionOf(ElementId e) const { return position_[e]; }
  ElementId AtPosition(int pos) const { return by_position_[pos]; }
  const std::vector<ElementId>& Ordered() const { return by_position_; }

  // True iff a precedes b (a outranks b).
  bool Precedes(ElementId a, ElementId b) const { return position_[a] < position_[b]; }

 private:
  std::vector<ElementId> by_position_;
  std::vector<int> position_;
};

// Strict comparison used by online algorithms that never see the full
// weight vector: (weight desc, id asc).
bool HeavierThan(ElementId a, const Rational& wa, ElementId b, const Rational& wb);

}  // namespace secretary

#endif  // SECRETARY_MATROID_H_
