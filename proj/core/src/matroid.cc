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

#include "secretary/matroid.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace secretary {

bool SetContains(const ElementSet& set, ElementId e) {
  return std::find(set.begin(), set.end(), e) != set.end();
}

ElementSet SetWith(const ElementSet& set, ElementId e) {
  ElementSet out = set;
  out.push_back(e);
  return out;
}

ElementSet SetMinus(const ElementSet& set, ElementId e) {
  ElementSet out;
  out.reserve(set.size());
  for (ElementId x : set) {
    if (x != e) out.push_back(x);
  }
  return out;
}

ElementSet SetUnion(const ElementSet& a, const ElementSet& b) {
  ElementSet out = a;
  for (ElementId x : b) {
    if (!SetContains(out, x)) out.push_back(x);
  }
  return out;
}

ElementSet SetIntersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  for (ElementId x : a) {
    if (SetContains(b, x)) out.push_back(x);
  }
  return out;
}

ElementSet SetDifference(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  for (ElementId x : a) {
    if (!SetContains(b, x)) out.push_back(x);
  }
  return out;
}

ElementSet SortedCopy(ElementSet set) {
  std::sort(set.begin(), set.end());
  return set;
}

ElementSet ComplementSet(int n, const ElementSet& set) {
  std::vector<bool> in(n, false);
  for (ElementId e : set) in[e] = true;
  ElementSet out;
  out.reserve(n - set.size());
  for (int e = 0; e < n; ++e) {
    if (!in[e]) out.push_back(e);
  }
  return out;
}

bool SameSet(const ElementSet& a, const ElementSet& b) {
  return SortedCopy(a) == SortedCopy(b);
}

Matroid::Matroid(int ground_size) : ground_size_(ground_size) {
  if (ground_size < 0) throw std::invalid_argument("negative ground set size");
}

void Matroid::ValidateSet(const ElementSet& set) const {
  for (ElementId e : set) {
    if (e < 0 || e >= ground_size_) throw std::invalid_argument("element id out of range");
  }
  if (set.size() > 1) {
    ElementSet sorted = SortedCopy(set);
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("duplicate element id in set");
    }
  }
}

bool Matroid::IsIndependent(const ElementSet& set) const {
  ValidateSet(set);
  return IndependentImpl(set);
}

int Matroid::Rank(const ElementSet& set) const {
  ValidateSet(set);
  // Greedy extension; correct for matroids by the exchange axiom.
  ElementSet current;
  for (ElementId e : set) {
    current.push_back(e);
    if (!IndependentImpl(current)) current.pop_back();
  }
  return static_cast<int>(current.size());
}

int Matroid::FullRank() const {
  ElementSet all(ground_size_);
  std::iota(all.begin(), all.end(), 0);
  return Rank(all);
}

bool Matroid::InSpan(const ElementSet& set, ElementId e) const {
  if (e < 0 || e >= ground_size_) throw std::invalid_argument("element id out of range");
  if (SetContains(set, e)) return true;
  return Rank(SetWith(set, e)) == Rank(set);
}

UniformMatroid::UniformMatroid(int ground_size, int rank) : Matroid(ground_size), rank_(rank) {
  if (rank < 0) throw std::invalid_argument("uniform rank must be nonnegative");
}

bool UniformMatroid::IndependentImpl(const ElementSet& set) const {
  return static_cast<int>(set.size()) <= rank_;
}

namespace {

int PartitionGroundSize(const std::vector<std::vector<ElementId>>& blocks) {
  int n = 0;
  for (const auto& block : blocks) n += static_cast<int>(block.size());
  return n;
}

}  // namespace

PartitionMatroid::PartitionMatroid(std::vector<std::vector<ElementId>> blocks,
                                   std::vector<int> caps)
    : Matroid(PartitionGroundSize(blocks)), blocks_(std::move(blocks)), caps_(std::move(caps)) {
  if (blocks_.size() != caps_.size()) {
    throw std::invalid_argument("partition blocks and caps differ in count");
  }
  block_of_.assign(GroundSize(), -1);
  for (int b = 0; b < static_cast<int>(blocks_.size()); ++b) {
    if (caps_[b] < 1) throw std::invalid_argument("partition cap must be at least one");
    for (ElementId e : blocks_[b]) {
      if (e < 0 || e >= GroundSize() || block_of_[e] != -1) {
        throw std::invalid_argument("blocks must partition the ground set");
      }
      block_of_[e] = b;
    }
  }
  for (int v : block_of_) {
    if (v == -1) throw std::invalid_argument("blocks must partition the ground set");
  }
}

bool PartitionMatroid::IsSimple() const {
  return std::all_of(caps_.begin(), caps_.end(), [](int c) { return c == 1; });
}

bool PartitionMatroid::IndependentImpl(const ElementSet& set) const {
  std::vector<int> used(caps_.size(), 0);
  for (ElementId e : set) {
    if (++used[block_of_[e]] > caps_[block_of_[e]]) return false;
  }
  return true;
}

LaminarMatroid::LaminarMatroid(int ground_size, std::vector<std::vector<ElementId>> sets,
                               std::vector<int> caps)
    : Matroid(ground_size), caps_(std::move(caps)) {
  if (sets.size() != caps_.size()) {
    throw std::invalid_argument("laminar sets and caps differ in count");
  }
  membership_.reserve(sets.size());
  for (const auto& s : sets) {
    std::vector<bool> mask(ground_size, false);
    for (ElementId e : s) {
      if (e < 0 || e >= ground_size) throw std::invalid_argument("laminar element out of range");
      mask[e] = true;
    }
    membership_.push_back(std::move(mask));
  }
  for (int c : caps_) {
    if (c < 0) throw std::invalid_argument("laminar cap must be nonnegative");
  }
  // Pairwise nested-or-disjoint.
  for (size_t i = 0; i < membership_.size(); ++i) {
    for (size_t j = i + 1; j < membership_.size(); ++j) {
      bool i_minus_j = false, j_minus_i = false, common = false;
      for (int e = 0; e < ground_size; ++e) {
        if (membership_[i][e] && membership_[j][e]) common = true;
        if (membership_[i][e] && !membership_[j][e]) i_minus_j = true;
        if (!membership_[i][e] && membership_[j][e]) j_minus_i = true;
      }
      if (common && i_minus_j && j_minus_i) {
        throw std::invalid_argument("laminar family violates nested-or-disjoint");
      }
    }
  }
}

std::vector<ElementId> LaminarMatroid::FamilySet(int i) const {
  std::vector<ElementId> members;
  for (ElementId e = 0; e < GroundSize(); ++e) {
    if (membership_[i][e]) members.push_back(e);
  }
  return members;
}

bool LaminarMatroid::IndependentImpl(const ElementSet& set) const {
  for (size_t i = 0; i < membership_.size(); ++i) {
    int count = 0;
    for (ElementId e : set) {
      if (membership_[i][e]) ++count;
    }
    if (count > caps_[i]) return false;
  }
  return true;
}

GraphicMatroid::GraphicMatroid(int vertex_count, std::vector<std::pair<int, int>> edges)
    : Matroid(static_cast<int>(edges.size())),
      vertex_count_(vertex_count),
      edges_(std::move(edges)) {
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
  }
}

bool GraphicMatroid::IndependentImpl(const ElementSet& set) const {
  // Union-find; a cycle (or self-loop) makes the set dependent.
  std::vector<int> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (ElementId e : set) {
    const auto [u, v] = edges_[e];
    const int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

TransversalMatroid::TransversalMatroid(int ground_size, int right_count,
                                       std::vector<std::vector<int>> adjacency)
    : Matroid(ground_size), right_count_(right_count), adjacency_(std::move(adjacency)) {
  if (static_cast<int>(adjacency_.size()) != ground_size) {
    throw std::invalid_argument("adjacency list count must equal ground set size");
  }
  for (const auto& nbrs : adjacency_) {
    for (int v : nbrs) {
      if (v < 0 || v >= right_count_) throw std::invalid_argument("right node out of range");
    }
  }
}

bool TransversalMatroid::IndependentImpl(const ElementSet& set) const {
  // Augmenting paths; S is independent iff every element gets matched.
  std::vector<int> matched_left(right_count_, -1);
  std::vector<bool> visited(right_count_);
  // match one element, recursively freeing right nodes
  auto augment = [&](auto&& self, ElementId e) -> bool {
    for (int v : adjacency_[e]) {
      if (visited[v]) continue;
      visited[v] = true;
      if (matched_left[v] == -1 || self(self, matched_left[v])) {
        matched_left[v] = e;
        return true;
      }
    }
    return false;
  };
  for (ElementId e : set) {
    std::fill(visited.begin(), visited.end(), false);
    if (!augment(augment, e)) return false;
  }
  return true;
}

LinearMatroid::LinearMatroid(std::vector<std::vector<Rational>> columns)
    : Matroid(static_cast<int>(columns.size())), columns_(std::move(columns)) {
  row_count_ = columns_.empty() ? 0 : static_cast<int>(columns_[0].size());
  column_sparsity_ = 0;
  for (const auto& col : columns_) {
    if (static_cast<int>(col.size()) != row_count_) {
      throw std::invalid_argument("matrix columns must share the row count");
    }
    int nonzeros = 0;
    for (const Rational& v : col) {
      if (v != 0) ++nonzeros;
    }
    column_sparsity_ = std::max(column_sparsity_, nonzeros);
  }
}

std::vector<int> LinearMatroid::NonzeroRows(ElementId e) const {
  std::vector<int> rows;
  for (int r = 0; r < row_count_; ++r) {
    if (columns_[e][r] != 0) rows.push_back(r);
  }
  return rows;
}

int LinearMatroid::RankInOrder(const std::vector<ElementId>& columns_in_order) const {
  // Exact Gaussian elimination over the rationals.
  std::vector<std::vector<Rational>> basis;  // reduced pivot columns
  std::vector<int> pivot_row;
  int rank = 0;
  for (ElementId c : columns_in_order) {
    std::vector<Rational> v = columns_[c];
    for (size_t b = 0; b < basis.size(); ++b) {
      const int pr = pivot_row[b];
      if (v[pr] != 0) {
        const Rational factor = v[pr] / basis[b][pr];
        for (int r = 0; r < row_count_; ++r) v[r] -= factor * basis[b][r];
      }
    }
    int pivot = -1;
    for (int r = 0; r < row_count_; ++r) {
      if (v[r] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot >= 0) {
      basis.push_back(std::move(v));
      pivot_row.push_back(pivot);
      ++rank;
    }
  }
  return rank;
}

bool LinearMatroid::IndependentImpl(const ElementSet& set) const {
  return RankInOrder(set) == static_cast<int>(set.size());
}

DualMatroid::DualMatroid(MatroidPtr base) : Matroid(base->GroundSize()), base_(std::move(base)) {
  base_full_rank_ = base_->FullRank();
}

bool DualMatroid::IndependentImpl(const ElementSet& set) const {
  return base_->Rank(ComplementSet(GroundSize(), set)) == base_full_rank_;
}

RestrictionMatroid::RestrictionMatroid(MatroidPtr base, ElementSet keep)
    : Matroid(base->GroundSize()), base_(std::move(base)), keep_(SortedCopy(std::move(keep))) {
  kept_mask_.assign(GroundSize(), false);
  for (ElementId e : keep_) {
    if (e < 0 || e >= GroundSize()) throw std::invalid_argument("kept element out of range");
    kept_mask_[e] = true;
  }
}

bool RestrictionMatroid::IndependentImpl(const ElementSet& set) const {
  for (ElementId e : set) {
    if (!kept_mask_[e]) return false;
  }
  return base_->IsIndependent(set);
}

namespace {

int TotalGroundSize(const std::vector<MatroidPtr>& components) {
  int n = 0;
  for (const auto& m : components) n += m->GroundSize();
  return n;
}

}  // namespace

DirectSumMatroid::DirectSumMatroid(std::vector<MatroidPtr> components)
    : Matroid(TotalGroundSize(components)), components_(std::move(components)) {
  int offset = 0;
  for (const auto& m : components_) {
    offsets_.push_back(offset);
    offset += m->GroundSize();
  }
  offsets_.push_back(offset);
}

bool DirectSumMatroid::IndependentImpl(const ElementSet& set) const {
  std::vector<ElementSet> parts(components_.size());
  for (ElementId e : set) {
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), e);
    const int idx = static_cast<int>(it - offsets_.begin()) - 1;
    parts[idx].push_back(e - offsets_[idx]);
  }
  for (size_t i = 0; i < components_.size(); ++i) {
    if (!components_[i]->IsIndependent(parts[i])) return false;
  }
  return true;
}

TieBreakOrder::TieBreakOrder(const std::vector<Rational>& weights) {
  const int n = static_cast<int>(weights.size());
  by_position_.resize(n);
  std::iota(by_position_.begin(), by_position_.end(), 0);
  std::sort(by_position_.begin(), by_position_.end(), [&weights](ElementId a, ElementId b) {
    if (weights[a] != weights[b]) return weights[a] > weights[b];
    return a < b;
  });
  position_.resize(n);
  for (int pos = 0; pos < n; ++pos) position_[by_position_[pos]] = pos;
}

bool HeavierThan(ElementId a, const Rational& wa, ElementId b, const Rational& wb) {
  if (wa != wb) return wa > wb;
  return a < b;
}

}  // namespace secretary
