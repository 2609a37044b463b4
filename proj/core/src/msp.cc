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

#include "secretary/msp.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace secretary {

SimplePartitionSecretary::SimplePartitionSecretary(std::vector<int> block_of, int block_count,
                                                   const Rational& p)
    : block_of_(std::move(block_of)), p_(p) {
  if (p <= 0 || p >= 1) throw std::invalid_argument("sampling probability must be in (0, 1)");
  block_taken_.assign(block_count, false);
  block_best_sampled_.assign(block_count, std::nullopt);
  for (int b : block_of_) {
    if (b >= block_count) throw std::invalid_argument("block id out of range");
  }
}

int SimplePartitionSecretary::DrawSampleSize(int n, Rng& rng) {
  return rng.Binomial(n, CoinBias::FromRational(p_));
}

void SimplePartitionSecretary::ObserveSample(const std::vector<WeightedElement>& sample) {
  for (const WeightedElement& s : sample) {
    const int b = block_of_[s.id];
    if (b < 0) continue;  // loop placeholder
    auto& best = block_best_sampled_[b];
    if (!best.has_value() || HeavierThan(s.id, s.weight, best->id, best->weight)) {
      best = s;
    }
  }
}

bool SimplePartitionSecretary::OnArrival(ElementId e, const Rational& weight) {
  const int b = block_of_[e];
  if (b < 0) return false;  // loop placeholder, never selectable
  if (block_taken_[b]) return false;
  const auto& best = block_best_sampled_[b];
  if (best.has_value() && !HeavierThan(e, weight, best->id, best->weight)) return false;
  if (!GuardAllows(e)) return false;
  block_taken_[b] = true;
  accepted_.push_back(e);
  OnAccept(e);
  return true;
}

namespace {

// Greedy optimum of a sample under (weight desc, id asc), keeping
// zero-weight elements: the thresholds below must honor the same total
// order the acceptance comparisons use.
ElementSet SampleOptimum(const Matroid& matroid, std::vector<WeightedElement> sample) {
  std::sort(sample.begin(), sample.end(), [](const WeightedElement& a, const WeightedElement& b) {
    return HeavierThan(a.id, a.weight, b.id, b.weight);
  });
  ElementSet opt;
  for (const WeightedElement& s : sample) {
    opt.push_back(s.id);
    if (!matroid.IsIndependent(opt)) opt.pop_back();
  }
  return opt;
}

}  // namespace

std::optional<WeightedElement> OracleSampleThreshold(const Matroid& matroid,
                                                     const std::vector<WeightedElement>& sample,
                                                     ElementId e) {
  const ElementSet opt = SampleOptimum(matroid, sample);
  if (matroid.IsIndependent(SetWith(opt, e))) return std::nullopt;
  std::vector<WeightedElement> members;
  for (const WeightedElement& s : sample) {
    if (SetContains(opt, s.id)) members.push_back(s);
  }
  // lightest first
  std::sort(members.begin(), members.end(), [](const WeightedElement& a, const WeightedElement& b) {
    return HeavierThan(b.id, b.weight, a.id, a.weight);
  });
  for (const WeightedElement& f : members) {
    if (matroid.IsIndependent(SetWith(SetMinus(opt, f.id), e))) return f;
  }
  throw std::logic_error("dependent extension must have a removable element");
}

GeneralizedPartitionSecretary::GeneralizedPartitionSecretary(MatroidPtr matroid)
    : matroid_(std::move(matroid)) {
  if (dynamic_cast<const PartitionMatroid*>(matroid_.get()) == nullptr) {
    throw std::invalid_argument("generalized partition rule needs a partition matroid");
  }
}

int GeneralizedPartitionSecretary::DrawSampleSize(int n, Rng& rng) {
  return rng.Binomial(n, CoinBias::FromRational(Rational(1, 2)));
}

void GeneralizedPartitionSecretary::ObserveSample(const std::vector<WeightedElement>& sample) {
  sample_ = sample;
  sample_opt_ = SampleOptimum(*matroid_, sample_);
  sample_opt_elements_.clear();
  for (const WeightedElement& s : sample_) {
    if (SetContains(sample_opt_, s.id)) sample_opt_elements_.push_back(s);
  }
  std::sort(sample_opt_elements_.begin(), sample_opt_elements_.end(),
            [](const WeightedElement& a, const WeightedElement& b) {
              return HeavierThan(b.id, b.weight, a.id, a.weight);  // lightest first
            });
}

bool GeneralizedPartitionSecretary::OnArrival(ElementId e, const Rational& weight) {
  if (!matroid_->IsIndependent(SetWith(accepted_, e))) return false;
  if (matroid_->IsIndependent(SetWith(sample_opt_, e))) {
    accepted_.push_back(e);
    return true;
  }
  for (const WeightedElement& f : sample_opt_elements_) {
    if (matroid_->IsIndependent(SetWith(SetMinus(sample_opt_, f.id), e))) {
      if (HeavierThan(e, weight, f.id, f.weight)) {
        accepted_.push_back(e);
        return true;
      }
      return false;
    }
  }
  throw std::logic_error("dependent extension must have a removable element");
}

void RefinementStructure::Validate() const {
  if (static_cast<int>(refinements.size()) != source_count) {
    throw std::invalid_argument("refinement list count must equal source count");
  }
  if (static_cast<int>(source_of.size()) != refined_count) {
    throw std::invalid_argument("source map size must equal refined count");
  }
  std::vector<bool> seen(refined_count, false);
  for (int s = 0; s < source_count; ++s) {
    if (refinements[s].empty()) {
      throw std::invalid_argument("every source element needs at least one refinement");
    }
    for (size_t i = 0; i < refinements[s].size(); ++i) {
      const ElementId r = refinements[s][i];
      if (r < 0 || r >= refined_count || seen[r] || source_of[r] != s) {
        throw std::invalid_argument("refinement ids must be disjoint and consistent");
      }
      if (i > 0 && refinements[s][i - 1] >= r) {
        throw std::invalid_argument("refinements must be listed in ascending id order");
      }
      seen[r] = true;
    }
  }
  for (bool b : seen) {
    if (!b) throw std::invalid_argument("dangling refined id");
  }
}

namespace {

// Builds a simple partition over the real refined ids followed by a zero
// rank component that turns trailing placeholder ids into loops.
MatroidPtr BuildRefinedPartition(int real_count, int dummy_count, int block_count,
                                 const std::vector<int>& block_of_real) {
  std::vector<std::vector<ElementId>> blocks(block_count);
  for (int r = 0; r < real_count; ++r) blocks[block_of_real[r]].push_back(r);
  auto partition =
      std::make_shared<PartitionMatroid>(std::move(blocks), std::vector<int>(block_count, 1));
  if (dummy_count == 0) return partition;
  std::vector<MatroidPtr> parts{partition, std::make_shared<UniformMatroid>(dummy_count, 0)};
  return std::make_shared<DirectSumMatroid>(std::move(parts));
}

class ForestGuardedSecretary : public SimplePartitionSecretary {
 public:
  ForestGuardedSecretary(std::vector<int> block_of, int block_count, const Rational& p,
                         std::vector<std::pair<int, int>> source_endpoints,
                         std::vector<ElementId> source_of, int vertex_count)
      : SimplePartitionSecretary(std::move(block_of), block_count, p),
        source_endpoints_(std::move(source_endpoints)),
        source_of_(std::move(source_of)),
        parent_(vertex_count) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

 protected:
  bool GuardAllows(ElementId e) override {
    const auto [u, v] = source_endpoints_[source_of_[e]];
    return Find(u) != Find(v);
  }

  void OnAccept(ElementId e) override {
    const auto [u, v] = source_endpoints_[source_of_[e]];
    parent_[Find(u)] = Find(v);
  }

 private:
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  std::vector<std::pair<int, int>> source_endpoints_;
  std::vector<ElementId> source_of_;
  std::vector<int> parent_;
};

class RowGuardedSecretary : public SimplePartitionSecretary {
 public:
  RowGuardedSecretary(std::vector<int> block_of, int block_count, const Rational& p,
                      std::vector<std::vector<int>> source_rows, std::vector<ElementId> source_of)
      : SimplePartitionSecretary(std::move(block_of), block_count, p),
        source_rows_(std::move(source_rows)),
        source_of_(std::move(source_of)) {}

 protected:
  bool GuardAllows(ElementId e) override {
    // Every nonzero row of the column must still be free; this keeps the
    // accepted columns linearly independent, not just row-disjoint.
    for (int row : source_rows_[source_of_[e]]) {
      if (BlockTaken(row)) return false;
    }
    return true;
  }

 private:
  std::vector<std::vector<int>> source_rows_;
  std::vector<ElementId> source_of_;
};

}  // namespace

ReduceAndSolveProcedure MakeGraphicReduceAndSolve(MatroidPtr matroid, const Rational& p) {
  const auto* graphic = dynamic_cast<const GraphicMatroid*>(matroid.get());
  if (graphic == nullptr) {
    throw std::invalid_argument("graphic reduce-and-solve needs a graphic matroid");
  }
  const int m = graphic->GroundSize();
  const int vertices = graphic->VertexCount();

  ReduceAndSolveProcedure proc;
  proc.refinement.source_count = m;
  proc.refinement.refined_count = 2 * m;
  proc.refinement.refinements.resize(m);
  proc.refinement.source_of.resize(2 * m);
  std::vector<int> block_of(2 * m);
  std::vector<std::pair<int, int>> endpoints(m);
  for (ElementId e = 0; e < m; ++e) {
    endpoints[e] = graphic->Endpoints(e);
    proc.refinement.refinements[e] = {2 * e, 2 * e + 1};
    proc.refinement.source_of[2 * e] = e;
    proc.refinement.source_of[2 * e + 1] = e;
    block_of[2 * e] = endpoints[e].first;
    block_of[2 * e + 1] = endpoints[e].second;
  }
  proc.refinement.Validate();
  proc.refined_matroid = BuildRefinedPartition(2 * m, 0, vertices, block_of);
  proc.source_matroid = matroid;
  proc.make_inner = [block_of, vertices, p, endpoints,
                     source_of = proc.refinement.source_of]() {
    return std::make_unique<ForestGuardedSecretary>(block_of, vertices, p, endpoints, source_of,
                                                    vertices);
  };
  proc.reduction_ratio = 1;
  proc.opt_ratio = p * p * (1 - p);
  proc.augment_ratio = 0;
  return proc;
}

ReduceAndSolveProcedure MakeSparseLinearReduceAndSolve(MatroidPtr matroid, int sparsity,
                                                       std::optional<Rational> p) {
  const auto* linear = dynamic_cast<const LinearMatroid*>(matroid.get());
  if (linear == nullptr) {
    throw std::invalid_argument("sparse reduce-and-solve needs a linear matroid");
  }
  if (sparsity < 1) throw std::invalid_argument("sparsity bound must be positive");
  const int n = linear->GroundSize();
  const int rows = linear->RowCount();
  const Rational prob = p.value_or(Rational(sparsity - 1, sparsity));
  if (prob <= 0 || prob >= 1) {
    throw std::invalid_argument("sampling probability must be in (0, 1)");
  }

  ReduceAndSolveProcedure proc;
  proc.refinement.source_count = n;
  proc.refinement.refinements.resize(n);
  std::vector<int> block_of_real;
  std::vector<std::vector<int>> source_rows(n);
  int next_id = 0;
  std::vector<ElementId> zero_columns;
  for (ElementId c = 0; c < n; ++c) {
    source_rows[c] = linear->NonzeroRows(c);
    if (static_cast<int>(source_rows[c].size()) > sparsity) {
      throw std::invalid_argument("column exceeds the sparsity bound");
    }
    if (source_rows[c].empty()) {
      zero_columns.push_back(c);
      continue;
    }
    for (int r : source_rows[c]) {
      proc.refinement.refinements[c].push_back(next_id);
      proc.refinement.source_of.push_back(c);
      block_of_real.push_back(r);
      ++next_id;
    }
  }
  const int real_count = next_id;
  // All-zero columns get one placeholder refinement, a loop of the refined
  // matroid, so they can never be selected.
  for (ElementId c : zero_columns) {
    proc.refinement.refinements[c].push_back(next_id);
    proc.refinement.source_of.push_back(c);
    ++next_id;
  }
  proc.refinement.refined_count = next_id;
  proc.refinement.Validate();
  proc.refined_matroid =
      BuildRefinedPartition(real_count, next_id - real_count, rows, block_of_real);
  proc.source_matroid = matroid;

  std::vector<int> block_of(next_id, -1);
  for (int r = 0; r < real_count; ++r) block_of[r] = block_of_real[r];
  proc.make_inner = [block_of, rows, prob, source_rows, source_of = proc.refinement.source_of]() {
    return std::make_unique<RowGuardedSecretary>(block_of, rows, prob, source_rows, source_of);
  };
  proc.reduction_ratio = 1;
  Rational opt_ratio = 1 - prob;
  for (int i = 0; i < sparsity; ++i) opt_ratio *= prob;
  proc.opt_ratio = opt_ratio;
  proc.augment_ratio = 0;
  return proc;
}

ReduceAndSolveProcedure MakeTransversalReduceAndSolve(MatroidPtr matroid, const Rational& p) {
  const auto* transversal = dynamic_cast<const TransversalMatroid*>(matroid.get());
  if (transversal == nullptr) {
    throw std::invalid_argument("transversal reduce-and-solve needs a transversal matroid");
  }
  const int n = transversal->GroundSize();
  const int right = transversal->RightCount();

  ReduceAndSolveProcedure proc;
  proc.refinement.source_count = n;
  proc.refinement.refinements.resize(n);
  std::vector<int> block_of_real;
  int next_id = 0;
  std::vector<ElementId> isolated;
  for (ElementId u = 0; u < n; ++u) {
    std::vector<int> nbrs = transversal->Neighbors(u);
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    if (nbrs.empty()) {
      isolated.push_back(u);
      continue;
    }
    for (int v : nbrs) {
      proc.refinement.refinements[u].push_back(next_id);
      proc.refinement.source_of.push_back(u);
      block_of_real.push_back(v);
      ++next_id;
    }
  }
  const int real_count = next_id;
  for (ElementId u : isolated) {
    proc.refinement.refinements[u].push_back(next_id);
    proc.refinement.source_of.push_back(u);
    ++next_id;
  }
  proc.refinement.refined_count = next_id;
  proc.refinement.Validate();
  proc.refined_matroid = BuildRefinedPartition(real_count, next_id - real_count, right,
                                               block_of_real);
  proc.source_matroid = matroid;

  std::vector<int> block_of(next_id, -1);
  for (int r = 0; r < real_count; ++r) block_of[r] = block_of_real[r];
  proc.make_inner = [block_of, right, p]() {
    return std::make_unique<SimplePartitionSecretary>(block_of, right, p);
  };
  proc.reduction_ratio = 1;
  proc.opt_ratio = p * (1 - p);
  proc.augment_ratio = 0;
  return proc;
}

ReduceAndSolveProcedure MakeTrivialReduceAndSolve(MatroidPtr matroid, AlgorithmFactory inner,
                                                  const Rational& opt_ratio) {
  const int n = matroid->GroundSize();
  ReduceAndSolveProcedure proc;
  proc.refinement.source_count = n;
  proc.refinement.refined_count = n;
  proc.refinement.refinements.resize(n);
  proc.refinement.source_of.resize(n);
  for (ElementId e = 0; e < n; ++e) {
    proc.refinement.refinements[e] = {e};
    proc.refinement.source_of[e] = e;
  }
  proc.refined_matroid = matroid;
  proc.source_matroid = matroid;
  proc.make_inner = std::move(inner);
  proc.reduction_ratio = 1;
  proc.opt_ratio = opt_ratio;
  proc.augment_ratio = 0;
  return proc;
}

}  // namespace secretary
