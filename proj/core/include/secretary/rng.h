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

#ifndef SECRETARY_RNG_H_
#define SECRETARY_RNG_H_

#include <cstdint>
#include <random>
#include <vector>

#include "secretary/rational.h"

namespace secretary {

// Derives an independent stream seed from a master seed and a counter.
// Trial t of an experiment always uses DeriveStream(master, t), so any
// single trial is reproducible in isolation and results do not depend on
// how trials are scheduled across threads.
std::uint64_t DeriveStream(std::uint64_t master, std::uint64_t index);

// An exact coin bias: Bernoulli(p) is decided by one 64-bit draw compared
// against floor(p * 2^64), so rational probabilities are honored without
// floating-point rounding.
struct CoinBias {
  std::uint64_t threshold = 0;
  bool always = false;  // p >= 1

  static CoinBias FromRational(const Rational& p);
};

// Deterministic random source. All distributions are implemented on top of
// the raw 64-bit stream (no std::*_distribution), so identical seeds give
// identical draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform integer in [0, bound); bound must be positive.
  int UniformInt(int bound);

  // Uniform double in [0, 1).
  double UniformDouble();

  bool Bernoulli(const CoinBias& bias);

  // Number of successes in n independent Bernoulli(bias) draws.
  int Binomial(int n, const CoinBias& bias);

  // Uniform m-subset of {0, ..., n-1}, returned sorted.
  std::vector<int> SampleIndexSubset(int n, int m);

  // Uniform m-subset of the given pool, returned sorted.
  std::vector<int> SampleSubset(const std::vector<int>& pool, int m);

  void Shuffle(std::vector<int>& values);

 private:
  std::mt19937_64 engine_;
};

}  // namespace secretary

#endif  // SECRETARY_RNG_H_
