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

#include "secretary/rng.h"

#include <algorithm>
#include <stdexcept>

namespace secretary {
namespace {

std::uint64_t Mix(std::uint64_t z) {
  // splitmix64 finalizer.
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t DeriveStream(std::uint64_t master, std::uint64_t index) {
  return Mix(Mix(master) ^ Mix(index * 0x632BE59BD9B4E019ULL + 0xD1B54A32D192ED03ULL));
}

CoinBias CoinBias::FromRational(const Rational& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("coin bias outside [0, 1]");
  CoinBias bias;
  if (p == 1) {
    bias.always = true;
    return bias;
  }
  const BigInt num = boost::multiprecision::numerator(p);
  const BigInt den = boost::multiprecision::denominator(p);
  const BigInt scaled = (num << 64) / den;
  bias.threshold = scaled.convert_to<std::uint64_t>();
  return bias;
}

int Rng::UniformInt(int bound) {
  if (bound <= 0) throw std::invalid_argument("UniformInt bound must be positive");
  // Fixed-point multiply; bias is below 2^-32 for desk-scale bounds.
  const unsigned __int128 wide =
      static_cast<unsigned __int128>(NextU64()) * static_cast<unsigned __int128>(bound);
  return static_cast<int>(wide >> 64);
}

double Rng::UniformDouble() {
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

bool Rng::Bernoulli(const CoinBias& bias) {
  if (bias.always) return true;
  return NextU64() < bias.threshold;
}

int Rng::Binomial(int n, const CoinBias& bias) {
  int successes = 0;
  for (int i = 0; i < n; ++i) {
    if (Bernoulli(bias)) ++successes;
  }
  return successes;
}

std::vector<int> Rng::SampleIndexSubset(int n, int m) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  return SampleSubset(pool, m);
}

std::vector<int> Rng::SampleSubset(const std::vector<int>& pool, int m) {
  const int n = static_cast<int>(pool.size());
  if (m < 0 || m > n) throw std::invalid_argument("subset size out of range");
  std::vector<int> scratch = pool;
  for (int i = 0; i < m; ++i) {
    const int j = i + UniformInt(n - i);
    std::swap(scratch[i], scratch[j]);
  }
  scratch.resize(m);
  std::sort(scratch.begin(), scratch.end());
  return scratch;
}

void Rng::Shuffle(std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  for (int i = n - 1; i > 0; --i) {
    const int j = UniformInt(i + 1);
    std::swap(values[i], values[j]);
  }
}

}  // namespace secretary
