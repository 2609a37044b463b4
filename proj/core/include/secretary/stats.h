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

#ifndef SECRETARY_STATS_H_
#define SECRETARY_STATS_H_

#include <cstdint>
#include <vector>

namespace secretary {

// Streaming mean and variance (Welford).
class RunningStat {
 public:
  void Add(double x);

  std::int64_t Count() const { return count_; }
  double Mean() const { return mean_; }
  // Sample variance; zero until two observations arrive.
  double Variance() const;
  // Standard error of the mean.
  double StdError() const;

 private:
  std::int64_t count_ = 0;
  double mean_ = 0;
  double m2_ = 0;
};

// Standard error of an empirical frequency out of `trials` draws.
double FrequencyStdError(double frequency, std::int64_t trials);

// Two-sample chi-square test of homogeneity over parallel count vectors.
// Cells empty in both samples are dropped. Returns the p-value; 1.0 when
// fewer than two usable cells remain.
double TwoSampleChiSquarePValue(const std::vector<std::int64_t>& counts_a,
                                const std::vector<std::int64_t>& counts_b);

}  // namespace secretary

#endif  // SECRETARY_STATS_H_
