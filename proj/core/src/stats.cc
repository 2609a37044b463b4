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

#include "secretary/stats.h"

#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace secretary {

void RunningStat::Add(double x) {
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

double RunningStat::Variance() const {
  if (count_ < 2) return 0;
  return m2_ / static_cast<double>(count_ - 1);
}

double RunningStat::StdError() const {
  if (count_ < 1) return 0;
  return std::sqrt(Variance() / static_cast<double>(count_));
}

double FrequencyStdError(double frequency, std::int64_t trials) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  const double clamped = std::min(1.0, std::max(0.0, frequency));
  return std::sqrt(clamped * (1 - clamped) / static_cast<double>(trials));
}

double TwoSampleChiSquarePValue(const std::vector<std::int64_t>& counts_a,
                                const std::vector<std::int64_t>& counts_b) {
  if (counts_a.size() != counts_b.size()) {
    throw std::invalid_argument("count vectors must have equal length");
  }
  double total_a = 0;
  double total_b = 0;
  int used_cells = 0;
  for (std::size_t i = 0; i < counts_a.size(); ++i) {
    if (counts_a[i] < 0 || counts_b[i] < 0) {
      throw std::invalid_argument("counts must be nonnegative");
    }
    if (counts_a[i] + counts_b[i] > 0) ++used_cells;
    total_a += static_cast<double>(counts_a[i]);
    total_b += static_cast<double>(counts_b[i]);
  }
  if (used_cells < 2 || total_a == 0 || total_b == 0) return 1.0;

  const double grand = total_a + total_b;
  double statistic = 0;
  for (std::size_t i = 0; i < counts_a.size(); ++i) {
    const double cell = static_cast<double>(counts_a[i] + counts_b[i]);
    if (cell == 0) continue;
    const double expected_a = total_a * cell / grand;
    const double expected_b = total_b * cell / grand;
    const double da = static_cast<double>(counts_a[i]) - expected_a;
    const double db = static_cast<double>(counts_b[i]) - expected_b;
    statistic += da * da / expected_a + db * db / expected_b;
  }

  const boost::math::chi_squared_distribution<double> dist(used_cells - 1);
  const double p = boost::math::cdf(boost::math::complement(dist, statistic));
  return p;
}

}  // namespace secretary
