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
// End-to-end validation suite. Each criterion checks one guarantee of the
// library at fixed seeds and pinned tolerances: statistical expectations get
// a one-sided 3-sigma buffer, everything else is exact. Criteria also carry
// a wall-clock budget; exceeding it fails the criterion.

#ifndef SECRETARY_ACCEPTANCE_H_
#define SECRETARY_ACCEPTANCE_H_

#include <string>
#include <vector>

namespace secretary {

struct CriterionResult {
  int index = 0;  // 1-based
  std::string name;
  bool passed = false;
  double seconds = 0;
  double budget_seconds = 0;  // 0 = untimed
  std::string detail;
};

int AcceptanceCriterionCount();
const char* AcceptanceCriterionName(int index);

// Runs one criterion (1-based index).
CriterionResult RunAcceptanceCriterion(int index);

// Runs every criterion in order; never throws on failures, they are
// reported in the results.
std::vector<CriterionResult> RunAcceptanceSuite();

// "PASS  3 greedy-k-approximation  1.2s/60s  <detail>"
std::string FormatCriterionLine(const CriterionResult& result);

}  // namespace secretary

#endif  // SECRETARY_ACCEPTANCE_H_
