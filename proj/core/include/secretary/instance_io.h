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
// JSON (de)serialization of simulation instances. Weights and matrix
// entries are exact: JSON integers and strings like "7", "13/4" or "3.25"
// are accepted, floating-point JSON numbers are rejected.

#ifndef SECRETARY_INSTANCE_IO_H_
#define SECRETARY_INSTANCE_IO_H_

#include <string>

#include "secretary/harness.h"

namespace secretary {

// Parses an instance document:
//   {
//     "name": "...",
//     "weights": [5, "13/4", ...],
//     "matroids": [{"type": "graphic", ...}, ...],
//     "objective": {"type": "coverage", ...}   // optional
//   }
// Matroid types: uniform, partition, laminar, graphic, transversal, linear,
// dual, restriction, direct_sum. Objective types: coverage, cut,
// weighted_rank, modular. Throws std::invalid_argument on malformed input.
SecretaryInstance InstanceFromJson(const std::string& text);

// Inverse of InstanceFromJson; the output parses back to an equal instance.
std::string InstanceToJson(const SecretaryInstance& instance);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& content);

SecretaryInstance LoadInstanceFile(const std::string& path);
void SaveInstanceFile(const std::string& path, const SecretaryInstance& instance);

}  // namespace secretary

#endif  // SECRETARY_INSTANCE_IO_H_
