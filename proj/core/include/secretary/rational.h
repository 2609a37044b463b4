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

#ifndef SECRETARY_RATIONAL_H_
#define SECRETARY_RATIONAL_H_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace secretary {

// Exact rational arithmetic. Weights and matrix entries are never stored as
// floating point; independence tests and tie-breaks must be bit-exact.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "42", "-7", "3.25" or "13/4" into an exact rational.
// Throws std::invalid_argument on malformed input.
Rational ParseRational(const std::string& text);

// Renders integers as "p" and non-integers as "p/q".
std::string RationalToString(const Rational& value);

double ToDouble(const Rational& value);

}  // namespace secretary

#endif  // SECRETARY_RATIONAL_H_
