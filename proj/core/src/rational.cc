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

#include "secretary/rational.h"

#include <cctype>
#include <stdexcept>

namespace secretary {
namespace {

bool IsDigits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal: " + text);

  Rational value;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!IsDigits(num) || !IsDigits(den)) {
      throw std::invalid_argument("malformed rational literal: " + text);
    }
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    value = Rational(BigInt(num), d);
  } else if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!IsDigits(whole) || !IsDigits(frac)) {
      throw std::invalid_argument("malformed decimal literal: " + text);
    }
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rational(BigInt(whole) * scale + (frac.empty() ? BigInt(0) : BigInt(frac)), scale);
  } else {
    if (!IsDigits(s)) throw std::invalid_argument("malformed integer literal: " + text);
    value = Rational(BigInt(s));
  }
  return negative ? Rational(-value) : value;
}

std::string RationalToString(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double ToDouble(const Rational& value) { return value.convert_to<double>(); }

}  // namespace secretary
