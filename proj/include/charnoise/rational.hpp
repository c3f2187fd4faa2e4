// Copyright 2026 The charnoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHARNOISE_RATIONAL_HPP_
#define CHARNOISE_RATIONAL_HPP_

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "charnoise/error.hpp"

namespace charnoise {

// Compare Rational only against Rational. Under C++20 rewritten comparisons
// the mixed integer operator== of boost 1.74 recurses forever.
using Rational = boost::rational<std::int64_t>;

// Parses a noise level written either as a fraction ("0.5", ".125", "1") or
// a percentage ("50%", "12.5%"). The decimal is converted exactly.
inline Rational ParseLevel(std::string_view text) {
  std::string_view s = text;
  bool percent = false;
  if (!s.empty() && s.back() == '%') {
    percent = true;
    s.remove_suffix(1);
  }
  if (s.empty()) throw ConfigError("empty noise level");

  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  bool seen_point = false;
  int digits = 0;
  for (char c : s) {
    if (c == '.') {
      if (seen_point) throw ConfigError("malformed noise level '" + std::string(text) + "'");
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') {
      throw ConfigError("malformed noise level '" + std::string(text) + "'");
    }
    if (++digits > 15) throw ConfigError("noise level has too many digits");
    numerator = numerator * 10 + (c - '0');
    if (seen_point) denominator *= 10;
  }
  if (digits == 0) throw ConfigError("malformed noise level '" + std::string(text) + "'");
  if (percent) denominator *= 100;

  Rational level(numerator, denominator);
  if (level > Rational(1)) {
    throw ConfigError("noise level must be within [0, 1] (or 0%-100%), got '" +
                      std::string(text) + "'");
  }
  return level;
}

// Rounds a non-negative rational to the nearest integer, halves up.
inline std::int64_t RoundHalfUp(const Rational& r) {
  return (2 * r.numerator() + r.denominator()) / (2 * r.denominator());
}

// Fixed-point rendering with one decimal, halves rounded up.
inline std::string FormatOneDecimal(const Rational& r) {
  const std::int64_t tenths = RoundHalfUp(r * 10);
  return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

inline std::string FormatExact(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double ToDouble(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace charnoise

#endif  // CHARNOISE_RATIONAL_HPP_
