// Copyright 2026 The weylgenus authors.
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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "weylgenus/errors.hpp"

namespace weylgenus {

/// Every quantity in this library is computed over arbitrary-precision
/// rationals; floating point never appears.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// "p/q" with q > 1, plain "p" for integers. Inverse of parse_rational.
inline std::string format_rational(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += '/';
    s += denominator(q).str();
  }
  return s;
}

/// Accepts `-?digits` or `-?digits/digits` with a nonzero denominator.
/// This is the wire format for rationals in job documents and CSV output.
inline Rational parse_rational(std::string_view text) {
  const auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (const char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };

  std::string_view num = text;
  std::string_view den = "1";
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool negative = false;
  if (!num.empty() && num.front() == '-') {
    negative = true;
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  Int n{std::string(num)};
  const Int d{std::string(den)};
  if (d == 0) throw ParseError("malformed rational '" + std::string(text) + "': zero denominator");
  if (negative) n = -n;
  return Rational(n, d);
}

inline Int to_integer(const Rational& q) {
  if (!is_integer(q)) throw Error("not an integer: " + format_rational(q));
  return numerator(q);
}

}  // namespace weylgenus
