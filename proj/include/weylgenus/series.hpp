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

#include <string>
#include <utility>
#include <vector>

#include "weylgenus/errors.hpp"
#include "weylgenus/rational.hpp"

namespace weylgenus {

/// Univariate power series with exact rational coefficients, truncated at a
/// fixed order N: every operation is computed mod x^{N+1}, exactly. Binary
/// operations require equal orders; truncation is always explicit.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(int order) {
    if (order < 0) throw Error("series order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
  }

  static TruncatedSeries from_coefficients(std::vector<Rational> coeffs) {
    if (coeffs.empty()) throw Error("series needs at least the constant coefficient");
    TruncatedSeries s(static_cast<int>(coeffs.size()) - 1);
    s.coeffs_ = std::move(coeffs);
    return s;
  }

  static TruncatedSeries one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
  }

  static TruncatedSeries monomial(int order, int degree, const Rational& coefficient = 1) {
    TruncatedSeries s(order);
    if (degree < 0) throw Error("monomial degree must be >= 0");
    if (degree <= order) s.coeffs_[degree] = coefficient;
    return s;
  }

  /// e^{scale * x}, coefficients scale^k / k!.
  static TruncatedSeries exponential(const Rational& scale, int order) {
    TruncatedSeries s(order);
    Rational term = 1;
    s.coeffs_[0] = term;
    for (int k = 1; k <= order; ++k) {
      term *= scale;
      term /= k;
      s.coeffs_[k] = term;
    }
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Rational& operator[](int k) const {
    if (k < 0 || k > order()) throw IndexOutOfRange("series coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(k)];
  }

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries sum = a;
    for (std::size_t k = 0; k < sum.coeffs_.size(); ++k) sum.coeffs_[k] += b.coeffs_[k];
    return sum;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries diff = a;
    for (std::size_t k = 0; k < diff.coeffs_.size(); ++k) diff.coeffs_[k] -= b.coeffs_[k];
    return diff;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries product(a.order());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j] == 0) continue;
        product.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return product;
  }

  /// Multiplicative inverse; requires a nonzero constant term.
  TruncatedSeries inverse() const {
    if (coeffs_[0] == 0) throw Error("series inverse requires a nonzero constant term");
    TruncatedSeries inv(order());
    inv.coeffs_[0] = 1 / coeffs_[0];
    for (int n = 1; n <= order(); ++n) {
      Rational acc = 0;
      for (int k = 1; k <= n; ++k) acc += coeffs_[k] * inv.coeffs_[n - k];
      inv.coeffs_[n] = -acc / coeffs_[0];
    }
    return inv;
  }

  TruncatedSeries pow(int exponent) const {
    if (exponent < 0) throw Error("series pow requires a nonnegative exponent");
    TruncatedSeries result = one(order());
    for (int i = 0; i < exponent; ++i) result = result * *this;
    return result;
  }

  /// Composition this(inner); the inner series must have zero constant term.
  TruncatedSeries compose(const TruncatedSeries& inner) const {
    require_same_order(*this, inner);
    if (inner.coeffs_[0] != 0)
      throw Error("series composition requires the inner constant term to vanish");
    TruncatedSeries result(order());
    result.coeffs_[0] = coeffs_[coeffs_.size() - 1];
    for (int k = order() - 1; k >= 0; --k) {
      result = result * inner;
      result.coeffs_[0] += coeffs_[static_cast<std::size_t>(k)];
    }
    return result;
  }

  TruncatedSeries truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
      throw Error("truncation order out of range");
    TruncatedSeries s(new_order);
    for (int k = 0; k <= new_order; ++k) s.coeffs_[k] = coeffs_[static_cast<std::size_t>(k)];
    return s;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  static void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
      throw Error("series orders differ: " + std::to_string(a.order()) + " vs " +
                  std::to_string(b.order()));
  }

  std::vector<Rational> coeffs_;
};

}  // namespace weylgenus
