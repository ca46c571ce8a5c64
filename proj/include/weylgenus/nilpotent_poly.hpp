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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "weylgenus/errors.hpp"
#include "weylgenus/rational.hpp"
#include "weylgenus/series.hpp"

namespace weylgenus {

/// Polynomials in variables x_0..x_{r-1} with x_i^{d_i + 1} = 0, the rational
/// cohomology model of a product of complex projective spaces of complex
/// dimensions d_0..d_{r-1}. Coefficients are stored densely over all
/// surviving monomials; multiplication drops anything past the nilpotency
/// caps. The top class is x_0^{d_0} ... x_{r-1}^{d_{r-1}}.
class NilpotentPoly {
 public:
  explicit NilpotentPoly(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw Error("nilpotent ring needs at least one variable");
    std::size_t size = 1;
    strides_.resize(degrees_.size());
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      if (degrees_[i] < 0) throw Error("nilpotency degree must be >= 0");
      strides_[i] = size;
      size *= static_cast<std::size_t>(degrees_[i]) + 1;
    }
    coeffs_.assign(size, Rational(0));
  }

  static NilpotentPoly constant(std::vector<int> degrees, const Rational& value) {
    NilpotentPoly p(std::move(degrees));
    p.coeffs_[0] = value;
    return p;
  }

  /// Embeds a univariate series as a polynomial in the chosen variable
  /// (0-based); coefficients beyond the variable's nilpotency cap vanish.
  static NilpotentPoly from_series(const TruncatedSeries& series, std::vector<int> degrees,
                                   int variable) {
    NilpotentPoly p(std::move(degrees));
    if (variable < 0 || variable >= static_cast<int>(p.degrees_.size()))
      throw IndexOutOfRange("variable index out of range");
    const int top = std::min(series.order(), p.degrees_[variable]);
    for (int k = 0; k <= top; ++k)
      p.coeffs_[static_cast<std::size_t>(k) * p.strides_[variable]] = series[k];
    return p;
  }

  const std::vector<int>& degrees() const { return degrees_; }

  const Rational& coefficient(const std::vector<int>& exponents) const {
    return coeffs_[index_of(exponents)];
  }

  /// Coefficient of the top class.
  const Rational& top_coefficient() const { return coeffs_.back(); }

  friend NilpotentPoly operator+(const NilpotentPoly& a, const NilpotentPoly& b) {
    require_same_ring(a, b);
    NilpotentPoly sum = a;
    for (std::size_t k = 0; k < sum.coeffs_.size(); ++k) sum.coeffs_[k] += b.coeffs_[k];
    return sum;
  }

  friend NilpotentPoly operator*(const NilpotentPoly& a, const NilpotentPoly& b) {
    require_same_ring(a, b);
    NilpotentPoly product(a.degrees_);
    const std::size_t r = a.degrees_.size();
    std::vector<int> ea(r, 0);
    do {
      const Rational& ca = a.coeffs_[a.index_of(ea)];
      if (ca == 0) continue;
      std::vector<int> eb(r, 0);
      do {
        const Rational& cb = b.coeffs_[b.index_of(eb)];
        if (cb == 0) continue;
        bool survives = true;
        std::size_t index = 0;
        for (std::size_t i = 0; i < r; ++i) {
          const int e = ea[i] + eb[i];
          if (e > a.degrees_[i]) {
            survives = false;
            break;
          }
          index += static_cast<std::size_t>(e) * a.strides_[i];
        }
        if (survives) product.coeffs_[index] += ca * cb;
      } while (b.next_exponent(eb));
    } while (a.next_exponent(ea));
    return product;
  }

  NilpotentPoly pow(int exponent) const {
    if (exponent < 0) throw Error("pow requires a nonnegative exponent");
    NilpotentPoly result = constant(degrees_, 1);
    for (int i = 0; i < exponent; ++i) result = result * *this;
    return result;
  }

  friend bool operator==(const NilpotentPoly&, const NilpotentPoly&) = default;

 private:
  std::size_t index_of(const std::vector<int>& exponents) const {
    if (exponents.size() != degrees_.size())
      throw DimensionMismatch("exponent tuple has wrong arity");
    std::size_t index = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] < 0 || exponents[i] > degrees_[i])
        throw IndexOutOfRange("exponent exceeds nilpotency degree");
      index += static_cast<std::size_t>(exponents[i]) * strides_[i];
    }
    return index;
  }

  bool next_exponent(std::vector<int>& e) const {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < degrees_[i]) {
        ++e[i];
        return true;
      }
      e[i] = 0;
    }
    return false;
  }

  static void require_same_ring(const NilpotentPoly& a, const NilpotentPoly& b) {
    if (a.degrees_ != b.degrees_) throw Error("nilpotency degree profiles differ");
  }

  std::vector<int> degrees_;
  std::vector<std::size_t> strides_;
  std::vector<Rational> coeffs_;
};

}  // namespace weylgenus
