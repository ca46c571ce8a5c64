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

#include "weylgenus/nilpotent_poly.hpp"
#include "weylgenus/series.hpp"

namespace weylgenus {

/// Multiplicative genera as exact coefficient extractions.
///
/// A genus is described by its per-Chern-root characteristic series Q(x);
/// on CP^n the tangent bundle contributes the root x with multiplicity n+1,
/// so the genus is the x^n coefficient of Q(x)^{n+1}, optionally multiplied
/// by a determinant-line twist e^{kx/2}. Products of projective spaces are
/// evaluated in the nilpotent cohomology ring. Everything is exact; results
/// that must be integers are checked, never rounded.

/// (x/2)/sinh(x/2) = 1 - x^2/24 + 7x^4/5760 - ...; all odd coefficients zero.
inline TruncatedSeries series_ahat_half(int order) {
  // sinh(x/2)/(x/2) = sum_k x^{2k} / (4^k (2k+1)!)
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  Int denominator = 1;  // 4^k (2k+1)!
  for (int k = 0; 2 * k <= order; ++k) {
    if (k > 0) denominator *= Int(4) * (2 * k) * (2 * k + 1);
    c[static_cast<std::size_t>(2 * k)] = Rational(1, denominator);
  }
  return TruncatedSeries::from_coefficients(std::move(c)).inverse();
}

/// x/tanh(x) = 1 + x^2/3 - x^4/45 + ...; all odd coefficients zero.
inline TruncatedSeries series_l(int order) {
  std::vector<Rational> sinh_over_x(static_cast<std::size_t>(order) + 1, Rational(0));
  std::vector<Rational> cosh(static_cast<std::size_t>(order) + 1, Rational(0));
  Int odd_factorial = 1;   // (2k+1)!
  Int even_factorial = 1;  // (2k)!
  for (int k = 0; 2 * k <= order; ++k) {
    if (k > 0) {
      odd_factorial *= Int(2 * k) * (2 * k + 1);
      even_factorial *= Int(2 * k - 1) * (2 * k);
    }
    sinh_over_x[static_cast<std::size_t>(2 * k)] = Rational(1, odd_factorial);
    cosh[static_cast<std::size_t>(2 * k)] = Rational(1, even_factorial);
  }
  return TruncatedSeries::from_coefficients(std::move(cosh)) *
         TruncatedSeries::from_coefficients(std::move(sinh_over_x)).inverse();
}

/// x/(1 - e^{-x}) = 1 + x/2 + x^2/12 - x^4/720 + ...
inline TruncatedSeries series_todd(int order) {
  // (1 - e^{-x})/x = sum_k (-1)^k x^k / (k+1)!
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  Int factorial = 1;  // (k+1)!
  for (int k = 0; k <= order; ++k) {
    factorial *= k + 1;
    c[static_cast<std::size_t>(k)] = Rational(k % 2 == 0 ? 1 : -1, factorial);
  }
  return TruncatedSeries::from_coefficients(std::move(c)).inverse();
}

/// A named multiplicative genus. The built-in characteristic series have
/// Q(0) = 1; exp_twist(k) is the bare exponential e^{kx/2} used for
/// determinant-line twists (so the whole-exponent convention e^{kx} is
/// exp_twist with parameter 2k).
class GenusSpec {
 public:
  static GenusSpec ahat_half() { return GenusSpec(Kind::ahat_half, "ahat", 0); }
  static GenusSpec l_genus() { return GenusSpec(Kind::l_genus, "l", 0); }
  static GenusSpec todd() { return GenusSpec(Kind::todd, "todd", 0); }
  static GenusSpec exp_twist(Rational k) {
    return GenusSpec(Kind::exp_twist, "exp_twist", std::move(k));
  }

  const std::string& name() const { return name_; }
  const Rational& twist() const { return twist_; }

  TruncatedSeries characteristic_series(int order) const {
    switch (kind_) {
      case Kind::ahat_half:
        return series_ahat_half(order);
      case Kind::l_genus:
        return series_l(order);
      case Kind::todd:
        return series_todd(order);
      case Kind::exp_twist:
        return TruncatedSeries::exponential(twist_ / 2, order);
    }
    throw Error("internal: unknown genus kind");
  }

 private:
  enum class Kind { ahat_half, l_genus, todd, exp_twist };

  GenusSpec(Kind kind, std::string name, Rational twist)
      : kind_(kind), name_(std::move(name)), twist_(std::move(twist)) {}

  Kind kind_;
  std::string name_;
  Rational twist_;
};

/// x^n coefficient of e^{kx/2} ((x/2)/sinh(x/2))^{n+1}: the index of the
/// twisted Dirac operator on CP^n with determinant-twist parameter k. It
/// vanishes identically on the window |k| < n+1 with k = n+1 (mod 2), and
/// k = +-(n+1) recovers the Todd genus up to the sign (-1)^n.
inline Rational twisted_ahat_cpn(int n, long long k) {
  if (n < 1) throw InvalidDimension("CP^n needs n >= 1");
  const TruncatedSeries ahat = series_ahat_half(n);
  const TruncatedSeries total = ahat.pow(n + 1) * TruncatedSeries::exponential(Rational(k, 2), n);
  return total[n];
}

/// x^n coefficient of (x/tanh x)^{n+1}: 1 for n even, 0 for n odd.
inline int signature_cpn(int n) {
  if (n < 1) throw InvalidDimension("CP^n needs n >= 1");
  const Rational value = series_l(n).pow(n + 1)[n];
  return to_integer(value).convert_to<int>();
}

/// Total Pontryagin class (1 + x^2)^{n+1} reduced mod x^{n+1}.
inline NilpotentPoly pontryagin_class_cpn(int n) {
  if (n < 1) throw InvalidDimension("CP^n needs n >= 1");
  TruncatedSeries base = TruncatedSeries::one(n);
  if (n >= 2) base = base + TruncatedSeries::monomial(n, 2);
  return NilpotentPoly::from_series(base.pow(n + 1), {n}, 0);
}

/// L-class (x/tanh x)^{n+1} reduced mod x^{n+1}; its top coefficient is the
/// signature of CP^n.
inline NilpotentPoly l_class_cpn(int n) {
  if (n < 1) throw InvalidDimension("CP^n needs n >= 1");
  return NilpotentPoly::from_series(series_l(n).pow(n + 1), {n}, 0);
}

/// Genus of CP^{n_1} x ... x CP^{n_r} with per-factor twists: the top-class
/// coefficient of prod_i Q(x_i)^{n_i + 1} e^{k_i x_i / 2} in the nilpotent
/// ring. Multiplicative across factors by construction.
inline Rational product_genus(const GenusSpec& spec, const std::vector<int>& dims,
                              const std::vector<Rational>& twists) {
  if (dims.empty()) throw InvalidDimension("dims must be nonempty");
  for (const int n : dims)
    if (n < 1) throw InvalidDimension("CP^n needs n >= 1");
  if (twists.size() != dims.size())
    throw LengthMismatch("twists length " + std::to_string(twists.size()) +
                         " != dims length " + std::to_string(dims.size()));
  NilpotentPoly total = NilpotentPoly::constant(dims, 1);
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const int n = dims[i];
    const TruncatedSeries factor =
        spec.characteristic_series(n).pow(n + 1) * TruncatedSeries::exponential(twists[i] / 2, n);
    total = total * NilpotentPoly::from_series(factor, dims, static_cast<int>(i));
  }
  return total.top_coefficient();
}

}  // namespace weylgenus
