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

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weylgenus/errors.hpp"
#include "weylgenus/rational.hpp"

namespace weylgenus {

/// Finite root systems built from Cartan matrices, with an exact invariant
/// bilinear form.
///
/// Conventions, used consistently everywhere:
///   * Cartan entries are a_ij = 2(a_i, a_j)/(a_i, a_i), so the pairing of a
///     vector b (in simple-root coordinates) with the coroot of a_i is
///     <b, a_i^> = sum_j a_ij b_j.
///   * Roots are stored in simple-root coordinates (integers), weights in
///     fundamental-weight coordinates (rationals). Conversion goes through
///     the exact inverse Cartan matrix, never through floats.
///   * The form is B = D A with D diagonal positive rational, normalized so
///     that short roots of every irreducible component have (a, a) = 2.
///   * Simple roots are numbered 1..rank, as on Dynkin diagrams.

/// Integer Cartan matrix of finite type. Construction validates the defining
/// constraints (diagonal 2, nonpositive off-diagonal with symmetric zeros,
/// a_ij*a_ji <= 3) and positivity of all leading principal minors, so a
/// constructed matrix always generates a finite root system.
class CartanMatrix {
 public:
  explicit CartanMatrix(std::vector<std::vector<int>> entries)
      : entries_(std::move(entries)) {
    const std::size_t r = entries_.size();
    if (r == 0) throw InvalidCartanMatrix("Cartan matrix must be nonempty");
    for (const auto& row : entries_)
      if (row.size() != r) throw InvalidCartanMatrix("Cartan matrix must be square");
    for (std::size_t i = 0; i < r; ++i) {
      if (entries_[i][i] != 2)
        throw InvalidCartanMatrix("diagonal entries must all equal 2");
      for (std::size_t j = 0; j < r; ++j) {
        if (i == j) continue;
        if (entries_[i][j] > 0)
          throw InvalidCartanMatrix("off-diagonal entries must be <= 0");
        if ((entries_[i][j] == 0) != (entries_[j][i] == 0))
          throw InvalidCartanMatrix("a_ij = 0 must hold exactly when a_ji = 0");
        if (entries_[i][j] * entries_[j][i] > 3)
          throw InvalidCartanMatrix("a_ij * a_ji must lie in {0,1,2,3}");
      }
    }
    for (std::size_t k = 1; k <= r; ++k)
      if (leading_minor(k) <= 0)
        throw NotFiniteType("leading principal minor " + std::to_string(k) +
                            " is not positive; matrix is not of finite type");
  }

  int rank() const { return static_cast<int>(entries_.size()); }
  /// 0-based entry access.
  int at(int i, int j) const { return entries_[i][j]; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  Rational leading_minor(std::size_t k) const {
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i][j] = entries_[i][j];
    Rational det = 1;
    for (std::size_t col = 0; col < k; ++col) {
      std::size_t pivot = col;
      while (pivot < k && m[pivot][col] == 0) ++pivot;
      if (pivot == k) return 0;
      if (pivot != col) {
        std::swap(m[pivot], m[col]);
        det = -det;
      }
      det *= m[col][col];
      for (std::size_t row = col + 1; row < k; ++row) {
        if (m[row][col] == 0) continue;
        const Rational f = m[row][col] / m[col][col];
        for (std::size_t j = col; j < k; ++j) m[row][j] -= f * m[col][j];
      }
    }
    return det;
  }

  std::vector<std::vector<int>> entries_;
};

/// A root in simple-root coordinates. Roots of a finite system never mix
/// signs: coordinates are all >= 0 (a positive root) or all <= 0.
struct Root {
  std::vector<int> coords;

  bool positive() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
  }
  Root operator-() const {
    Root neg = *this;
    for (int& c : neg.coords) c = -c;
    return neg;
  }
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// A weight in fundamental-weight coordinates.
struct Weight {
  std::vector<Rational> coords;

  int rank() const { return static_cast<int>(coords.size()); }

  Weight operator+(const Weight& other) const {
    if (coords.size() != other.coords.size())
      throw DimensionMismatch("weight ranks differ");
    Weight sum = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) sum.coords[i] += other.coords[i];
    return sum;
  }
  Weight operator-(const Weight& other) const {
    if (coords.size() != other.coords.size())
      throw DimensionMismatch("weight ranks differ");
    Weight diff = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) diff.coords[i] -= other.coords[i];
    return diff;
  }
  friend bool operator==(const Weight&, const Weight&) = default;
};

class RootSystem;
RootSystem build_root_system(const CartanMatrix& cartan);

/// The full finite root system of a Cartan matrix: reflection closure of the
/// simple roots, the symmetrized form, and exact conversions between the two
/// coordinate systems. Immutable after construction; all operations are pure.
class RootSystem {
 public:
  int rank() const { return cartan_.rank(); }
  const CartanMatrix& cartan() const { return cartan_; }

  /// All roots, sorted; closed under negation and simple reflections.
  const std::vector<Root>& roots() const { return roots_; }

  /// Exactly half of the roots: those with all coordinates >= 0.
  const std::vector<Root>& positive_roots() const { return positive_; }

  /// The symmetrized Cartan form B = D A in simple-root coordinates.
  const std::vector<std::vector<Rational>>& form() const { return form_; }

  bool contains(const Root& root) const {
    return std::binary_search(roots_.begin(), roots_.end(), root);
  }

  /// Simple-root coordinates of a weight, via the inverse Cartan matrix.
  std::vector<Rational> root_coords(const Weight& w) const {
    require_rank(w);
    std::vector<Rational> b(rank(), Rational(0));
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) b[i] += cartan_inverse_[i][j] * w.coords[j];
    return b;
  }

  /// Fundamental-weight coordinates of a root (always integral).
  Weight fundamental_coords(const Root& root) const {
    require_rank(root);
    Weight w;
    w.coords.assign(rank(), Rational(0));
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) w.coords[i] += cartan_.at(i, j) * root.coords[j];
    return w;
  }

  Rational inner_product(const Weight& a, const Weight& b) const {
    return form_pairing(root_coords(a), root_coords(b));
  }
  Rational inner_product(const Weight& a, const Root& b) const {
    require_rank(b);
    return form_pairing(root_coords(a), b.coords);
  }
  Rational inner_product(const Root& a, const Root& b) const {
    require_rank(a);
    require_rank(b);
    return form_pairing(a.coords, b.coords);
  }

  /// <w, a^> = 2 (w, a) / (a, a). Invariant under rescaling the form.
  Rational coroot_pairing(const Weight& w, const Root& a) const {
    return 2 * inner_product(w, a) / inner_product(a, a);
  }

  /// Half the sum of the positive roots; its fundamental coordinates are
  /// (1,...,1), and construction verifies the two descriptions agree.
  const Weight& rho() const { return rho_; }

  /// Simple reflection s_i(w) = w - <w, a_i^> a_i, exact and involutive.
  /// simple_index is 1-based.
  Weight reflect(const Weight& w, int simple_index) const {
    require_rank(w);
    if (simple_index < 1 || simple_index > rank())
      throw IndexOutOfRange("simple_index " + std::to_string(simple_index) +
                            " out of range 1.." + std::to_string(rank()));
    const int i = simple_index - 1;
    Weight image = w;
    for (int k = 0; k < rank(); ++k)
      image.coords[k] -= w.coords[i] * cartan_.at(k, i);
    return image;
  }

  /// Order of the group generated by the simple reflections, by enumerating
  /// the orbit of rho (which is regular, so the orbit is the whole group).
  long long weyl_order(long long cap) const {
    if (cap < 1) throw Error("weyl_order: cap must be >= 1");
    std::set<std::vector<Rational>> orbit;
    orbit.insert(rho_.coords);
    std::vector<std::vector<Rational>> frontier{rho_.coords};
    while (!frontier.empty()) {
      std::vector<std::vector<Rational>> next;
      for (const auto& coords : frontier) {
        for (int i = 1; i <= rank(); ++i) {
          auto image = reflect(Weight{coords}, i).coords;
          if (orbit.insert(image).second) {
            if (static_cast<long long>(orbit.size()) > cap)
              throw CapExceeded("Weyl orbit enumeration passed cap " + std::to_string(cap));
            next.push_back(std::move(image));
          }
        }
      }
      frontier = std::move(next);
    }
    return static_cast<long long>(orbit.size());
  }

  /// The same root system with the form globally rescaled. Coroot pairings,
  /// dominance and integrality are unaffected; pairings scale by the factor.
  RootSystem with_form_scaled(const Rational& factor) const {
    if (factor <= 0) throw Error("form scale factor must be positive");
    RootSystem scaled = *this;
    for (auto& row : scaled.form_)
      for (auto& entry : row) entry *= factor;
    return scaled;
  }

 private:
  friend RootSystem build_root_system(const CartanMatrix& cartan);

  explicit RootSystem(CartanMatrix cartan) : cartan_(std::move(cartan)) {}

  template <typename A, typename B>
  Rational form_pairing(const A& a, const B& b) const {
    Rational value = 0;
    for (int i = 0; i < rank(); ++i) {
      if (a[i] == 0) continue;
      Rational row = 0;
      for (int j = 0; j < rank(); ++j) row += form_[i][j] * b[j];
      value += a[i] * row;
    }
    return value;
  }

  void require_rank(const Weight& w) const {
    if (w.rank() != rank()) throw DimensionMismatch("weight rank != system rank");
  }
  void require_rank(const Root& r) const {
    if (static_cast<int>(r.coords.size()) != rank())
      throw DimensionMismatch("root rank != system rank");
  }

  CartanMatrix cartan_;
  std::vector<std::vector<Rational>> form_;
  std::vector<std::vector<Rational>> cartan_inverse_;
  std::vector<Root> roots_;
  std::vector<Root> positive_;
  Weight rho_;
};

namespace detail {

inline std::vector<std::vector<Rational>> invert_matrix(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error("internal: Cartan matrix is singular");
    std::swap(m[pivot], m[col]);
    const Rational pv = m[col][col];
    for (auto& x : m[col]) x /= pv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col];
      for (std::size_t j = 0; j < 2 * n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

}  // namespace detail

/// Generates the full root system by breadth-first reflection closure of the
/// simple roots. The 500-root cap is a safety bound only: finite type has
/// already been certified by the principal-minor check, and the largest
/// simple systems stay well below it.
inline RootSystem build_root_system(const CartanMatrix& cartan) {
  constexpr std::size_t kRootCap = 500;
  const int r = cartan.rank();
  RootSystem rs(cartan);

  // Symmetrizer d_i with d_i a_ij = d_j a_ji, min d = 1 per component.
  std::vector<Rational> d(r, Rational(0));
  for (int start = 0; start < r; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<int> component{start};
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < r; ++j) {
        if (j == i || cartan.at(i, j) == 0 || d[j] != 0) continue;
        d[j] = d[i] * Rational(cartan.at(i, j)) / Rational(cartan.at(j, i));
        component.push_back(j);
        stack.push_back(j);
      }
    }
    Rational lo = d[component.front()];
    for (const int i : component) lo = std::min(lo, d[i]);
    for (const int i : component) d[i] /= lo;
  }
  rs.form_.assign(r, std::vector<Rational>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) rs.form_[i][j] = d[i] * cartan.at(i, j);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < i; ++j)
      if (rs.form_[i][j] != rs.form_[j][i])
        throw Error("internal: symmetrized Cartan form is not symmetric");

  rs.cartan_inverse_ = detail::invert_matrix(cartan.entries());

  // Reflection closure.
  std::set<std::vector<int>> closure;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    closure.insert(e);
    frontier.push_back(e);
    e[i] = -1;
    closure.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& b : frontier) {
      for (int i = 0; i < r; ++i) {
        int pairing = 0;
        for (int j = 0; j < r; ++j) pairing += cartan.at(i, j) * b[j];
        std::vector<int> image = b;
        image[i] -= pairing;
        if (closure.insert(image).second) {
          if (closure.size() > kRootCap)
            throw NotFiniteType("reflection closure exceeded " + std::to_string(kRootCap) +
                                " roots");
          next.push_back(std::move(image));
        }
      }
    }
    frontier = std::move(next);
  }

  for (const auto& coords : closure) {
    Root root{coords};
    const bool pure_sign =
        root.positive() || std::all_of(coords.begin(), coords.end(), [](int c) { return c <= 0; });
    if (!pure_sign) throw Error("internal: generated root mixes signs");
    if (root.positive()) rs.positive_.push_back(root);
    rs.roots_.push_back(std::move(root));
  }
  std::sort(rs.roots_.begin(), rs.roots_.end());
  std::sort(rs.positive_.begin(), rs.positive_.end());
  if (2 * rs.positive_.size() != rs.roots_.size())
    throw Error("internal: positive roots are not half of all roots");

  // rho two ways: half the positive-root sum must come out as (1,...,1).
  std::vector<Rational> half_sum(r, Rational(0));
  for (const Root& root : rs.positive_)
    for (int i = 0; i < r; ++i) half_sum[i] += Rational(root.coords[i], 2);
  rs.rho_.coords.assign(r, Rational(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) rs.rho_.coords[i] += cartan.at(i, j) * half_sum[j];
  for (const Rational& c : rs.rho_.coords)
    if (c != 1) throw Error("internal: rho is not (1,...,1) in fundamental coordinates");

  return rs;
}

}  // namespace weylgenus
