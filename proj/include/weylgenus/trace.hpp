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

#include <utility>

#include "weylgenus/compact_pair.hpp"

namespace weylgenus {

/// The discrete-series trace pipeline for an equal-rank pair (g, k) and a
/// dominant integral weight mu of k, with Harish-Chandra parameter mu+rho_c:
///
///   weyl_dim        dim V_mu = prod over compact positive a of
///                   (mu+rho_c, a) / (rho_c, a)
///   formal_degree   d = prod over ALL positive a of (mu+rho_c, a) / (rho, a)
///   trace_factor    the scalar relating the two traces:
///                   (-1)^{d/2} * prod_{noncompact+}(mu+rho_c, a)
///                              * prod_{compact+}(rho_c, a) / prod_{+}(rho, a)
///   tau_G           0 at singular parameters, else (-1)^{d/2} * formal_degree
///
/// and tau_G = trace_factor * weyl_dim holds as an exact rational identity.
/// Everything is a ratio of equal-degree products in the form, so the values
/// are invariant under globally rescaling the bilinear form.
///
/// Formal degrees are reported in the normalization that fixes the relevant
/// volumes to 1; only ratios of root pairings enter, so no volume is ever
/// computed.

/// The assembled witness of the trace factorization at (pair, mu).
struct TraceReport {
  Weight mu;
  Int dim_v;
  bool regular = false;
  Rational formal_degree;
  Rational tau_g;
  Rational factor;
  int sign = 1;
};

namespace detail {

/// Dominance against the compact positive roots only; the noncompact
/// directions of mu are unconstrained.
inline void require_compact_dominant(const CompactPair& pair, const Weight& mu) {
  if (mu.rank() != pair.root_system().rank())
    throw DimensionMismatch("weight rank != system rank");
  for (const Root& a : pair.compact_positive())
    if (pair.root_system().inner_product(mu, a) < 0)
      throw NotDominant("mu pairs negatively with a compact positive root");
}

/// The k-weight condition: integral coroot pairings with compact roots.
inline void require_compact_integral(const CompactPair& pair, const Weight& mu) {
  for (const Root& a : pair.compact_positive())
    if (!is_integer(pair.root_system().coroot_pairing(mu, a)))
      throw NotIntegral("mu has a non-integral pairing with a compact coroot");
}

}  // namespace detail

/// Weyl dimension of the k-representation with highest weight mu. The empty
/// product (abelian k) is 1. Never rounds: a non-integer product signals an
/// internal inconsistency and throws NonIntegerDimension.
inline Int weyl_dim(const CompactPair& pair, const Weight& mu) {
  detail::require_compact_dominant(pair, mu);
  detail::require_compact_integral(pair, mu);
  const RootSystem& rs = pair.root_system();
  const Weight shifted = mu + pair.rho_c();
  Rational dim = 1;
  for (const Root& a : pair.compact_positive())
    dim *= rs.inner_product(shifted, a) / rs.inner_product(pair.rho_c(), a);
  if (!is_integer(dim) || dim <= 0)
    throw NonIntegerDimension("Weyl dimension product is not a positive integer: " +
                              format_rational(dim));
  return numerator(dim);
}

/// True when the parameter mu+rho_c pairs nonzero with every positive root.
inline bool is_regular(const CompactPair& pair, const Weight& mu) {
  const RootSystem& rs = pair.root_system();
  const Weight shifted = mu + pair.rho_c();
  for (const Root& a : rs.positive_roots())
    if (rs.inner_product(shifted, a) == 0) return false;
  return true;
}

/// The literal product over all positive roots. Zero exactly at singular
/// parameters, strictly positive when mu+rho_c is dominant regular; for
/// regular parameters outside the closed dominant chamber the product keeps
/// its sign, so the value can be negative there.
inline Rational formal_degree(const CompactPair& pair, const Weight& mu) {
  detail::require_compact_dominant(pair, mu);
  const RootSystem& rs = pair.root_system();
  const Weight shifted = mu + pair.rho_c();
  Rational value = 1;
  for (const Root& a : rs.positive_roots())
    value *= rs.inner_product(shifted, a) / rs.inner_product(rs.rho(), a);
  return value;
}

/// The signed scalar relating the two traces.
inline Rational trace_factor(const CompactPair& pair, const Weight& mu) {
  detail::require_compact_dominant(pair, mu);
  const RootSystem& rs = pair.root_system();
  const Weight shifted = mu + pair.rho_c();
  Rational numerator_product = 1;
  for (const Root& a : pair.noncompact_positive())
    numerator_product *= rs.inner_product(shifted, a);
  for (const Root& a : pair.compact_positive())
    numerator_product *= rs.inner_product(pair.rho_c(), a);
  Rational denominator_product = 1;
  for (const Root& a : rs.positive_roots())
    denominator_product *= rs.inner_product(rs.rho(), a);
  return pair.sign() * numerator_product / denominator_product;
}

/// Trace of the Dirac-induction class of V_mu: zero when the parameter is
/// singular (no discrete series), otherwise (-1)^{d/2} times the formal
/// degree.
inline Rational tau_g_of_dirac_induction(const CompactPair& pair, const Weight& mu) {
  if (!is_regular(pair, mu)) {
    detail::require_compact_dominant(pair, mu);
    return 0;
  }
  return pair.sign() * formal_degree(pair, mu);
}

/// Computes every quantity and verifies the factorization
/// tau_G = factor * dim_V as an exact rational identity.
/// FactorizationViolation can only indicate a bug.
inline TraceReport check_factorization(const CompactPair& pair, const Weight& mu) {
  TraceReport report;
  report.mu = mu;
  report.dim_v = weyl_dim(pair, mu);
  report.regular = is_regular(pair, mu);
  report.formal_degree = formal_degree(pair, mu);
  report.factor = trace_factor(pair, mu);
  report.sign = pair.sign();
  report.tau_g = report.regular ? Rational(report.sign * report.formal_degree) : Rational(0);
  if (report.tau_g != report.factor * Rational(report.dim_v))
    throw FactorizationViolation("tau_G != factor * dim_V at an admissible weight");
  return report;
}

/// Scales a compact-slice index integral by the trace factor, giving the
/// corresponding invariant index upstairs.
inline Rational l2_index_ratio(const CompactPair& pair, const Weight& mu,
                               const Rational& slice_index) {
  return trace_factor(pair, mu) * slice_index;
}

}  // namespace weylgenus
