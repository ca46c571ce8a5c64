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
#include <string>
#include <utility>
#include <vector>

#include "weylgenus/root_system.hpp"

namespace weylgenus {

/// An equal-rank pair (g, k) modeled as a Z/2 grading of the roots into
/// compact and noncompact. Noncompactness is declared on simple roots only
/// and extended additively: a root sum(c_i a_i) is noncompact exactly when
/// sum of c_i over the marked simples is odd. Any marking is allowed; the
/// empty marking gives the degenerate all-compact pair.
class CompactPair {
 public:
  const RootSystem& root_system() const { return rs_; }

  /// Marked simple-root indices, 1-based, sorted, duplicates removed.
  const std::vector<int>& noncompact_simple() const { return marks_; }

  /// The Z/2 grading.
  bool noncompact(const Root& root) const {
    if (static_cast<int>(root.coords.size()) != rs_.rank())
      throw DimensionMismatch("root rank != system rank");
    int parity = 0;
    for (const int i : marks_) parity += root.coords[i - 1];
    return parity % 2 != 0;
  }

  const std::vector<Root>& compact_positive() const { return compact_positive_; }
  const std::vector<Root>& noncompact_positive() const { return noncompact_positive_; }

  /// Half-sums over the compact and noncompact positive roots. They satisfy
  /// rho_c + rho_n = rho exactly (verified on construction).
  const Weight& rho_c() const { return rho_c_; }
  const Weight& rho_n() const { return rho_n_; }

  /// dim g/k = number of noncompact roots; always even.
  int dim_gk() const { return 2 * static_cast<int>(noncompact_positive_.size()); }

  /// (-1)^{dim_gk/2}.
  int sign() const { return noncompact_positive_.size() % 2 == 0 ? 1 : -1; }

 private:
  friend CompactPair make_compact_pair(RootSystem rs, std::vector<int> noncompact_simple);

  explicit CompactPair(RootSystem rs) : rs_(std::move(rs)) {}

  RootSystem rs_;
  std::vector<int> marks_;
  std::vector<Root> compact_positive_;
  std::vector<Root> noncompact_positive_;
  Weight rho_c_;
  Weight rho_n_;
};

inline CompactPair make_compact_pair(RootSystem rs, std::vector<int> noncompact_simple) {
  const int r = rs.rank();
  std::sort(noncompact_simple.begin(), noncompact_simple.end());
  noncompact_simple.erase(std::unique(noncompact_simple.begin(), noncompact_simple.end()),
                          noncompact_simple.end());
  for (const int i : noncompact_simple)
    if (i < 1 || i > r)
      throw IndexOutOfRange("noncompact simple index " + std::to_string(i) +
                            " out of range 1.." + std::to_string(r));

  CompactPair pair(std::move(rs));
  pair.marks_ = std::move(noncompact_simple);
  for (const Root& root : pair.rs_.positive_roots()) {
    if (pair.noncompact(root))
      pair.noncompact_positive_.push_back(root);
    else
      pair.compact_positive_.push_back(root);
  }

  const auto half_sum = [&pair, r](const std::vector<Root>& roots) {
    Weight w;
    w.coords.assign(r, Rational(0));
    for (const Root& root : roots) {
      const Weight f = pair.rs_.fundamental_coords(root);
      for (int i = 0; i < r; ++i) w.coords[i] += f.coords[i] / 2;
    }
    return w;
  };
  pair.rho_c_ = half_sum(pair.compact_positive_);
  pair.rho_n_ = half_sum(pair.noncompact_positive_);
  if (pair.rho_c_ + pair.rho_n_ != pair.rs_.rho())
    throw Error("internal: rho_c + rho_n != rho");
  return pair;
}

}  // namespace weylgenus
