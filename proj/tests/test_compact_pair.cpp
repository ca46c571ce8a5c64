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

#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "weylgenus/compact_pair.hpp"

using namespace weylgenus;

namespace {

const std::vector<std::vector<int>> kA1{{2}};
const std::vector<std::vector<int>> kA2{{2, -1}, {-1, 2}};
const std::vector<std::vector<int>> kC2{{2, -2}, {-1, 2}};
const std::vector<std::vector<int>> kG2{{2, -1}, {-3, 2}};
const std::vector<std::vector<int>> kB3{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};

CompactPair pair(const std::vector<std::vector<int>>& cartan, std::vector<int> marks) {
  return make_compact_pair(build_root_system(CartanMatrix(cartan)), std::move(marks));
}

}  // namespace

TEST_CASE("SL(2,R)/SO(2): A1 with the simple root noncompact") {
  const CompactPair p = pair(kA1, {1});
  CHECK(p.compact_positive().empty());
  CHECK(p.noncompact_positive() == std::vector<Root>{{{1}}});
  CHECK(p.dim_gk() == 2);
  CHECK(p.sign() == -1);
  CHECK(p.rho_c() == Weight{{0}});
  CHECK(p.rho_n() == Weight{{1}});
}

TEST_CASE("SU(2,1)/U(2): A2 with the second simple root noncompact") {
  const CompactPair p = pair(kA2, {2});
  CHECK(p.compact_positive() == std::vector<Root>{{{1, 0}}});
  CHECK(p.noncompact_positive() == std::vector<Root>{{{0, 1}}, {{1, 1}}});
  CHECK(p.dim_gk() == 4);
  CHECK(p.sign() == 1);
  // rho_c = alpha1/2, rho_n = alpha1/2 + alpha2 in root coordinates.
  CHECK(p.rho_c() == Weight{{1, Rational(-1, 2)}});
  CHECK(p.rho_n() == Weight{{0, Rational(3, 2)}});
  CHECK(p.root_system().root_coords(p.rho_c()) ==
        std::vector<Rational>{Rational(1, 2), 0});
  CHECK(p.root_system().root_coords(p.rho_n()) ==
        std::vector<Rational>{Rational(1, 2), 1});
}

TEST_CASE("Sp(4,R)/U(2): C2 with the long simple root noncompact") {
  const CompactPair p = pair(kC2, {2});
  CHECK(p.compact_positive() == std::vector<Root>{{{1, 0}}});
  CHECK(p.noncompact_positive().size() == 3);
  CHECK(p.dim_gk() == 6);
  CHECK(p.sign() == -1);
}

TEST_CASE("degenerate all-compact pairs") {
  for (const auto& cartan : {kA1, kA2, kC2}) {
    const CompactPair p = pair(cartan, {});
    CHECK(p.noncompact_positive().empty());
    CHECK(p.dim_gk() == 0);
    CHECK(p.sign() == 1);
    CHECK(p.rho_c() == p.root_system().rho());
    for (const Rational& c : p.rho_n().coords) CHECK(c == 0);
  }
}

TEST_CASE("grading is additive over all root pairs") {
  for (const auto& cartan : {kA2, kC2, kG2, kB3}) {
    const RootSystem rs = build_root_system(CartanMatrix(cartan));
    for (unsigned mask = 0; mask < (1u << rs.rank()); ++mask) {
      std::vector<int> marks;
      for (int i = 0; i < rs.rank(); ++i)
        if (mask & (1u << i)) marks.push_back(i + 1);
      const CompactPair p = make_compact_pair(rs, marks);
      for (const Root& beta : rs.roots()) {
        for (const Root& gamma : rs.roots()) {
          Root sum;
          for (std::size_t i = 0; i < beta.coords.size(); ++i)
            sum.coords.push_back(beta.coords[i] + gamma.coords[i]);
          if (!rs.contains(sum)) continue;
          CHECK(p.noncompact(sum) == (p.noncompact(beta) != p.noncompact(gamma)));
        }
      }
    }
  }
}

TEST_CASE("rho_c + rho_n = rho and dim is even, for every marking") {
  for (const auto& cartan : {kA2, kC2, kG2, kB3}) {
    const RootSystem rs = build_root_system(CartanMatrix(cartan));
    for (unsigned mask = 0; mask < (1u << rs.rank()); ++mask) {
      std::vector<int> marks;
      for (int i = 0; i < rs.rank(); ++i)
        if (mask & (1u << i)) marks.push_back(i + 1);
      const CompactPair p = make_compact_pair(rs, marks);
      CHECK(p.rho_c() + p.rho_n() == rs.rho());
      CHECK(p.dim_gk() % 2 == 0);
      CHECK(p.compact_positive().size() + p.noncompact_positive().size() ==
            rs.positive_roots().size());
    }
  }
}

TEST_CASE("bad markings") {
  const RootSystem a2 = build_root_system(CartanMatrix(kA2));
  CHECK_THROWS_AS(make_compact_pair(a2, {0}), IndexOutOfRange);
  CHECK_THROWS_AS(make_compact_pair(a2, {3}), IndexOutOfRange);
  CHECK_THROWS_AS(make_compact_pair(a2, {-1}), IndexOutOfRange);
  // Duplicates collapse to a set.
  const CompactPair p = make_compact_pair(a2, {2, 2});
  CHECK(p.noncompact_simple() == std::vector<int>{2});
}
