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

// Formal degrees and trace factors for SU(2,1)/U(2): the A2 system with the
// second simple root marked noncompact.

#include <cstdio>

#include "weylgenus/trace.hpp"

int main() {
  using namespace weylgenus;

  const RootSystem a2 = build_root_system(CartanMatrix({{2, -1}, {-1, 2}}));
  const CompactPair su21 = make_compact_pair(a2, {2});

  std::printf("dim G/K = %d, sign = %d\n", su21.dim_gk(), su21.sign());
  std::printf("%-6s %-6s %-14s %-8s %-8s %s\n", "mu", "dim_V", "formal_degree", "tau_G",
              "factor", "regular");
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      const Weight mu{{a, b}};
      const TraceReport r = check_factorization(su21, mu);
      std::printf("%d %-4d %-6s %-14s %-8s %-8s %s\n", a, b, r.dim_v.str().c_str(),
                  format_rational(r.formal_degree).c_str(), format_rational(r.tau_g).c_str(),
                  format_rational(r.factor).c_str(), r.regular ? "yes" : "no");
    }
  }
  return 0;
}
