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

// Twisted A-hat numbers of CP^4 for twist parameters around the vanishing
// window |k| < 5, k odd: exact zeros inside, the Todd genus at k = +-5.

#include <iostream>

#include "weylgenus/genera.hpp"

int main() {
  using namespace weylgenus;
  const int n = 4;
  std::cout << "k     integral of e^{kx/2} A-hat(CP^" << n << ")\n";
  for (long long k = -9; k <= 9; k += 2)
    std::cout << k << "\t" << format_rational(twisted_ahat_cpn(n, k)) << "\n";
  return 0;
}
