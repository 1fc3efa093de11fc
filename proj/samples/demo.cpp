// Copyright 2026 The opalg Authors
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

#include <iostream>

#include "opalg/orekit.hpp"
#include "opalg/parse.hpp"
#include "opalg/s1reg.hpp"

using namespace opalg;

int main() {
  SnElement a = parse_sn("x y + 2 y^2", 1);
  std::cout << "S_1: " << a.to_string() << ", size " << size_s1(a) << "\n";

  I1Element b = parse_i1("(H-2)*d + e[0,0]");
  I1RegularityData r = i1_regularity(b);
  std::cout << "I_1: " << b.to_string() << " left regular: " << (r.verdict ? "yes" : "no")
            << ", regularity degree " << regularity_degree_i1(b) << "\n";

  A1Element c = parse_a1("1 - x Hinv d");
  std::cout << "A_1: " << to_string(c) << ", theta: " << to_string(theta(c)) << "\n";

  SetDescriptor powers{SetTag::PowersOfY, 16};
  auto w = ore_witness(powers, parse_sn("x", 1), parse_sn("y^2", 1), 8);
  if (!w || !w->verified) {
    std::cerr << "no witness\n";
    return 1;
  }
  std::cout << "witness: (" << w->s_prime.to_string() << ") x = (" << w->r_prime.to_string()
            << ") y^2\n";
  return 0;
}
