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

#include <catch_amalgamated.hpp>

#include "opalg/intdiff.hpp"
#include "opalg/parse.hpp"
#include "oracles.hpp"

using namespace opalg;

namespace {
  I1Element i1(char const* text) {
    return parse_i1(text);
  }
  UniPoly const H = UniPoly::monomial(1);
  UniPoly xpow(std::size_t k, Scalar const& c = 1) {
    return UniPoly::monomial(k, c, Var::x);
  }
}  // namespace

TEST_CASE("defining relations of I_1", "[intdiff]") {
  CHECK(i1("d i") == I1Element(Scalar(1)));
  CHECK(i1("i d") == I1Element(Scalar(1)) - I1Element::e(0, 0));
  CHECK(i1("i^2 d^2") == i1("1 - e[0,0] - e[1,1]"));
  CHECK(i1("H i - i H") == i1("i"));
  CHECK(i1("H (1 - i d)") == i1("1 - i d"));
  CHECK(i1("e[0,1] e[1,2]") == i1("e[0,2]"));
  CHECK(i1("e[0,1] e[2,2]").is_zero());
}

TEST_CASE("coefficients next to matrix units are evaluated", "[intdiff]") {
  CHECK(i1("(H^2 + 1) e[2,3]") == I1Element::e(2, 3, Scalar(10)));
  CHECK(i1("e[2,3] (H - 1)") == I1Element::e(2, 3, Scalar(3)));
}

TEST_CASE("star involution", "[intdiff]") {
  I1Element p = I1Element::poly(H * H + UniPoly(Scalar(1)));
  CHECK(star(p * I1Element::d(2)) == I1Element::integral(2) * p);
  CHECK(star(I1Element::e(1, 2)) == I1Element::e(2, 1));
  Rng rng(41);
  for (int k = 0; k < 60; ++k) {
    I1Element a = random_i1(rng, 3, 2, 3, 3), b = random_i1(rng, 3, 2, 3, 3);
    CHECK(star(star(a)) == a);
    CHECK(star(a * b) == star(b) * star(a));
  }
}

TEST_CASE("action on K[x]", "[intdiff]") {
  CHECK(act_on_Kx(I1Element::d(), xpow(3)) == xpow(2, 3));
  CHECK(act_on_Kx(I1Element::integral(), xpow(3)) == xpow(4, Scalar(1, 4)));
  CHECK(act_on_Kx(I1Element::e(2, 1), xpow(1)) == xpow(2, Scalar(1, 2)));
  CHECK(act_on_Kx(I1Element::x(), xpow(2)) == xpow(3));
  Rng rng(42);
  for (int k = 0; k < 50; ++k) {
    I1Element a = random_i1(rng, 3, 2, 3, 3);
    for (std::size_t m = 0; m <= 7; ++m) {
      UniPoly got = act_on_Kx(a, xpow(m));
      oracle::Vec have;
      for (std::size_t t = 0; t < got.coeffs().size(); ++t) {
        oracle::put(have, static_cast<long>(t), got.coeffs()[t]);
      }
      CHECK(have == oracle::act(a, oracle::Vec{{static_cast<long>(m), Scalar(1)}}));
    }
  }
}

TEST_CASE("products agree with composition of actions", "[intdiff]") {
  Rng rng(43);
  for (int k = 0; k < 50; ++k) {
    I1Element a = random_i1(rng, 3, 2, 3, 3), b = random_i1(rng, 3, 2, 3, 3);
    for (long m = 0; m <= 6; ++m) {
      oracle::Vec v{{m, Scalar(1)}};
      CHECK(oracle::act(a * b, v) == oracle::act(a, oracle::act(b, v)));
    }
  }
}

TEST_CASE("right action on K[d]", "[intdiff]") {
  auto dpow = [](std::size_t k) { return UniPoly::monomial(k, 1, Var::d); };
  CHECK(act_right_on_Pprime_i1(dpow(2), I1Element::integral()) == dpow(1));
  CHECK(act_right_on_Pprime_i1(dpow(0), I1Element::integral()).is_zero());
  CHECK(act_right_on_Pprime_i1(dpow(3), I1Element(Scalar(1))) == dpow(3));
}

TEST_CASE("regularity data", "[intdiff]") {
  I1RegularityData d = i1_regularity(I1Element::d());
  CHECK(d.verdict);
  CHECK_FALSE(d.inPsi);
  CHECK(d.size == -1);
  CHECK(d.mu == 0);
  CHECK(d.nu == 0);
  I1RegularityData e = i1_regularity(I1Element::e(0, 0));
  CHECK(e.inPsi);
  CHECK_FALSE(e.verdict);
  I1RegularityData h = i1_regularity(i1("(H-2)*d + E[0,0]"));
  CHECK_FALSE(h.inPsi);
  CHECK(h.size == 0);
  CHECK(h.mu == 2);
  CHECK(h.nu == 2);
  CHECK(h.kernel == UniPoly::monomial(1, 1, Var::d));
  CHECK(h.verdict == !oracle::left_kernel(i1("(H-2)*d + E[0,0]"), 10));
  CHECK_FALSE(h.verdict);
}

TEST_CASE("regularity verdicts agree with the truncation oracle", "[intdiff]") {
  Rng rng(44);
  std::size_t regular = 0;
  for (int k = 0; k < 150; ++k) {
    I1Element a = random_i1(rng, 2, 2, 3, 3);
    if (k % 2 == 1) {
      a = I1Element::d(static_cast<std::size_t>(rng.range(1, 2))) * a;
    }
    bool v = i1_regularity(a).verdict;
    regular += v ? 1 : 0;
    CHECK(v == !oracle::left_kernel(a, 20));
    CHECK(i1_right_regularity(a).verdict == !oracle::right_kernel(a, 20));
  }
  CHECK(regular > 20);
  CHECK(regular < 140);
}

TEST_CASE("regularity degree in I_1", "[intdiff]") {
  CHECK(regularity_degree_i1(I1Element::d()) == 0);
  CHECK(regularity_degree_i1(I1Element::integral()) == 1);
  CHECK_THROWS_AS(regularity_degree_i1(I1Element::e(1, 1)), Error);
}

TEST_CASE("scalar subalgebra and xi", "[intdiff]") {
  SnElement xy = SnElement::x() * SnElement::y();
  CHECK(xi_of(xy) == i1("1 - e[0,0]"));
  CHECK(xi_of(SnElement(1, Scalar(1))) == I1Element(Scalar(1)));
  CHECK(is_in_scalar_subalgebra(i1("i^2 d + 3 e[1,0]")));
  CHECK_FALSE(is_in_scalar_subalgebra(i1("H")));
  CHECK_THROWS_AS(xi_preimage(i1("H d")), Error);
  Rng rng(45);
  for (int k = 0; k < 50; ++k) {
    SnElement a = random_sn(rng, 1, 5, 3, 3, 1, 3), b = random_sn(rng, 1, 5, 3, 3, 1, 3);
    CHECK(xi_of(a * b) == xi_of(a) * xi_of(b));
  }
}

TEST_CASE("text rendering of I_1", "[intdiff]") {
  CHECK(i1("(H-2)*d + E[0,0]").to_string() == "(H - 2)*d + e[0,0]");
  CHECK(i1("i i H").to_string() == "i^2*H");
  CHECK(i1("0").to_string() == "0");
}
