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

#include "opalg/onesided.hpp"
#include "opalg/parse.hpp"
#include "oracles.hpp"

using namespace opalg;

namespace {
  SnElement s1(char const* text) {
    return parse_sn(text, 1);
  }
  SnElement const x = SnElement::x();
  SnElement const y = SnElement::y();
}  // namespace

TEST_CASE("monomial products rewrite yx to 1", "[onesided]") {
  SnMonomial a{{1}, {2}}, b{{3}, {1}};
  SnMonomial ab = mono_mul(a, b);
  CHECK(ab.a == std::vector<long>{2});
  CHECK(ab.b == std::vector<long>{1});
  CHECK(y * x == SnElement(1, Scalar(1)));
  CHECK((SnElement(1, Scalar(1)) * s1("x^2 y^3")) == s1("x^2 y^3"));
}

TEST_CASE("matrix units follow the Kronecker rule", "[onesided]") {
  CHECK(x * y == s1("x y"));
  CHECK((x * y).terms().size() == 1);
  CHECK(matrix_unit(0, 1) * matrix_unit(1, 2) == matrix_unit(0, 2));
  CHECK(matrix_unit(0, 1) * matrix_unit(2, 2) == SnElement(1));
  CHECK(x * matrix_unit(0, 0) == matrix_unit(1, 0));
  CHECK(matrix_unit(0, 0) == s1("1 - x y"));
  CHECK(matrix_unit(2, 3) == s1("x^2 y^3 - x^3 y^4"));
  CHECK(matrix_unit(2, 0) * x == SnElement(1));
  CHECK(y * matrix_unit(0, 3) == SnElement(1));
}

TEST_CASE("tensor matrix units", "[onesided]") {
  SnElement e = matrix_unit(std::vector<long>{0, 0}, std::vector<long>{0, 0});
  CHECK(e.terms().size() == 4);
  CHECK(e == parse_sn("(1 - x1 y1)(1 - x2 y2)", 2));
  CHECK(component_matrix_unit(2, 1, 0, 0) == parse_sn("1 - x2 y2", 2));
  CHECK(e * e == e);
}

TEST_CASE("eta swaps generators and reverses products", "[onesided]") {
  CHECK(eta(s1("x^2 y")) == s1("x y^2"));
  CHECK(eta(matrix_unit(0, 1)) == matrix_unit(1, 0));
  Rng rng(21);
  for (int k = 0; k < 50; ++k) {
    SnElement a = random_sn(rng, 2, 4, 3, 3, 1, 2);
    SnElement b = random_sn(rng, 2, 4, 3, 3, 1, 2);
    CHECK(eta(eta(a)) == a);
    CHECK(eta(a * b) == eta(b) * eta(a));
  }
}

TEST_CASE("Laurent image kills F", "[onesided]") {
  CHECK(laurent_image(s1("x^2 y^3")) == MultiPoly::monomial({-1}));
  CHECK(laurent_image(matrix_unit(3, 1)).is_zero());
  CHECK(laurent_image(parse_sn("y1 x2", 2)) == MultiPoly::monomial({-1, 1}));
  CHECK(in_F(matrix_unit(1, 2) * Scalar(3) - matrix_unit(0, 0)));
  CHECK_FALSE(in_F(x));
}

TEST_CASE("four-part decomposition of S_1", "[onesided]") {
  S1Decomposition d = decompose_s1(s1("x y"));
  CHECK(d.constant == 1);
  CHECK(d.xpart.is_zero());
  CHECK(d.ypart.is_zero());
  CHECK(d.fpart == FMatrix{{{0, 0}, Scalar(-1)}});
  CHECK(d.to_string() == "1 - E[0,0]");
  S1Decomposition e = decompose_s1(s1("y^3 + E[0,0]"));
  CHECK(e.constant == 0);
  CHECK(e.ypart == UniPoly::monomial(3, 1, Var::y));
  CHECK(e.fpart == FMatrix{{{0, 0}, Scalar(1)}});
  CHECK(decompose_s1(s1("x^2 y^2")).to_string() == "1 - E[0,0] - E[1,1]");
  Rng rng(22);
  for (int k = 0; k < 100; ++k) {
    SnElement a = random_sn(rng, 1, 5, 3, 4, 2, 3);
    CHECK(decompose_s1(a).reassemble() == a);
  }
}

TEST_CASE("module actions on polynomials", "[onesided]") {
  auto px = [](std::size_t k) { return UniPoly::monomial(k, 1, Var::x); };
  auto py = [](std::size_t k) { return UniPoly::monomial(k, 1, Var::y); };
  CHECK(act_left_on_P(y, px(3)) == px(2));
  CHECK(act_left_on_P(y, px(0)).is_zero());
  CHECK(act_left_on_P(matrix_unit(2, 1), px(1)) == px(2));
  CHECK(act_right_on_Pprime(py(2), x) == py(1));
  CHECK(act_right_on_Pprime(py(0), x).is_zero());
  CHECK(act_right_on_Pprime(py(0), matrix_unit(0, 0)) == py(0));
}

TEST_CASE("left action agrees with the generator oracle", "[onesided]") {
  Rng rng(23);
  for (int k = 0; k < 50; ++k) {
    SnElement a = random_sn(rng, 1, 5, 3, 4, 2, 3);
    for (std::size_t m = 0; m <= 8; ++m) {
      UniPoly got = act_left_on_P(a, UniPoly::monomial(m, 1, Var::x));
      oracle::Vec want = oracle::act(a, oracle::Vec{{static_cast<long>(m), Scalar(1)}});
      oracle::Vec have;
      for (std::size_t t = 0; t < got.coeffs().size(); ++t) {
        oracle::put(have, static_cast<long>(t), got.coeffs()[t]);
      }
      CHECK(have == want);
    }
  }
}

TEST_CASE("right action is the relabelled left action of eta", "[onesided]") {
  Rng rng(24);
  for (int k = 0; k < 30; ++k) {
    SnElement a = random_sn(rng, 1, 5, 3, 4, 1, 3);
    for (std::size_t m = 0; m <= 6; ++m) {
      UniPoly right = act_right_on_Pprime(UniPoly::monomial(m, 1, Var::y), a);
      UniPoly left = act_left_on_P(eta(a), UniPoly::monomial(m, 1, Var::x));
      CHECK(right == left.with_var(Var::y));
    }
  }
}

TEST_CASE("text rendering", "[onesided]") {
  CHECK(s1("y x").to_string() == "1");
  CHECK(s1("2 x^2 y - x + 1/2").to_string() == "2*x^2*y - x + 1/2");
  CHECK(parse_sn("x1^2 y2", 2).to_string() == "x1^2*y2");
  CHECK(SnElement(1).to_string() == "0");
}
