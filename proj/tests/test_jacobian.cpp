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

#include "opalg/jacobian.hpp"
#include "opalg/parse.hpp"
#include "oracles.hpp"

using namespace opalg;

namespace {
  A1Element a1(char const* text) {
    return parse_a1(text);
  }
  A1Element const one(Scalar(1));
}  // namespace

TEST_CASE("Weyl relations and H inverse", "[jacobian]") {
  CHECK(a1_equal(a1("d x"), a1("H")));
  CHECK(a1_equal(a1("x d"), a1("H - 1")));
  CHECK(a1_equal(a1("d Hinv"), a1("Hinv[1] d")));
  CHECK(a1_zero_test(a1("x d - (H - 1)")));
  CHECK(a1_equal(a1("int d"), one - A1Element::E(0, 0)));
  CHECK_FALSE(a1_equal(a1("Hinv"), a1("Hinv[1]")));
  CHECK(a1_equal(a1("Hinv H"), one));
  CHECK(oracle::same_action(a1("d Hinv"), a1("Hinv[1] d"), 10));
}

TEST_CASE("matrix units act as elementary operators", "[jacobian]") {
  for (std::size_t i = 0; i <= 3; ++i) {
    for (std::size_t j = 0; j <= 3; ++j) {
      for (long m = 0; m <= 5; ++m) {
        oracle::Vec v = oracle::act(A1Element::E(i, j), oracle::Vec{{m, Scalar(1)}});
        oracle::Vec want;
        if (m == static_cast<long>(j)) {
          want[static_cast<long>(i)] = 1;
        }
        CHECK(v == want);
      }
      for (std::size_t k = 0; k <= 3; ++k) {
        for (std::size_t l = 0; l <= 3; ++l) {
          A1Element want = j == k ? A1Element::E(i, l) : A1Element();
          CHECK(a1_equal(A1Element::E(i, j) * A1Element::E(k, l), want));
        }
      }
    }
  }
}

TEST_CASE("products agree with composition of actions", "[jacobian]") {
  Rng rng(51);
  for (int k = 0; k < 40; ++k) {
    A1Element a = random_a1(rng, 3, 2, 3, 3), b = random_a1(rng, 3, 2, 3, 3);
    for (long m = 0; m <= 6; ++m) {
      oracle::Vec v{{m, Scalar(1)}};
      CHECK(oracle::act(a * b, v) == oracle::act(a, oracle::act(b, v)));
    }
    for (std::size_t m = 0; m <= 6; ++m) {
      UniPoly got = a1_act(a, UniPoly::monomial(m, 1, Var::x));
      oracle::Vec have;
      for (std::size_t t = 0; t < got.coeffs().size(); ++t) {
        oracle::put(have, static_cast<long>(t), got.coeffs()[t]);
      }
      CHECK(have == oracle::act(a, oracle::Vec{{static_cast<long>(m), Scalar(1)}}));
    }
  }
}

TEST_CASE("the zero test is exact against the action", "[jacobian]") {
  Rng rng(52);
  for (int k = 0; k < 60; ++k) {
    A1Element a = random_a1(rng, 3, 2, 3, 3), b = random_a1(rng, 3, 2, 3, 3);
    A1Element u = a * b - b * a;
    CHECK(a1_zero_test(u) == oracle::same_action(u, A1Element(), 30));
    CHECK(a1_equal(from_normal(normal_form(u)), u));
  }
}

TEST_CASE("theta", "[jacobian]") {
  CHECK(a1_equal(theta(a1("x")), a1("d")));
  CHECK(a1_equal(theta(A1Element::E(1, 2)), A1Element::E(2, 1) * Scalar(1, 2)));
  Rng rng(53);
  for (int k = 0; k < 40; ++k) {
    A1Element a = random_a1(rng, 3, 2, 3, 3), b = random_a1(rng, 3, 2, 3, 3);
    CHECK(a1_equal(theta(theta(a)), a));
    CHECK(a1_equal(theta(a * b), theta(b) * theta(a)));
  }
}

TEST_CASE("grade decomposition", "[jacobian]") {
  auto g = grade_decompose(a1("Hinv"));
  REQUIRE(g.size() == 1);
  CHECK(g.begin()->first == 0);
  CHECK(g.begin()->second.l == LFraction::inverse_linear(0));
  CHECK(g.begin()->second.lperp.empty());
  auto r = grade_decompose(a1("x Hinv d"));
  REQUIRE(r.size() == 1);
  CHECK(r.at(0).l.is_zero());
  CHECK(r.at(0).lperp == FMatrix{{{1, 1}, Scalar(1)}});
  auto t = grade_decompose(a1("x^2 Hinv"));
  REQUIRE(t.size() == 1);
  CHECK(t.begin()->first == 2);
}

TEST_CASE("rho elements", "[jacobian]") {
  CHECK(to_string(A1Element::rho(1, 1)) == "x*Hinv^2*d");
  CHECK(a1_equal(A1Element::rho(0, 1), a1("x Hinv d")));
  CHECK(a1_equal(A1Element::rho(2, 0), a1("Hinv^2")));
  for (std::size_t j = 0; j <= 3; ++j) {
    for (std::size_t k = 0; k <= 3; ++k) {
      A1Element want = A1Element::lfrac(LFraction::inverse_linear(0, static_cast<unsigned>(j))) *
                       A1Element::d(k);
      CHECK(a1_equal(A1Element::d(k) * A1Element::rho(j, k), want));
    }
  }
}

TEST_CASE("the shift identity uses tau to the power k", "[jacobian]") {
  // d^k x^i H^{-j} d^i = tau^k(phi) d^k with phi = (H-1)...(H-i) / (H-i)^j.
  for (std::size_t i = 1; i <= 3; ++i) {
    for (std::size_t j = 1; j <= 3; ++j) {
      FMatrix lam{{{i, j}, Scalar(1)}};
      LFraction phi = phi_of(lam);
      A1Element u = A1Element::term(i, LFraction::inverse_linear(0, static_cast<unsigned>(j)), i);
      for (std::size_t k = i; k <= i + 3; ++k) {
        A1Element lhs = A1Element::d(k) * u;
        A1Element rhs = A1Element::term(0, phi.shift_any(static_cast<long>(k)), 0) * A1Element::d(k);
        CHECK(oracle::same_action(lhs, rhs, 12));
        if (k >= 2 && i == 1 && j >= 2) {
          A1Element once = A1Element::term(0, phi.shift_any(1), 0) * A1Element::d(k);
          CHECK_FALSE(oracle::same_action(lhs, once, 12));
        }
      }
    }
  }
}

TEST_CASE("regularity in A_1", "[jacobian]") {
  CHECK(a1_regularity(a1("d")).verdict);
  CHECK_FALSE(a1_regularity(A1Element::E(0, 0)).verdict);
  A1RegularityData h = a1_regularity(a1("(H-2) d"));
  CHECK(h.mu == 2);
  CHECK(h.verdict == !oracle::left_kernel(a1("(H-2) d"), 10));
  Rng rng(54);
  std::size_t regular = 0;
  for (int k = 0; k < 150; ++k) {
    A1Element a = random_a1(rng, 2, 2, 3, 3);
    if (k % 2 == 1) {
      a = A1Element::d(static_cast<std::size_t>(rng.range(1, 2))) * a;
    }
    bool v = a1_regularity(a).verdict;
    regular += v ? 1 : 0;
    CHECK(v == !oracle::left_kernel(a, 20));
    CHECK(a1_right_regularity(a).verdict == !oracle::right_kernel(a, 20));
  }
  CHECK(regular > 20);
  CHECK(regular < 140);
}

TEST_CASE("regularity degree in A_1", "[jacobian]") {
  CHECK(regularity_degree_a1(a1("d")) == 0);
  CHECK(regularity_degree_a1(a1("x")) == 1);
  CHECK(regularity_degree_a1(a1("H - 2")) == 2);
  CHECK_THROWS_AS(regularity_degree_a1(A1Element::E(1, 0)), Error);
}

TEST_CASE("skew Laurent image", "[jacobian]") {
  CHECK(skew_laurent_image(A1Element::E(0, 0)) == SkewLaurent());
  SkewLaurent d = skew_laurent_image(a1("d"));
  REQUIRE(d.coeffs().size() == 1);
  CHECK(d.coeffs().begin()->first == -1);
  CHECK(d.coeffs().begin()->second == LFraction(Scalar(1)));
  Rng rng(55);
  for (int k = 0; k < 60; ++k) {
    A1Element a = random_a1(rng, 3, 2, 3, 3), b = random_a1(rng, 3, 2, 3, 3);
    CHECK(skew_laurent_image(a * b) == skew_laurent_image(a) * skew_laurent_image(b));
  }
}

TEST_CASE("text rendering of A_1", "[jacobian]") {
  CHECK(to_string(a1("1 - x Hinv d")) == "E[0,0]");
  CHECK(to_string(a1("x d")) == "H - 1");
  CHECK(to_string(a1("E[2,1] * 2")) == "2*E[2,1]");
  A1Element u = a1("2*x^2*Hinv^2*Hinv[2]^2 - (2*H^2 - 6*H + 4) + 2*E[2,0]");
  CHECK(a1_equal(parse_a1(to_string(u)), u));
}
