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

#include "opalg/orekit.hpp"
#include "opalg/parse.hpp"

using namespace opalg;

namespace {
  SetDescriptor const powersY{SetTag::PowersOfY, 16};
  SetDescriptor const powersX{SetTag::PowersOfX, 16};

  template <class T>
  void check_witness(SetDescriptor const& S, T const& r, T const& s) {
    using R = RingHandle<T>;
    auto w = ore_witness(S, r, s, 8);
    REQUIRE(w);
    CHECK(w->verified);
    CHECK(R::contains(w->s_prime, S) == Tribool::True);
    CHECK(R::equal(w->s_prime * r, w->r_prime * s));
  }
}  // namespace

TEST_CASE("ring handles", "[orekit]") {
  using RS = RingHandle<SnElement>;
  using RI = RingHandle<I1Element>;
  using RA = RingHandle<A1Element>;
  CHECK(RS::equal(RS::lowering(2) * RS::raising(2), RS::one()));
  CHECK(RI::equal(RI::lowering(2) * RI::raising(2), RI::one()));
  CHECK(RA::equal(RA::lowering(2) * RA::raising(2), RA::one()));
  CHECK(RS::coords(parse_sn("x y", 1)) == RS::coords(parse_sn("1 - E[0,0]", 1)));
  CHECK(RA::coords(parse_a1("E[0,0]")) == RA::coords(parse_a1("1 - x Hinv d")));
  CHECK(RS::slice(2).size() > 4);
}

TEST_CASE("powers of the lowering generator", "[orekit]") {
  auto members = set_members<SnElement>(powersY, 3);
  REQUIRE(members.size() == 4);
  CHECK(members[3] == SnElement::y() * SnElement::y() * SnElement::y());
  CHECK(lowering_exponent(parse_sn("y^3", 1), 5) == std::optional<std::size_t>(3));
  CHECK_FALSE(lowering_exponent(parse_sn("y + 1", 1), 5));
}

TEST_CASE("Ore witnesses in S_1", "[orekit]") {
  check_witness(powersY, parse_sn("x", 1), parse_sn("y^2", 1));
  check_witness(powersY, parse_sn("x^3 + E[1,0]", 1), parse_sn("y", 1));
  check_witness(SetDescriptor{SetTag::LeftRegularYPolys, 16}, parse_sn("x", 1),
                parse_sn("y + 1", 1));
  Rng rng(61);
  for (int k = 0; k < 20; ++k) {
    SnElement r = RingHandle<SnElement>::random(rng);
    check_witness(powersY, r, parse_sn("y^2", 1));
  }
}

TEST_CASE("Ore witnesses in I_1 and A_1", "[orekit]") {
  check_witness(powersY, parse_i1("i H"), parse_i1("d^2"));
  check_witness(powersY, parse_a1("x^2 + Hinv"), parse_a1("d"));
  Rng rng(62);
  for (int k = 0; k < 10; ++k) {
    check_witness(powersY, RingHandle<I1Element>::random(rng), parse_i1("d"));
    check_witness(powersY, RingHandle<A1Element>::random(rng), parse_a1("d"));
  }
}

TEST_CASE("witness requests outside the set are rejected", "[orekit]") {
  CHECK_THROWS_AS(ore_witness(powersY, parse_sn("x", 1), parse_sn("x", 1), 4), Error);
  CHECK_THROWS_AS(ore_witness(powersY, parse_i1("d"), parse_i1("H"), 4), Error);
}

TEST_CASE("annihilating members", "[orekit]") {
  auto t = ass_member(powersY, parse_sn("E[0,0]", 1), 4);
  REQUIRE(t);
  CHECK(*t == SnElement::y());
  CHECK_FALSE(ass_member(powersY, parse_sn("x", 1), 6));
  CHECK_FALSE(ass_member(powersX, parse_sn("E[0,0]", 1), 6));
}

TEST_CASE("denominator check", "[orekit]") {
  Rng rng(63);
  DenominatorReport y = denominator_check<SnElement>(powersY, 10, 8, rng);
  CHECK(y.samples == 10);
  // y^k is onto K[x], so r y^k = 0 forces r = 0.
  CHECK(y.vacuous == 10);
  DenominatorReport x = denominator_check<SnElement>(powersX, 5, 8, rng);
  CHECK(x.unresolved > 0);
}

TEST_CASE("localization pair check", "[orekit]") {
  Rng rng(64);
  PairReport p = localization_pair_check<SnElement>(
      SetDescriptor{SetTag::SPlusIdeal, 16}, powersY, 10, 8, rng);
  CHECK(p.samples == 10);
  CHECK(p.covered + p.uncovered + p.skipped == 10);
}
