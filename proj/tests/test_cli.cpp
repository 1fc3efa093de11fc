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

#include <sstream>

#include "golden.hpp"
#include "opalg/cli.hpp"

using namespace opalg;

namespace {
  struct Outcome {
    int code;
    std::string out;
    std::string err;
  };

  Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
  }

  std::size_t offset_of(std::string_view text, std::size_t n) {
    try {
      parse_sn(text, n);
    } catch (SyntaxError const& e) {
      return e.offset();
    }
    return std::string::npos;
  }
}  // namespace

TEST_CASE("expression trees", "[cli]") {
  CHECK(describe(parse_expr("y x", sn_generators(1))) == "product(y, x)");
  CHECK(describe(parse_expr("(H-2)*d + E[0,0]", i1_generators())) ==
        "sum(product(sum(H, -2), d), E[0,0])");
  CHECK(parse_sn("xy", 1) == parse_sn("x*y", 1));
  CHECK(parse_sn("-y x", 1) == SnElement(1, Scalar(-1)));
  CHECK(parse_sn("(x + y)^0", 1) == SnElement(1, Scalar(1)));
}

TEST_CASE("syntax errors carry offsets and kinds", "[cli]") {
  CHECK(offset_of("x + * y", 1) == 4);
  CHECK(offset_of("x + (y", 1) == 6);
  CHECK(offset_of("E[0]", 1) != std::string::npos);
  try {
    parse_sn("x + z", 1);
    FAIL("no error");
  } catch (SyntaxError const& e) {
    CHECK(e.kind() == ErrorKind::UnknownGenerator);
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(parse_sn("x^100000", 1), SyntaxError);
  CHECK_THROWS_AS(parse_i1(std::string(400, '(')), SyntaxError);
  CHECK_THROWS_AS(parse_a1("1/0"), Error);
}

TEST_CASE("rendered text parses back to the same element", "[cli]") {
  Rng rng(71);
  for (int k = 0; k < 40; ++k) {
    SnElement s = random_sn(rng, 1, 4, 5, 4, 2, 3);
    CHECK(parse_sn(s.to_string(), 1) == s);
    SnElement t = random_sn(rng, 2, 3, 5, 3, 1, 2);
    CHECK(parse_sn(t.to_string(), 2) == t);
    I1Element a = random_i1(rng, 3, 2, 5, 3);
    CHECK(parse_i1(a.to_string()) == a);
    A1Element b = random_a1(rng, 3, 2, 5, 3);
    CHECK(a1_equal(parse_a1(to_string(b)), b));
  }
}

TEST_CASE("golden transcripts", "[cli]") {
  auto cases = golden::load(OPALG_GOLDEN_DIR);
  REQUIRE(cases.size() >= 20);
  for (auto const& c : cases) {
    INFO("case " << c.id);
    Outcome r = call(c.args);
    CHECK(r.code == c.exit);
    CHECK(r.out == c.expected);
  }
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(call({"s1", "mul", "y", "x"}).code == 0);
  CHECK(call({"s1"}).code == 2);
  CHECK(call({"s9", "mul", "y", "x"}).code == 2);
  CHECK(call({"s1", "frobnicate", "x"}).code == 2);
  CHECK(call({"s1", "mul", "y", "q"}).code == 2);
  CHECK(call({"a1", "mul", "Hinv[-1]", "d"}).code != 0);
  CHECK(call({"i1", "regdeg", "e[1,1]"}).code == 3);
  CHECK(call({"poly", "roots", "H^2 + 1"}).code == 0);
}

TEST_CASE("errors go to stderr", "[cli]") {
  Outcome r = call({"s1", "mul", "x + * y"});
  CHECK(r.out.empty());
  CHECK(r.err.find("offset 4") != std::string::npos);
}

TEST_CASE("json output is well formed", "[cli]") {
  Outcome r = call({"i1", "reg", "--json", "d"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == true);
  Outcome s = call({"sn:2", "norm", "--json", "y1 x1"});
  REQUIRE(s.code == 0);
  CHECK(nlohmann::json::parse(s.out)["n"] == 2);
}

TEST_CASE("parser fuzzing", "[cli]") {
  golden::FuzzResult f = golden::fuzz(3000, 72);
  INFO(f.firstCrash);
  CHECK(f.crashes == 0);
  CHECK(f.values > 100);
  CHECK(f.syntax > 100);
}

TEST_CASE("seeded runs are reproducible", "[cli]") {
  std::vector<std::string> args = {"i1", "dencheck", "--samples", "8", "--seed", "5"};
  Outcome a = call(args), b = call(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}
