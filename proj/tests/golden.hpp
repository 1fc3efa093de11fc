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

// Golden command cases and the parser fuzz driver.

#ifndef OPALG_TESTS_GOLDEN_HPP_
#define OPALG_TESTS_GOLDEN_HPP_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "opalg/parse.hpp"
#include "opalg/random.hpp"

namespace golden {

  struct Case {
    std::string id;
    int exit = 0;
    std::vector<std::string> args;
    std::string expected;
  };

  //! Splits a command line on blanks; double quotes group words.
  inline std::vector<std::string> split_args(std::string const& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false, have = false;
    for (char c : line) {
      if (c == '"') {
        quoted = !quoted;
        have = true;
      } else if (c == ' ' && !quoted) {
        if (have) {
          out.push_back(cur);
        }
        cur.clear();
        have = false;
      } else {
        cur += c;
        have = true;
      }
    }
    if (quoted) {
      throw std::runtime_error("unbalanced quote in: " + line);
    }
    if (have) {
      out.push_back(cur);
    }
    return out;
  }

  inline std::string slurp(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  //! cases.txt lines: "<id> <exit> <args...>"; expected stdout in <id>.out.
  inline std::vector<Case> load(std::string const& dir) {
    std::vector<Case> out;
    std::istringstream lines(slurp(dir + "/cases.txt"));
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty() || line[0] == '#') {
        continue;
      }
      auto words = split_args(line);
      if (words.size() < 3) {
        throw std::runtime_error("malformed case: " + line);
      }
      Case c;
      c.id = words[0];
      c.exit = std::stoi(words[1]);
      c.args.assign(words.begin() + 2, words.end());
      c.expected = slurp(dir + "/" + c.id + ".out");
      out.push_back(std::move(c));
    }
    return out;
  }

  struct FuzzResult {
    std::size_t values = 0;
    std::size_t syntax = 0;
    std::size_t crashes = 0;
    std::string firstCrash;
  };

  //! Random token streams over every algebra's alphabet plus junk.
  inline FuzzResult fuzz(std::size_t streams, std::uint64_t seed) {
    static std::vector<std::string> const common = {
        "+", "-", "*", "^", "(", ")", " ", "0", "1", "2", "3", "1/2", "7/3",
        "600", "[", "]", ",", "/", "E[1,2]", "E[0,0]", "#", "E[", "1/0", "^2"};
    static std::vector<std::vector<std::string>> const alpha = {
        {"x", "y", "xy", "z"},
        {"x1", "y1", "x2", "y2", "E[0,1,2,0]", "x3"},
        {"d", "i", "H", "x", "e[0,1]", "∂", "∫", "Hinv"},
        {"x", "d", "H", "Hinv", "Hinv[2]", "int", "rho[2,1]", "∂", "e[1,1]"},
        {"H", "Hinv", "Hinv[1]", "Hinv[3]", "x"}};
    FuzzResult r;
    opalg::Rng rng(seed);
    for (std::size_t n = 0; n < streams; ++n) {
      std::size_t which = n % alpha.size();
      std::string text;
      long len = rng.range(1, 12);
      for (long k = 0; k < len; ++k) {
        bool own = rng.coin();
        auto const& pool = own ? alpha[which] : common;
        text += pool[static_cast<std::size_t>(rng.range(0, static_cast<long>(pool.size()) - 1))];
      }
      try {
        switch (which) {
          case 0: opalg::parse_sn(text, 1); break;
          case 1: opalg::parse_sn(text, 2); break;
          case 2: opalg::parse_i1(text); break;
          case 3: opalg::parse_a1(text); break;
          default: opalg::parse_lfrac(text); break;
        }
        ++r.values;
      } catch (opalg::SyntaxError const&) {
        ++r.syntax;
      } catch (std::exception const& e) {
        if (r.crashes++ == 0) {
          r.firstCrash = text + ": " + e.what();
        }
      }
    }
    return r;
  }

}  // namespace golden

#endif  // OPALG_TESTS_GOLDEN_HPP_
