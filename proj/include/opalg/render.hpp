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

#ifndef OPALG_RENDER_HPP_
#define OPALG_RENDER_HPP_

#include <string>
#include <vector>

#include "opalg/lfraction.hpp"

namespace opalg {

  //! Builds "a*b - 2*c + ..." from signed products of factors.
  class SumWriter {
   public:
    void add(Scalar coef, std::vector<std::string> const& factors) {
      if (coef == 0) {
        return;
      }
      bool neg = coef < 0;
      Scalar a = neg ? Scalar(-coef) : coef;
      _out += _out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      std::string body;
      std::size_t count = 0;
      for (auto const& f : factors) {
        if (f.empty()) {
          continue;
        }
        body += body.empty() ? f : "*" + f;
        ++count;
      }
      // A lone bracketed sum with unit coefficient needs no brackets.
      if (count == 1 && a == 1 && !neg && body.front() == '(') {
        body = body.substr(1, body.size() - 2);
      }
      if (body.empty()) {
        _out += opalg::to_string(a);
      } else if (a == 1) {
        _out += body;
      } else {
        _out += opalg::to_string(a) + "*" + body;
      }
    }
    std::string str() const {
      return _out.empty() ? "0" : _out;
    }

   private:
    std::string _out;
  };

  inline std::string power_string(std::string const& base, long e) {
    if (e == 0) {
      return "";
    }
    return e == 1 ? base : base + "^" + std::to_string(e);
  }

  //! Splits p into an outer coefficient and factor strings.
  inline void split_poly(UniPoly const& p, Scalar& coef,
                         std::vector<std::string>& factors) {
    if (p.term_count() == 1) {
      coef = p.lead();
      factors.push_back(power_string(var_name(p.var()), p.degree()));
    } else if (p.lead() < 0) {
      coef = -1;
      factors.push_back("(" + (-p).to_string() + ")");
    } else {
      coef = 1;
      factors.push_back("(" + p.to_string() + ")");
    }
  }

  inline void split_lfrac(LFraction const& g, Scalar& coef,
                          std::vector<std::string>& factors) {
    split_poly(g.num(), coef, factors);
    for (auto const& [k, e] : g.den()) {
      std::string base = k == 0 ? "Hinv" : "Hinv[" + std::to_string(k) + "]";
      factors.push_back(power_string(base, e));
    }
  }

}  // namespace opalg

#endif  // OPALG_RENDER_HPP_
