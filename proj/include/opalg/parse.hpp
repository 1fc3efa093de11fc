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

#ifndef OPALG_PARSE_HPP_
#define OPALG_PARSE_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "opalg/error.hpp"
#include "opalg/intdiff.hpp"
#include "opalg/jacobian.hpp"
#include "opalg/onesided.hpp"

namespace opalg {

  //! Generator token of an algebra; arity counts bracketed indices.
  struct GeneratorSpec {
    std::string name;
    std::size_t minArity = 0;
    std::size_t maxArity = 0;
  };

  //! Parsed expression tree.
  struct Expr {
    enum class Kind { Number, Generator, Sum, Product, Power, Negate };
    Kind kind = Kind::Number;
    Scalar value;
    std::string name;
    std::vector<long> indices;
    std::vector<Expr> kids;
    std::vector<bool> negated;  //!< per summand of a Sum
    unsigned exponent = 0;
    std::size_t offset = 0;
  };

  //! Debug rendering: product(y, x), sum(a, -b), power(x, 3).
  inline std::string describe(Expr const& e) {
    auto list = [&e](char const* head) {
      std::string s = std::string(head) + "(";
      for (std::size_t i = 0; i < e.kids.size(); ++i) {
        if (i > 0) {
          s += ", ";
        }
        if (e.kind == Expr::Kind::Sum && e.negated[i]) {
          s += "-";
        }
        s += describe(e.kids[i]);
      }
      return s + ")";
    };
    switch (e.kind) {
      case Expr::Kind::Number:
        return to_string(e.value);
      case Expr::Kind::Generator: {
        std::string s = e.name;
        if (!e.indices.empty()) {
          s += "[";
          for (std::size_t i = 0; i < e.indices.size(); ++i) {
            s += (i ? "," : "") + std::to_string(e.indices[i]);
          }
          s += "]";
        }
        return s;
      }
      case Expr::Kind::Sum:
        return list("sum");
      case Expr::Kind::Product:
        return list("product");
      case Expr::Kind::Power:
        return "power(" + describe(e.kids[0]) + ", " +
               std::to_string(e.exponent) + ")";
      case Expr::Kind::Negate:
        return "neg(" + describe(e.kids[0]) + ")";
    }
    return "";
  }

  class Parser {
   public:
    static constexpr unsigned kMaxExponent = 512;
    static constexpr std::size_t kMaxDepth = 128;
    static constexpr long kMaxIndex = 4096;

    Parser(std::string_view text, std::vector<GeneratorSpec> gens)
        : _s(text), _gens(std::move(gens)) {
      std::sort(_gens.begin(), _gens.end(),
                [](GeneratorSpec const& a, GeneratorSpec const& b) {
                  return a.name.size() > b.name.size();
                });
    }

    Expr parse() {
      skip();
      if (_p >= _s.size()) {
        fail("empty expression");
      }
      Expr e = expr();
      skip();
      if (_p < _s.size()) {
        fail("unexpected '" + std::string(1, _s[_p]) + "'");
      }
      return e;
    }

   private:
    [[noreturn]] void fail(std::string const& msg) const {
      throw SyntaxError(ErrorKind::SyntaxError, _p, msg);
    }
    void skip() {
      while (_p < _s.size() && std::isspace(static_cast<unsigned char>(_s[_p]))) {
        ++_p;
      }
    }
    bool peek(char c) {
      skip();
      return _p < _s.size() && _s[_p] == c;
    }

    Expr expr() {
      if (++_depth > kMaxDepth) {
        fail("nesting too deep");
      }
      Expr sum;
      sum.kind = Expr::Kind::Sum;
      sum.offset = _p;
      bool neg = false;
      if (peek('-') || peek('+')) {
        neg = _s[_p] == '-';
        ++_p;
      }
      sum.kids.push_back(term());
      sum.negated.push_back(neg);
      while (peek('+') || peek('-')) {
        neg = _s[_p] == '-';
        ++_p;
        sum.kids.push_back(term());
        sum.negated.push_back(neg);
      }
      --_depth;
      if (sum.kids.size() == 1 && !neg) {
        return std::move(sum.kids[0]);
      }
      if (sum.kids.size() == 1) {
        Expr n;
        n.kind = Expr::Kind::Negate;
        n.offset = sum.offset;
        n.kids.push_back(std::move(sum.kids[0]));
        return n;
      }
      return sum;
    }

    bool starts_atom() {
      skip();
      if (_p >= _s.size()) {
        return false;
      }
      unsigned char c = static_cast<unsigned char>(_s[_p]);
      return std::isdigit(c) || std::isalpha(c) || c == '(' || c >= 0x80;
    }

    Expr term() {
      Expr prod;
      prod.kind = Expr::Kind::Product;
      prod.offset = _p;
      prod.kids.push_back(factor());
      while (true) {
        if (peek('*')) {
          ++_p;
          prod.kids.push_back(factor());
        } else if (starts_atom()) {
          prod.kids.push_back(factor());
        } else {
          break;
        }
      }
      if (prod.kids.size() == 1) {
        return std::move(prod.kids[0]);
      }
      return prod;
    }

    Expr factor() {
      Expr a = atom();
      if (peek('^')) {
        ++_p;
        skip();
        std::size_t at = _p;
        if (_p >= _s.size() || !std::isdigit(static_cast<unsigned char>(_s[_p]))) {
          fail("exponent must be a natural number");
        }
        unsigned long v = 0;
        while (_p < _s.size() && std::isdigit(static_cast<unsigned char>(_s[_p]))) {
          v = v * 10 + static_cast<unsigned long>(_s[_p] - '0');
          ++_p;
          if (v > kMaxExponent) {
            _p = at;
            fail("exponent exceeds " + std::to_string(kMaxExponent));
          }
        }
        Expr pw;
        pw.kind = Expr::Kind::Power;
        pw.offset = a.offset;
        pw.exponent = static_cast<unsigned>(v);
        pw.kids.push_back(std::move(a));
        return pw;
      }
      return a;
    }

    std::string digits() {
      std::string d;
      while (_p < _s.size() && std::isdigit(static_cast<unsigned char>(_s[_p]))) {
        d += _s[_p++];
      }
      return d;
    }

    Expr atom() {
      skip();
      if (_p >= _s.size()) {
        fail("unexpected end of input");
      }
      Expr e;
      e.offset = _p;
      char c = _s[_p];
      if (c == '(') {
        ++_p;
        e = expr();
        if (!peek(')')) {
          fail("expected ')'");
        }
        ++_p;
        return e;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = digits();
        if (_p < _s.size() && _s[_p] == '/') {
          ++_p;
          std::size_t at = _p;
          std::string den = digits();
          if (den.empty()) {
            fail("expected denominator");
          }
          if (den.find_first_not_of('0') == std::string::npos) {
            _p = at;
            fail("zero denominator");
          }
          num += "/" + den;
        }
        e.kind = Expr::Kind::Number;
        e.value = parse_scalar(num);
        return e;
      }
      return generator();
    }

    Expr generator() {
      std::size_t start = _p;
      std::size_t end = _p;
      while (end < _s.size() &&
             (std::isalnum(static_cast<unsigned char>(_s[end])) ||
              static_cast<unsigned char>(_s[end]) >= 0x80)) {
        ++end;
      }
      if (end == start) {
        fail("unexpected '" + std::string(1, _s[_p]) + "'");
      }
      std::string_view word = _s.substr(start, end - start);
      GeneratorSpec const* hit = nullptr;
      for (auto const& g : _gens) {
        if (word.substr(0, g.name.size()) == g.name) {
          hit = &g;
          break;
        }
      }
      // A longer identifier is split by longest-prefix matching, so "xy"
      // reads as x*y; a word with no known prefix is rejected whole.
      if (hit == nullptr) {
        throw SyntaxError(ErrorKind::UnknownGenerator, start,
                          "unknown generator '" + std::string(word) + "'");
      }
      _p = start + hit->name.size();
      Expr e;
      e.kind = Expr::Kind::Generator;
      e.name = hit->name;
      e.offset = start;
      if (_p < _s.size() && _s[_p] == '[') {
        ++_p;
        while (true) {
          skip();
          std::size_t at = _p;
          std::string d = digits();
          if (d.empty()) {
            fail("expected index");
          }
          if (d.size() > 6 || std::stol(d) > kMaxIndex) {
            _p = at;
            fail("index exceeds " + std::to_string(kMaxIndex));
          }
          e.indices.push_back(std::stol(d));
          skip();
          if (_p < _s.size() && _s[_p] == ',') {
            ++_p;
            continue;
          }
          if (_p < _s.size() && _s[_p] == ']') {
            ++_p;
            break;
          }
          fail("expected ',' or ']'");
        }
      }
      if (e.indices.size() < hit->minArity || e.indices.size() > hit->maxArity) {
        _p = start;
        fail("generator '" + hit->name + "' takes " +
             std::to_string(hit->minArity) +
             (hit->maxArity != hit->minArity
                  ? " or " + std::to_string(hit->maxArity)
                  : std::string()) +
             " indices");
      }
      return e;
    }

    std::string_view _s;
    std::vector<GeneratorSpec> _gens;
    std::size_t _p = 0;
    std::size_t _depth = 0;
  };

  // ------------------------------------------------------- per algebra

  inline std::vector<GeneratorSpec> sn_generators(std::size_t n) {
    std::vector<GeneratorSpec> g;
    if (n == 1) {
      g.push_back({"x", 0, 0});
      g.push_back({"y", 0, 0});
    } else {
      for (std::size_t i = 1; i <= n; ++i) {
        g.push_back({"x" + std::to_string(i), 0, 0});
        g.push_back({"y" + std::to_string(i), 0, 0});
      }
    }
    g.push_back({"E", 2 * n, 2 * n});
    return g;
  }

  inline std::vector<GeneratorSpec> i1_generators() {
    return {{"d", 0, 0}, {"i", 0, 0}, {"H", 0, 0},     {"x", 0, 0},
            {"e", 2, 2}, {"E", 2, 2}, {"∂", 0, 0}, {"∫", 0, 0}};
  }

  inline std::vector<GeneratorSpec> a1_generators() {
    return {{"x", 0, 0},   {"d", 0, 0},   {"H", 0, 0},   {"Hinv", 0, 1},
            {"int", 0, 0}, {"E", 2, 2},   {"e", 2, 2},   {"rho", 2, 2},
            {"∂", 0, 0}};
  }

  inline std::vector<GeneratorSpec> lfrac_generators() {
    return {{"H", 0, 0}, {"Hinv", 0, 1}};
  }

  inline std::vector<GeneratorSpec> unipoly_generators(Var v) {
    return {{var_name(v), 0, 0}};
  }

  //! Folds an expression tree through Gen(name, indices, offset) -> T.
  template <class T, class Gen>
  T evaluate(Expr const& e, T const& one, Gen const& gen) {
    switch (e.kind) {
      case Expr::Kind::Number:
        return one * e.value;
      case Expr::Kind::Generator:
        return gen(e);
      case Expr::Kind::Sum: {
        T r = one * Scalar(0);
        for (std::size_t i = 0; i < e.kids.size(); ++i) {
          T k = evaluate(e.kids[i], one, gen);
          r = e.negated[i] ? r - k : r + k;
        }
        return r;
      }
      case Expr::Kind::Product: {
        T r = evaluate(e.kids[0], one, gen);
        for (std::size_t i = 1; i < e.kids.size(); ++i) {
          r = r * evaluate(e.kids[i], one, gen);
        }
        return r;
      }
      case Expr::Kind::Power: {
        T base = evaluate(e.kids[0], one, gen);
        T r = one;
        for (unsigned i = 0; i < e.exponent; ++i) {
          r = r * base;
        }
        return r;
      }
      case Expr::Kind::Negate:
        return one * Scalar(0) - evaluate(e.kids[0], one, gen);
    }
    return one;
  }

  inline Expr parse_expr(std::string_view text, std::vector<GeneratorSpec> gens) {
    return Parser(text, std::move(gens)).parse();
  }

  inline SnElement parse_sn(std::string_view text, std::size_t n) {
    Expr e = parse_expr(text, sn_generators(n));
    SnElement one(n, Scalar(1));
    return evaluate(e, one, [n](Expr const& g) {
      if (g.name == "E") {
        std::vector<long> a(g.indices.begin(), g.indices.begin() + n);
        std::vector<long> b(g.indices.begin() + n, g.indices.end());
        return matrix_unit(a, b);
      }
      std::size_t i = n == 1 ? 0 : std::stoul(g.name.substr(1)) - 1;
      return g.name[0] == 'x' ? SnElement::x(n, i) : SnElement::y(n, i);
    });
  }

  inline I1Element parse_i1(std::string_view text) {
    Expr e = parse_expr(text, i1_generators());
    return evaluate(e, I1Element(Scalar(1)), [](Expr const& g) {
      if (g.name == "d" || g.name == "∂") {
        return I1Element::d();
      }
      if (g.name == "i" || g.name == "∫") {
        return I1Element::integral();
      }
      if (g.name == "H") {
        return I1Element::H();
      }
      if (g.name == "x") {
        return I1Element::x();
      }
      return I1Element::e(static_cast<std::size_t>(g.indices[0]),
                          static_cast<std::size_t>(g.indices[1]));
    });
  }

  inline A1Element parse_a1(std::string_view text) {
    Expr e = parse_expr(text, a1_generators());
    return evaluate(e, A1Element(Scalar(1)), [](Expr const& g) {
      if (g.name == "x") {
        return A1Element::x();
      }
      if (g.name == "d" || g.name == "∂") {
        return A1Element::d();
      }
      if (g.name == "H") {
        return A1Element::H();
      }
      if (g.name == "Hinv") {
        return A1Element::Hinv(g.indices.empty() ? 0 : g.indices[0]);
      }
      if (g.name == "int") {
        return A1Element::integral();
      }
      auto i = static_cast<std::size_t>(g.indices[0]);
      auto j = static_cast<std::size_t>(g.indices[1]);
      return g.name == "rho" ? A1Element::rho(i, j) : A1Element::E(i, j);
    });
  }

  inline LFraction parse_lfrac(std::string_view text) {
    Expr e = parse_expr(text, lfrac_generators());
    return evaluate(e, LFraction(Scalar(1)), [](Expr const& g) {
      if (g.name == "H") {
        return LFraction::H();
      }
      return LFraction::inverse_linear(g.indices.empty() ? 0 : g.indices[0]);
    });
  }

  inline UniPoly parse_unipoly(std::string_view text, Var v) {
    Expr e = parse_expr(text, unipoly_generators(v));
    return evaluate(e, UniPoly(Scalar(1), v),
                    [v](Expr const&) { return UniPoly::monomial(1, 1, v); });
  }

}  // namespace opalg

#endif  // OPALG_PARSE_HPP_
