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

#ifndef OPALG_MULTIPOLY_HPP_
#define OPALG_MULTIPOLY_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "opalg/unipoly.hpp"

namespace opalg {

  using Exponent = std::vector<long>;

  //! Sparse Laurent polynomial in n commuting variables.
  class MultiPoly {
   public:
    MultiPoly() = default;
    explicit MultiPoly(std::size_t n) : _n(n) {}
    MultiPoly(std::size_t n, Scalar const& c) : _n(n) {
      if (c != 0) {
        _t[Exponent(n, 0)] = c;
      }
    }

    static MultiPoly monomial(Exponent e, Scalar const& c = 1) {
      MultiPoly p(e.size());
      if (c != 0) {
        p._t[std::move(e)] = c;
      }
      return p;
    }
    static MultiPoly variable(std::size_t n, std::size_t i) {
      Exponent e(n, 0);
      e[i] = 1;
      return monomial(std::move(e));
    }

    std::size_t nvars() const {
      return _n;
    }
    std::map<Exponent, Scalar> const& terms() const {
      return _t;
    }
    bool is_zero() const {
      return _t.empty();
    }
    Scalar coeff(Exponent const& e) const {
      auto it = _t.find(e);
      return it == _t.end() ? Scalar(0) : it->second;
    }
    void add_term(Exponent const& e, Scalar const& c) {
      check(e.size());
      if (c == 0) {
        return;
      }
      auto [it, fresh] = _t.emplace(e, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) {
          _t.erase(it);
        }
      }
    }

    MultiPoly operator-() const {
      MultiPoly r = *this;
      for (auto& [e, c] : r._t) {
        c = -c;
      }
      return r;
    }
    MultiPoly& operator+=(MultiPoly const& o) {
      check(o._n);
      for (auto const& [e, c] : o._t) {
        add_term(e, c);
      }
      return *this;
    }
    MultiPoly& operator-=(MultiPoly const& o) {
      return *this += -o;
    }
    friend MultiPoly operator+(MultiPoly a, MultiPoly const& b) {
      return a += b;
    }
    friend MultiPoly operator-(MultiPoly a, MultiPoly const& b) {
      return a -= b;
    }
    friend MultiPoly operator*(MultiPoly const& a, MultiPoly const& b) {
      a.check(b._n);
      MultiPoly r(a._n);
      for (auto const& [ea, ca] : a._t) {
        for (auto const& [eb, cb] : b._t) {
          Exponent e(a._n);
          for (std::size_t i = 0; i < a._n; ++i) {
            e[i] = ea[i] + eb[i];
          }
          r.add_term(e, ca * cb);
        }
      }
      return r;
    }
    friend MultiPoly operator*(MultiPoly a, Scalar const& s) {
      if (s == 0) {
        a._t.clear();
      }
      for (auto& [e, c] : a._t) {
        c *= s;
      }
      return a;
    }
    MultiPoly& operator*=(MultiPoly const& o) {
      return *this = *this * o;
    }
    friend bool operator==(MultiPoly const& a, MultiPoly const& b) {
      return a._n == b._n && a._t == b._t;
    }
    friend bool operator!=(MultiPoly const& a, MultiPoly const& b) {
      return !(a == b);
    }

    //! Substitutes H_i -> H_i + c (nonnegative exponents in variable i).
    MultiPoly shift_var(std::size_t i, Scalar const& c) const {
      MultiPoly r(_n);
      for (auto const& [e, coef] : _t) {
        if (e[i] < 0) {
          throw Error(ErrorKind::InvalidArgument,
                      "shift of a negative power");
        }
        long d = e[i];
        // (H + c)^d = sum binom(d, k) c^{d-k} H^k
        mpz_class binom = 1;
        for (long k = d; k >= 0; --k) {
          Exponent f = e;
          f[i] = k;
          r.add_term(f, coef * Scalar(binom) * power(c, d - k));
          binom = binom * k / (d - k + 1);
        }
      }
      return r;
    }

    //! Smallest exponent per variable over the support.
    Exponent min_exponent() const {
      Exponent m(_n, 0);
      bool first = true;
      for (auto const& [e, c] : _t) {
        for (std::size_t i = 0; i < _n; ++i) {
          m[i] = first ? e[i] : std::min(m[i], e[i]);
        }
        first = false;
      }
      return m;
    }
    MultiPoly mul_monomial(Exponent const& s) const {
      MultiPoly r(_n);
      for (auto const& [e, c] : _t) {
        Exponent f = e;
        for (std::size_t i = 0; i < _n; ++i) {
          f[i] += s[i];
        }
        r._t[f] = c;
      }
      return r;
    }

    UniPoly to_unipoly(Var v = Var::y) const {
      if (_n != 1) {
        throw Error(ErrorKind::DimensionMismatch, "not univariate");
      }
      std::vector<Scalar> cs;
      for (auto const& [e, c] : _t) {
        if (e[0] < 0) {
          throw Error(ErrorKind::InvalidArgument, "negative exponent");
        }
        if (cs.size() <= static_cast<std::size_t>(e[0])) {
          cs.resize(e[0] + 1);
        }
        cs[e[0]] = c;
      }
      return UniPoly(std::move(cs), v);
    }
    static MultiPoly from_unipoly(UniPoly const& p) {
      MultiPoly r(1);
      for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        r.add_term({static_cast<long>(k)}, p.coeffs()[k]);
      }
      return r;
    }

    //! Names are indexed by variable; terms printed in decreasing
    //! degree-lex order.
    std::string to_string(std::vector<std::string> const& names) const {
      if (_t.empty()) {
        return "0";
      }
      std::vector<std::pair<Exponent, Scalar>> v(_t.begin(), _t.end());
      std::sort(v.begin(), v.end(), [](auto const& a, auto const& b) {
        long da = 0, db = 0;
        for (auto x : a.first) {
          da += x;
        }
        for (auto x : b.first) {
          db += x;
        }
        if (da != db) {
          return da > db;
        }
        return a.first > b.first;
      });
      std::string out;
      for (auto const& [e, c] : v) {
        bool neg = c < 0;
        Scalar a = neg ? Scalar(-c) : c;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string mono;
        for (std::size_t i = 0; i < _n; ++i) {
          if (e[i] == 0) {
            continue;
          }
          if (!mono.empty()) {
            mono += "*";
          }
          mono += names[i];
          if (e[i] != 1) {
            mono += "^" + (e[i] < 0 ? "(" + std::to_string(e[i]) + ")"
                                    : std::to_string(e[i]));
          }
        }
        if (mono.empty()) {
          out += opalg::to_string(a);
        } else if (a == 1) {
          out += mono;
        } else {
          out += opalg::to_string(a) + "*" + mono;
        }
      }
      return out;
    }

   private:
    void check(std::size_t m) const {
      if (m != _n) {
        throw Error(ErrorKind::DimensionMismatch,
                    "variable counts " + std::to_string(_n) + " and " +
                        std::to_string(m));
      }
    }

    std::size_t _n = 0;
    std::map<Exponent, Scalar> _t;
  };

  inline std::vector<std::string> indexed_names(std::string const& base,
                                                std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(n == 1 ? base : base + std::to_string(i + 1));
    }
    return out;
  }

  //! Per-variable steps for sigma_i(H_i) = H_i + direction * step_i.
  struct ShiftSpec {
    std::vector<Scalar> steps;
    int direction = -1;
  };

  //! prod_i (1 - sigma_i)^{d_i} applied to phi.
  inline MultiPoly finite_difference(MultiPoly const& phi, Exponent const& d,
                                     ShiftSpec const& spec) {
    if (d.size() != phi.nvars() || spec.steps.size() != phi.nvars()) {
      throw Error(ErrorKind::DimensionMismatch, "finite difference arity");
    }
    MultiPoly r = phi;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] < 0) {
        throw Error(ErrorKind::InvalidArgument, "negative difference order");
      }
      if (spec.steps[i] == 0) {
        throw Error(ErrorKind::InvalidArgument, "zero step");
      }
      for (long k = 0; k < d[i]; ++k) {
        r = r - r.shift_var(i, spec.steps[i] * spec.direction);
      }
    }
    return r;
  }

  //! Leading term for the lexicographic order H_1 < ... < H_n: the last
  //! variable is compared first.
  inline std::pair<Scalar, Exponent> lex_leading(MultiPoly const& phi) {
    if (phi.is_zero()) {
      throw Error(ErrorKind::ZeroPolynomial, "leading term of zero");
    }
    auto const* best = &*phi.terms().begin();
    for (auto const& t : phi.terms()) {
      Exponent const& a = t.first;
      Exponent const& b = best->first;
      bool bigger = std::lexicographical_compare(b.rbegin(), b.rend(),
                                                 a.rbegin(), a.rend());
      if (bigger) {
        best = &t;
      }
    }
    return {best->second, best->first};
  }

  //! num / den in K(y_1, ..., y_n). Normal form: both sides have
  //! nonnegative exponents with no common monomial factor, the
  //! denominator's lex-leading coefficient is 1, and for n = 1 the pair is
  //! fully reduced by a polynomial gcd.
  class MultiRational {
   public:
    MultiRational() = default;
    explicit MultiRational(MultiPoly num)
        : _num(std::move(num)), _den(_num.nvars(), Scalar(1)) {
      normalize();
    }
    MultiRational(MultiPoly num, MultiPoly den)
        : _num(std::move(num)), _den(std::move(den)) {
      if (_den.is_zero()) {
        throw Error(ErrorKind::DivisionByZeroImage, "zero denominator");
      }
      normalize();
    }

    MultiPoly const& num() const {
      return _num;
    }
    MultiPoly const& den() const {
      return _den;
    }
    bool is_zero() const {
      return _num.is_zero();
    }
    std::size_t nvars() const {
      return _num.nvars();
    }

    friend MultiRational operator+(MultiRational const& a,
                                   MultiRational const& b) {
      return MultiRational(a._num * b._den + b._num * a._den, a._den * b._den);
    }
    friend MultiRational operator-(MultiRational const& a,
                                   MultiRational const& b) {
      return MultiRational(a._num * b._den - b._num * a._den, a._den * b._den);
    }
    friend MultiRational operator*(MultiRational const& a,
                                   MultiRational const& b) {
      return MultiRational(a._num * b._num, a._den * b._den);
    }
    MultiRational inverse() const {
      if (_num.is_zero()) {
        throw Error(ErrorKind::DivisionByZeroImage, "inverse of zero");
      }
      return MultiRational(_den, _num);
    }
    friend bool operator==(MultiRational const& a, MultiRational const& b) {
      return a._num * b._den == b._num * a._den;
    }
    friend bool operator!=(MultiRational const& a, MultiRational const& b) {
      return !(a == b);
    }

    std::string to_string(std::vector<std::string> const& names) const {
      std::string n = _num.to_string(names);
      if (_den == MultiPoly(_den.nvars(), Scalar(1))) {
        return n;
      }
      auto wrap = [](MultiPoly const& p, std::string s) {
        return p.terms().size() > 1 ? "(" + s + ")" : s;
      };
      return wrap(_num, n) + "/" + wrap(_den, _den.to_string(names));
    }

   private:
    void normalize() {
      std::size_t n = _num.nvars();
      if (_num.is_zero()) {
        _den = MultiPoly(n, Scalar(1));
        return;
      }
      // Clear negative exponents and common monomial factors.
      Exponent mn = _num.min_exponent();
      Exponent md = _den.min_exponent();
      Exponent sn(n), sd(n);
      for (std::size_t i = 0; i < n; ++i) {
        long m = std::min(mn[i], md[i]);
        sn[i] = -m;
        sd[i] = -m;
      }
      _num = _num.mul_monomial(sn);
      _den = _den.mul_monomial(sd);
      if (n == 1) {
        UniPoly a = _num.to_unipoly(), b = _den.to_unipoly();
        UniPoly g = gcd(a, b);
        if (g.degree() > 0) {
          a = a.divmod(g).first;
          b = b.divmod(g).first;
        }
        _num = MultiPoly::from_unipoly(a);
        _den = MultiPoly::from_unipoly(b);
      }
      Scalar lc = lex_leading(_den).first;
      _num = _num * (1 / lc);
      _den = _den * (1 / lc);
    }

    MultiPoly _num, _den;
  };

}  // namespace opalg

#endif  // OPALG_MULTIPOLY_HPP_
