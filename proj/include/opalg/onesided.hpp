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

#ifndef OPALG_ONESIDED_HPP_
#define OPALG_ONESIDED_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "opalg/multipoly.hpp"
#include "opalg/random.hpp"
#include "opalg/unipoly.hpp"

namespace opalg {

  using Index = std::pair<std::size_t, std::size_t>;
  using FMatrix = std::map<Index, Scalar>;

  inline void fm_add(FMatrix& m, Index ij, Scalar const& c) {
    if (c == 0) {
      return;
    }
    auto [it, fresh] = m.emplace(ij, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) {
        m.erase(it);
      }
    }
  }

  //! x^alpha y^beta
  struct SnMonomial {
    std::vector<long> a, b;

    long degree() const {
      return std::accumulate(a.begin(), a.end(), 0L) +
             std::accumulate(b.begin(), b.end(), 0L);
    }
    // Degree-lex: total degree, then alpha, then beta.
    friend bool operator<(SnMonomial const& u, SnMonomial const& v) {
      long du = u.degree(), dv = v.degree();
      if (du != dv) {
        return du < dv;
      }
      if (u.a != v.a) {
        return u.a < v.a;
      }
      return u.b < v.b;
    }
    friend bool operator==(SnMonomial const& u, SnMonomial const& v) {
      return u.a == v.a && u.b == v.b;
    }
  };

  //! Componentwise (a,b)(c,d) = (a+c-m, b+d-m), m = min(b,c).
  inline SnMonomial mono_mul(SnMonomial const& u, SnMonomial const& v) {
    if (u.a.size() != v.a.size()) {
      throw Error(ErrorKind::DimensionMismatch, "monomials of different n");
    }
    SnMonomial r{u.a, u.b};
    for (std::size_t i = 0; i < u.a.size(); ++i) {
      long m = std::min(u.b[i], v.a[i]);
      r.a[i] = u.a[i] + v.a[i] - m;
      r.b[i] = u.b[i] + v.b[i] - m;
    }
    return r;
  }

  class SnElement {
   public:
    using Terms = std::map<SnMonomial, Scalar>;

    explicit SnElement(std::size_t n = 1) : _n(n) {}
    SnElement(std::size_t n, Scalar const& c) : _n(n) {
      add(SnMonomial{std::vector<long>(n, 0), std::vector<long>(n, 0)}, c);
    }

    static SnElement monomial(std::vector<long> a, std::vector<long> b,
                              Scalar const& c = 1) {
      SnElement e(a.size());
      e.add(SnMonomial{std::move(a), std::move(b)}, c);
      return e;
    }
    static SnElement x(std::size_t n = 1, std::size_t i = 0,
                       long power = 1) {
      std::vector<long> a(n, 0), b(n, 0);
      a[i] = power;
      return monomial(a, b);
    }
    static SnElement y(std::size_t n = 1, std::size_t i = 0,
                       long power = 1) {
      std::vector<long> a(n, 0), b(n, 0);
      b[i] = power;
      return monomial(a, b);
    }

    std::size_t n() const {
      return _n;
    }
    Terms const& terms() const {
      return _t;
    }
    bool is_zero() const {
      return _t.empty();
    }

    void add(SnMonomial const& m, Scalar const& c) {
      if (m.a.size() != _n || m.b.size() != _n) {
        throw Error(ErrorKind::DimensionMismatch, "monomial arity");
      }
      if (c == 0) {
        return;
      }
      auto [it, fresh] = _t.emplace(m, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) {
          _t.erase(it);
        }
      }
    }

    SnElement operator-() const {
      SnElement r = *this;
      for (auto& [m, c] : r._t) {
        c = -c;
      }
      return r;
    }
    SnElement& operator+=(SnElement const& o) {
      check(o);
      for (auto const& [m, c] : o._t) {
        add(m, c);
      }
      return *this;
    }
    SnElement& operator-=(SnElement const& o) {
      return *this += -o;
    }
    friend SnElement operator+(SnElement a, SnElement const& b) {
      return a += b;
    }
    friend SnElement operator-(SnElement a, SnElement const& b) {
      return a -= b;
    }
    friend SnElement operator*(SnElement a, Scalar const& s) {
      if (s == 0) {
        a._t.clear();
      }
      for (auto& [m, c] : a._t) {
        c *= s;
      }
      return a;
    }
    friend SnElement operator*(Scalar const& s, SnElement a) {
      return std::move(a) * s;
    }
    friend SnElement operator*(SnElement const& a, SnElement const& b) {
      a.check(b);
      SnElement r(a._n);
      for (auto const& [ma, ca] : a._t) {
        for (auto const& [mb, cb] : b._t) {
          r.add(mono_mul(ma, mb), ca * cb);
        }
      }
      return r;
    }
    SnElement& operator*=(SnElement const& o) {
      return *this = *this * o;
    }
    friend bool operator==(SnElement const& a, SnElement const& b) {
      return a._n == b._n && a._t == b._t;
    }
    friend bool operator!=(SnElement const& a, SnElement const& b) {
      return !(a == b);
    }

    SnElement pow(std::size_t e) const {
      SnElement r(_n, Scalar(1));
      for (std::size_t i = 0; i < e; ++i) {
        r *= *this;
      }
      return r;
    }

    //! Monomial normal form, highest degree-lex first.
    std::string to_string() const {
      if (_t.empty()) {
        return "0";
      }
      std::string out;
      for (auto it = _t.rbegin(); it != _t.rend(); ++it) {
        auto const& [m, c] = *it;
        bool neg = c < 0;
        Scalar a = neg ? Scalar(-c) : c;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string mono = mono_string(m);
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

    std::string mono_string(SnMonomial const& m) const {
      std::string s;
      auto emit = [&](char const* base, std::size_t i, long e) {
        if (e == 0) {
          return;
        }
        if (!s.empty()) {
          s += "*";
        }
        s += base;
        if (_n > 1) {
          s += std::to_string(i + 1);
        }
        if (e > 1) {
          s += "^" + std::to_string(e);
        }
      };
      for (std::size_t i = 0; i < _n; ++i) {
        emit("x", i, m.a[i]);
      }
      for (std::size_t i = 0; i < _n; ++i) {
        emit("y", i, m.b[i]);
      }
      return s;
    }

   private:
    void check(SnElement const& o) const {
      if (o._n != _n) {
        throw Error(ErrorKind::DimensionMismatch,
                    "S_" + std::to_string(_n) + " vs S_" +
                        std::to_string(o._n));
      }
    }

    std::size_t _n;
    Terms _t;
  };

  inline SnElement mul(SnElement const& a, SnElement const& b) {
    return a * b;
  }

  //! E_{alpha beta} = prod_i (x_i^{a_i} y_i^{b_i} - x_i^{a_i+1} y_i^{b_i+1}).
  inline SnElement matrix_unit(std::vector<long> const& alpha,
                               std::vector<long> const& beta) {
    std::size_t n = alpha.size();
    if (beta.size() != n) {
      throw Error(ErrorKind::DimensionMismatch, "matrix unit arity");
    }
    SnElement r(n, Scalar(1));
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<long> a(n, 0), b(n, 0), a1(n, 0), b1(n, 0);
      a[i] = alpha[i];
      b[i] = beta[i];
      a1[i] = alpha[i] + 1;
      b1[i] = beta[i] + 1;
      r *= SnElement::monomial(a, b) - SnElement::monomial(a1, b1);
    }
    return r;
  }

  inline SnElement matrix_unit(std::size_t i, std::size_t j) {
    return matrix_unit(std::vector<long>{static_cast<long>(i)},
                       std::vector<long>{static_cast<long>(j)});
  }

  //! E_{ij} acting in component k only.
  inline SnElement component_matrix_unit(std::size_t n, std::size_t k,
                                         std::size_t i, std::size_t j) {
    std::vector<long> a(n, 0), b(n, 0), a1(n, 0), b1(n, 0);
    a[k] = static_cast<long>(i);
    b[k] = static_cast<long>(j);
    a1[k] = a[k] + 1;
    b1[k] = b[k] + 1;
    return SnElement::monomial(a, b) - SnElement::monomial(a1, b1);
  }

  //! Involution: x^a y^b -> x^b y^a.
  inline SnElement eta(SnElement const& u) {
    SnElement r(u.n());
    for (auto const& [m, c] : u.terms()) {
      r.add(SnMonomial{m.b, m.a}, c);
    }
    return r;
  }

  //! x_i -> t_i, y_i -> t_i^{-1}.
  inline MultiPoly laurent_image(SnElement const& u) {
    MultiPoly r(u.n());
    for (auto const& [m, c] : u.terms()) {
      Exponent e(u.n());
      for (std::size_t i = 0; i < u.n(); ++i) {
        e[i] = m.a[i] - m.b[i];
      }
      r.add_term(e, c);
    }
    return r;
  }

  inline bool in_F(SnElement const& u) {
    return laurent_image(u).is_zero();
  }

  //! constant + xpart + ypart + sum fpart_ij E_ij.
  struct S1Decomposition {
    Scalar constant;
    UniPoly xpart{Var::x};
    UniPoly ypart{Var::y};
    FMatrix fpart;

    SnElement reassemble() const {
      SnElement r(1, constant);
      for (std::size_t k = 1; k < xpart.coeffs().size(); ++k) {
        r += SnElement::x(1, 0, static_cast<long>(k)) * xpart.coeffs()[k];
      }
      for (std::size_t k = 1; k < ypart.coeffs().size(); ++k) {
        r += SnElement::y(1, 0, static_cast<long>(k)) * ypart.coeffs()[k];
      }
      for (auto const& [ij, c] : fpart) {
        r += matrix_unit(ij.first, ij.second) * c;
      }
      return r;
    }

    //! -1 without an F part, else the least N with support in [0,N]^2.
    long size() const {
      long s = -1;
      for (auto const& [ij, c] : fpart) {
        s = std::max<long>(s, static_cast<long>(std::max(ij.first, ij.second)));
      }
      return s;
    }

    std::string to_string() const {
      std::string out;
      auto put = [&out](Scalar const& c, std::string const& mono) {
        if (c == 0) {
          return;
        }
        bool neg = c < 0;
        Scalar a = neg ? Scalar(-c) : c;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (mono.empty()) {
          out += opalg::to_string(a);
        } else if (a == 1) {
          out += mono;
        } else {
          out += opalg::to_string(a) + "*" + mono;
        }
      };
      auto pw = [](char const* v, std::size_t k) {
        return std::string(v) + (k > 1 ? "^" + std::to_string(k) : "");
      };
      for (long k = xpart.degree(); k >= 1; --k) {
        put(xpart.coeff(k), pw("x", k));
      }
      put(constant, "");
      for (long k = 1; k <= ypart.degree(); ++k) {
        put(ypart.coeff(k), pw("y", k));
      }
      for (auto const& [ij, c] : fpart) {
        put(c, "E[" + std::to_string(ij.first) + "," +
                   std::to_string(ij.second) + "]");
      }
      return out.empty() ? "0" : out;
    }
  };

  inline S1Decomposition decompose_s1(SnElement const& u) {
    if (u.n() != 1) {
      throw Error(ErrorKind::DimensionMismatch, "decomposition needs n = 1");
    }
    S1Decomposition d;
    MultiPoly img = laurent_image(u);
    std::vector<Scalar> xs, ys;
    for (auto const& [e, c] : img.terms()) {
      long k = e[0];
      if (k == 0) {
        d.constant = c;
      } else if (k > 0) {
        if (xs.size() <= static_cast<std::size_t>(k)) {
          xs.resize(k + 1);
        }
        xs[k] = c;
      } else {
        if (ys.size() <= static_cast<std::size_t>(-k)) {
          ys.resize(-k + 1);
        }
        ys[-k] = c;
      }
    }
    d.xpart = UniPoly(xs, Var::x);
    d.ypart = UniPoly(ys, Var::y);
    // Residual has zero Laurent image; telescope each diagonal with
    // x^i y^j = E_ij + x^{i+1} y^{j+1}.
    SnElement res = u - d.reassemble();
    std::map<long, std::map<long, Scalar>> diag;  // i-j -> min(i,j) -> c
    for (auto const& [m, c] : res.terms()) {
      diag[m.a[0] - m.b[0]][std::min(m.a[0], m.b[0])] += c;
    }
    for (auto const& [dd, row] : diag) {
      long lo = row.begin()->first, hi = row.rbegin()->first;
      long ia = std::max(dd, 0L), ib = std::max(-dd, 0L);
      Scalar carry = 0;
      for (long m = lo; m < hi; ++m) {
        auto it = row.find(m);
        if (it != row.end()) {
          carry += it->second;
        }
        fm_add(d.fpart,
               {static_cast<std::size_t>(ia + m), static_cast<std::size_t>(ib + m)},
               carry);
      }
      auto last = row.find(hi);
      if (carry + last->second != 0) {
        throw Error(ErrorKind::UnsplittableComponent,
                    "diagonal residual does not telescope");
      }
    }
    return d;
  }

  //! Left action on K[x_1..x_n]: x^a y^b * x^g = x^{g-b+a} if g >= b.
  inline MultiPoly act_left_on_P(SnElement const& u, MultiPoly const& p) {
    std::size_t n = u.n();
    MultiPoly r(n);
    for (auto const& [m, c] : u.terms()) {
      for (auto const& [g, pc] : p.terms()) {
        Exponent e(n);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
          ok = g[i] >= m.b[i];
          e[i] = g[i] - m.b[i] + m.a[i];
        }
        if (ok) {
          r.add_term(e, c * pc);
        }
      }
    }
    return r;
  }

  //! Right action on K[y_1..y_n]: y^g * x^a y^b = y^{g-a+b} if g >= a.
  inline MultiPoly act_right_on_Pprime(MultiPoly const& p,
                                       SnElement const& u) {
    std::size_t n = u.n();
    MultiPoly r(n);
    for (auto const& [g, pc] : p.terms()) {
      for (auto const& [m, c] : u.terms()) {
        Exponent e(n);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
          ok = g[i] >= m.a[i];
          e[i] = g[i] - m.a[i] + m.b[i];
        }
        if (ok) {
          r.add_term(e, c * pc);
        }
      }
    }
    return r;
  }

  inline UniPoly act_left_on_P(SnElement const& u, UniPoly const& p) {
    return act_left_on_P(u, MultiPoly::from_unipoly(p)).to_unipoly(Var::x);
  }
  inline UniPoly act_right_on_Pprime(UniPoly const& p, SnElement const& u) {
    return act_right_on_Pprime(MultiPoly::from_unipoly(p), u)
        .to_unipoly(Var::y);
  }

  //! Random element: `terms` monomials of total degree <= deg plus up to
  //! `fterms` matrix units with indices <= fsize (n = 1 only).
  inline SnElement random_sn(Rng& rng, std::size_t n, long deg, long coeff,
                             std::size_t terms, std::size_t fterms = 0,
                             long fsize = 3) {
    SnElement r(n);
    for (std::size_t t = 0; t < terms; ++t) {
      std::vector<long> a(n), b(n);
      long budget = rng.range(0, deg);
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = rng.range(0, budget);
        budget -= a[i];
        b[i] = rng.range(0, budget);
        budget -= b[i];
      }
      r.add(SnMonomial{a, b}, rng.nonzero(coeff));
    }
    for (std::size_t t = 0; t < fterms; ++t) {
      std::vector<long> a(n), b(n);
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = rng.range(0, fsize);
        b[i] = rng.range(0, fsize);
      }
      r += matrix_unit(a, b) * rng.nonzero(coeff);
    }
    return r;
  }

}  // namespace opalg

#endif  // OPALG_ONESIDED_HPP_
