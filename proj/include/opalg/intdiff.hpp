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

#ifndef OPALG_INTDIFF_HPP_
#define OPALG_INTDIFF_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opalg/onesided.hpp"
#include "opalg/render.hpp"
#include "opalg/roots.hpp"
#include "opalg/truncation.hpp"

namespace opalg {

  //! Normal form sum_i p_i(H) d^i + h(H) + sum_j i^j q_j(H) + sum c_kl e_kl
  //! (d = derivation, i = integration).
  class I1Element {
   public:
    using PartMap = std::map<std::size_t, UniPoly>;

    I1Element() = default;
    I1Element(Scalar const& c) : _h(c) {}

    static I1Element d(std::size_t k = 1) {
      I1Element r;
      r.add_d(k, UniPoly(Scalar(1)));
      return r;
    }
    static I1Element integral(std::size_t k = 1) {
      I1Element r;
      r.add_i(k, UniPoly(Scalar(1)));
      return r;
    }
    static I1Element poly(UniPoly const& p) {
      I1Element r;
      r.add_d(0, p);
      return r;
    }
    static I1Element H() {
      return poly(UniPoly::monomial(1));
    }
    static I1Element e(std::size_t k, std::size_t l, Scalar const& c = 1) {
      I1Element r;
      fm_add(r._f, {k, l}, c);
      return r;
    }
    //! x = i H
    static I1Element x() {
      I1Element r;
      r.add_i(1, UniPoly::monomial(1));
      return r;
    }

    PartMap const& dpart() const {
      return _d;
    }
    UniPoly const& hpart() const {
      return _h;
    }
    PartMap const& intpart() const {
      return _i;
    }
    FMatrix const& fpart() const {
      return _f;
    }
    bool is_zero() const {
      return _d.empty() && _h.is_zero() && _i.empty() && _f.empty();
    }

    //! p(H) d^k; k = 0 adds to the H-part.
    void add_d(std::size_t k, UniPoly const& p) {
      if (k == 0) {
        _h += p;
        return;
      }
      add_to(_d, k, p);
    }
    //! i^k p(H); k = 0 adds to the H-part.
    void add_i(std::size_t k, UniPoly const& p) {
      if (k == 0) {
        _h += p;
        return;
      }
      add_to(_i, k, p);
    }
    void add_f(std::size_t k, std::size_t l, Scalar const& c) {
      fm_add(_f, {k, l}, c);
    }

    I1Element operator-() const {
      return *this * Scalar(-1);
    }
    I1Element& operator+=(I1Element const& o) {
      for (auto const& [k, p] : o._d) {
        add_d(k, p);
      }
      _h += o._h;
      for (auto const& [k, p] : o._i) {
        add_i(k, p);
      }
      for (auto const& [kl, c] : o._f) {
        fm_add(_f, kl, c);
      }
      return *this;
    }
    I1Element& operator-=(I1Element const& o) {
      return *this += -o;
    }
    friend I1Element operator+(I1Element a, I1Element const& b) {
      return a += b;
    }
    friend I1Element operator-(I1Element a, I1Element const& b) {
      return a -= b;
    }
    friend I1Element operator*(I1Element a, Scalar const& s) {
      if (s == 0) {
        return I1Element();
      }
      for (auto& [k, p] : a._d) {
        p *= s;
      }
      a._h *= s;
      for (auto& [k, p] : a._i) {
        p *= s;
      }
      for (auto& [kl, c] : a._f) {
        c *= s;
      }
      return a;
    }
    friend I1Element operator*(I1Element const& a, I1Element const& b);
    I1Element& operator*=(I1Element const& o) {
      return *this = *this * o;
    }
    friend bool operator==(I1Element const& a, I1Element const& b) {
      return a._d == b._d && a._h == b._h && a._i == b._i && a._f == b._f;
    }
    friend bool operator!=(I1Element const& a, I1Element const& b) {
      return !(a == b);
    }

    I1Element pow(std::size_t e) const {
      I1Element r(Scalar(1));
      for (std::size_t i = 0; i < e; ++i) {
        r *= *this;
      }
      return r;
    }

    //! Size of the F-part: -1 when absent.
    long size() const {
      long s = -1;
      for (auto const& [kl, c] : _f) {
        s = std::max<long>(s, static_cast<long>(std::max(kl.first, kl.second)));
      }
      return s;
    }

    std::string to_string() const {
      SumWriter w;
      for (auto it = _d.rbegin(); it != _d.rend(); ++it) {
        Scalar c;
        std::vector<std::string> f;
        split_poly(it->second, c, f);
        f.push_back(power_string("d", static_cast<long>(it->first)));
        w.add(c, f);
      }
      {
        for (long k = _h.degree(); k >= 0; --k) {
          w.add(_h.coeff(k), {power_string("H", k)});
        }
      }
      for (auto const& [j, p] : _i) {
        Scalar c;
        std::vector<std::string> f{power_string("i", static_cast<long>(j))};
        split_poly(p, c, f);
        w.add(c, f);
      }
      for (auto const& [kl, c] : _f) {
        w.add(c, {"e[" + std::to_string(kl.first) + "," +
                  std::to_string(kl.second) + "]"});
      }
      return w.str();
    }

   private:
    static void add_to(PartMap& m, std::size_t k, UniPoly const& p) {
      if (p.is_zero()) {
        return;
      }
      auto it = m.find(k);
      if (it == m.end()) {
        m.emplace(k, p.with_var(Var::H));
        return;
      }
      it->second += p;
      if (it->second.is_zero()) {
        m.erase(it);
      }
    }

    PartMap _d;
    UniPoly _h{Var::H};
    PartMap _i;
    FMatrix _f;
  };

  namespace detail {

    //! One summand of the normal form.
    struct I1Atom {
      enum Kind { D, I, F } kind;
      std::size_t k = 0, l = 0;  // D: d-power k; I: int-power k; F: (k,l)
      UniPoly p{Var::H};
      Scalar c;
    };

    inline std::vector<I1Atom> atoms(I1Element const& a) {
      std::vector<I1Atom> out;
      for (auto const& [k, p] : a.dpart()) {
        out.push_back({I1Atom::D, k, 0, p, 0});
      }
      if (!a.hpart().is_zero()) {
        out.push_back({I1Atom::D, 0, 0, a.hpart(), 0});
      }
      for (auto const& [k, p] : a.intpart()) {
        out.push_back({I1Atom::I, k, 0, p, 0});
      }
      for (auto const& [kl, c] : a.fpart()) {
        out.push_back({I1Atom::F, kl.first, kl.second, UniPoly(), c});
      }
      return out;
    }

    inline Scalar at(UniPoly const& p, long v) {
      return p.eval(Scalar(v));
    }

    inline void atom_mul(I1Atom const& u, I1Atom const& v, I1Element& r) {
      using K = I1Atom::Kind;
      long uk = static_cast<long>(u.k), vk = static_cast<long>(v.k);
      if (u.kind == K::D && v.kind == K::D) {
        r.add_d(u.k + v.k, u.p * v.p.shift(Scalar(uk)));
      } else if (u.kind == K::D && v.kind == K::I) {
        if (uk >= vk) {
          r.add_d(u.k - v.k, u.p * v.p.shift(Scalar(uk - vk)));
        } else {
          r.add_i(v.k - u.k, u.p.shift(Scalar(vk - uk)) * v.p);
        }
      } else if (u.kind == K::I && v.kind == K::I) {
        r.add_i(u.k + v.k, u.p.shift(Scalar(vk)) * v.p);
      } else if (u.kind == K::I && v.kind == K::D) {
        // i^j r(H) d^k with i^m r d^m = r(H-m) - sum_{t<m} r(t+1-m) e_tt.
        UniPoly rr = u.p * v.p;
        long m = std::min(uk, vk);
        UniPoly main = rr.shift(Scalar(-m));
        if (uk > m) {
          r.add_i(u.k - m, main);
        } else {
          r.add_d(v.k - m, main);
        }
        for (long t = 0; t < m; ++t) {
          r.add_f(static_cast<std::size_t>(t + uk - m),
                  static_cast<std::size_t>(t + vk - m), -at(rr, t + 1 - m));
        }
      } else if (u.kind == K::D && v.kind == K::F) {
        if (v.k >= u.k) {
          r.add_f(v.k - u.k, v.l,
                  v.c * at(u.p, static_cast<long>(v.k) - uk + 1));
        }
      } else if (u.kind == K::I && v.kind == K::F) {
        r.add_f(v.k + u.k, v.l, v.c * at(u.p, vk + 1));
      } else if (u.kind == K::F && v.kind == K::D) {
        r.add_f(u.k, u.l + v.k, u.c * at(v.p, static_cast<long>(u.l) + 1));
      } else if (u.kind == K::F && v.kind == K::I) {
        if (u.l >= v.k) {
          r.add_f(u.k, u.l - v.k,
                  u.c * at(v.p, static_cast<long>(u.l) - vk + 1));
        }
      } else {
        if (u.l == v.k) {
          r.add_f(u.k, v.l, u.c * v.c);
        }
      }
    }

  }  // namespace detail

  inline I1Element operator*(I1Element const& a, I1Element const& b) {
    I1Element r;
    auto ua = detail::atoms(a);
    auto vb = detail::atoms(b);
    for (auto const& u : ua) {
      for (auto const& v : vb) {
        detail::atom_mul(u, v, r);
      }
    }
    return r;
  }

  inline I1Element i1_mul(I1Element const& a, I1Element const& b) {
    return a * b;
  }

  //! Involution: d <-> i, H fixed, e_kl -> e_lk.
  inline I1Element star(I1Element const& a) {
    I1Element r;
    for (auto const& [k, p] : a.dpart()) {
      r.add_i(k, p);
    }
    r.add_d(0, a.hpart());
    for (auto const& [k, p] : a.intpart()) {
      r.add_d(k, p);
    }
    for (auto const& [kl, c] : a.fpart()) {
      r.add_f(kl.second, kl.first, c);
    }
    return r;
  }

  //! Left action on K[x]: d differentiates, i integrates from 0,
  //! H x^m = (m+1) x^m, e_kl x^m = delta_lm (l!/k!) x^k.
  inline UniPoly act_on_Kx(I1Element const& a, UniPoly const& p) {
    UniPoly r(Var::x);
    for (std::size_t m = 0; m < p.coeffs().size(); ++m) {
      Scalar pc = p.coeffs()[m];
      if (pc == 0) {
        continue;
      }
      long lm = static_cast<long>(m);
      for (auto const& [k, q] : a.dpart()) {
        if (k <= m) {
          Scalar v = Scalar(falling(m, k)) * q.eval(Scalar(lm - static_cast<long>(k) + 1));
          r += UniPoly::monomial(m - k, pc * v, Var::x);
        }
      }
      r += UniPoly::monomial(m, pc * a.hpart().eval(Scalar(lm + 1)), Var::x);
      for (auto const& [j, q] : a.intpart()) {
        Scalar v = q.eval(Scalar(lm + 1)) * Scalar(factorial(m)) /
                   Scalar(factorial(m + j));
        r += UniPoly::monomial(m + j, pc * v, Var::x);
      }
      for (auto const& [kl, c] : a.fpart()) {
        if (kl.second == m) {
          r += UniPoly::monomial(kl.first,
                                 pc * c * Scalar(factorial(kl.second)) /
                                     Scalar(factorial(kl.first)),
                                 Var::x);
        }
      }
    }
    return r;
  }

  //! Right action on K[d], the transport of the left action of star(a)
  //! along d^s <-> x^s/s!.
  inline UniPoly act_right_on_Pprime_i1(UniPoly const& p, I1Element const& a) {
    UniPoly r(Var::d);
    for (std::size_t s = 0; s < p.coeffs().size(); ++s) {
      Scalar pc = p.coeffs()[s];
      if (pc == 0) {
        continue;
      }
      long ls = static_cast<long>(s);
      for (auto const& [k, q] : a.dpart()) {
        r += UniPoly::monomial(s + k, pc * q.eval(Scalar(ls + 1)), Var::d);
      }
      r += UniPoly::monomial(s, pc * a.hpart().eval(Scalar(ls + 1)), Var::d);
      for (auto const& [j, q] : a.intpart()) {
        if (j <= s) {
          r += UniPoly::monomial(
              s - j, pc * q.eval(Scalar(ls - static_cast<long>(j) + 1)), Var::d);
        }
      }
      for (auto const& [kl, c] : a.fpart()) {
        if (kl.first == s) {
          r += UniPoly::monomial(kl.second, pc * c, Var::d);
        }
      }
    }
    return r;
  }

  struct I1RegularityData {
    bool inPsi = false;
    long size = -1;
    std::size_t degD = 0;
    UniPoly leadingPoly{Var::H};
    std::size_t mu = 0;
    std::size_t nu = 0;
    bool verdict = false;
    std::size_t rank = 0;
    std::size_t domainDim = 0;
    std::optional<UniPoly> kernel;
  };

  inline I1RegularityData i1_regularity(I1Element const& a) {
    I1RegularityData out;
    out.size = a.size();
    out.inPsi = a.dpart().empty() && a.hpart().is_zero();
    auto image = [&a](std::size_t s) {
      return act_right_on_Pprime_i1(UniPoly::monomial(s, 1, Var::d), a);
    };
    if (out.inPsi) {
      // d-degree drops on P'_{<= s+1}: a kernel always exists there.
      auto t = injectivity_test(out.size + 1, Var::d, image);
      out.verdict = false;
      out.rank = t.rank;
      out.domainDim = t.domain_dim;
      out.kernel = t.kernel;
      return out;
    }
    if (!a.dpart().empty()) {
      out.degD = a.dpart().rbegin()->first;
      out.leadingPoly = a.dpart().rbegin()->second;
    } else {
      out.leadingPoly = a.hpart();
    }
    out.mu = mu_of_poly(out.leadingPoly);
    out.nu = static_cast<std::size_t>(
        std::max<long>(out.size, static_cast<long>(out.mu)));
    auto t = injectivity_test(static_cast<long>(out.nu), Var::d, image);
    out.verdict = t.injective;
    out.rank = t.rank;
    out.domainDim = t.domain_dim;
    out.kernel = t.kernel;
    return out;
  }

  inline I1RegularityData i1_right_regularity(I1Element const& a) {
    return i1_regularity(star(a));
  }

  inline bool i1_in_F(I1Element const& a) {
    return a.dpart().empty() && a.hpart().is_zero() && a.intpart().empty();
  }

  //! Least i with d^i a left regular.
  inline std::size_t regularity_degree_i1(I1Element const& a,
                                          std::size_t cap = 64) {
    if (i1_in_F(a)) {
      throw Error(ErrorKind::ElementInF, a.to_string() + " lies in F");
    }
    I1Element cur = a;
    for (std::size_t i = 0; i <= cap; ++i) {
      if (i1_regularity(cur).verdict) {
        return i;
      }
      cur = I1Element::d() * cur;
    }
    throw Error(ErrorKind::NoDegreeFound,
                "no regular d-multiple up to " + std::to_string(cap));
  }

  //! x -> i, y -> d, E_kl -> e_kl.
  inline I1Element xi_of(SnElement const& a) {
    if (a.n() != 1) {
      throw Error(ErrorKind::DimensionMismatch, "xi is defined on S_1");
    }
    I1Element r;
    for (auto const& [m, c] : a.terms()) {
      I1Element t = I1Element::integral(static_cast<std::size_t>(m.a[0])) *
                    I1Element::d(static_cast<std::size_t>(m.b[0]));
      r += t * c;
    }
    return r;
  }

  //! Membership in K<d, i>: every H-polynomial of the normal form is
  //! constant (the image of xi is K + sum K d^i + sum K i^j + F).
  inline bool is_in_scalar_subalgebra(I1Element const& a) {
    for (auto const& [k, p] : a.dpart()) {
      if (!p.is_constant()) {
        return false;
      }
    }
    for (auto const& [k, p] : a.intpart()) {
      if (!p.is_constant()) {
        return false;
      }
    }
    return a.hpart().is_constant();
  }

  inline SnElement xi_preimage(I1Element const& a) {
    if (!is_in_scalar_subalgebra(a)) {
      throw Error(ErrorKind::NotInScalarSubalgebra,
                  a.to_string() + " has a non-constant H coefficient");
    }
    SnElement r(1, a.hpart().coeff(0));
    for (auto const& [k, p] : a.dpart()) {
      r += SnElement::y(1, 0, static_cast<long>(k)) * p.coeff(0);
    }
    for (auto const& [k, p] : a.intpart()) {
      r += SnElement::x(1, 0, static_cast<long>(k)) * p.coeff(0);
    }
    for (auto const& [kl, c] : a.fpart()) {
      r += matrix_unit(kl.first, kl.second) * c;
    }
    return r;
  }

  inline UniPoly random_hpoly(Rng& rng, long deg, long coeff) {
    std::vector<Scalar> cs;
    long d = rng.range(0, deg);
    for (long k = 0; k <= d; ++k) {
      cs.push_back(Scalar(rng.range(-coeff, coeff)));
    }
    if (cs.back() == 0) {
      cs.back() = rng.nonzero(coeff);
    }
    return UniPoly(cs, Var::H);
  }

  //! Random element with part indices <= maxpow, H-degrees <= deg and
  //! F-size <= fsize.
  inline I1Element random_i1(Rng& rng, long maxpow, long deg, long coeff,
                             long fsize) {
    I1Element r;
    long nd = rng.range(0, 2), ni = rng.range(0, 2), nf = rng.range(0, 2);
    for (long t = 0; t < nd; ++t) {
      r.add_d(static_cast<std::size_t>(rng.range(1, maxpow)),
              random_hpoly(rng, deg, coeff));
    }
    if (rng.coin()) {
      r.add_d(0, random_hpoly(rng, deg, coeff));
    }
    for (long t = 0; t < ni; ++t) {
      r.add_i(static_cast<std::size_t>(rng.range(1, maxpow)),
              random_hpoly(rng, deg, coeff));
    }
    for (long t = 0; t < nf; ++t) {
      r.add_f(static_cast<std::size_t>(rng.range(0, fsize)),
              static_cast<std::size_t>(rng.range(0, fsize)), rng.nonzero(coeff));
    }
    return r;
  }

}  // namespace opalg

#endif  // OPALG_INTDIFF_HPP_
