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

#ifndef OPALG_JACOBIAN_HPP_
#define OPALG_JACOBIAN_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opalg/lfraction.hpp"
#include "opalg/onesided.hpp"
#include "opalg/random.hpp"
#include "opalg/render.hpp"
#include "opalg/truncation.hpp"

namespace opalg {

  //! (H-1)(H-2)...(H-b)
  inline UniPoly falling_H(std::size_t b) {
    UniPoly r(Scalar(1));
    for (std::size_t t = 1; t <= b; ++t) {
      r *= UniPoly::linear(Scalar(-static_cast<long>(t)));
    }
    return r;
  }

  //! Finite sum of terms x^a g(H) d^b with g in L. The representation is a
  //! spanning form, not a basis expansion; use normal_form() to compare.
  class A1Element {
   public:
    using Key = std::pair<std::size_t, std::size_t>;
    using Terms = std::map<Key, LFraction>;

    A1Element() = default;
    A1Element(Scalar const& c) {
      add_term(0, LFraction(c), 0);
    }

    static A1Element term(std::size_t a, LFraction const& g, std::size_t b) {
      A1Element r;
      r.add_term(a, g, b);
      return r;
    }
    static A1Element x(std::size_t k = 1) {
      return term(k, LFraction(Scalar(1)), 0);
    }
    static A1Element d(std::size_t k = 1) {
      return term(0, LFraction(Scalar(1)), k);
    }
    static A1Element lfrac(LFraction const& g) {
      if (!g.in_L()) {
        throw Error(ErrorKind::NotInvertibleInL,
                    g.to_string() + " is not an element of L");
      }
      return term(0, g, 0);
    }
    static A1Element H() {
      return lfrac(LFraction::H());
    }
    //! (H+k)^{-1}
    static A1Element Hinv(long k = 0) {
      if (k < 0) {
        throw Error(ErrorKind::NotInvertibleInL,
                    "(H" + std::to_string(k) + ")^{-1} is not in L");
      }
      return lfrac(LFraction::inverse_linear(k));
    }
    //! int = x H^{-1}
    static A1Element integral() {
      return term(1, LFraction::inverse_linear(0), 0);
    }
    //! E_ij = (1/j!) x^i (1 - x H^{-1} d) d^j; E_ij x^s = delta_js x^i.
    static A1Element E(std::size_t i, std::size_t j) {
      Scalar c = 1 / Scalar(factorial(j));
      A1Element r = term(i, LFraction(c), j);
      r.add_term(i + 1, LFraction::inverse_linear(0) * (-c), j + 1);
      return r;
    }
    //! rho_{ji} = x^i (H^j d^i x^i)^{-1} d^i, with d^i x^i = H(H+1)...(H+i-1).
    static A1Element rho(std::size_t j, std::size_t i) {
      LFraction g = LFraction::inverse_linear(0, static_cast<unsigned>(j));
      for (std::size_t t = 0; t < i; ++t) {
        g *= LFraction::inverse_linear(static_cast<long>(t));
      }
      return term(i, g, i);
    }

    Terms const& terms() const {
      return _t;
    }
    bool has_no_terms() const {
      return _t.empty();
    }

    void add_term(std::size_t a, LFraction const& g, std::size_t b) {
      if (g.is_zero()) {
        return;
      }
      auto [it, fresh] = _t.emplace(Key{a, b}, g);
      if (!fresh) {
        it->second += g;
        if (it->second.is_zero()) {
          _t.erase(it);
        }
      }
    }

    A1Element operator-() const {
      return *this * Scalar(-1);
    }
    A1Element& operator+=(A1Element const& o) {
      for (auto const& [k, g] : o._t) {
        add_term(k.first, g, k.second);
      }
      return *this;
    }
    A1Element& operator-=(A1Element const& o) {
      return *this += -o;
    }
    friend A1Element operator+(A1Element a, A1Element const& b) {
      return a += b;
    }
    friend A1Element operator-(A1Element a, A1Element const& b) {
      return a -= b;
    }
    friend A1Element operator*(A1Element a, Scalar const& s) {
      if (s == 0) {
        return A1Element();
      }
      for (auto& [k, g] : a._t) {
        g = g * s;
      }
      return a;
    }
    friend A1Element operator*(A1Element const& u, A1Element const& v) {
      A1Element r;
      for (auto const& [ku, g] : u._t) {
        for (auto const& [kv, h] : v._t) {
          auto [a, b] = ku;
          auto [c, dd] = kv;
          if (b <= c) {
            // d^b x^c = x^{c-b} prod_{s=1}^b (H+c-s); g(H) x^k = x^k g(H+k)
            UniPoly P(Scalar(1));
            for (std::size_t s = 1; s <= b; ++s) {
              P *= UniPoly::linear(Scalar(static_cast<long>(c - s)));
            }
            r.add_term(a + c - b,
                       g.shift_any(static_cast<long>(c - b)) * LFraction(P) * h,
                       dd);
          } else {
            // d^b x^c = prod_{s=1}^c (H+b-s) d^{b-c}; d^k h = h(H+k) d^k
            UniPoly Q(Scalar(1));
            for (std::size_t s = 1; s <= c; ++s) {
              Q *= UniPoly::linear(Scalar(static_cast<long>(b - s)));
            }
            r.add_term(a,
                       g * LFraction(Q) * h.shift_any(static_cast<long>(b - c)),
                       b - c + dd);
          }
        }
      }
      return r;
    }
    A1Element& operator*=(A1Element const& o) {
      return *this = *this * o;
    }

    A1Element pow(std::size_t e) const {
      A1Element r(Scalar(1));
      for (std::size_t i = 0; i < e; ++i) {
        r *= *this;
      }
      return r;
    }

   private:
    Terms _t;
  };

  inline A1Element a1_mul(A1Element const& u, A1Element const& v) {
    return u * v;
  }

  //! x^a g d^b -> x^b g d^a
  inline A1Element theta(A1Element const& u) {
    A1Element r;
    for (auto const& [k, g] : u.terms()) {
      r.add_term(k.second, g, k.first);
    }
    return r;
  }

  //! Left action on K[x]: x^a g d^b x^m = fall(m,b) g(m-b+1) x^{m-b+a}.
  inline UniPoly a1_act(A1Element const& u, UniPoly const& p) {
    UniPoly r(Var::x);
    for (std::size_t m = 0; m < p.coeffs().size(); ++m) {
      Scalar pc = p.coeffs()[m];
      if (pc == 0) {
        continue;
      }
      for (auto const& [k, g] : u.terms()) {
        auto [a, b] = k;
        if (b > m) {
          continue;
        }
        Scalar v = Scalar(falling(m, b)) *
                   g.eval(Scalar(static_cast<long>(m - b) + 1));
        r += UniPoly::monomial(m - b + a, pc * v, Var::x);
      }
    }
    return r;
  }

  //! Right action on K[d]: p a := theta(a) p, with d^s <-> x^s.
  inline UniPoly a1_act_right(UniPoly const& p, A1Element const& u) {
    return a1_act(theta(u), p.with_var(Var::x)).with_var(Var::d);
  }

  //! One graded component. For grade k >= 0 it stands for
  //! x^k (l + sum lam_ij x^i H^{-j} d^i); for grade -n for
  //! (l + sum lam_ij x^i H^{-j} d^i) d^n.
  struct A1Slice {
    LFraction l;
    FMatrix lam;  //!< (i, j) -> lambda_ij

    bool is_zero() const {
      return l.is_zero() && lam.empty();
    }
  };

  //! Unique normal form: per grade, l in L plus lambda_ij with j >= 2, and
  //! the F part separately.
  struct A1Normal {
    std::map<long, A1Slice> grades;
    FMatrix f;

    bool is_zero() const {
      return grades.empty() && f.empty();
    }
    long size() const {
      long s = -1;
      for (auto const& [ij, c] : f) {
        s = std::max<long>(s, static_cast<long>(std::max(ij.first, ij.second)));
      }
      return s;
    }
  };

  namespace detail {

    //! x^b g d^b = l + sum lam_ij x^i H^{-j} d^i, lam over i, j >= 1.
    inline void diag_decompose(std::size_t b, LFraction const& g, A1Slice& out) {
      if (b == 0) {
        out.l += g;
        return;
      }
      PartialFractions pf = partial_fractions(g);
      long lb = static_cast<long>(b);
      UniPoly fb = falling_H(b);
      out.l += LFraction(pf.poly.shift(Scalar(-lb)) * fb);
      for (auto const& [ke, c] : pf.terms) {
        auto [k, e] = ke;
        if (k >= lb) {
          out.l += LFraction::inverse_linear(k - lb, e) * LFraction(fb) * c;
          continue;
        }
        // x^b (H+k)^{-e} d^b = x^i H^{-e} (H-1)...(H-k) d^i, i = b - k
        std::size_t i = static_cast<std::size_t>(lb - k);
        PartialFractions r = partial_fractions(
            LFraction(falling_H(static_cast<std::size_t>(k)),
                      LFraction::DenMap{{0, e}}));
        out.l += LFraction(r.poly.shift(Scalar(-static_cast<long>(i))) *
                           falling_H(i)) *
                 c;
        for (auto const& [kj, cj] : r.terms) {
          fm_add(out.lam, {i, kj.second}, c * cj);
        }
      }
    }

    //! F placement of E_tt inside grade k.
    inline void place_diag(long grade, std::size_t t, Scalar const& c,
                           FMatrix& f) {
      if (grade >= 0) {
        fm_add(f, {t + static_cast<std::size_t>(grade), t}, c);
      } else {
        std::size_t n = static_cast<std::size_t>(-grade);
        fm_add(f, {t, t + n},
               c * Scalar(factorial(t + n)) / Scalar(factorial(t)));
      }
    }

  }  // namespace detail

  //! Grade -> slice in the decomposition D_1 = L + span{x^i H^{-j} d^i}.
  inline std::map<long, A1Slice> full_slices(A1Element const& u) {
    std::map<long, A1Slice> out;
    for (auto const& [k, g] : u.terms()) {
      auto [a, b] = k;
      long grade = static_cast<long>(a) - static_cast<long>(b);
      detail::diag_decompose(std::min(a, b), g, out[grade]);
    }
    for (auto it = out.begin(); it != out.end();) {
      it = it->second.is_zero() ? out.erase(it) : std::next(it);
    }
    return out;
  }

  //! Moves x^i H^{-1} d^i = (H-1)...(H-i+1) - (i-1)! E_{i-1,i-1} out of the
  //! full decomposition.
  inline A1Normal normal_form(A1Element const& u) {
    A1Normal nf;
    for (auto& [grade, s] : full_slices(u)) {
      A1Slice b;
      b.l = s.l;
      for (auto const& [ij, c] : s.lam) {
        auto [i, j] = ij;
        if (j >= 2) {
          fm_add(b.lam, ij, c);
          continue;
        }
        b.l += LFraction(falling_H(i - 1)) * c;
        detail::place_diag(grade, i - 1, -c * Scalar(factorial(i - 1)), nf.f);
      }
      if (!b.is_zero()) {
        nf.grades.emplace(grade, std::move(b));
      }
    }
    return nf;
  }

  inline A1Element from_normal(A1Normal const& nf) {
    A1Element r;
    for (auto const& [grade, s] : nf.grades) {
      std::size_t up = grade >= 0 ? static_cast<std::size_t>(grade) : 0;
      std::size_t down = grade < 0 ? static_cast<std::size_t>(-grade) : 0;
      r.add_term(up, s.l, down);
      for (auto const& [ij, c] : s.lam) {
        r.add_term(up + ij.first,
                   LFraction::inverse_linear(0, static_cast<unsigned>(ij.second)) * c,
                   ij.first + down);
      }
    }
    for (auto const& [ij, c] : nf.f) {
      r += A1Element::E(ij.first, ij.second) * c;
    }
    return r;
  }

  inline bool a1_zero_test(A1Element const& u) {
    return normal_form(u).is_zero();
  }
  inline bool a1_equal(A1Element const& u, A1Element const& v) {
    return a1_zero_test(u - v);
  }
  inline bool operator==(A1Element const& u, A1Element const& v) {
    return a1_equal(u, v);
  }
  inline bool operator!=(A1Element const& u, A1Element const& v) {
    return !a1_equal(u, v);
  }

  //! Canonical text of the normal form: grades from high to low, then F.
  inline std::string to_string(A1Normal const& nf) {
    SumWriter w;
    for (auto it = nf.grades.rbegin(); it != nf.grades.rend(); ++it) {
      long grade = it->first;
      A1Slice const& s = it->second;
      long up = std::max(grade, 0L), down = std::max(-grade, 0L);
      if (!s.l.is_zero()) {
        Scalar c;
        std::vector<std::string> f{power_string("x", up)};
        split_lfrac(s.l, c, f);
        f.push_back(power_string("d", down));
        w.add(c, f);
      }
      for (auto const& [ij, c] : s.lam) {
        long i = static_cast<long>(ij.first);
        w.add(c, {power_string("x", up + i),
                  power_string("Hinv", static_cast<long>(ij.second)),
                  power_string("d", i + down)});
      }
    }
    for (auto const& [ij, c] : nf.f) {
      w.add(c, {"E[" + std::to_string(ij.first) + "," +
                std::to_string(ij.second) + "]"});
    }
    return w.str();
  }

  inline std::string to_string(A1Element const& u) {
    return to_string(normal_form(u));
  }

  //! sum lam_ij (H-1)...(H-i) / (H-i)^j; a rational function that may have
  //! poles at positive integers.
  inline LFraction phi_of(FMatrix const& lam) {
    LFraction r;
    for (auto const& [ij, c] : lam) {
      auto [i, j] = ij;
      r += LFraction(falling_H(i), LFraction::DenMap{{-static_cast<long>(i),
                                                      static_cast<unsigned>(j)}}) *
           c;
    }
    return r;
  }

  //! Per-grade data: the split l + l^perp (lam over j >= 1), the same slice
  //! with F extracted (lamB over j >= 2, fdiag), and the generic
  //! eigenvalue R with d^s . slice = R(s+1) d^s for s beyond the F block.
  struct GradeSlice {
    LFraction l;
    FMatrix lperp;
    LFraction lB;
    FMatrix lperpB;
    std::map<std::size_t, Scalar> fdiag;
    LFraction eigen;
  };

  inline std::map<long, GradeSlice> grade_decompose(A1Element const& u) {
    std::map<long, GradeSlice> out;
    for (auto const& [grade, s] : full_slices(u)) {
      GradeSlice g;
      g.l = s.l;
      g.lperp = s.lam;
      g.lB = s.l;
      for (auto const& [ij, c] : s.lam) {
        auto [i, j] = ij;
        if (j >= 2) {
          fm_add(g.lperpB, ij, c);
        } else {
          g.lB += LFraction(falling_H(i - 1)) * c;
          Scalar& slot = g.fdiag[i - 1];
          slot -= c * Scalar(factorial(i - 1));
          if (slot == 0) {
            g.fdiag.erase(i - 1);
          }
        }
      }
      g.eigen = g.lB + phi_of(g.lperpB);
      out.emplace(grade, std::move(g));
    }
    return out;
  }

  struct A1RegularityData {
    bool inXi = false;
    int xiBranch = 0;  //!< 1: kernel contains 1; 2: lowering-free plus F
    long size = -1;
    std::size_t degD = 0;
    std::size_t delta = 0;
    LFraction phi;
    LFraction leading;  //!< l + phi(l^perp) of the leading slice
    std::size_t mu = 0;
    std::size_t nu = 0;
    bool verdict = false;
    std::size_t rank = 0;
    std::size_t domainDim = 0;
    std::optional<UniPoly> kernel;
  };

  inline A1RegularityData a1_regularity(A1Element const& u) {
    A1RegularityData out;
    A1Normal nf = normal_form(u);
    out.size = nf.size();
    auto image = [&u](std::size_t s) {
      return a1_act_right(UniPoly::monomial(s, 1, Var::d), u);
    };
    auto finish = [&out](InjectivityResult const& t) {
      out.rank = t.rank;
      out.domainDim = t.domain_dim;
      out.kernel = t.kernel;
    };
    bool branch1 = true;
    for (auto const& [grade, s] : full_slices(u)) {
      if (grade <= 0 && !s.l.is_zero()) {
        branch1 = false;
      }
    }
    if (branch1) {
      out.inXi = true;
      out.xiBranch = 1;
      finish(injectivity_test(0, Var::d, image));
      return out;
    }
    auto lead = nf.grades.begin();
    if (lead == nf.grades.end() || lead->first > 0) {
      out.inXi = true;
      out.xiBranch = 2;
      finish(injectivity_test(out.size + 1, Var::d, image));
      return out;
    }
    A1Slice const& s = lead->second;
    out.degD = static_cast<std::size_t>(-lead->first);
    for (auto const& [ij, c] : s.lam) {
      out.delta = std::max(out.delta, ij.first);
    }
    out.phi = phi_of(s.lam);
    out.leading = s.l + out.phi;
    // Least i >= delta with no N_+ root of the numerator of R(H+i): the
    // roots move down by one per shift.
    long dl = static_cast<long>(out.delta);
    out.mu = out.delta + mu_of_poly(out.leading.num().shift(Scalar(dl)));
    out.nu = static_cast<std::size_t>(
        std::max<long>(out.size, static_cast<long>(out.mu)));
    auto t = injectivity_test(static_cast<long>(out.nu), Var::d, image);
    out.verdict = t.injective;
    finish(t);
    return out;
  }

  inline A1RegularityData a1_right_regularity(A1Element const& u) {
    return a1_regularity(theta(u));
  }

  inline bool a1_in_F(A1Element const& u) {
    return normal_form(u).grades.empty();
  }

  //! Least i with d^i u left regular.
  inline std::size_t regularity_degree_a1(A1Element const& u,
                                          std::size_t cap = 64) {
    if (a1_in_F(u)) {
      throw Error(ErrorKind::ElementInF, "element lies in F");
    }
    A1Element cur = u;
    for (std::size_t i = 0; i <= cap; ++i) {
      if (a1_regularity(cur).verdict) {
        return i;
      }
      cur = A1Element::d() * cur;
    }
    throw Error(ErrorKind::NoDegreeFound,
                "no regular d-multiple up to " + std::to_string(cap));
  }

  //! Element of the skew Laurent ring: grade k -> c_k, standing for
  //! sum c_k d^{-k}, with (g d^i)(h d^j) = g h(H+i) d^{i+j}.
  class SkewLaurent {
   public:
    std::map<long, LFraction> const& coeffs() const {
      return _c;
    }
    void add(long grade, LFraction const& g) {
      if (g.is_zero()) {
        return;
      }
      auto [it, fresh] = _c.emplace(grade, g);
      if (!fresh) {
        it->second += g;
        if (it->second.is_zero()) {
          _c.erase(it);
        }
      }
    }
    bool is_zero() const {
      return _c.empty();
    }
    friend SkewLaurent operator*(SkewLaurent const& u, SkewLaurent const& v) {
      SkewLaurent r;
      for (auto const& [k1, g] : u._c) {
        for (auto const& [k2, h] : v._c) {
          r.add(k1 + k2, g * h.shift_any(-k1));
        }
      }
      return r;
    }
    friend SkewLaurent operator+(SkewLaurent u, SkewLaurent const& v) {
      for (auto const& [k, g] : v._c) {
        u.add(k, g);
      }
      return u;
    }
    friend bool operator==(SkewLaurent const& u, SkewLaurent const& v) {
      if (u._c.size() != v._c.size()) {
        return false;
      }
      for (auto const& [k, g] : u._c) {
        auto it = v._c.find(k);
        if (it == v._c.end() || it->second != g) {
          return false;
        }
      }
      return true;
    }
    //! "c*d^e" summands with e = -grade, highest grade first.
    std::string to_string() const {
      if (_c.empty()) {
        return "0";
      }
      SumWriter w;
      for (auto it = _c.rbegin(); it != _c.rend(); ++it) {
        Scalar c;
        std::vector<std::string> f;
        split_lfrac(it->second, c, f);
        long e = -it->first;
        if (e != 0) {
          f.push_back(e == 1 ? "d" : "d^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e)));
        }
        w.add(c, f);
      }
      return w.str();
    }

   private:
    std::map<long, LFraction> _c;
  };

  //! x^a g d^b -> (H-1)...(H-a) g(H-a) d^{b-a}; kills F.
  inline SkewLaurent skew_laurent_image(A1Element const& u) {
    SkewLaurent r;
    for (auto const& [k, g] : u.terms()) {
      auto [a, b] = k;
      long la = static_cast<long>(a);
      r.add(la - static_cast<long>(b), LFraction(falling_H(a)) * g.shift_any(-la));
    }
    return r;
  }

  //! Random element: terms x^a g d^b with a, b <= maxpow, g a polynomial of
  //! degree <= deg times up to two factors (H+k)^{-e}, plus matrix units
  //! with indices <= fsize.
  inline A1Element random_a1(Rng& rng, long maxpow, long deg, long coeff,
                             long fsize, long nterms = 3) {
    A1Element r;
    long nt = rng.range(1, nterms);
    for (long t = 0; t < nt; ++t) {
      std::size_t a = static_cast<std::size_t>(rng.range(0, maxpow));
      std::size_t b = static_cast<std::size_t>(rng.range(0, maxpow));
      std::vector<Scalar> cs;
      long dg = rng.range(0, deg);
      for (long k = 0; k <= dg; ++k) {
        cs.push_back(Scalar(rng.range(-coeff, coeff)));
      }
      cs.back() = rng.nonzero(coeff);
      LFraction g{UniPoly(cs)};
      long nden = rng.range(0, 2);
      for (long q = 0; q < nden; ++q) {
        g *= LFraction::inverse_linear(rng.range(0, 2),
                                       static_cast<unsigned>(rng.range(1, 2)));
      }
      r.add_term(a, g, b);
    }
    long nf = rng.range(0, 1);
    for (long t = 0; t < nf; ++t) {
      r += A1Element::E(static_cast<std::size_t>(rng.range(0, fsize)),
                        static_cast<std::size_t>(rng.range(0, fsize))) *
           rng.nonzero(coeff);
    }
    return r;
  }

}  // namespace opalg

#endif  // OPALG_JACOBIAN_HPP_
