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

#ifndef OPALG_LFRACTION_HPP_
#define OPALG_LFRACTION_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "opalg/roots.hpp"
#include "opalg/unipoly.hpp"

namespace opalg {

  //! num(H) / prod_k (H+k)^{e_k}. Keys k >= 0 give the ring
  //! L = K[H^{+-1}, (H+1)^{-1}, ...]; negative keys are tolerated so that
  //! the same type can hold the rational functions produced by backward
  //! shifts (skew Laurent images, eigenvalue functions).
  class LFraction {
   public:
    using DenMap = std::map<long, unsigned>;

    LFraction() = default;
    LFraction(Scalar const& c) : _num(c) {}
    LFraction(UniPoly p) : _num(std::move(p)) {}
    LFraction(UniPoly p, DenMap den) : _num(std::move(p)), _den(std::move(den)) {
      reduce();
    }

    //! (H+k)^{-e}
    static LFraction inverse_linear(long k, unsigned e = 1) {
      if (e == 0) {
        return LFraction(Scalar(1));
      }
      return LFraction(UniPoly(Scalar(1)), DenMap{{k, e}});
    }
    static LFraction H() {
      return LFraction(UniPoly::monomial(1));
    }

    UniPoly const& num() const {
      return _num;
    }
    DenMap const& den() const {
      return _den;
    }
    bool is_zero() const {
      return _num.is_zero();
    }
    bool is_polynomial() const {
      return _den.empty();
    }
    bool in_L() const {
      return _den.empty() || _den.begin()->first >= 0;
    }
    UniPoly den_poly() const {
      UniPoly r(Scalar(1));
      for (auto const& [k, e] : _den) {
        for (unsigned i = 0; i < e; ++i) {
          r *= UniPoly::linear(Scalar(k));
        }
      }
      return r;
    }

    Scalar eval(Scalar const& h) const {
      Scalar d = 1;
      for (auto const& [k, e] : _den) {
        Scalar f = h + k;
        if (f == 0) {
          throw Error(ErrorKind::PoleEvaluation,
                      "pole at H = " + opalg::to_string(h));
        }
        d *= power(f, e);
      }
      return _num.eval(h) / d;
    }

    LFraction operator-() const {
      LFraction r = *this;
      r._num = -r._num;
      return r;
    }
    friend LFraction operator*(LFraction const& a, LFraction const& b) {
      if (a.is_zero() || b.is_zero()) {
        return LFraction();
      }
      DenMap d = a._den;
      for (auto const& [k, e] : b._den) {
        d[k] += e;
      }
      return LFraction(a._num * b._num, std::move(d));
    }
    friend LFraction operator*(LFraction a, Scalar const& s) {
      a._num *= s;
      if (a._num.is_zero()) {
        a._den.clear();
      }
      return a;
    }
    friend LFraction operator+(LFraction const& a, LFraction const& b) {
      if (a.is_zero()) {
        return b;
      }
      if (b.is_zero()) {
        return a;
      }
      DenMap d = a._den;
      for (auto const& [k, e] : b._den) {
        d[k] = std::max(d[k], e);
      }
      auto lift = [&d](LFraction const& f) {
        UniPoly p = f._num;
        for (auto const& [k, e] : d) {
          auto it = f._den.find(k);
          unsigned have = it == f._den.end() ? 0 : it->second;
          for (unsigned i = have; i < e; ++i) {
            p *= UniPoly::linear(Scalar(k));
          }
        }
        return p;
      };
      UniPoly sum = lift(a) + lift(b);
      return LFraction(std::move(sum), std::move(d));
    }
    friend LFraction operator-(LFraction const& a, LFraction const& b) {
      return a + (-b);
    }
    LFraction& operator+=(LFraction const& o) {
      return *this = *this + o;
    }
    LFraction& operator-=(LFraction const& o) {
      return *this = *this - o;
    }
    LFraction& operator*=(LFraction const& o) {
      return *this = *this * o;
    }
    friend bool operator==(LFraction const& a, LFraction const& b) {
      return (a - b).is_zero();
    }
    friend bool operator!=(LFraction const& a, LFraction const& b) {
      return !(a == b);
    }

    //! f(H + i) for any integer i; the result may leave L when i < 0.
    LFraction shift_any(long i) const {
      if (i == 0) {
        return *this;
      }
      DenMap d;
      for (auto const& [k, e] : _den) {
        d[k + i] = e;
      }
      return LFraction(_num.shift(Scalar(i)), std::move(d));
    }

    //! Inverse in the field of rational functions, provided the numerator
    //! splits into integer-shifted linear factors.
    LFraction invert_any() const {
      if (is_zero()) {
        throw Error(ErrorKind::NotInvertibleInL, "inverse of zero");
      }
      UniPoly rest = _num;
      DenMap nd;
      for (auto const& r : integer_roots(_num)) {
        UniPoly lin = UniPoly::linear(Scalar(-r));
        while (true) {
          auto [q, m] = rest.divmod(lin);
          if (!m.is_zero()) {
            break;
          }
          rest = q;
          nd[-r.get_si()] += 1;
        }
      }
      if (!rest.is_constant()) {
        throw Error(ErrorKind::NotInvertibleInL,
                    "numerator " + _num.to_string() +
                        " has a factor without an integer root");
      }
      UniPoly np = den_poly() * (1 / rest.lead());
      return LFraction(std::move(np), std::move(nd));
    }

    //! Canonical text: "num", or "num*Hinv^e*Hinv[k]^e" with the numerator
    //! bracketed when it has more than one term.
    std::string to_string() const {
      if (_den.empty()) {
        return _num.to_string();
      }
      std::string out;
      if (_num.term_count() > 1) {
        out = "(" + _num.to_string() + ")";
      } else if (_num != UniPoly(Scalar(1))) {
        out = _num.to_string();
      }
      for (auto const& [k, e] : _den) {
        if (!out.empty()) {
          out += "*";
        }
        out += k == 0 ? "Hinv" : "Hinv[" + std::to_string(k) + "]";
        if (e > 1) {
          out += "^" + std::to_string(e);
        }
      }
      return out;
    }

   private:
    void reduce() {
      if (_num.is_zero()) {
        _den.clear();
        return;
      }
      for (auto it = _den.begin(); it != _den.end();) {
        UniPoly lin = UniPoly::linear(Scalar(it->first));
        while (it->second > 0 && _num.eval(Scalar(-it->first)) == 0) {
          _num = _num.divmod(lin).first;
          --it->second;
        }
        if (it->second == 0) {
          it = _den.erase(it);
        } else {
          ++it;
        }
      }
    }

    UniPoly _num{Var::H};
    DenMap _den;
  };

  inline LFraction lfrac_mul(LFraction const& a, LFraction const& b) {
    return a * b;
  }
  inline LFraction lfrac_add(LFraction const& a, LFraction const& b) {
    return a + b;
  }

  //! a(H + i). Backward shifts are allowed only while the result stays in L.
  inline LFraction lfrac_shift(LFraction const& a, long i) {
    if (!a.in_L()) {
      throw Error(ErrorKind::BackwardShiftOutOfL, "argument is not in L");
    }
    LFraction r = a.shift_any(i);
    if (!r.in_L()) {
      throw Error(ErrorKind::BackwardShiftOutOfL,
                  "shift by " + std::to_string(i) + " leaves L");
    }
    return r;
  }

  //! Inverse inside L: the numerator must be c * prod (H+k)^f with k >= 0.
  inline LFraction lfrac_invert(LFraction const& a) {
    if (!a.in_L()) {
      throw Error(ErrorKind::NotInvertibleInL, "argument is not in L");
    }
    LFraction r = a.invert_any();
    if (!r.in_L()) {
      throw Error(ErrorKind::NotInvertibleInL,
                  a.to_string() + " vanishes at a positive integer");
    }
    return r;
  }

  //! g = poly + sum c_{k,e} (H+k)^{-e}.
  struct PartialFractions {
    UniPoly poly;
    std::map<std::pair<long, unsigned>, Scalar> terms;
  };

  inline PartialFractions partial_fractions(LFraction const& g) {
    PartialFractions out;
    LFraction rest = g;
    for (auto const& [k, E] : g.den()) {
      // Expand num / other(H) as a power series in u = H + k.
      UniPoly other(Scalar(1));
      for (auto const& [k2, e2] : g.den()) {
        if (k2 == k) {
          continue;
        }
        for (unsigned t = 0; t < e2; ++t) {
          other *= UniPoly::linear(Scalar(k2));
        }
      }
      UniPoly n = g.num().shift(Scalar(-k));
      UniPoly d = other.shift(Scalar(-k));
      std::vector<Scalar> s(E);
      Scalar d0 = d.coeff(0);
      for (unsigned m = 0; m < E; ++m) {
        Scalar v = n.coeff(m);
        for (unsigned t = 0; t < m; ++t) {
          v -= s[t] * d.coeff(m - t);
        }
        s[m] = v / d0;
      }
      for (unsigned m = 0; m < E; ++m) {
        if (s[m] != 0) {
          unsigned e = E - m;
          out.terms[{k, e}] = s[m];
          rest -= LFraction::inverse_linear(k, e) * s[m];
        }
      }
    }
    if (!rest.is_polynomial()) {
      throw Error(ErrorKind::UnsplittableComponent,
                  "partial fraction remainder is not a polynomial");
    }
    out.poly = rest.num();
    return out;
  }

  //! The L-regularity test: true iff the numerator has no root in N_+.
  inline bool l_is_regular(LFraction const& f) {
    if (f.is_zero()) {
      throw Error(ErrorKind::ZeroElement, "zero element of L");
    }
    return natplus_roots(f.num()).empty();
  }

}  // namespace opalg

#endif  // OPALG_LFRACTION_HPP_
