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

#ifndef OPALG_UNIPOLY_HPP_
#define OPALG_UNIPOLY_HPP_

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "opalg/scalar.hpp"

namespace opalg {

  enum class Var { H, y, x, d };

  inline char const* var_name(Var v) {
    switch (v) {
      case Var::H: return "H";
      case Var::y: return "y";
      case Var::x: return "x";
      case Var::d: return "d";
    }
    return "?";
  }

  //! Dense univariate polynomial over the rationals. Coefficient i is the
  //! coefficient of v^i; the vector never ends in a zero.
  class UniPoly {
   public:
    UniPoly() = default;
    explicit UniPoly(Var v) : _var(v) {}
    UniPoly(Scalar const& c, Var v = Var::H) : _var(v) {
      if (c != 0) {
        _c.push_back(c);
      }
    }
    UniPoly(std::vector<Scalar> coeffs, Var v = Var::H)
        : _c(std::move(coeffs)), _var(v) {
      trim();
    }

    static UniPoly monomial(std::size_t k, Scalar const& c = 1,
                            Var v = Var::H) {
      std::vector<Scalar> cs(k + 1);
      cs[k] = c;
      return UniPoly(std::move(cs), v);
    }
    //! v + a
    static UniPoly linear(Scalar const& a, Var v = Var::H) {
      return UniPoly(std::vector<Scalar>{a, 1}, v);
    }

    Var var() const {
      return _var;
    }
    UniPoly with_var(Var v) const {
      UniPoly r = *this;
      r._var = v;
      return r;
    }
    bool is_zero() const {
      return _c.empty();
    }
    bool is_constant() const {
      return _c.size() <= 1;
    }
    //! -1 for the zero polynomial.
    long degree() const {
      return static_cast<long>(_c.size()) - 1;
    }
    Scalar coeff(std::size_t i) const {
      return i < _c.size() ? _c[i] : Scalar(0);
    }
    Scalar lead() const {
      return _c.empty() ? Scalar(0) : _c.back();
    }
    std::vector<Scalar> const& coeffs() const {
      return _c;
    }

    Scalar eval(Scalar const& h) const {
      Scalar r = 0;
      for (auto it = _c.rbegin(); it != _c.rend(); ++it) {
        r = r * h + *it;
      }
      return r;
    }

    //! p(v + i), by repeated synthetic division (Taylor shift).
    UniPoly shift(Scalar const& i) const {
      if (i == 0 || is_constant()) {
        return *this;
      }
      std::vector<Scalar> a = _c;
      std::size_t n = a.size();
      for (std::size_t k = 0; k + 1 < n; ++k) {
        for (std::size_t j = n - 1; j > k; --j) {
          a[j - 1] += i * a[j];
        }
      }
      return UniPoly(std::move(a), _var);
    }

    UniPoly derivative() const {
      std::vector<Scalar> a;
      for (std::size_t i = 1; i < _c.size(); ++i) {
        a.push_back(_c[i] * static_cast<unsigned long>(i));
      }
      return UniPoly(std::move(a), _var);
    }

    UniPoly operator-() const {
      UniPoly r = *this;
      for (auto& c : r._c) {
        c = -c;
      }
      return r;
    }
    UniPoly& operator+=(UniPoly const& o) {
      if (_c.size() < o._c.size()) {
        _c.resize(o._c.size());
      }
      for (std::size_t i = 0; i < o._c.size(); ++i) {
        _c[i] += o._c[i];
      }
      trim();
      return *this;
    }
    UniPoly& operator-=(UniPoly const& o) {
      return *this += -o;
    }
    UniPoly& operator*=(Scalar const& s) {
      if (s == 0) {
        _c.clear();
        return *this;
      }
      for (auto& c : _c) {
        c *= s;
      }
      return *this;
    }
    friend UniPoly operator+(UniPoly a, UniPoly const& b) {
      return a += b;
    }
    friend UniPoly operator-(UniPoly a, UniPoly const& b) {
      return a -= b;
    }
    friend UniPoly operator*(UniPoly a, Scalar const& s) {
      return a *= s;
    }
    friend UniPoly operator*(Scalar const& s, UniPoly a) {
      return a *= s;
    }
    friend UniPoly operator*(UniPoly const& a, UniPoly const& b) {
      if (a.is_zero() || b.is_zero()) {
        return UniPoly(a._var);
      }
      std::vector<Scalar> r(a._c.size() + b._c.size() - 1);
      for (std::size_t i = 0; i < a._c.size(); ++i) {
        if (a._c[i] == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b._c.size(); ++j) {
          r[i + j] += a._c[i] * b._c[j];
        }
      }
      return UniPoly(std::move(r), a._var);
    }
    UniPoly& operator*=(UniPoly const& o) {
      return *this = *this * o;
    }
    friend bool operator==(UniPoly const& a, UniPoly const& b) {
      return a._c == b._c;
    }
    friend bool operator!=(UniPoly const& a, UniPoly const& b) {
      return !(a == b);
    }

    //! Euclidean division; throws on a zero divisor.
    std::pair<UniPoly, UniPoly> divmod(UniPoly const& d) const {
      if (d.is_zero()) {
        throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
      }
      std::vector<Scalar> r = _c;
      long dd = d.degree();
      if (degree() < dd) {
        return {UniPoly(_var), *this};
      }
      std::vector<Scalar> q(r.size() - static_cast<std::size_t>(dd));
      Scalar inv = 1 / d.lead();
      for (long k = static_cast<long>(r.size()) - 1; k >= dd; --k) {
        Scalar f = r[k] * inv;
        if (f == 0) {
          continue;
        }
        q[k - dd] = f;
        for (long j = 0; j <= dd; ++j) {
          r[k - dd + j] -= f * d._c[j];
        }
      }
      r.resize(static_cast<std::size_t>(dd));
      return {UniPoly(std::move(q), _var), UniPoly(std::move(r), _var)};
    }

    UniPoly monic() const {
      if (is_zero()) {
        return *this;
      }
      return *this * (1 / lead());
    }

    //! v^k coefficient string form: sparse "c*H^k" sum, highest degree first.
    std::string to_string() const {
      if (is_zero()) {
        return "0";
      }
      std::string out;
      std::string v = var_name(_var);
      for (long k = degree(); k >= 0; --k) {
        Scalar c = _c[k];
        if (c == 0) {
          continue;
        }
        bool neg = c < 0;
        Scalar a = neg ? Scalar(-c) : c;
        if (out.empty()) {
          out += neg ? "-" : "";
        } else {
          out += neg ? " - " : " + ";
        }
        std::string mono;
        if (k == 1) {
          mono = v;
        } else if (k > 1) {
          mono = v + "^" + std::to_string(k);
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

    //! Number of nonzero coefficients.
    std::size_t term_count() const {
      return static_cast<std::size_t>(
          std::count_if(_c.begin(), _c.end(), [](Scalar const& c) {
            return c != 0;
          }));
    }

   private:
    void trim() {
      while (!_c.empty() && _c.back() == 0) {
        _c.pop_back();
      }
    }

    std::vector<Scalar> _c;
    Var _var = Var::H;
  };

  inline UniPoly poly_shift(UniPoly const& p, long i) {
    return p.shift(Scalar(i));
  }

  inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      auto r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  //! (v - r_1)(v - r_2)... for the listed shifts: prod (v + k).
  inline UniPoly product_of_linears(std::vector<Scalar> const& ks,
                                    Var v = Var::H) {
    UniPoly r(Scalar(1), v);
    for (auto const& k : ks) {
      r *= UniPoly::linear(k, v);
    }
    return r;
  }

}  // namespace opalg

#endif  // OPALG_UNIPOLY_HPP_
