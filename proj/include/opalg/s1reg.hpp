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

#ifndef OPALG_S1REG_HPP_
#define OPALG_S1REG_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "opalg/intdiff.hpp"
#include "opalg/linalg.hpp"
#include "opalg/onesided.hpp"
#include "opalg/sets.hpp"
#include "opalg/truncation.hpp"

namespace opalg {

  struct RegularityReport {
    bool verdict = false;
    long size = -1;
    std::size_t degY = 0;
    bool excluded = false;  //!< the element lies in xK[x] + F
    std::size_t rank = 0;
    std::size_t domainDim = 0;
    std::optional<UniPoly> kernel;  //!< polynomial in y with kernel * a = 0
  };

  inline long size_s1(SnElement const& a) {
    return decompose_s1(a).size();
  }

  inline RegularityReport is_left_regular_s1(SnElement const& a) {
    S1Decomposition dec = decompose_s1(a);
    RegularityReport out;
    out.size = dec.size();
    out.excluded = dec.constant == 0 && dec.ypart.is_zero();
    auto image = [&a](std::size_t s) {
      return act_right_on_Pprime(UniPoly::monomial(s, 1, Var::y), a);
    };
    long top = out.size;
    if (out.excluded) {
      // y-degree never grows, so P'_{<= s+1} cannot embed into P'_{<= s}.
      top = out.size + 1;
    } else {
      out.degY = static_cast<std::size_t>(std::max<long>(0, dec.ypart.degree()));
    }
    auto t = injectivity_test(top, Var::y, image);
    out.verdict = !out.excluded && t.injective;
    out.rank = t.rank;
    out.domainDim = t.domain_dim;
    out.kernel = t.kernel;
    return out;
  }

  inline RegularityReport is_right_regular_s1(SnElement const& a) {
    return is_left_regular_s1(eta(a));
  }

  //! Least i with y^i a left regular.
  inline std::size_t regularity_degree_s1(SnElement const& a,
                                          std::size_t cap = 64) {
    if (in_F(a)) {
      throw Error(ErrorKind::ElementInF, a.to_string() + " lies in F");
    }
    SnElement cur = a;
    for (std::size_t i = 0; i <= cap; ++i) {
      if (is_left_regular_s1(cur).verdict) {
        return i;
      }
      cur = SnElement::y() * cur;
    }
    throw Error(ErrorKind::NoDegreeFound,
                "no regular y-multiple up to " + std::to_string(cap));
  }

  inline bool is_y_polynomial(SnElement const& a) {
    for (auto const& [m, c] : a.terms()) {
      for (auto e : m.a) {
        if (e != 0) {
          return false;
        }
      }
    }
    return true;
  }

  //! Searches for a kernel vector of right multiplication by a on the
  //! y-polynomials of total degree <= top (any n). A returned vector is an
  //! exact witness of non-regularity.
  inline std::optional<MultiPoly> sn_kernel_search(SnElement const& a,
                                                   long top) {
    std::size_t n = a.n();
    std::vector<Exponent> basis;
    Exponent e(n, 0);
    // Enumerate exponents with |e| <= top.
    std::vector<Exponent> frontier{e};
    basis.push_back(e);
    for (long d = 1; d <= top; ++d) {
      std::vector<Exponent> next;
      for (auto const& f : frontier) {
        for (std::size_t i = 0; i < n; ++i) {
          Exponent g = f;
          ++g[i];
          bool dup = false;
          for (std::size_t j = i + 1; j < n && !dup; ++j) {
            dup = f[j] > 0;
          }
          if (!dup) {
            next.push_back(g);
          }
        }
      }
      basis.insert(basis.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    std::vector<std::map<Exponent, Scalar>> cols;
    for (auto const& g : basis) {
      cols.push_back(act_right_on_Pprime(MultiPoly::monomial(g), a).terms());
    }
    auto ns = column_nullspace(cols);
    if (ns.empty()) {
      return std::nullopt;
    }
    MultiPoly k(n);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      k.add_term(basis[i], ns.front()[i]);
    }
    return k;
  }

  inline Tribool in_set(SnElement const& a, SetDescriptor const& S) {
    std::size_t n = a.n();
    auto single = [&a]() -> SnMonomial const* {
      if (a.terms().size() != 1 || a.terms().begin()->second != 1) {
        return nullptr;
      }
      return &a.terms().begin()->first;
    };
    auto all_zero = [](std::vector<long> const& v) {
      return std::all_of(v.begin(), v.end(), [](long e) { return e == 0; });
    };
    switch (S.tag) {
      case SetTag::Trivial:
        return tribool(a == SnElement(n, Scalar(1)));
      case SetTag::PowersOfY: {
        auto m = single();
        return tribool(m != nullptr && all_zero(m->a));
      }
      case SetTag::PowersOfX: {
        auto m = single();
        return tribool(m != nullptr && all_zero(m->b));
      }
      case SetTag::SPlusIdeal: {
        MultiPoly img = laurent_image(a);
        if (img.is_zero()) {
          return Tribool::False;
        }
        for (auto const& [e, c] : img.terms()) {
          for (auto x : e) {
            if (x > 0) {
              return Tribool::False;
            }
          }
        }
        return Tribool::True;
      }
      case SetTag::LeftRegularYPolys:
        if (!is_y_polynomial(a) || a.is_zero()) {
          return Tribool::False;
        }
        if (n == 1) {
          return tribool(is_left_regular_s1(a).verdict);
        }
        // Right multiplication by a nonzero y-polynomial on K[y] is
        // polynomial multiplication, and K[y] is faithful.
        return Tribool::True;
      case SetTag::TildeY: {
        if (!is_y_polynomial(a) || a.is_zero()) {
          return Tribool::False;
        }
        if (n > 1) {
          return Tribool::True;
        }
        SnElement cur = a;
        for (std::size_t k = 0; k <= S.bound; ++k) {
          if (is_left_regular_s1(cur).verdict) {
            return Tribool::True;
          }
          cur = SnElement::y() * cur;
        }
        return Tribool::Unknown;
      }
      case SetTag::FullLeftRegular:
        if (n == 1) {
          return tribool(is_left_regular_s1(a).verdict);
        }
        if (is_y_polynomial(a) && !a.is_zero()) {
          return Tribool::True;
        }
        if (sn_kernel_search(a, static_cast<long>(std::min<std::size_t>(S.bound, 6)))) {
          return Tribool::False;
        }
        return Tribool::Unknown;
    }
    return Tribool::Unknown;
  }

  //! x_i -> y_i^{-1}, y_i -> y_i, F -> 0.
  inline MultiRational localize(SnElement const& a) {
    MultiPoly p(a.n());
    for (auto const& [m, c] : a.terms()) {
      Exponent e(a.n());
      for (std::size_t i = 0; i < a.n(); ++i) {
        e[i] = m.b[i] - m.a[i];
      }
      p.add_term(e, c);
    }
    return MultiRational(p);
  }

  //! Image of the left fraction s^{-1} r.
  inline MultiRational fraction_image(SnElement const& s,
                                      SnElement const& r) {
    bool ok = in_set(s, {SetTag::PowersOfY, 0}) == Tribool::True;
    if (!ok) {
      ok = s.n() == 1 ? is_left_regular_s1(s).verdict
                      : in_set(s, {SetTag::LeftRegularYPolys, 0}) ==
                            Tribool::True;
    }
    if (!ok) {
      throw Error(ErrorKind::NotADenominator,
                  s.to_string() + " is not an admissible denominator");
    }
    MultiRational ls = localize(s);
    if (ls.is_zero()) {
      throw Error(ErrorKind::DivisionByZeroImage,
                  "denominator has zero image");
    }
    return ls.inverse() * localize(r);
  }

  inline I1Element xi_transport(SnElement const& a) {
    return xi_of(a);
  }

  //! Left regularity of a scalar integro-differential operator, answered
  //! through the preimage under xi.
  inline RegularityReport is_left_regular_scalar_i1(I1Element const& a) {
    return is_left_regular_s1(xi_preimage(a));
  }

}  // namespace opalg

#endif  // OPALG_S1REG_HPP_
