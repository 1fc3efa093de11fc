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

#ifndef OPALG_ROOTS_HPP_
#define OPALG_ROOTS_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "opalg/unipoly.hpp"

namespace opalg {

  namespace detail {

    //! Scales p to a primitive integer polynomial.
    inline std::vector<mpz_class> integerize(UniPoly const& p) {
      mpz_class l = 1;
      for (auto const& c : p.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
      }
      std::vector<mpz_class> out;
      for (auto const& c : p.coeffs()) {
        out.push_back(c.get_num() * (l / c.get_den()));
      }
      return out;
    }

    inline mpz_class eval_int(std::vector<mpz_class> const& a,
                              mpz_class const& r) {
      mpz_class v = 0;
      for (auto it = a.rbegin(); it != a.rend(); ++it) {
        v = v * r + *it;
      }
      return v;
    }

    //! Prime factorization of n > 0 by trial division up to 10^6. Returns
    //! false if a composite cofactor could not be split.
    inline bool factor(mpz_class n,
                       std::vector<std::pair<mpz_class, unsigned>>& out) {
      for (unsigned long p = 2; p <= 1000000UL; p += (p == 2 ? 1 : 2)) {
        if (n < mpz_class(p) * p) {
          break;
        }
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
          n /= p;
          ++e;
        }
        if (e > 0) {
          out.emplace_back(mpz_class(p), e);
        }
      }
      if (n == 1) {
        return true;
      }
      if (n < mpz_class("1000000000000") ||
          mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
        out.emplace_back(n, 1);
        return true;
      }
      return false;
    }

    //! Candidate absolute values of integer roots: divisors of a0 that do
    //! not exceed the Cauchy bound.
    inline std::vector<mpz_class> root_candidates(mpz_class const& a0,
                                                  mpz_class const& bound) {
      mpz_class n = abs(a0);
      std::vector<mpz_class> divs;
      std::vector<std::pair<mpz_class, unsigned>> fac;
      if (factor(n, fac)) {
        divs.push_back(1);
        for (auto const& [p, e] : fac) {
          std::size_t cur = divs.size();
          mpz_class pk = 1;
          for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < cur; ++i) {
              mpz_class d = divs[i] * pk;
              if (d <= bound) {
                divs.push_back(d);
              }
            }
          }
        }
      } else if (bound <= 10000000) {
        for (unsigned long d = 1; d <= bound.get_ui(); ++d) {
          if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            divs.emplace_back(d);
          }
        }
      } else {
        throw Error(ErrorKind::RootSearchLimit,
                    "cannot factor constant coefficient " + n.get_str());
      }
      std::sort(divs.begin(), divs.end());
      return divs;
    }

  }  // namespace detail

  //! All integer roots of p (without multiplicity), ascending.
  inline std::vector<mpz_class> integer_roots(UniPoly const& p) {
    if (p.is_zero()) {
      throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
    }
    auto a = detail::integerize(p);
    std::size_t t = 0;
    while (a[t] == 0) {
      ++t;
    }
    std::vector<mpz_class> roots;
    if (t > 0) {
      roots.emplace_back(0);
    }
    std::vector<mpz_class> b(a.begin() + static_cast<long>(t), a.end());
    if (b.size() <= 1) {
      return roots;
    }
    // Cauchy bound 1 + max |b_i / b_n|, rounded up.
    mpz_class lead = abs(b.back());
    mpz_class m = 0;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
      mpz_class q;
      mpz_cdiv_q(q.get_mpz_t(), mpz_class(abs(b[i])).get_mpz_t(),
                 lead.get_mpz_t());
      m = std::max(m, q);
    }
    mpz_class bound = m + 1;
    for (auto const& d : detail::root_candidates(b[0], bound)) {
      for (int s : {-1, 1}) {
        mpz_class r = s * d;
        if (detail::eval_int(b, r) == 0) {
          roots.push_back(r);
        }
      }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  //! Roots of p in {1, 2, 3, ...}, ascending.
  inline std::vector<mpz_class> natplus_roots(UniPoly const& p) {
    std::vector<mpz_class> out;
    for (auto const& r : integer_roots(p)) {
      if (r > 0) {
        out.push_back(r);
      }
    }
    return out;
  }

  //! Least i >= 0 such that p(H + i) has no root in {1, 2, ...}.
  inline std::size_t mu_of_poly(UniPoly const& p) {
    auto r = natplus_roots(p);
    if (r.empty()) {
      return 0;
    }
    if (!r.back().fits_ulong_p() ||
        r.back().get_ui() > std::numeric_limits<unsigned>::max()) {
      throw Error(ErrorKind::RootSearchLimit, "root too large to use as a degree");
    }
    return r.back().get_ui();
  }

}  // namespace opalg

#endif  // OPALG_ROOTS_HPP_
