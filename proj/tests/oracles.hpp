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

// Brute-force oracles for the tests. Each element acts on K[x] by
// composing the actions of its generators one at a time:
//   x: x^m -> x^{m+1}      y, d: x^m -> m x^{m-1} (y: x^{m-1})
//   i: x^m -> x^{m+1}/(m+1) H = d x: x^m -> (m+1) x^m
//   e00: keeps the constant term.
// Left regularity is read off the dual right action on the coordinate
// functionals f_m; right regularity off the action on K[x] itself.

#ifndef OPALG_TESTS_ORACLES_HPP_
#define OPALG_TESTS_ORACLES_HPP_

#include <cstddef>
#include <map>
#include <vector>

#include "opalg/intdiff.hpp"
#include "opalg/jacobian.hpp"
#include "opalg/onesided.hpp"

namespace oracle {

  using opalg::Scalar;
  using Vec = std::map<long, Scalar>;

  inline void put(Vec& v, long k, Scalar const& c) {
    if (c == 0) {
      return;
    }
    Scalar& s = v[k];
    s += c;
    if (s == 0) {
      v.erase(k);
    }
  }

  template <class F>
  Vec apply_each(Vec const& v, F const& f) {
    Vec r;
    for (auto const& [m, c] : v) {
      for (auto const& [k, a] : f(m)) {
        put(r, k, c * a);
      }
    }
    return r;
  }

  inline Vec gen_x(Vec const& v) {
    return apply_each(v, [](long m) { return Vec{{m + 1, Scalar(1)}}; });
  }
  inline Vec gen_y(Vec const& v) {
    return apply_each(v, [](long m) { return m == 0 ? Vec{} : Vec{{m - 1, Scalar(1)}}; });
  }
  inline Vec gen_d(Vec const& v) {
    return apply_each(v, [](long m) { return m == 0 ? Vec{} : Vec{{m - 1, Scalar(m)}}; });
  }
  inline Vec gen_int(Vec const& v) {
    return apply_each(v, [](long m) { return Vec{{m + 1, Scalar(1, m + 1)}}; });
  }
  inline Vec gen_H(Vec const& v) {
    return apply_each(v, [](long m) { return Vec{{m, Scalar(m + 1)}}; });
  }
  //! (H + k)^{-1}, defined on K[x] for k >= 0.
  inline Vec gen_Hinv(Vec const& v, long k) {
    return apply_each(v, [k](long m) { return Vec{{m, Scalar(1, m + 1 + k)}}; });
  }
  inline Vec gen_e00(Vec const& v) {
    auto it = v.find(0);
    return it == v.end() ? Vec{} : Vec{{0, it->second}};
  }

  template <class G>
  Vec repeat(Vec v, std::size_t n, G const& g) {
    for (std::size_t i = 0; i < n; ++i) {
      v = g(v);
    }
    return v;
  }

  //! p(H) applied to v.
  inline Vec poly_of_H(opalg::UniPoly const& p, Vec const& v) {
    Vec r;
    Vec cur = v;
    for (std::size_t t = 0; t < p.coeffs().size(); ++t) {
      for (auto const& [m, c] : cur) {
        put(r, m, c * p.coeffs()[t]);
      }
      cur = gen_H(cur);
    }
    return r;
  }

  inline Vec add(Vec a, Vec const& b, Scalar const& s = 1) {
    for (auto const& [m, c] : b) {
      put(a, m, c * s);
    }
    return a;
  }

  // ------------------------------------------------------ actions

  inline Vec act(opalg::SnElement const& u, Vec const& v) {
    Vec r;
    for (auto const& [mono, c] : u.terms()) {
      Vec t = repeat(v, static_cast<std::size_t>(mono.b[0]), gen_y);
      t = repeat(t, static_cast<std::size_t>(mono.a[0]), gen_x);
      r = add(r, t, c);
    }
    return r;
  }

  inline Vec act(opalg::I1Element const& u, Vec const& v) {
    Vec r = poly_of_H(u.hpart(), v);
    for (auto const& [k, p] : u.dpart()) {
      r = add(r, poly_of_H(p, repeat(v, k, gen_d)));
    }
    for (auto const& [k, p] : u.intpart()) {
      r = add(r, repeat(poly_of_H(p, v), k, gen_int));
    }
    for (auto const& [kl, c] : u.fpart()) {
      Vec t = gen_e00(repeat(v, kl.second, gen_d));
      r = add(r, repeat(t, kl.first, gen_int), c);
    }
    return r;
  }

  inline Vec act(opalg::A1Element const& u, Vec const& v) {
    Vec r;
    for (auto const& [ab, g] : u.terms()) {
      Vec t = repeat(v, ab.second, gen_d);
      for (auto const& [k, e] : g.den()) {
        for (unsigned i = 0; i < e; ++i) {
          t = gen_Hinv(t, k);
        }
      }
      t = poly_of_H(g.num(), t);
      r = add(r, repeat(t, ab.first, gen_x));
    }
    return r;
  }

  // --------------------------------------------------- elimination

  using Row = std::vector<Scalar>;

  inline std::size_t rank_of(std::vector<Row> m) {
    std::size_t rank = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
      std::size_t piv = rank;
      while (piv < m.size() && m[piv][c] == 0) {
        ++piv;
      }
      if (piv == m.size()) {
        continue;
      }
      std::swap(m[piv], m[rank]);
      for (std::size_t r = rank + 1; r < m.size(); ++r) {
        if (m[r][c] != 0) {
          Scalar f = m[r][c] / m[rank][c];
          for (std::size_t k = c; k < cols; ++k) {
            m[r][k] -= f * m[rank][k];
          }
        }
      }
      ++rank;
    }
    return rank;
  }

  //! Matrix with entry [m][j] = coefficient of x^m in u x^j.
  template <class T>
  std::vector<Row> action_matrix(T const& u, long rows, long cols) {
    std::vector<Row> M(static_cast<std::size_t>(rows + 1),
                       Row(static_cast<std::size_t>(cols + 1)));
    for (long j = 0; j <= cols; ++j) {
      for (auto const& [m, c] : act(u, Vec{{j, Scalar(1)}})) {
        if (m <= rows) {
          M[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] = c;
        }
      }
    }
    return M;
  }

  constexpr long kMargin = 48;

  //! True when some nonzero combination of f_0..f_N annihilates u from the
  //! right; then u is a right factor of zero and not left regular.
  template <class T>
  bool left_kernel(T const& u, long N) {
    auto M = action_matrix(u, N, N + kMargin);
    return rank_of(M) < static_cast<std::size_t>(N + 1);
  }

  //! True when u kills a nonzero polynomial of degree <= N.
  template <class T>
  bool right_kernel(T const& u, long N) {
    auto M = action_matrix(u, N + kMargin, N);
    std::vector<Row> Mt(static_cast<std::size_t>(N + 1),
                        Row(M.size()));
    for (std::size_t i = 0; i < M.size(); ++i) {
      for (std::size_t j = 0; j < M[i].size(); ++j) {
        Mt[j][i] = M[i][j];
      }
    }
    return rank_of(Mt) < static_cast<std::size_t>(N + 1);
  }

  //! Exact equality of two elements as operators on K[x]_{<= N}.
  template <class T>
  bool same_action(T const& a, T const& b, long N) {
    for (long j = 0; j <= N; ++j) {
      if (act(a, Vec{{j, Scalar(1)}}) != act(b, Vec{{j, Scalar(1)}})) {
        return false;
      }
    }
    return true;
  }

  //! Finite rank on K[x]: kills x^m for every m in [from, from + 5].
  template <class T>
  bool kills_tail(T const& u, long from) {
    for (long m = from; m <= from + 5; ++m) {
      if (!act(u, Vec{{m, Scalar(1)}}).empty()) {
        return false;
      }
    }
    return true;
  }

}  // namespace oracle

#endif  // OPALG_TESTS_ORACLES_HPP_
