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

#ifndef OPALG_OREKIT_HPP_
#define OPALG_OREKIT_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opalg/intdiff.hpp"
#include "opalg/jacobian.hpp"
#include "opalg/linalg.hpp"
#include "opalg/random.hpp"
#include "opalg/s1reg.hpp"
#include "opalg/sets.hpp"

namespace opalg {

  using CoordKey = std::vector<long>;
  using Coords = std::map<CoordKey, Scalar>;

  template <class T>
  struct RingHandle;

  // ---------------------------------------------------------------- S_1

  template <>
  struct RingHandle<SnElement> {
    static char const* name() {
      return "s1";
    }
    static SnElement one() {
      return SnElement(1, Scalar(1));
    }
    static SnElement lowering(std::size_t k) {
      return SnElement::y(1, 0, static_cast<long>(k));
    }
    static SnElement raising(std::size_t k) {
      return SnElement::x(1, 0, static_cast<long>(k));
    }
    static bool is_zero(SnElement const& a) {
      return a.is_zero();
    }
    static bool equal(SnElement const& a, SnElement const& b) {
      return a == b;
    }
    static Coords coords(SnElement const& a) {
      Coords c;
      for (auto const& [m, v] : a.terms()) {
        c[{m.a[0], m.b[0]}] = v;
      }
      return c;
    }
    static std::vector<SnElement> slice(std::size_t bound) {
      std::vector<SnElement> out;
      for (std::size_t d = 0; d <= bound; ++d) {
        for (std::size_t a = 0; a <= d; ++a) {
          out.push_back(SnElement::monomial({static_cast<long>(a)},
                                            {static_cast<long>(d - a)}));
        }
      }
      return out;
    }
    static SnElement random(Rng& rng) {
      return random_sn(rng, 1, 4, 2, 3, static_cast<std::size_t>(rng.range(0, 1)));
    }
    static Tribool contains(SnElement const& a, SetDescriptor const& S) {
      return in_set(a, S);
    }
    static std::string str(SnElement const& a) {
      return a.to_string();
    }
  };

  // ---------------------------------------------------------------- I_1

  inline Tribool in_set(I1Element const& a, SetDescriptor const& S) {
    auto is_power = [&a](bool lowering) -> bool {
      I1Element::PartMap const& part = lowering ? a.dpart() : a.intpart();
      I1Element::PartMap const& other = lowering ? a.intpart() : a.dpart();
      if (!a.fpart().empty() || !other.empty()) {
        return false;
      }
      if (part.empty()) {
        return a.hpart() == UniPoly(Scalar(1));
      }
      return part.size() == 1 && a.hpart().is_zero() &&
             part.begin()->second == UniPoly(Scalar(1));
    };
    auto delta_part = [&a]() {
      I1Element r;
      for (auto const& [k, p] : a.dpart()) {
        r.add_d(k, p);
      }
      r.add_d(0, a.hpart());
      return r;
    };
    switch (S.tag) {
      case SetTag::Trivial:
        return tribool(a == I1Element(Scalar(1)));
      case SetTag::PowersOfY:
        return tribool(is_power(true));
      case SetTag::PowersOfX:
        return tribool(is_power(false));
      case SetTag::FullLeftRegular:
        return tribool(i1_regularity(a).verdict);
      case SetTag::LeftRegularYPolys:
        if (!a.intpart().empty() || !a.fpart().empty() || a.is_zero()) {
          return Tribool::False;
        }
        return tribool(i1_regularity(a).verdict);
      case SetTag::SPlusIdeal: {
        if (!a.intpart().empty()) {
          return Tribool::False;
        }
        I1Element dp = delta_part();
        if (dp.is_zero()) {
          return Tribool::False;
        }
        return tribool(i1_regularity(dp).verdict);
      }
      case SetTag::TildeY: {
        if (!a.intpart().empty() || !a.fpart().empty() || a.is_zero()) {
          return Tribool::False;
        }
        I1Element cur = a;
        for (std::size_t k = 0; k <= S.bound; ++k) {
          if (i1_regularity(cur).verdict) {
            return Tribool::True;
          }
          cur = I1Element::d() * cur;
        }
        return Tribool::Unknown;
      }
    }
    return Tribool::Unknown;
  }

  template <>
  struct RingHandle<I1Element> {
    static char const* name() {
      return "i1";
    }
    static I1Element one() {
      return I1Element(Scalar(1));
    }
    static I1Element lowering(std::size_t k) {
      return k == 0 ? one() : I1Element::d(k);
    }
    static I1Element raising(std::size_t k) {
      return k == 0 ? one() : I1Element::integral(k);
    }
    static bool is_zero(I1Element const& a) {
      return a.is_zero();
    }
    static bool equal(I1Element const& a, I1Element const& b) {
      return a == b;
    }
    static Coords coords(I1Element const& a) {
      Coords c;
      for (auto const& [k, p] : a.dpart()) {
        for (std::size_t t = 0; t < p.coeffs().size(); ++t) {
          if (p.coeffs()[t] != 0) {
            c[{0, static_cast<long>(k), static_cast<long>(t)}] = p.coeffs()[t];
          }
        }
      }
      for (std::size_t t = 0; t < a.hpart().coeffs().size(); ++t) {
        if (a.hpart().coeffs()[t] != 0) {
          c[{0, 0, static_cast<long>(t)}] = a.hpart().coeffs()[t];
        }
      }
      for (auto const& [k, p] : a.intpart()) {
        for (std::size_t t = 0; t < p.coeffs().size(); ++t) {
          if (p.coeffs()[t] != 0) {
            c[{1, static_cast<long>(k), static_cast<long>(t)}] = p.coeffs()[t];
          }
        }
      }
      for (auto const& [kl, v] : a.fpart()) {
        c[{2, static_cast<long>(kl.first), static_cast<long>(kl.second)}] = v;
      }
      return c;
    }
    static std::vector<I1Element> slice(std::size_t bound) {
      std::vector<I1Element> out;
      for (std::size_t i = 0; i <= bound; ++i) {
        for (std::size_t h = 0; i + h <= bound; ++h) {
          out.push_back(I1Element::poly(UniPoly::monomial(h)) * I1Element::d(i));
          if (i >= 1) {
            out.push_back(I1Element::integral(i) * I1Element::poly(UniPoly::monomial(h)));
          }
        }
      }
      std::size_t fb = bound / 2;
      for (std::size_t k = 0; k <= fb; ++k) {
        for (std::size_t l = 0; l <= fb; ++l) {
          out.push_back(I1Element::e(k, l));
        }
      }
      return out;
    }
    static I1Element random(Rng& rng) {
      return random_i1(rng, 3, 2, 2, 3);
    }
    static Tribool contains(I1Element const& a, SetDescriptor const& S) {
      return in_set(a, S);
    }
    static std::string str(I1Element const& a) {
      return a.to_string();
    }
  };

  // ---------------------------------------------------------------- A_1

  inline Tribool in_set(A1Element const& a, SetDescriptor const& S) {
    A1Normal nf = normal_form(a);
    auto power = [&nf](bool lowering) {
      if (!nf.f.empty() || nf.grades.size() != 1) {
        return false;
      }
      auto const& [grade, s] = *nf.grades.begin();
      if (lowering ? grade > 0 : grade < 0) {
        return false;
      }
      if (!s.lam.empty()) {
        return false;
      }
      if (lowering) {
        return s.l == LFraction(Scalar(1));
      }
      // int^k = x^k (H(H+1)...(H+k-1))^{-1}
      LFraction g(Scalar(1));
      for (long t = 0; t < grade; ++t) {
        g *= LFraction::inverse_linear(t);
      }
      return s.l == g;
    };
    // Delta-form: grades <= 0 with coefficients in L only.
    auto delta_form = [&nf]() -> std::optional<A1Element> {
      A1Element r;
      for (auto const& [grade, s] : nf.grades) {
        if (grade > 0 || !s.lam.empty()) {
          return std::nullopt;
        }
        r.add_term(0, s.l, static_cast<std::size_t>(-grade));
      }
      return r;
    };
    switch (S.tag) {
      case SetTag::Trivial:
        return tribool(a1_equal(a, A1Element(Scalar(1))));
      case SetTag::PowersOfY:
        return tribool(power(true));
      case SetTag::PowersOfX:
        return tribool(power(false));
      case SetTag::FullLeftRegular:
        return tribool(a1_regularity(a).verdict);
      case SetTag::LeftRegularYPolys: {
        auto dp = delta_form();
        if (!dp || !nf.f.empty() || nf.grades.empty()) {
          return Tribool::False;
        }
        return tribool(a1_regularity(*dp).verdict);
      }
      case SetTag::SPlusIdeal: {
        auto dp = delta_form();
        if (!dp || nf.grades.empty()) {
          return Tribool::False;
        }
        return tribool(a1_regularity(*dp).verdict);
      }
      case SetTag::TildeY: {
        auto dp = delta_form();
        if (!dp || !nf.f.empty() || nf.grades.empty()) {
          return Tribool::False;
        }
        A1Element cur = a;
        for (std::size_t k = 0; k <= S.bound; ++k) {
          if (a1_regularity(cur).verdict) {
            return Tribool::True;
          }
          cur = A1Element::d() * cur;
        }
        return Tribool::Unknown;
      }
    }
    return Tribool::Unknown;
  }

  template <>
  struct RingHandle<A1Element> {
    //! Coordinates are action vectors on x^0..x^kProbe; exact verification
    //! of every witness makes the truncation harmless.
    static constexpr std::size_t kProbe = 24;

    static char const* name() {
      return "a1";
    }
    static A1Element one() {
      return A1Element(Scalar(1));
    }
    static A1Element lowering(std::size_t k) {
      return k == 0 ? one() : A1Element::d(k);
    }
    static A1Element raising(std::size_t k) {
      return A1Element::integral().pow(k);
    }
    static bool is_zero(A1Element const& a) {
      return a1_zero_test(a);
    }
    static bool equal(A1Element const& a, A1Element const& b) {
      return a1_equal(a, b);
    }
    static Coords coords(A1Element const& a) {
      Coords c;
      for (std::size_t m = 0; m <= kProbe; ++m) {
        UniPoly img = a1_act(a, UniPoly::monomial(m, 1, Var::x));
        for (std::size_t t = 0; t < img.coeffs().size(); ++t) {
          if (img.coeffs()[t] != 0) {
            c[{static_cast<long>(m), static_cast<long>(t)}] = img.coeffs()[t];
          }
        }
      }
      return c;
    }
    static std::vector<A1Element> slice(std::size_t bound) {
      std::vector<A1Element> out;
      for (std::size_t a = 0; a <= bound; ++a) {
        for (std::size_t b = 0; a + b <= bound; ++b) {
          out.push_back(A1Element::term(a, LFraction(Scalar(1)), b));
          out.push_back(A1Element::term(a, LFraction::H(), b));
          out.push_back(A1Element::term(a, LFraction::inverse_linear(0), b));
        }
      }
      std::size_t fb = bound / 2;
      for (std::size_t i = 0; i <= fb; ++i) {
        for (std::size_t j = 0; j <= fb; ++j) {
          out.push_back(A1Element::E(i, j));
        }
      }
      return out;
    }
    static A1Element random(Rng& rng) {
      return random_a1(rng, 3, 2, 2, 3);
    }
    static Tribool contains(A1Element const& a, SetDescriptor const& S) {
      return in_set(a, S);
    }
    static std::string str(A1Element const& a) {
      return to_string(a);
    }
  };

  // ------------------------------------------------------------ checks

  template <class T>
  struct OreWitness {
    T s_prime;
    T r_prime;
    bool verified = false;
  };

  //! Members of S used by the bounded searches, in increasing degree.
  template <class T>
  std::vector<T> set_members(SetDescriptor const& S, std::size_t bound) {
    using R = RingHandle<T>;
    std::vector<T> out;
    if (S.tag == SetTag::Trivial) {
      out.push_back(R::one());
      return out;
    }
    for (std::size_t k = 0; k <= bound; ++k) {
      out.push_back(S.tag == SetTag::PowersOfX ? R::raising(k) : R::lowering(k));
    }
    return out;
  }

  //! k with s = lowering^k, if any (k <= bound).
  template <class T>
  std::optional<std::size_t> lowering_exponent(T const& s, std::size_t bound) {
    using R = RingHandle<T>;
    for (std::size_t k = 0; k <= bound; ++k) {
      if (R::equal(s, R::lowering(k))) {
        return k;
      }
    }
    return std::nullopt;
  }

  //! Solves sum c_i (b_i s) = target over the slice; returns r' = sum c_i b_i.
  template <class T>
  std::optional<T> solve_left_multiple(T const& target, T const& s,
                                       std::size_t slice_bound) {
    using R = RingHandle<T>;
    auto basis = R::slice(slice_bound);
    std::vector<Coords> cols;
    for (auto const& b : basis) {
      cols.push_back(R::coords(b * s));
    }
    auto sol = solve_columns(cols, R::coords(target));
    if (!sol) {
      return std::nullopt;
    }
    T r = T();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if ((*sol)[i] != 0) {
        r += basis[i] * (*sol)[i];
      }
    }
    return r;
  }

  //! Bounded search for s' in S and r' with s' r = r' s. Every returned
  //! witness has been checked by exact multiplication.
  template <class T>
  std::optional<OreWitness<T>> ore_witness(SetDescriptor const& S, T const& r,
                                           T const& s, std::size_t bound) {
    using R = RingHandle<T>;
    if (R::contains(s, S) != Tribool::True) {
      throw Error(ErrorKind::InvalidArgument,
                  R::str(s) + " is not a member of " + to_string(S.tag));
    }
    // Candidates for s': members of S in increasing degree, interleaving
    // powers of s and lowering multiples of s for the non-power sets.
    std::vector<T> cands;
    bool powers = S.tag == SetTag::PowersOfY || S.tag == SetTag::PowersOfX ||
                  S.tag == SetTag::Trivial;
    if (powers) {
      cands = set_members<T>(S, bound);
    } else {
      T sk = s;
      for (std::size_t k = 0; k <= bound; ++k) {
        cands.push_back(R::lowering(k));
        if (k >= 1) {
          cands.push_back(R::lowering(k) * s);
        }
        if (k < 3) {
          cands.push_back(sk);
          sk = sk * s;
        }
      }
    }
    auto check = [&](T const& sp, T const& rp) -> std::optional<OreWitness<T>> {
      if (R::equal(sp * r, rp * s)) {
        return OreWitness<T>{sp, rp, true};
      }
      return std::nullopt;
    };
    // Exact right division by a lowering power: y^k x^k = 1.
    if (auto k = lowering_exponent(s, bound)) {
      T q = R::raising(*k);
      for (auto const& sp : cands) {
        if (auto w = check(sp, sp * r * q)) {
          return w;
        }
      }
    }
    std::size_t sb = std::min<std::size_t>(bound, 4);
    for (std::size_t i = 0; i < cands.size() && i <= 3 * sb; ++i) {
      if (auto rp = solve_left_multiple(cands[i] * r, s, sb)) {
        if (auto w = check(cands[i], *rp)) {
          return w;
        }
      }
    }
    return std::nullopt;
  }

  //! Bounded search for t in S with t r = 0.
  template <class T>
  std::optional<T> ass_member(SetDescriptor const& S, T const& r,
                              std::size_t bound) {
    using R = RingHandle<T>;
    for (auto const& t : set_members<T>(S, bound)) {
      if (R::contains(t, S) == Tribool::True && R::is_zero(t * r)) {
        return t;
      }
    }
    return std::nullopt;
  }

  struct DenominatorReport {
    std::size_t samples = 0;
    std::size_t vacuous = 0;     //!< no r with r s = 0 was found
    std::size_t resolved = 0;    //!< some t in S has t r = 0
    std::size_t unresolved = 0;  //!< no such t within the bound
  };

  //! For sampled s in S and r with r s = 0, looks for t in S with t r = 0.
  template <class T>
  DenominatorReport denominator_check(SetDescriptor const& S,
                                      std::size_t samples, std::size_t bound,
                                      Rng& rng) {
    using R = RingHandle<T>;
    DenominatorReport rep;
    auto members = set_members<T>(S, std::min<std::size_t>(bound, 3));
    std::map<std::size_t, std::vector<T>> annihilators;
    for (std::size_t n = 0; n < samples; ++n) {
      ++rep.samples;
      std::size_t idx = members.size() == 1
                            ? 0
                            : static_cast<std::size_t>(
                                  rng.range(1, static_cast<long>(members.size()) - 1));
      T const& s = members[idx];
      T r = R::random(rng);
      if (!R::is_zero(r * s)) {
        auto it = annihilators.find(idx);
        if (it == annihilators.end()) {
          auto basis = R::slice(3);
          std::vector<Coords> cols;
          for (auto const& b : basis) {
            cols.push_back(R::coords(b * s));
          }
          std::vector<T> ann;
          for (auto const& v : column_nullspace(cols)) {
            T z = T();
            for (std::size_t i = 0; i < basis.size(); ++i) {
              if (v[i] != 0) {
                z += basis[i] * v[i];
              }
            }
            if (!R::is_zero(z) && R::is_zero(z * s)) {
              ann.push_back(z);
            }
          }
          it = annihilators.emplace(idx, std::move(ann)).first;
        }
        if (it->second.empty()) {
          ++rep.vacuous;
          continue;
        }
        r = it->second[static_cast<std::size_t>(
            rng.range(0, static_cast<long>(it->second.size()) - 1))];
      }
      if (R::is_zero(r)) {
        ++rep.vacuous;
        continue;
      }
      if (ass_member(S, r, bound)) {
        ++rep.resolved;
      } else {
        ++rep.unresolved;
      }
    }
    return rep;
  }

  struct PairReport {
    std::size_t samples = 0;
    std::size_t covered = 0;    //!< some lowering power r has r t in S
    std::size_t uncovered = 0;  //!< none within the bound
    std::size_t skipped = 0;    //!< no member of T was drawn
    std::size_t maxPower = 0;
  };

  //! For sampled t in T, searches r = lowering^k (k <= bound) with r t in S.
  template <class T>
  PairReport localization_pair_check(SetDescriptor const& S,
                                     SetDescriptor const& Tset,
                                     std::size_t samples, std::size_t bound,
                                     Rng& rng) {
    using R = RingHandle<T>;
    PairReport rep;
    for (std::size_t n = 0; n < samples; ++n) {
      ++rep.samples;
      std::optional<T> t;
      for (int tries = 0; tries < 20 && !t; ++tries) {
        T cand = R::random(rng);
        if (R::contains(cand, Tset) == Tribool::True) {
          t = cand;
        }
      }
      if (!t) {
        ++rep.skipped;
        continue;
      }
      bool found = false;
      T cur = *t;
      for (std::size_t k = 0; k <= bound && !found; ++k) {
        if (R::contains(cur, S) == Tribool::True) {
          found = true;
          rep.maxPower = std::max(rep.maxPower, k);
        }
        cur = R::lowering(1) * cur;
      }
      found ? ++rep.covered : ++rep.uncovered;
    }
    return rep;
  }

}  // namespace opalg

#endif  // OPALG_OREKIT_HPP_
