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

#ifndef OPALG_CLI_HPP_
#define OPALG_CLI_HPP_

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "opalg/intdiff.hpp"
#include "opalg/jacobian.hpp"
#include "opalg/orekit.hpp"
#include "opalg/parse.hpp"
#include "opalg/roots.hpp"
#include "opalg/s1reg.hpp"
#include "opalg/sets.hpp"

namespace opalg::cli {

  using Json = nlohmann::ordered_json;

  enum Exit : int { kOk = 0, kUsage = 2, kDomain = 3, kUnknown = 4 };

  struct Options {
    std::string algebra;
    std::string verb;
    std::vector<std::string> args;
    std::size_t bound = 12;
    std::size_t samples = 20;
    std::uint64_t seed = 1;
    std::size_t cap = 64;
    bool json = false;
    std::string set = "PowersOfY";
    std::string tset = "FullLeftRegular";
  };

  class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Ordered key/value report printed as JSON or as "key: value" lines.
  class Report {
   public:
    explicit Report(bool json) : _json(json) {}
    Report& put(std::string const& key, Json value) {
      _j[key] = std::move(value);
      return *this;
    }
    void print(std::ostream& out) const {
      if (_json) {
        out << _j.dump() << "\n";
        return;
      }
      for (auto const& [k, v] : _j.items()) {
        out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
            << "\n";
      }
    }

   private:
    bool _json;
    Json _j = Json::object();
  };

  // ------------------------------------------------------------ JSON

  inline Json scalar_json(Scalar const& c) {
    return to_string(c);
  }

  inline Json poly_json(UniPoly const& p) {
    Json a = Json::array();
    for (auto const& c : p.coeffs()) {
      a.push_back(scalar_json(c));
    }
    return a;
  }

  inline Json lfrac_json(LFraction const& g) {
    Json den = Json::object();
    for (auto const& [k, e] : g.den()) {
      den[std::to_string(k)] = e;
    }
    return Json{{"num", poly_json(g.num())}, {"den", den}};
  }

  inline Json fmatrix_json(FMatrix const& f) {
    Json a = Json::array();
    for (auto const& [ij, c] : f) {
      a.push_back(Json::array({ij.first, ij.second, scalar_json(c)}));
    }
    return a;
  }

  inline Json sn_json(SnElement const& u) {
    Json terms = Json::array();
    for (auto const& [m, c] : u.terms()) {
      terms.push_back(Json{{"a", m.a}, {"b", m.b}, {"c", scalar_json(c)}});
    }
    return Json{{"n", u.n()}, {"terms", terms}};
  }

  inline Json i1_json(I1Element const& u) {
    auto part = [](I1Element::PartMap const& m) {
      Json o = Json::object();
      for (auto const& [k, p] : m) {
        o[std::to_string(k)] = poly_json(p);
      }
      return o;
    };
    return Json{{"d", part(u.dpart())},
                {"h", poly_json(u.hpart())},
                {"i", part(u.intpart())},
                {"f", fmatrix_json(u.fpart())}};
  }

  inline Json a1_json(A1Normal const& nf) {
    Json g = Json::object();
    for (auto const& [k, s] : nf.grades) {
      g[std::to_string(k)] = Json{{"l", lfrac_json(s.l)}, {"lam", fmatrix_json(s.lam)}};
    }
    return Json{{"grades", g}, {"f", fmatrix_json(nf.f)}};
  }

  // --------------------------------------------------------- helpers

  inline void need(Options const& o, std::size_t n) {
    if (o.args.size() != n) {
      throw UsageError("verb '" + o.verb + "' takes " + std::to_string(n) +
                       " argument" + (n == 1 ? "" : "s") + ", got " +
                       std::to_string(o.args.size()));
    }
  }

  inline void need_at_least(Options const& o, std::size_t n) {
    if (o.args.size() < n) {
      throw UsageError("verb '" + o.verb + "' takes at least " +
                       std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
    }
  }

  inline long parse_long(std::string const& s) {
    try {
      std::size_t used = 0;
      long v = std::stol(s, &used);
      if (used == s.size()) {
        return v;
      }
    } catch (std::exception const&) {
    }
    throw UsageError("expected an integer, got '" + s + "'");
  }

  inline int print_value(Options const& o, std::ostream& out,
                         std::string const& text, Json const& json) {
    if (o.json) {
      out << json.dump() << "\n";
    } else {
      out << text << "\n";
    }
    return kOk;
  }

  inline int print_tribool(Options const& o, std::ostream& out, Tribool t) {
    print_value(o, out, to_string(t),
                t == Tribool::Unknown ? Json(nullptr) : Json(t == Tribool::True));
    return t == Tribool::Unknown ? kUnknown : kOk;
  }

  inline int print_bool(Options const& o, std::ostream& out, bool b) {
    return print_value(o, out, b ? "true" : "false", Json(b));
  }

  inline void put_kernel(Report& r, std::optional<UniPoly> const& k) {
    if (k) {
      r.put("kernel", k->to_string());
    }
  }

  // ------------------------------------------------------- Ore verbs

  template <class T, class Parse>
  std::optional<int> ore_verbs(Options const& o, std::ostream& out,
                               Parse const& parse) {
    using R = RingHandle<T>;
    SetDescriptor S{parse_set_tag(o.set), 16};
    Report rep(o.json);
    if (o.verb == "orewitness") {
      need(o, 2);
      T r = parse(o.args[0]);
      T s = parse(o.args[1]);
      auto w = ore_witness<T>(S, r, s, o.bound);
      if (!w) {
        rep.put("verdict", "unknown").print(out);
        return kUnknown;
      }
      rep.put("verdict", "verified")
          .put("sPrime", R::str(w->s_prime))
          .put("rPrime", R::str(w->r_prime))
          .print(out);
      return kOk;
    }
    if (o.verb == "assmember") {
      need(o, 1);
      auto t = ass_member<T>(S, parse(o.args[0]), o.bound);
      if (!t) {
        rep.put("verdict", "unknown").print(out);
        return kUnknown;
      }
      rep.put("verdict", "verified").put("t", R::str(*t)).print(out);
      return kOk;
    }
    if (o.verb == "dencheck") {
      need(o, 0);
      Rng rng(o.seed);
      auto d = denominator_check<T>(S, o.samples, o.bound, rng);
      rep.put("set", to_string(S.tag))
          .put("samples", d.samples)
          .put("vacuous", d.vacuous)
          .put("resolved", d.resolved)
          .put("unresolved", d.unresolved)
          .print(out);
      return d.unresolved > 0 ? kUnknown : kOk;
    }
    if (o.verb == "paircheck") {
      need(o, 0);
      Rng rng(o.seed);
      SetDescriptor Tset{parse_set_tag(o.tset), 16};
      auto p = localization_pair_check<T>(S, Tset, o.samples, o.bound, rng);
      rep.put("set", to_string(S.tag))
          .put("tset", to_string(Tset.tag))
          .put("samples", p.samples)
          .put("covered", p.covered)
          .put("uncovered", p.uncovered)
          .put("skipped", p.skipped)
          .put("maxPower", p.maxPower)
          .print(out);
      return p.uncovered > 0 ? kUnknown : kOk;
    }
    return std::nullopt;
  }

  //! Verbs shared by every algebra: parse, norm, mul, eq.
  template <class T, class Parse, class Show, class ToJson>
  std::optional<int> common_verbs(Options const& o, std::ostream& out,
                                  std::vector<GeneratorSpec> const& gens,
                                  Parse const& parse, Show const& show,
                                  ToJson const& to_json) {
    if (o.verb == "parse") {
      need(o, 1);
      std::string d = describe(parse_expr(o.args[0], gens));
      return print_value(o, out, d, Json(d));
    }
    if (o.verb == "norm") {
      need(o, 1);
      T a = parse(o.args[0]);
      return print_value(o, out, show(a), to_json(a));
    }
    if (o.verb == "mul") {
      need_at_least(o, 1);
      T a = parse(o.args[0]);
      for (std::size_t i = 1; i < o.args.size(); ++i) {
        a = a * parse(o.args[i]);
      }
      return print_value(o, out, show(a), to_json(a));
    }
    if (o.verb == "add") {
      need_at_least(o, 1);
      T a = parse(o.args[0]);
      for (std::size_t i = 1; i < o.args.size(); ++i) {
        a = a + parse(o.args[i]);
      }
      return print_value(o, out, show(a), to_json(a));
    }
    return std::nullopt;
  }

  // --------------------------------------------------------- algebras

  inline int run_sn(Options const& o, std::size_t n, std::ostream& out) {
    auto parse = [n](std::string const& s) { return parse_sn(s, n); };
    auto show = [](SnElement const& a) { return a.to_string(); };
    if (auto r = common_verbs<SnElement>(o, out, sn_generators(n), parse, show,
                                         sn_json)) {
      return *r;
    }
    auto one_arg = [&]() {
      need(o, 1);
      return parse(o.args[0]);
    };
    if (o.verb == "eq") {
      need(o, 2);
      return print_bool(o, out, parse(o.args[0]) == parse(o.args[1]));
    }
    if (o.verb == "eta") {
      SnElement a = eta(one_arg());
      return print_value(o, out, a.to_string(), sn_json(a));
    }
    if (o.verb == "laurent") {
      std::string s = laurent_image(one_arg()).to_string(indexed_names("x", n));
      return print_value(o, out, s, Json(s));
    }
    if (o.verb == "inF") {
      return print_bool(o, out, in_F(one_arg()));
    }
    if (o.verb == "localize") {
      std::string s = localize(one_arg()).to_string(indexed_names("y", n));
      return print_value(o, out, s, Json(s));
    }
    if (o.verb == "fraction") {
      need(o, 2);
      std::string s = fraction_image(parse(o.args[0]), parse(o.args[1]))
                          .to_string(indexed_names("y", n));
      return print_value(o, out, s, Json(s));
    }
    if (o.verb == "inset") {
      need(o, 2);
      SetDescriptor S{parse_set_tag(o.args[0]), 16};
      return print_tribool(o, out, in_set(parse(o.args[1]), S));
    }
    if (n != 1) {
      if (o.verb == "isleftreg" || o.verb == "isrightreg") {
        SnElement a = one_arg();
        if (o.verb == "isrightreg") {
          a = eta(a);
        }
        return print_tribool(o, out, in_set(a, {SetTag::FullLeftRegular, 16}));
      }
      throw UsageError("verb '" + o.verb + "' is not available for sn:" +
                       std::to_string(n));
    }
    if (o.verb == "decompose") {
      S1Decomposition d = decompose_s1(one_arg());
      Json j{{"constant", scalar_json(d.constant)},
             {"x", poly_json(d.xpart)},
             {"y", poly_json(d.ypart)},
             {"f", fmatrix_json(d.fpart)}};
      return print_value(o, out, d.to_string(), j);
    }
    if (o.verb == "size") {
      long s = size_s1(one_arg());
      return print_value(o, out, std::to_string(s), Json(s));
    }
    if (o.verb == "isleftreg" || o.verb == "isrightreg") {
      SnElement a = one_arg();
      RegularityReport r = o.verb == "isleftreg" ? is_left_regular_s1(a)
                                                 : is_right_regular_s1(a);
      Report rep(o.json);
      rep.put("verdict", r.verdict)
          .put("size", r.size)
          .put("degY", r.degY)
          .put("excluded", r.excluded)
          .put("rank", r.rank)
          .put("domainDim", r.domainDim);
      put_kernel(rep, r.kernel);
      rep.print(out);
      return kOk;
    }
    if (o.verb == "regdeg") {
      std::size_t d = regularity_degree_s1(one_arg(), o.cap);
      return print_value(o, out, std::to_string(d), Json(d));
    }
    if (o.verb == "xi") {
      I1Element b = xi_of(one_arg());
      return print_value(o, out, b.to_string(), i1_json(b));
    }
    if (o.verb == "act") {
      need(o, 2);
      UniPoly p = act_left_on_P(parse(o.args[0]), parse_unipoly(o.args[1], Var::x));
      return print_value(o, out, p.to_string(), poly_json(p));
    }
    if (auto r = ore_verbs<SnElement>(o, out, parse)) {
      return *r;
    }
    throw UsageError("unknown verb '" + o.verb + "' for s1");
  }

  inline void put_i1_regularity(Report& rep, I1RegularityData const& r) {
    rep.put("inPsi", r.inPsi)
        .put("size", r.size)
        .put("degD", r.degD)
        .put("leading", r.leadingPoly.to_string())
        .put("mu", r.mu)
        .put("nu", r.nu)
        .put("verdict", r.verdict)
        .put("rank", r.rank)
        .put("domainDim", r.domainDim);
    put_kernel(rep, r.kernel);
  }

  inline int run_i1(Options const& o, std::ostream& out) {
    auto parse = [](std::string const& s) { return parse_i1(s); };
    auto show = [](I1Element const& a) { return a.to_string(); };
    if (auto r = common_verbs<I1Element>(o, out, i1_generators(), parse, show,
                                         i1_json)) {
      return *r;
    }
    auto one_arg = [&]() {
      need(o, 1);
      return parse(o.args[0]);
    };
    if (o.verb == "eq") {
      need(o, 2);
      return print_bool(o, out, parse(o.args[0]) == parse(o.args[1]));
    }
    if (o.verb == "star") {
      I1Element a = star(one_arg());
      return print_value(o, out, a.to_string(), i1_json(a));
    }
    if (o.verb == "reg" || o.verb == "rreg") {
      I1Element a = one_arg();
      Report rep(o.json);
      put_i1_regularity(rep, o.verb == "reg" ? i1_regularity(a)
                                             : i1_right_regularity(a));
      rep.print(out);
      return kOk;
    }
    if (o.verb == "regdeg") {
      std::size_t d = regularity_degree_i1(one_arg(), o.cap);
      return print_value(o, out, std::to_string(d), Json(d));
    }
    if (o.verb == "act") {
      need(o, 2);
      UniPoly p = act_on_Kx(parse(o.args[0]), parse_unipoly(o.args[1], Var::x));
      return print_value(o, out, p.to_string(), poly_json(p));
    }
    if (o.verb == "inF") {
      return print_bool(o, out, i1_in_F(one_arg()));
    }
    if (o.verb == "inset") {
      need(o, 2);
      SetDescriptor S{parse_set_tag(o.args[0]), 16};
      return print_tribool(o, out, in_set(parse(o.args[1]), S));
    }
    if (o.verb == "scalar") {
      return print_bool(o, out, is_in_scalar_subalgebra(one_arg()));
    }
    if (o.verb == "xiinv") {
      SnElement a = xi_preimage(one_arg());
      return print_value(o, out, a.to_string(), sn_json(a));
    }
    if (auto r = ore_verbs<I1Element>(o, out, parse)) {
      return *r;
    }
    throw UsageError("unknown verb '" + o.verb + "' for i1");
  }

  inline int run_a1(Options const& o, std::ostream& out) {
    auto parse = [](std::string const& s) { return parse_a1(s); };
    auto show = [](A1Element const& a) { return to_string(a); };
    auto js = [](A1Element const& a) { return a1_json(normal_form(a)); };
    if (auto r = common_verbs<A1Element>(o, out, a1_generators(), parse, show, js)) {
      return *r;
    }
    auto one_arg = [&]() {
      need(o, 1);
      return parse(o.args[0]);
    };
    if (o.verb == "eq") {
      need(o, 2);
      return print_bool(o, out, a1_equal(parse(o.args[0]), parse(o.args[1])));
    }
    if (o.verb == "theta") {
      A1Element a = theta(one_arg());
      return print_value(o, out, to_string(a), js(a));
    }
    if (o.verb == "reg" || o.verb == "rreg") {
      A1Element a = one_arg();
      A1RegularityData r = o.verb == "reg" ? a1_regularity(a) : a1_right_regularity(a);
      Report rep(o.json);
      rep.put("inXi", r.inXi)
          .put("xiBranch", r.xiBranch)
          .put("size", r.size)
          .put("degD", r.degD)
          .put("delta", r.delta)
          .put("phi", r.phi.to_string())
          .put("leading", r.leading.to_string())
          .put("mu", r.mu)
          .put("nu", r.nu)
          .put("verdict", r.verdict)
          .put("rank", r.rank)
          .put("domainDim", r.domainDim);
      put_kernel(rep, r.kernel);
      rep.print(out);
      return kOk;
    }
    if (o.verb == "regdeg") {
      std::size_t d = regularity_degree_a1(one_arg(), o.cap);
      return print_value(o, out, std::to_string(d), Json(d));
    }
    if (o.verb == "lreg") {
      A1Normal nf = normal_form(one_arg());
      if (!nf.f.empty() || nf.grades.size() != 1 || nf.grades.begin()->first != 0 ||
          !nf.grades.begin()->second.lam.empty()) {
        throw Error(ErrorKind::InvalidArgument, "argument is not an element of L");
      }
      return print_bool(o, out, l_is_regular(nf.grades.begin()->second.l));
    }
    if (o.verb == "skewimage") {
      std::string s = skew_laurent_image(one_arg()).to_string();
      return print_value(o, out, s, Json(s));
    }
    if (o.verb == "grade") {
      Report rep(o.json);
      for (auto const& [k, g] : grade_decompose(one_arg())) {
        Json eig = g.eigen.to_string();
        rep.put(std::to_string(k),
                Json{{"l", g.l.to_string()},
                     {"lperp", fmatrix_json(g.lperp)},
                     {"lB", g.lB.to_string()},
                     {"lperpB", fmatrix_json(g.lperpB)},
                     {"eigen", eig}});
      }
      rep.print(out);
      return kOk;
    }
    if (o.verb == "act") {
      need(o, 2);
      UniPoly p = a1_act(parse(o.args[0]), parse_unipoly(o.args[1], Var::x));
      return print_value(o, out, p.to_string(), poly_json(p));
    }
    if (o.verb == "inF") {
      return print_bool(o, out, a1_in_F(one_arg()));
    }
    if (o.verb == "inset") {
      need(o, 2);
      SetDescriptor S{parse_set_tag(o.args[0]), 16};
      return print_tribool(o, out, in_set(parse(o.args[1]), S));
    }
    if (auto r = ore_verbs<A1Element>(o, out, parse)) {
      return *r;
    }
    throw UsageError("unknown verb '" + o.verb + "' for a1");
  }

  inline int run_poly(Options const& o, std::ostream& out) {
    auto parse = [](std::string const& s) { return parse_lfrac(s); };
    auto show = [](LFraction const& a) { return a.to_string(); };
    if (auto r = common_verbs<LFraction>(o, out, lfrac_generators(), parse, show,
                                         lfrac_json)) {
      return *r;
    }
    auto poly_arg = [&]() {
      need(o, 1);
      LFraction f = parse(o.args[0]);
      if (!f.is_polynomial()) {
        throw Error(ErrorKind::InvalidArgument, "argument is not a polynomial");
      }
      return f.num();
    };
    if (o.verb == "mu") {
      std::size_t m = mu_of_poly(poly_arg());
      return print_value(o, out, std::to_string(m), Json(m));
    }
    if (o.verb == "roots") {
      std::string s;
      Json a = Json::array();
      for (auto const& r : natplus_roots(poly_arg())) {
        s += (s.empty() ? "" : " ") + r.get_str();
        a.push_back(r.get_si());
      }
      return print_value(o, out, s, a);
    }
    if (o.verb == "lreg") {
      need(o, 1);
      return print_bool(o, out, l_is_regular(parse(o.args[0])));
    }
    if (o.verb == "shift") {
      need(o, 2);
      LFraction f = lfrac_shift(parse(o.args[0]), parse_long(o.args[1]));
      return print_value(o, out, f.to_string(), lfrac_json(f));
    }
    if (o.verb == "invert") {
      need(o, 1);
      LFraction f = lfrac_invert(parse(o.args[0]));
      return print_value(o, out, f.to_string(), lfrac_json(f));
    }
    if (o.verb == "pf") {
      need(o, 1);
      PartialFractions pf = partial_fractions(parse(o.args[0]));
      SumWriter w;
      if (!pf.poly.is_zero()) {
        Scalar c;
        std::vector<std::string> f;
        split_poly(pf.poly, c, f);
        w.add(c, f);
      }
      Json terms = Json::array();
      for (auto const& [ke, c] : pf.terms) {
        std::string base = ke.first == 0 ? "Hinv" : "Hinv[" + std::to_string(ke.first) + "]";
        w.add(c, {power_string(base, ke.second)});
        terms.push_back(Json::array({ke.first, ke.second, scalar_json(c)}));
      }
      return print_value(o, out, w.str(),
                         Json{{"poly", poly_json(pf.poly)}, {"terms", terms}});
    }
    throw UsageError("unknown verb '" + o.verb + "' for poly");
  }

  inline int dispatch(Options const& o, std::ostream& out) {
    if (o.algebra == "s1") {
      return run_sn(o, 1, out);
    }
    if (o.algebra.rfind("sn:", 0) == 0) {
      long n = parse_long(o.algebra.substr(3));
      if (n < 1 || n > 8) {
        throw UsageError("sn:k needs 1 <= k <= 8");
      }
      return run_sn(o, static_cast<std::size_t>(n), out);
    }
    if (o.algebra == "i1") {
      return run_i1(o, out);
    }
    if (o.algebra == "a1") {
      return run_a1(o, out);
    }
    if (o.algebra == "poly") {
      return run_poly(o, out);
    }
    throw UsageError("unknown algebra '" + o.algebra + "'");
  }

  inline int exit_code(ErrorKind k) {
    switch (k) {
      case ErrorKind::SyntaxError:
      case ErrorKind::UnknownGenerator:
        return kUsage;
      case ErrorKind::NoDegreeFound:
      case ErrorKind::RootSearchLimit:
        return kUnknown;
      default:
        return kDomain;
    }
  }

  //! Runs one command; args exclude the program name.
  inline int run(std::vector<std::string> args, std::ostream& out,
                 std::ostream& err) {
    Options o;
    CLI::App app{"Exact arithmetic and regularity tests for S_n, I_1 and A_1",
                 "opalg"};
    app.add_option("algebra", o.algebra, "s1, sn:k, i1, a1 or poly")->required();
    app.add_option("verb", o.verb, "operation")->required();
    app.add_option("args", o.args, "expressions and verb arguments");
    app.add_option("--bound", o.bound, "search bound for bounded checks");
    app.add_option("--samples", o.samples, "sample count for dencheck/paircheck");
    app.add_option("--seed", o.seed, "random seed");
    app.add_option("--cap", o.cap, "iteration cap for regdeg");
    app.add_option("--set", o.set, "set tag for Ore verbs");
    app.add_option("--tset", o.tset, "second set tag for paircheck");
    app.add_flag("--json", o.json, "JSON output");
    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return kOk;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
    try {
      return dispatch(o, out);
    } catch (UsageError const& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return exit_code(e.kind());
    }
  }

}  // namespace opalg::cli

#endif  // OPALG_CLI_HPP_
