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

#ifndef OPALG_SCALAR_HPP_
#define OPALG_SCALAR_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <string>

#include "opalg/error.hpp"

namespace opalg {

  //! The base field: exact rationals. gmpxx keeps numerator and denominator
  //! coprime with a positive denominator once canonicalize() has run.
  using Scalar = mpq_class;

  inline Scalar make_scalar(long num, long den = 1) {
    if (den == 0) {
      throw Error(ErrorKind::InvalidArgument, "zero denominator");
    }
    Scalar q(num, den);
    q.canonicalize();
    return q;
  }

  //! Canonical text form "p/q", or "p" when q = 1.
  inline std::string to_string(Scalar const& q) {
    if (q.get_den() == 1) {
      return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }

  //! Always "p/q" (denominator shown even when 1); used by the JSON encoders.
  inline std::string to_fraction_string(Scalar const& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }

  inline Scalar parse_scalar(std::string const& s) {
    Scalar q;
    if (q.set_str(s, 10) != 0) {
      throw Error(ErrorKind::InvalidArgument, "bad rational literal '" + s + "'");
    }
    if (q.get_den() == 0) {
      throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + s + "'");
    }
    q.canonicalize();
    return q;
  }

  inline mpz_class factorial(std::size_t n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
  }

  //! Falling factorial m(m-1)...(m-b+1); zero when b > m.
  inline mpz_class falling(std::size_t m, std::size_t b) {
    if (b > m) {
      return 0;
    }
    mpz_class r = 1;
    for (std::size_t t = 0; t < b; ++t) {
      r *= static_cast<unsigned long>(m - t);
    }
    return r;
  }

  inline Scalar power(Scalar const& q, std::size_t e) {
    Scalar r = 1;
    for (std::size_t i = 0; i < e; ++i) {
      r *= q;
    }
    return r;
  }

}  // namespace opalg

#endif  // OPALG_SCALAR_HPP_
