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

#ifndef OPALG_TRUNCATION_HPP_
#define OPALG_TRUNCATION_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "opalg/linalg.hpp"
#include "opalg/unipoly.hpp"

namespace opalg {

  //! Injectivity of a linear map on the polynomials of degree <= top,
  //! given the image of each monomial v^s.
  struct InjectivityResult {
    bool injective = true;
    std::size_t rank = 0;
    std::size_t domain_dim = 0;
    std::optional<UniPoly> kernel;
  };

  template <class ImageOf>
  InjectivityResult injectivity_test(long top, Var v, ImageOf image_of) {
    InjectivityResult res;
    if (top < 0) {
      return res;
    }
    std::size_t dim = static_cast<std::size_t>(top) + 1;
    std::vector<UniPoly> imgs;
    long rows = 0;
    for (std::size_t s = 0; s < dim; ++s) {
      imgs.push_back(image_of(s));
      rows = std::max(rows, imgs.back().degree() + 1);
    }
    Matrix m(static_cast<std::size_t>(rows), dim);
    for (std::size_t s = 0; s < dim; ++s) {
      for (long r = 0; r <= imgs[s].degree(); ++r) {
        m(static_cast<std::size_t>(r), s) = imgs[s].coeff(r);
      }
    }
    res.domain_dim = dim;
    auto ns = nullspace(m);
    res.rank = dim - ns.size();
    res.injective = ns.empty();
    if (!ns.empty()) {
      res.kernel = UniPoly(ns.front(), v);
    }
    return res;
  }

}  // namespace opalg

#endif  // OPALG_TRUNCATION_HPP_
