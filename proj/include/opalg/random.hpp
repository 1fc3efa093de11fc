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

#ifndef OPALG_RANDOM_HPP_
#define OPALG_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "opalg/scalar.hpp"

namespace opalg {

  //! Seeded generator. Helpers use plain modulo reduction so that output is
  //! identical across standard library implementations.
  class Rng {
   public:
    explicit Rng(std::uint64_t seed = 1) : _g(seed) {}

    //! Uniform-ish integer in [lo, hi].
    long range(long lo, long hi) {
      auto span = static_cast<std::uint64_t>(hi - lo + 1);
      return lo + static_cast<long>(_g() % span);
    }
    bool coin() {
      return (_g() & 1U) != 0;
    }
    //! Nonzero integer in [-m, m].
    Scalar nonzero(long m) {
      long v = range(1, m);
      return coin() ? Scalar(v) : Scalar(-v);
    }
    //! Random element of {-m..m} / {1..dmax}.
    Scalar rational(long m, long dmax = 1) {
      return make_scalar(range(-m, m), range(1, dmax));
    }

   private:
    std::mt19937_64 _g;
  };

}  // namespace opalg

#endif  // OPALG_RANDOM_HPP_
