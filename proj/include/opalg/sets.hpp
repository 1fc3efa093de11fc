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

#ifndef OPALG_SETS_HPP_
#define OPALG_SETS_HPP_

#include <cstddef>
#include <string>

#include "opalg/error.hpp"

namespace opalg {

  enum class Tribool { False, True, Unknown };

  inline char const* to_string(Tribool t) {
    switch (t) {
      case Tribool::False: return "false";
      case Tribool::True: return "true";
      case Tribool::Unknown: return "unknown";
    }
    return "unknown";
  }

  inline Tribool tribool(bool b) {
    return b ? Tribool::True : Tribool::False;
  }

  //! Named multiplicative sets. "Lowering" means y in S_n and d in I_1/A_1;
  //! "raising" means x in S_n, i in I_1 and int = x H^{-1} in A_1.
  enum class SetTag {
    PowersOfY,          //!< powers of the lowering generator
    LeftRegularYPolys,  //!< left regular polynomials in the lowering side
    TildeY,             //!< c with y^a c left regular for some a
    SPlusIdeal,         //!< LeftRegularYPolys + the F-ideal
    FullLeftRegular,    //!< all left regular elements
    PowersOfX,          //!< powers of the raising generator
    Trivial             //!< {1}
  };

  struct SetDescriptor {
    SetTag tag = SetTag::PowersOfY;
    std::size_t bound = 16;  //!< search limit for existential membership
  };

  inline char const* to_string(SetTag t) {
    switch (t) {
      case SetTag::PowersOfY: return "PowersOfY";
      case SetTag::LeftRegularYPolys: return "LeftRegularYPolys";
      case SetTag::TildeY: return "TildeY";
      case SetTag::SPlusIdeal: return "SPlusIdeal";
      case SetTag::FullLeftRegular: return "FullLeftRegular";
      case SetTag::PowersOfX: return "PowersOfX";
      case SetTag::Trivial: return "Trivial";
    }
    return "?";
  }

  inline SetTag parse_set_tag(std::string const& s) {
    for (SetTag t : {SetTag::PowersOfY, SetTag::LeftRegularYPolys,
                     SetTag::TildeY, SetTag::SPlusIdeal,
                     SetTag::FullLeftRegular, SetTag::PowersOfX,
                     SetTag::Trivial}) {
      if (s == to_string(t)) {
        return t;
      }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown set tag '" + s + "'");
  }

}  // namespace opalg

#endif  // OPALG_SETS_HPP_
