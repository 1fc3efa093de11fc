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

#ifndef OPALG_ERROR_HPP_
#define OPALG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace opalg {

  enum class ErrorKind {
    ZeroPolynomial,
    ZeroElement,
    NotInvertibleInL,
    BackwardShiftOutOfL,
    PoleEvaluation,
    RootSearchLimit,
    DimensionMismatch,
    ElementInF,
    NoDegreeFound,
    NotADenominator,
    DivisionByZeroImage,
    NotInScalarSubalgebra,
    UnsplittableComponent,
    SyntaxError,
    UnknownGenerator,
    InvalidArgument
  };

  inline char const* to_string(ErrorKind k) {
    switch (k) {
      case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
      case ErrorKind::ZeroElement: return "ZeroElement";
      case ErrorKind::NotInvertibleInL: return "NotInvertibleInL";
      case ErrorKind::BackwardShiftOutOfL: return "BackwardShiftOutOfL";
      case ErrorKind::PoleEvaluation: return "PoleEvaluation";
      case ErrorKind::RootSearchLimit: return "RootSearchLimit";
      case ErrorKind::DimensionMismatch: return "DimensionMismatch";
      case ErrorKind::ElementInF: return "ElementInF";
      case ErrorKind::NoDegreeFound: return "NoDegreeFound";
      case ErrorKind::NotADenominator: return "NotADenominator";
      case ErrorKind::DivisionByZeroImage: return "DivisionByZeroImage";
      case ErrorKind::NotInScalarSubalgebra: return "NotInScalarSubalgebra";
      case ErrorKind::UnsplittableComponent: return "UnsplittableComponent";
      case ErrorKind::SyntaxError: return "SyntaxError";
      case ErrorKind::UnknownGenerator: return "UnknownGenerator";
      case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
  }

  //! Every failure raised by the library carries one of the kinds above so
  //! that front ends can map it to an exit status without string matching.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  //! Syntax errors additionally remember the byte offset of the problem.
  class SyntaxError : public Error {
   public:
    SyntaxError(ErrorKind kind, std::size_t offset, std::string const& what)
        : Error(kind, what + " at offset " + std::to_string(offset)),
          _offset(offset) {}

    std::size_t offset() const noexcept {
      return _offset;
    }

   private:
    std::size_t _offset;
  };

}  // namespace opalg

#endif  // OPALG_ERROR_HPP_
