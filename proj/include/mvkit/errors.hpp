// mvkit — exact-arithmetic toolkit for MV-algebras and unital abelian l-groups
// SPDX-License-Identifier: Apache-2.0

#ifndef MVKIT_ERRORS_HPP_
#define MVKIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mvkit {

// Base class for every error mvkit raises on purpose. Anything else escaping
// the library is a bug.
struct MvError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParameter : MvError {
  using MvError::MvError;
};

// Raised when a finite operation table fails one of the defining laws. The
// message names the law and the witness elements.
struct AxiomViolation : MvError {
  using MvError::MvError;
};

// An element was used with an algebra (or group) that does not own it.
struct ForeignElement : MvError {
  using MvError::MvError;
};

// Exhaustive work was requested on a carrier past the supported cap.
struct TooLarge : MvError {
  using MvError::MvError;
};

struct UnsupportedKind : MvError {
  using MvError::MvError;
};

struct UnsupportedGenerators : MvError {
  using MvError::MvError;
};

struct NotAnIdeal : MvError {
  using MvError::MvError;
};

struct NotASubalgebra : MvError {
  using MvError::MvError;
};

struct NotASubchain : MvError {
  using MvError::MvError;
};

struct NotGoodSequence : MvError {
  using MvError::MvError;
};

struct NotALattice : MvError {
  using MvError::MvError;
};

// A Mundici round trip produced anything other than an isomorphism. Firing
// indicates an arithmetic bug, never a property of the input.
struct RoundTripFailure : MvError {
  using MvError::MvError;
};

struct ParseError : MvError {
  ParseError(int line, const std::string& message)
      : MvError("parse error at line " + std::to_string(line) + ": " + message),
        line_number(line) {}
  int line_number;
};

}  // namespace mvkit

#endif  // MVKIT_ERRORS_HPP_
