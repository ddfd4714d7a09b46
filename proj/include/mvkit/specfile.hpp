// mvkit — exact-arithmetic toolkit for MV-algebras and unital abelian l-groups
// SPDX-License-Identifier: Apache-2.0

#ifndef MVKIT_SPECFILE_HPP_
#define MVKIT_SPECFILE_HPP_

#include <string>

#include "mvkit/algebra.hpp"

namespace mvkit {

// Parses an algebra description file (header "mvkit-algebra v1"), constructs
// the algebra and verifies its laws. Kind-specific fields:
//
//   kind = chain             n = <int>
//   kind = divisible-chain
//   kind = table             size, oplus (row-major), neg, zero, one
//   kind = product           factors = <paths relative to this file>
//   kind = quotient          base = <path>, ideal = <element literals>
//   kind = gamma             rank, generators = [p/q ...] ..., unit = [...],
//                            divisible = true|false (default false)
//
// Raises ParseError with a line number, or AxiomViolation from construction.
AlgebraPtr parse_spec(const std::string& path);

// Element literal for the given algebra: a rational "1/3" on chains, a tuple
// "(1/2,0)" on products, a label or index on tables, a vector "[1/2,0]" on
// gamma intervals, a base literal on quotients (naming the class).
Element parse_element(const AlgebraPtr& a, const std::string& text);

}  // namespace mvkit

#endif  // MVKIT_SPECFILE_HPP_
