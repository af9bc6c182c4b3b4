#pragma once

#include <string_view>

#include "cli/document.hpp"

namespace locmult {

// Parses the source format:
//
//   ring Q[t, x, y] uniformizer t
//   ideal I = t - x^2, x*y      # comment
//   ideal Z = 0
//   equidim I
//   claim C = P * 2, Q
//   suite dvr, samuel
//   expect mult(I + (t)) = 2 [DERIVED]
//   check theoremA(I, J) [TRIVIAL]
//
// Declarations end at a newline or `;`.  A newline inside brackets or after
// a comma or binary operator continues the declaration.  Throws ParseError
// (line:column) or UsageError.
SourceDocument parse_source(std::string_view text);

// A single polynomial in the given ring.
Polynomial parse_polynomial(const SignaturePtr& ring, std::string_view text);

}  // namespace locmult
