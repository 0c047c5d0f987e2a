#pragma once

#include "approxjac/bipoly.hpp"
#include "approxjac/core.hpp"

#include <string_view>

namespace approxjac {

// Grammar (whitespace insignificant, no implicit multiplication):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := '(' expr ')' | 'x' | 'y' | digits ('/' digits)?
// A leading '+' or '-' on an expression is accepted. Throws ParseError with
// a 1-based line and column.
BiPoly parse_poly(std::string_view text);

}  // namespace approxjac
