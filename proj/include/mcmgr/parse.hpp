#pragma once

// Polynomial expression parser.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := int | var | '(' expr ')'
//
// Whitespace is insignificant. Integer literals are reduced mod p.

#include <string_view>
#include <vector>
#include <string>

#include "mcmgr/field.hpp"
#include "mcmgr/poly.hpp"

namespace mcmgr {

/// Throws ParseError with a 1-based column (line is always 1; callers that
/// embed expressions in files re-anchor the position).
Poly parse_poly(std::string_view text, const std::vector<std::string>& vars, const PrimeField& field);

}  // namespace mcmgr
