#pragma once

#include <string>

#include "crsym/field.hpp"

namespace crsym {

/// Parse a polynomial expression. Grammar:
///   expr   := ('-')? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := rational | 'i' | 'z1' | 'z2' | 'Z1' | 'Z2' | 'w' | 'W' | 'u'
///           | 'Re(' expr ')' | 'Im(' expr ')' | 'conj(' expr ')'
///           | '(' expr ')'
/// Whitespace is ignored; implicit multiplication is a syntax error.
MixedPoly parse_polynomial(const std::string& text);

/// Parse a vector field: the same grammar extended with the derivation atoms
/// 'd1', 'd2', 'dw'. The result must be a sum of coefficient*derivation
/// terms with holomorphic coefficients.
HoloField parse_field(const std::string& text);

}  // namespace crsym
