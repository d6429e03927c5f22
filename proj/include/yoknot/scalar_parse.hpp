#pragma once

#include <string>

#include "yoknot/ratfunc.hpp"

namespace yoknot {

// Text grammar for scalar values in configs:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-'* atom ('^' int)?
//   atom   := integer | 'q' | 'v'<idx> | 'z'<d> | '(' expr ')'
// 'z'<d> denotes zeta_d and must match the context d; 'v'<idx> requires a
// finite m with 1 <= idx <= m. Throws ParseError with the offending
// position.
RatFunc parse_scalar(const std::string& text, int d, int m);

}  // namespace yoknot
