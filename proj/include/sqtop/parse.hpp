#pragma once

#include <string>

#include "sqtop/poly.hpp"

namespace sqtop {

// Grammar:  expr   := ['-'] term (('+'|'-') term)*
//           term   := factor ('*' factor)*
//           factor := atom ('^' uint)?
//           atom   := identifier | uint | '(' expr ')'
// '-' binds only in the integer domain; GF(2) input rejects it. Integer
// literals reduce mod 2 in the GF(2) domains. Parsing round-trips render.
Gf2Poly parse_class(const std::string& text, const GeneratorTable& gens,
                    const ParamTable& params);
IntPoly parse_int_class(const std::string& text, const GeneratorTable& gens);

}  // namespace sqtop
