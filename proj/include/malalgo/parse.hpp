#pragma once

#include <string_view>

#include "malalgo/expr.hpp"

namespace malalgo {

// Parses the canonical equation grammar:
//
//   equation := expr '=' expr
//   expr     := term (('+' | '-') term)*          left-associative
//   term     := factor ('*' factor)*              left-associative
//   factor   := '-' factor | atom
//   atom     := NUMBER 'x'            coefficient times x, "4x"
//             | NUMBER '(' expr ')'   scalar times group, "3(4x + 5)"
//             | NUMBER                "7" or "7/2"
//             | 'x'
//             | '(' expr ')'          bare group, kept as a factor-1 ScaledE
//
//   NUMBER := digits ('/' digits)?    fraction literals are one token
//
// Surface structure is preserved (no expansion, no product evaluation).
// Throws SyntaxError on malformed input and NonlinearError when the parsed
// equation has degree > 1 in x.
Equation parse(std::string_view text);

// Convenience for expression fragments in tests.
ExprPtr parse_expr(std::string_view text);

}  // namespace malalgo
