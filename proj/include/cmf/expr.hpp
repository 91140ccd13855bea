#pragma once

#include <string>

#include "cmf/mpoly.hpp"

namespace cmf {

// Parses an arithmetic expression over the declared variables into a
// polynomial: integer and rational literals, + - * / ^, parentheses, unary
// sign. Division requires a nonzero constant divisor; exponents are
// unsigned integer literals. Errors are ParseError with 1-based positions;
// `line` seeds the reported line number for file-embedded expressions.
MPoly parseExpression(const std::string& text, const VarList& vars, int line = 1);

// Constant expression, e.g. a parameter value on the command line.
Rat parseRationalExpr(const std::string& text, int line = 1);

} // namespace cmf
