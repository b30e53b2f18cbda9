#pragma once

#include "plateau/bigint.hpp"

#include <map>
#include <string>

namespace plateau {

using ExprVars = std::map<std::string, BigRational>;

// Evaluates + - * / ^ and parentheses over exact rationals. Exponents must be integers.
BigRational eval_expr(const std::string& text, const ExprVars& vars);

}  // namespace plateau
