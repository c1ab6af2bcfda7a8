#pragma once

#include "dulac/extexpr.hpp"

#include <string>

namespace dulac {

// Text form: integers, rationals p/q, decimals, symbols, + - * / ^,
// parentheses, abs_y^m and exp(...). '/' only by numeric constants.
ExtExpr parse_extexpr(const std::string& text);

// Same grammar, but |y| and exp factors are rejected.
ParamPoly parse_poly(const std::string& text);

}  // namespace dulac
