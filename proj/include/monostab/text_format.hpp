#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "monostab/ideal.hpp"

namespace monostab {

// Plain-text ideal files:
//
//   # comment
//   vars: x, y
//   x^3
//   x^2*y
//   y^3
//
// One generator per line, `*` between factors, exponent 1 may be omitted,
// `1` is the unit monomial. Whitespace is ignored. No generator lines
// describes the zero ideal. Errors throw InputError with line and column.
MonomialIdeal parse_ideal(std::istream& in);
MonomialIdeal parse_ideal(std::string_view text);

// Single generator in the given ring, e.g. "x1^2*x3".
Monomial parse_monomial(std::string_view text, const VariableContext& ctx);

std::string format_ideal(const MonomialIdeal& I);

}  // namespace monostab
