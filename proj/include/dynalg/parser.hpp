#pragma once

#include <string_view>

#include "dynalg/rational_function.hpp"

namespace dynalg {

/// Parses an expression in `z` built from scalar literals, `+ - * / ^` and
/// parentheses. Exponents are nonnegative integer literals. In Qi mode the
/// bare symbol `i` and literals such as `3/4i` denote imaginary constants.
///
/// Throws ParseError (with position and expected token) or ZeroDenominator.
RationalFunction parse_ratfunc(std::string_view text, Field field = Field::Qi);

}  // namespace dynalg
