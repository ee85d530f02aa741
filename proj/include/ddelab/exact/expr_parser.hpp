#pragma once

#include <initializer_list>
#include <string_view>

#include "ddelab/exact/field_elem.hpp"
#include "ddelab/exact/ratfunc.hpp"

namespace ddelab {

/// Parses an exact rational expression: integers, "p/q", the imaginary unit i,
/// symbols, + - * / ^ (integer exponents, possibly negative) and parentheses.
/// Whitespace, including newlines, is ignored. Errors raise ParseError with
/// the 1-based line and column of the offending character.
FieldElem parse_expression(std::string_view text, std::initializer_list<Var> allowed = {Var::z});

/// Parses a rational function of z; the parameters lambda, mu, nu, k are also
/// accepted when allow_params is set.
RatFunc parse_ratfunc(std::string_view text, bool allow_params = false);

} // namespace ddelab
