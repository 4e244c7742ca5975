#pragma once

#include <string_view>

#include "nijkit/scalar.hpp"

namespace nijkit {

/// Parses an infix expression over the chart's coordinate names.
///
/// Grammar, loosest to tightest binding:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' unary)?          (right associative)
///   primary := integer | identifier | '(' expr ')'
/// Exponents must evaluate to non-negative integer constants. Errors are
/// ParseError carrying the 0-based offset.
ScalarField parse_scalar(std::string_view src, const Chart& chart);

}  // namespace nijkit
