#pragma once

#include <string>

#include "argforge/ast.hpp"

namespace argforge {

/// Canonical layout: 4-space indent, one statement per line, braces on every
/// body, minimal parentheses. parse(pretty_print(a)) is structurally equal
/// to `a`, and pretty_print is byte-stable over that round trip.
std::string pretty_print(const Ast& unit);

std::string print_expr(const Expr& e);
std::string print_type(const Type& t);

} // namespace argforge
