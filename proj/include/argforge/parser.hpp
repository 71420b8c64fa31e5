#pragma once

#include <string_view>
#include <vector>

#include "argforge/ast.hpp"
#include "argforge/lexer.hpp"

namespace argforge {

/// Parses one compilation unit of the source subset. Anything outside the
/// subset fails the whole file with CompileError("PARSE_FAIL", ...); there
/// are no partial ASTs. Single-statement bodies of if/while/for are
/// normalized into blocks.
Ast parse(const std::vector<Token>& tokens);

/// tokenize + parse.
Ast parse_source(std::string_view source);

} // namespace argforge
