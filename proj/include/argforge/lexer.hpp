#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "argforge/source.hpp"

namespace argforge {

enum class TokKind {
    Ident, Keyword,
    IntLit, LongLit, FloatLit, DoubleLit, CharLit, StringLit,
    Punct,   // operators and punctuation, text in `text`
    Eof,
};

struct Token {
    TokKind kind = TokKind::Eof;
    std::string text;        // identifier / keyword / punct spelling
    long long int_value = 0;
    double float_value = 0;
    uint32_t char_value = 0;
    std::string string_value;   // decoded string literal
    SourceSpan span{};
};

/// Throws CompileError("LEX_FAIL", ...) on an illegal character or malformed
/// literal. Comments and whitespace are skipped; the trailing Eof token is
/// always present.
std::vector<Token> tokenize(std::string_view source);

bool is_keyword(std::string_view word);

} // namespace argforge
