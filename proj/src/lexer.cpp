#include "argforge/lexer.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <unordered_set>

namespace argforge {

namespace {

const std::unordered_set<std::string_view> kKeywords = {
    "package", "import", "class", "public", "private", "protected",
    "static", "final", "if", "else", "while", "for", "return",
    "assert", "throw", "new", "true", "false", "void",
    "boolean", "byte", "char", "short", "int", "long", "float", "double",
    // reserved but outside the subset; lexed as keywords so the parser
    // rejects them with a clean diagnostic
    "abstract", "break", "case", "catch", "const", "continue", "default",
    "do", "enum", "extends", "finally", "implements", "instanceof",
    "interface", "native", "null", "super", "switch", "synchronized", "throws",
    "this", "transient", "try", "volatile", "strictfp", "goto",
};

struct Cursor {
    std::string_view src;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    bool eof() const { return pos >= src.size(); }
    char peek(size_t ahead = 0) const {
        return pos + ahead < src.size() ? src[pos + ahead] : '\0';
    }
    char advance() {
        char c = src[pos++];
        if (c == '\n') { line++; col = 1; } else { col++; }
        return c;
    }
};

[[noreturn]] void fail(const Cursor& c, const std::string& msg) {
    SourceSpan s{c.line, c.col, c.line, c.col};
    throw CompileError("LEX_FAIL", s, msg + " at " + to_string(s));
}

uint32_t decode_escape(Cursor& c) {
    if (c.eof()) fail(c, "unterminated escape");
    char e = c.advance();
    switch (e) {
        case 'n': return '\n';
        case 't': return '\t';
        case 'r': return '\r';
        case 'b': return '\b';
        case 'f': return '\f';
        case '0': return '\0';
        case '\\': return '\\';
        case '\'': return '\'';
        case '"': return '"';
        default: fail(c, std::string("unsupported escape \\") + e);
    }
}

bool ident_start(char ch) { return std::isalpha((unsigned char)ch) || ch == '_' || ch == '$'; }
bool ident_char(char ch) { return std::isalnum((unsigned char)ch) || ch == '_' || ch == '$'; }

} // namespace

bool is_keyword(std::string_view word) { return kKeywords.count(word) > 0; }

std::vector<Token> tokenize(std::string_view source) {
    std::vector<Token> out;
    Cursor c{source};

    while (!c.eof()) {
        char ch = c.peek();
        if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
            c.advance();
            continue;
        }
        if (ch == '/' && c.peek(1) == '/') {
            while (!c.eof() && c.peek() != '\n') c.advance();
            continue;
        }
        if (ch == '/' && c.peek(1) == '*') {
            c.advance(); c.advance();
            while (!(c.peek() == '*' && c.peek(1) == '/')) {
                if (c.eof()) fail(c, "unterminated block comment");
                c.advance();
            }
            c.advance(); c.advance();
            continue;
        }

        Token t;
        t.span.start_line = c.line;
        t.span.start_col = c.col;

        if (ident_start(ch)) {
            std::string word;
            while (!c.eof() && ident_char(c.peek())) word += c.advance();
            t.kind = is_keyword(word) ? TokKind::Keyword : TokKind::Ident;
            t.text = std::move(word);
        } else if (std::isdigit((unsigned char)ch) ||
                   (ch == '.' && std::isdigit((unsigned char)c.peek(1)))) {
            std::string num;
            bool is_hex = false;
            if (ch == '0' && (c.peek(1) == 'x' || c.peek(1) == 'X')) {
                is_hex = true;
                num += c.advance();
                num += c.advance();
                while (std::isxdigit((unsigned char)c.peek()) || c.peek() == '_')
                    num += c.advance();
            } else {
                bool seen_dot = false, seen_exp = false;
                while (true) {
                    char p = c.peek();
                    if (std::isdigit((unsigned char)p) || p == '_') {
                        num += c.advance();
                    } else if (p == '.' && !seen_dot && !seen_exp &&
                               std::isdigit((unsigned char)c.peek(1))) {
                        seen_dot = true;
                        num += c.advance();
                    } else if ((p == 'e' || p == 'E') && !seen_exp &&
                               (std::isdigit((unsigned char)c.peek(1)) ||
                                ((c.peek(1) == '+' || c.peek(1) == '-') &&
                                 std::isdigit((unsigned char)c.peek(2))))) {
                        seen_exp = true;
                        num += c.advance();
                        if (c.peek() == '+' || c.peek() == '-') num += c.advance();
                    } else {
                        break;
                    }
                }
            }
            std::erase(num, '_');
            char suffix = c.peek();
            bool is_fp = num.find('.') != std::string::npos ||
                         num.find('e') != std::string::npos ||
                         num.find('E') != std::string::npos;
            if (!is_hex && (suffix == 'f' || suffix == 'F')) {
                c.advance();
                t.kind = TokKind::FloatLit;
                t.float_value = std::strtod(num.c_str(), nullptr);
            } else if (!is_hex && (suffix == 'd' || suffix == 'D')) {
                c.advance();
                t.kind = TokKind::DoubleLit;
                t.float_value = std::strtod(num.c_str(), nullptr);
            } else if (is_fp) {
                t.kind = TokKind::DoubleLit;
                t.float_value = std::strtod(num.c_str(), nullptr);
            } else {
                bool is_long = false;
                if (suffix == 'l' || suffix == 'L') {
                    c.advance();
                    is_long = true;
                }
                t.kind = is_long ? TokKind::LongLit : TokKind::IntLit;
                t.int_value = std::strtoll(num.c_str(), nullptr, is_hex ? 16 : 10);
            }
        } else if (ch == '\'') {
            c.advance();
            if (c.eof()) fail(c, "unterminated char literal");
            uint32_t v;
            char b = c.advance();
            if (b == '\\') {
                v = decode_escape(c);
            } else if (b == '\'') {
                fail(c, "empty char literal");
            } else {
                v = (unsigned char)b;
            }
            if (c.eof() || c.advance() != '\'') fail(c, "unterminated char literal");
            t.kind = TokKind::CharLit;
            t.char_value = v;
        } else if (ch == '"') {
            c.advance();
            std::string s;
            while (true) {
                if (c.eof()) fail(c, "unterminated string literal");
                char b = c.advance();
                if (b == '"') break;
                if (b == '\n') fail(c, "newline in string literal");
                if (b == '\\') s += (char)decode_escape(c);
                else s += b;
            }
            t.kind = TokKind::StringLit;
            t.string_value = std::move(s);
        } else {
            static const char* three[] = {">>>", nullptr};
            static const char* two[] = {"<=", ">=", "==", "!=", "&&", "||",
                                        "<<", ">>", nullptr};
            std::string p;
            for (int i = 0; three[i]; i++)
                if (source.substr(c.pos, 3) == three[i]) p = three[i];
            if (p.empty())
                for (int i = 0; two[i]; i++)
                    if (source.substr(c.pos, 2) == two[i]) p = two[i];
            if (p.empty()) {
                static const std::string singles = "+-*/%<>=!&|^~?:.,;()[]{}@";
                if (singles.find(ch) == std::string::npos)
                    fail(c, std::string("illegal character '") + ch + "'");
                p = std::string(1, ch);
            }
            for (size_t i = 0; i < p.size(); i++) c.advance();
            t.kind = TokKind::Punct;
            t.text = p;
        }

        t.span.end_line = c.line;
        t.span.end_col = c.col > 1 ? c.col - 1 : c.col;
        out.push_back(std::move(t));
    }

    Token eof;
    eof.kind = TokKind::Eof;
    eof.span = {c.line, c.col, c.line, c.col};
    out.push_back(eof);
    return out;
}

} // namespace argforge
