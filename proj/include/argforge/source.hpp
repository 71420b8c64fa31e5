#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace argforge {

/// Half-open is overkill here; spans are inclusive (line, column) pairs,
/// 1-based, as diagnostics print them.
struct SourceSpan {
    int start_line = 0;
    int start_col = 0;
    int end_line = 0;
    int end_col = 0;

    bool operator==(const SourceSpan&) const = default;

    bool contains(const SourceSpan& other) const {
        auto le = [](int l1, int c1, int l2, int c2) {
            return l1 < l2 || (l1 == l2 && c1 <= c2);
        };
        return le(start_line, start_col, other.start_line, other.start_col) &&
               le(other.end_line, other.end_col, end_line, end_col);
    }
};

inline std::string to_string(const SourceSpan& s) {
    return std::to_string(s.start_line) + ":" + std::to_string(s.start_col);
}

/// Thrown by tokenize/parse/build_type_table. `code` is the machine-readable
/// reason (LEX_FAIL, PARSE_FAIL, RESOLVE_FAIL) recorded in stage reports.
class CompileError : public std::runtime_error {
public:
    CompileError(std::string code, SourceSpan span, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)), span_(span) {}

    const std::string& code() const { return code_; }
    const SourceSpan& span() const { return span_; }

private:
    std::string code_;
    SourceSpan span_;
};

} // namespace argforge
