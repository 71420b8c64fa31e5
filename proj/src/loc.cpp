#include "argforge/loc.hpp"

#include <cctype>

namespace argforge {

int loc_count(std::string_view source) {
    int count = 0;
    bool in_block_comment = false;
    bool line_has_code = false;
    bool in_string = false;
    bool in_char = false;

    size_t i = 0;
    auto end_line = [&] {
        if (line_has_code) count++;
        line_has_code = false;
        in_string = in_char = false;   // unterminated literal, be lenient
    };

    while (i < source.size()) {
        char c = source[i];
        if (c == '\n') {
            end_line();
            i++;
            continue;
        }
        if (in_block_comment) {
            if (c == '*' && i + 1 < source.size() && source[i + 1] == '/') {
                in_block_comment = false;
                i += 2;
                continue;
            }
            i++;
            continue;
        }
        if (in_string || in_char) {
            line_has_code = true;
            if (c == '\\' && i + 1 < source.size()) {
                i += 2;
                continue;
            }
            if (in_string && c == '"') in_string = false;
            if (in_char && c == '\'') in_char = false;
            i++;
            continue;
        }
        if (c == '/' && i + 1 < source.size() && source[i + 1] == '/') {
            // rest of line is comment
            while (i < source.size() && source[i] != '\n') i++;
            continue;
        }
        if (c == '/' && i + 1 < source.size() && source[i + 1] == '*') {
            in_block_comment = true;
            i += 2;
            continue;
        }
        if (c == '"') {
            in_string = true;
            line_has_code = true;
            i++;
            continue;
        }
        if (c == '\'') {
            in_char = true;
            line_has_code = true;
            i++;
            continue;
        }
        if (!std::isspace((unsigned char)c)) line_has_code = true;
        i++;
    }
    end_line();
    return count;
}

} // namespace argforge
