#pragma once

#include <string_view>

namespace argforge {

/// Lines of code: physical lines that are neither blank nor comment-only.
/// A line holding only the tail of a block comment does not count; a line
/// with code after `*/` does.
int loc_count(std::string_view source);

} // namespace argforge
