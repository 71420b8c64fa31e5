#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "argforge/loc.hpp"

using namespace argforge;

TEST_CASE("blank and comment-only lines do not count") {
    CHECK(loc_count("") == 0);
    CHECK(loc_count("\n\n\n") == 0);
    CHECK(loc_count("int x;\n") == 1);
    CHECK(loc_count("int x;\nint y;") == 2);
    CHECK(loc_count("// only a comment\n") == 0);
    CHECK(loc_count("   \t  \n") == 0);
}

TEST_CASE("block comments") {
    CHECK(loc_count("/* a\n * b\n */\n") == 0);
    // code after the closing marker counts
    CHECK(loc_count("/* a\n */ int x;\n") == 1);
    // code before the opening marker counts
    CHECK(loc_count("int x; /* tail\nstill comment */\n") == 1);
}

TEST_CASE("comment markers inside strings are literal") {
    CHECK(loc_count("String s = \"//not a comment\";\n") == 1);
    CHECK(loc_count("String s = \"/*\";\nint x;\n") == 2);
}

TEST_CASE("mixed file") {
    const char* src =
        "// header\n"
        "\n"
        "class A {\n"
        "    /* doc */\n"
        "    int x; // trailing\n"
        "}\n";
    CHECK(loc_count(src) == 3);
}
