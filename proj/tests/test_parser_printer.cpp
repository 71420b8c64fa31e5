#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "argforge/parser.hpp"
#include "argforge/printer.hpp"

using namespace argforge;
namespace fs = std::filesystem;

static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

static std::vector<fs::path> grammar_fixtures() {
    std::vector<fs::path> files;
    for (auto& e : fs::directory_iterator(fs::path(FIXTURE_DIR) / "grammar"))
        if (e.path().extension() == ".java") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    return files;
}

TEST_CASE("round trip over the grammar corpus") {
    auto files = grammar_fixtures();
    CHECK(files.size() >= 25);
    for (const auto& f : files) {
        CAPTURE(f.filename().string());
        Ast a = parse_source(slurp(f));
        std::string printed = pretty_print(a);
        Ast b = parse_source(printed);
        CHECK(structurally_equal(a, b));
        // canonical form is a fixed point of print∘parse
        CHECK(pretty_print(b) == printed);
    }
}

TEST_CASE("single-statement bodies normalize to blocks") {
    Ast a = parse_source("class A { void f(int n) { if (n > 0) n = 0; } }");
    Ast b = parse_source("class A { void f(int n) { if (n > 0) { n = 0; } } }");
    CHECK(structurally_equal(a, b));
}

TEST_CASE("redundant parentheses are dropped") {
    Ast a = parse_source("class A { int f(int x) { return ((x) + (1)); } }");
    Ast b = parse_source("class A { int f(int x) { return x + 1; } }");
    CHECK(structurally_equal(a, b));
}

TEST_CASE("printer re-parenthesizes by precedence") {
    Ast a = parse_source("class A { int f(int x, int y) { return (x + y) * 2; } }");
    CHECK(pretty_print(a).find("(x + y) * 2") != std::string::npos);
    Ast b = parse_source("class A { int f(int x, int y) { return x - (y - 1); } }");
    CHECK(pretty_print(b).find("x - (y - 1)") != std::string::npos);
    Ast c = parse_source("class A { int f(int x) { return x + x * 2; } }");
    CHECK(pretty_print(c).find("x + x * 2") != std::string::npos);
}

TEST_CASE("sign clashes stay parenthesized") {
    Ast a = parse_source("class A { int f(int x) { return -(-x); } }");
    std::string s = pretty_print(a);
    CHECK(s.find("--") == std::string::npos);
    CHECK(structurally_equal(a, parse_source(s)));
}

TEST_CASE("else-if chains render flat") {
    Ast a = parse_source(
        "class A { int f(int x) { if (x > 2) { return 2; } else if (x > 1) "
        "{ return 1; } else { return 0; } } }");
    std::string s = pretty_print(a);
    CHECK(s.find("} else if (x > 1) {") != std::string::npos);
    CHECK(structurally_equal(a, parse_source(s)));
}

TEST_CASE("float literals keep a decimal point") {
    Ast a = parse_source("class A { double f() { return 5.0; } }");
    CHECK(pretty_print(a).find("5.0") != std::string::npos);
    Ast b = parse_source("class A { float f() { return 1.5f; } }");
    CHECK(pretty_print(b).find("1.5f") != std::string::npos);
}

TEST_CASE("out-of-subset constructs fail as PARSE_FAIL") {
    auto rejects = [](const char* src) {
        try {
            parse_source(src);
            FAIL_CHECK("accepted: " << src);
        } catch (const CompileError& e) {
            CHECK(e.code() == "PARSE_FAIL");
        }
    };
    rejects("class A { void f(java.util.List<Integer> l) { } }");
    rejects("class A extends B { }");
    rejects("interface A { }");
    rejects("class A { A() { } }");
    rejects("class A { void f() { x += 1; } }");
    rejects("class A { void f() { int a = 1, b = 2; } }");
    rejects("class A { void f() { int[][] m; } }");
    rejects("class A { class Inner { } }");
    rejects("class A { } class B { }");
    rejects("class A { void f() throws Exception { } }");
    rejects("class A { void f() { for (;;) break; } }");
    rejects("import static java.lang.Math.abs; class A { }");
}

TEST_CASE("casts only target primitives") {
    Ast a = parse_source("class A { int f(double d) { return (int) d; } }");
    CHECK(structurally_equal(a, parse_source(pretty_print(a))));
    // a parenthesized name is an expression, not a cast
    Ast b = parse_source("class A { int f(int Widget, int x) { return (Widget) + x; } }");
    std::string s = pretty_print(b);
    CHECK(s.find("Widget + x") != std::string::npos);
}

TEST_CASE("package and imports survive the round trip") {
    Ast a = parse_source("package a.b.c;\nimport x.y.Z;\nimport u.v.*;\nclass A { }");
    REQUIRE(a.package_name.has_value());
    CHECK(*a.package_name == "a.b.c");
    REQUIRE(a.imports.size() == 2);
    CHECK(a.imports[1] == "u.v.*");
    CHECK(structurally_equal(a, parse_source(pretty_print(a))));
}

TEST_CASE("entry point detection") {
    Ast a = parse_source("public class A { public static void main(String[] args) { } }");
    REQUIRE(a.cls.methods.size() == 1);
    CHECK(a.cls.methods[0].is_entry());
    Ast b = parse_source("class A { void main(int x) { } }");
    CHECK(!b.cls.methods[0].is_entry());
}
