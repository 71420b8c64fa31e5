#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "argforge/filter.hpp"
#include "argforge/parser.hpp"

using namespace argforge;

namespace {

FeatureProfile profile_src(const std::string& src, std::set<Prim> chosen = {Prim::Int, Prim::Double}) {
    Ast unit = parse_source(src);
    TypeTable table = build_type_table(unit, Allowlist::builtin_default());
    assign_ids(unit);
    return profile(unit, chosen, table);
}

} // namespace

TEST_CASE("feature counts on a representative unit") {
    FeatureProfile p = profile_src(
        "class A {\n"
        "    int f(int x, boolean b) {\n"
        "        if (x > 0 && b) { x = x - 1; }\n"
        "        if (b) { x = 0; }\n"
        "        while (x < 10) { x = x + 1; }\n"
        "        for (int i = 0; i < 3; i = i + 1) { x = x + i; }\n"
        "        int y = (int) 2.5;\n"
        "        int[] a = new int[4];\n"
        "        assert x >= 0;\n"
        "        return x;\n"
        "    }\n"
        "\n"
        "    void g() { }\n"
        "}\n");
    CHECK(p.if_count == 2);
    CHECK(p.if_on_chosen_primitive == 1);   // second if touches only boolean
    CHECK(p.loop_count == 2);
    CHECK(p.boolean_connective_count == 1);
    CHECK(p.type_expression_count == 2);    // one cast + one array creation
    CHECK(p.type_parameter_count == 0);
    CHECK(p.assert_count == 1);
    CHECK(p.method_count == 2);
}

TEST_CASE("chosen-primitive detection looks at the whole condition subtree") {
    // int appears only nested inside the condition
    FeatureProfile p = profile_src(
        "class A { void f(int x, boolean b) { if (b && x > 0) { } } }");
    CHECK(p.if_on_chosen_primitive == 1);

    // char-only comparison does not count for {int, double}
    FeatureProfile q = profile_src(
        "class A { boolean f(char c) { if (c == 'a' || c == 'e') { return true; } return false; } }");
    CHECK(q.if_count == 1);
    CHECK(q.if_on_chosen_primitive == 0);

    // double counts
    FeatureProfile r = profile_src(
        "class A { void f(double d) { if (d > 0.5) { } } }");
    CHECK(r.if_on_chosen_primitive == 1);
}

TEST_CASE("chosen set is respected") {
    FeatureProfile p = profile_src(
        "class A { void f(long n) { if (n > 0L) { } } }", {Prim::Long});
    CHECK(p.if_on_chosen_primitive == 1);
    FeatureProfile q = profile_src(
        "class A { void f(long n) { if (n > 0L) { } } }", {Prim::Int});
    // the comparison operands are long; the literal is long too
    CHECK(q.if_on_chosen_primitive == 0);
}

TEST_CASE("unresolvable condition operands do not contribute") {
    FeatureProfile p = profile_src(
        "class A { void f() { if (mystery) { } } }");
    CHECK(p.if_count == 1);
    CHECK(p.if_on_chosen_primitive == 0);
}

TEST_CASE("accept is a pure conjunction") {
    FeatureProfile p;
    p.if_count = 2;
    p.if_on_chosen_primitive = 1;
    p.loop_count = 1;
    p.method_count = 3;

    FilterCriteria c;
    CHECK(accept(p, c));   // all-zero thresholds
    c.min_if = 2;
    c.min_methods = 3;
    CHECK(accept(p, c));
    c.min_loops = 2;
    CHECK(!accept(p, c));
    c.min_loops = 0;
    c.min_type_parameters = 1;   // never satisfiable in the subset
    CHECK(!accept(p, c));
}

TEST_CASE("nested ifs all count") {
    FeatureProfile p = profile_src(
        "class A { void f(int x) { if (x > 0) { if (x > 1) { if (x > 2) { } } } } }");
    CHECK(p.if_count == 3);
    CHECK(p.if_on_chosen_primitive == 3);
}

TEST_CASE("fixture oracle: every corpus file matches its hand label") {
    namespace fs = std::filesystem;
    struct Case {
        const char* repo;
        const char* path;
        bool accepted;
    };
    // labels from manual inspection; Generic/Broken never reach the filter and
    // Dup fails type-table construction
    const Case cases[] = {
        {"acme/widgets", "src/AllExternal.java", true},
        {"acme/widgets", "src/BoolGate.java", false},
        {"acme/widgets", "src/Mixed.java", true},
        {"acme/widgets", "src/Widget.java", true},
        {"zeta/mathkit", "src/ArrayUser.java", true},
        {"zeta/mathkit", "src/Calc.java", true},
        {"zeta/mathkit", "src/CharFlow.java", false},
    };
    FilterCriteria crit;
    crit.min_if = 1;
    crit.min_if_on_chosen_primitive = 1;
    crit.min_methods = 1;
    for (const auto& c : cases) {
        CAPTURE(c.path);
        fs::path p = fs::path(FIXTURE_DIR) / "corpus" / c.repo / c.path;
        std::ifstream in(p);
        REQUIRE(in.good());
        std::ostringstream ss;
        ss << in.rdbuf();
        FeatureProfile prof = profile_src(ss.str());
        CHECK(accept(prof, crit) == c.accepted);
    }
}
