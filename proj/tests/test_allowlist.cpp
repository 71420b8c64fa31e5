#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "argforge/allowlist.hpp"

using namespace argforge;

TEST_CASE("member entry parsing") {
    auto a = Allowlist::parse(
        "java.lang.Math#abs(int)->int\n"
        "java.lang.Math#PI->double\n"
        "java.lang.String#length()->int\n");
    const AllowType* math = a.find("java.lang.Math");
    REQUIRE(math);
    CHECK(!math->all_members);
    REQUIRE(math->members.size() == 2);
    CHECK(math->members[0].name == "abs");
    REQUIRE(math->members[0].params.has_value());
    CHECK(math->members[0].params->size() == 1);
    CHECK(math->members[1].name == "PI");
    CHECK(!math->members[1].params.has_value());   // constant

    const AllowType* str = a.find("java.lang.String");
    REQUIRE(str);
    REQUIRE(str->members.size() == 1);
    CHECK(str->members[0].params->empty());
}

TEST_CASE("bare entries allow any member") {
    auto a = Allowlist::parse("acme.ext.Telemetry\n");
    const AllowType* t = a.find("acme.ext.Telemetry");
    REQUIRE(t);
    CHECK(t->all_members);
}

TEST_CASE("lookup by simple name") {
    auto a = Allowlist::parse("java.lang.Math#PI->double\n");
    CHECK(a.find("Math") == a.find("java.lang.Math"));
    CHECK(a.find("Nope") == nullptr);
}

TEST_CASE("malformed lines produce diagnostics and are skipped") {
    std::vector<std::string> diags;
    auto a = Allowlist::parse(
        "java.lang.Math#abs(int->int\n"
        "java.lang.Math#noArrow\n"
        "#comment line\n"
        "java.lang.Math#ok(int)->int\n",
        &diags);
    CHECK(diags.size() == 2);
    const AllowType* math = a.find("java.lang.Math");
    REQUIRE(math);
    CHECK(math->members.size() == 1);
    CHECK(math->members[0].name == "ok");
}

TEST_CASE("import coverage") {
    auto a = Allowlist::parse("java.lang.Math#PI->double\nacme.ext.Telemetry\n");
    CHECK(a.covers_import("java.lang.Math"));
    CHECK(a.covers_import("java.lang.*"));
    CHECK(a.covers_import("acme.ext.*"));
    CHECK(!a.covers_import("acme.log.Logger"));
    CHECK(!a.covers_import("acme.log.*"));
}

TEST_CASE("builtin default covers the math/text core") {
    auto a = Allowlist::builtin_default();
    REQUIRE(a.find("Math"));
    REQUIRE(a.find("String"));
    REQUIRE(a.find("RuntimeException"));
    bool has_sqrt = false;
    for (auto& m : a.find("Math")->members)
        if (m.name == "sqrt") has_sqrt = true;
    CHECK(has_sqrt);
    bool has_ctor = false;
    for (auto& m : a.find("RuntimeException")->members)
        if (m.name == "<init>") has_ctor = true;
    CHECK(has_ctor);
}

TEST_CASE("verifier surface adds all eight nondet methods") {
    Allowlist a;
    a.add_verifier_surface();
    const AllowType* v = a.find("Verifier");
    REQUIRE(v);
    CHECK(v->members.size() == 8);
    bool has_int = false, has_bool = false;
    for (auto& m : v->members) {
        if (m.name == "nondetInt") has_int = m.return_type == Type::of(Prim::Int);
        if (m.name == "nondetBoolean") has_bool = m.return_type == Type::of(Prim::Boolean);
    }
    CHECK(has_int);
    CHECK(has_bool);
}

TEST_CASE("fixture allowlist file parses cleanly") {
    std::ifstream in(std::filesystem::path(FIXTURE_DIR) / "config" / "allowlist.txt");
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    std::vector<std::string> diags;
    auto a = Allowlist::parse(ss.str(), &diags);
    CHECK(diags.empty());
    CHECK(a.find("Telemetry"));
    CHECK(a.find("java.lang.Math"));
}
