#include "argforge/allowlist.hpp"

#include <cctype>
#include <sstream>

namespace argforge {

namespace {

std::string trim(std::string_view s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return std::string(s.substr(a, b - a + 1));
}

std::optional<Type> parse_type_spec(const std::string& text) {
    std::string t = trim(text);
    if (t.empty()) return std::nullopt;
    bool array = false;
    if (t.size() > 2 && t.substr(t.size() - 2) == "[]") {
        array = true;
        t = t.substr(0, t.size() - 2);
    }
    if (auto p = prim_from_name(t))
        return array ? Type::array_of(*p) : Type::of(*p);
    if (t == "void" && !array) return Type::void_type();
    return array ? Type::named_array(t) : Type::named(t);
}

std::string simple_name(const std::string& qualified) {
    size_t dot = qualified.rfind('.');
    return dot == std::string::npos ? qualified : qualified.substr(dot + 1);
}

} // namespace

void Allowlist::add(AllowType t) {
    std::string q = t.qualified;
    auto [it, inserted] = by_qualified_.try_emplace(q, std::move(t));
    if (!inserted) {
        // merge: bare entry wins on all_members; signatures accumulate
        it->second.all_members = it->second.all_members || t.all_members;
        for (auto& m : t.members) it->second.members.push_back(m);
    }
    by_simple_.try_emplace(simple_name(q), q);
}

const AllowType* Allowlist::find(const std::string& name) const {
    if (auto it = by_qualified_.find(name); it != by_qualified_.end()) return &it->second;
    if (auto it = by_simple_.find(name); it != by_simple_.end())
        return &by_qualified_.at(it->second);
    return nullptr;
}

bool Allowlist::covers_import(const std::string& import_name) const {
    if (import_name.size() > 2 && import_name.substr(import_name.size() - 2) == ".*") {
        std::string prefix = import_name.substr(0, import_name.size() - 1);   // keep dot
        for (auto& [q, _] : by_qualified_)
            if (q.rfind(prefix, 0) == 0) return true;
        return false;
    }
    return by_qualified_.count(import_name) > 0;
}

Allowlist Allowlist::parse(std::string_view text, std::vector<std::string>* diags) {
    Allowlist out;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        line_no++;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;

        auto bad = [&](const std::string& why) {
            if (diags)
                diags->push_back("allowlist line " + std::to_string(line_no) + ": " + why);
        };

        size_t hash = line.find('#');
        if (hash == std::string::npos) {
            AllowType t;
            t.qualified = line;
            t.all_members = true;
            out.add(std::move(t));
            continue;
        }
        std::string type_name = trim(line.substr(0, hash));
        std::string rest = trim(line.substr(hash + 1));
        size_t arrow = rest.find("->");
        if (arrow == std::string::npos) {
            bad("missing '->' in member entry");
            continue;
        }
        std::string member = trim(rest.substr(0, arrow));
        auto ret = parse_type_spec(rest.substr(arrow + 2));
        if (type_name.empty() || member.empty() || !ret) {
            bad("malformed member entry");
            continue;
        }

        MemberSig sig;
        sig.return_type = *ret;
        size_t lparen = member.find('(');
        if (lparen == std::string::npos) {
            sig.name = member;   // field/constant
        } else {
            size_t rparen = member.rfind(')');
            if (rparen == std::string::npos || rparen < lparen) {
                bad("unbalanced parentheses");
                continue;
            }
            sig.name = trim(member.substr(0, lparen));
            std::vector<Type> params;
            std::string plist = member.substr(lparen + 1, rparen - lparen - 1);
            std::istringstream ps{plist};
            std::string ptext;
            bool ok = true;
            while (std::getline(ps, ptext, ',')) {
                auto pt = parse_type_spec(ptext);
                if (!pt) {
                    bad("bad parameter type '" + ptext + "'");
                    ok = false;
                    break;
                }
                params.push_back(*pt);
            }
            if (!ok) continue;
            sig.params = std::move(params);
        }
        AllowType t;
        t.qualified = type_name;
        t.members.push_back(std::move(sig));
        out.add(std::move(t));
    }
    return out;
}

void Allowlist::add_verifier_surface() {
    AllowType v;
    v.qualified = "Verifier";
    for (auto& pname : all_prim_names()) {
        Prim p = *prim_from_name(pname);
        std::string cap = pname;
        cap[0] = (char)std::toupper((unsigned char)cap[0]);
        MemberSig sig;
        sig.name = "nondet" + cap;
        sig.params = std::vector<Type>{};
        sig.return_type = Type::of(p);
        v.members.push_back(std::move(sig));
    }
    add(std::move(v));
}

Allowlist Allowlist::builtin_default() {
    static const char* kDefault = R"(
# default allowlist: a small math/text core
java.lang.Math#abs(int)->int
java.lang.Math#abs(long)->long
java.lang.Math#abs(float)->float
java.lang.Math#abs(double)->double
java.lang.Math#min(int,int)->int
java.lang.Math#min(long,long)->long
java.lang.Math#min(double,double)->double
java.lang.Math#max(int,int)->int
java.lang.Math#max(long,long)->long
java.lang.Math#max(double,double)->double
java.lang.Math#sqrt(double)->double
java.lang.Math#pow(double,double)->double
java.lang.Math#floor(double)->double
java.lang.Math#ceil(double)->double
java.lang.Math#PI->double
java.lang.Math#E->double
java.lang.Integer#MAX_VALUE->int
java.lang.Integer#MIN_VALUE->int
java.lang.Long#MAX_VALUE->long
java.lang.Long#MIN_VALUE->long
java.lang.Double#MAX_VALUE->double
java.lang.Double#MIN_VALUE->double
java.lang.String#length()->int
java.lang.String#charAt(int)->char
java.lang.String#isEmpty()->boolean
java.lang.RuntimeException#<init>(String)->void
java.lang.RuntimeException#<init>()->void
java.lang.IllegalArgumentException#<init>(String)->void
java.lang.IllegalArgumentException#<init>()->void
java.lang.ArithmeticException#<init>(String)->void
java.lang.AssertionError#<init>()->void
)";
    Allowlist out = parse(kDefault);
    return out;
}

} // namespace argforge
