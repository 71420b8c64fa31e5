#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "argforge/allowlist.hpp"
#include "argforge/ast.hpp"

namespace argforge {

/// Resolution of one expression node. Unresolved is a value, not an error —
/// it is what triggers transformation.
struct Binding {
    enum class Kind { Local, Field, Method, Allowlisted, Unresolved };
    Kind kind = Kind::Unresolved;
    std::optional<Type> type;

    bool resolved() const { return kind != Kind::Unresolved; }
};

struct MethodSig {
    Type return_type;
    std::vector<Type> params;
    bool is_static = false;
};

/// Per-unit member table plus the allowlist. Local scopes are kept by the
/// classifier during traversal, not here.
struct TypeTable {
    std::string class_name;
    struct Member {
        Type type;
        bool is_static = false;
    };
    std::map<std::string, Member> fields;
    std::map<std::string, MethodSig> methods;   // member names unique per kind
    Allowlist allowlist;
};

/// Throws CompileError("RESOLVE_FAIL", ...) on a duplicate member name.
TypeTable build_type_table(const Ast& unit, Allowlist allowlist);

/// Binding per expression node, indexed by node id; requires assign_ids to
/// have run on the unit. Total: every node gets exactly one Binding.
using Classification = std::vector<Binding>;
Classification classify_unit(const Ast& unit, const TypeTable& table);

/// Resolves a standalone expression against the table (fields visible, no
/// locals in scope).
Binding resolve(const TypeTable& table, const Expr& expr);

/// Binary numeric promotion: double > float > long > everything-else-to-int.
Type promote(const Type& a, const Type& b);
Type promote_unary(const Type& t);

/// True if a value of type `from` is acceptable where `to` is expected
/// (identity or widening primitive conversion).
bool assignable(const Type& from, const Type& to);

} // namespace argforge
