#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argforge/ast.hpp"

namespace argforge {

/// One permitted member of an allowlisted type. `params` absent means a
/// field/constant entry; present (possibly empty) means a method.
struct MemberSig {
    std::string name;
    std::optional<std::vector<Type>> params;
    Type return_type;
};

struct AllowType {
    std::string qualified;
    bool all_members = false;   // bare entry: any member, return type unknown
    std::vector<MemberSig> members;
};

/// File format, one entry per line:
///   QualifiedType                           all members, returns unresolvable
///   QualifiedType#member(T,T)->R            method
///   QualifiedType#member->R                 field/constant
/// `#`-prefixed lines are comments.
class Allowlist {
public:
    static Allowlist parse(std::string_view text, std::vector<std::string>* diags = nullptr);

    /// Shipped default: a small math/text core (Math, a few constants,
    /// String length/charAt, the common runtime exception types).
    static Allowlist builtin_default();

    /// Adds the nondet instrumentation surface (`Verifier.nondet*`). The
    /// pipeline always applies this on top of the configured allowlist.
    void add_verifier_surface();

    void add(AllowType t);

    /// Lookup by qualified name, or by simple name (last segment).
    const AllowType* find(const std::string& name) const;

    /// True when an import of `qualified_name` (possibly `a.b.*`) only
    /// names allowlisted types.
    bool covers_import(const std::string& import_name) const;

    const std::map<std::string, AllowType>& entries() const { return by_qualified_; }

private:
    std::map<std::string, AllowType> by_qualified_;
    std::map<std::string, std::string> by_simple_;
};

} // namespace argforge
