#pragma once

#include <string>
#include <vector>

#include "argforge/allowlist.hpp"
#include "argforge/ast.hpp"
#include "argforge/repo.hpp"
#include "argforge/types.hpp"

namespace argforge {

inline constexpr const char* kToolVersion = "argforge 0.1.0";

struct Provenance {
    RepoSpec repo;
    std::string original_path;
    std::string original_class;
    std::string tool_version = kToolVersion;
};

struct RemovalEntry {
    SourceSpan span;
    std::string reason;
};

struct InjectionEntry {
    SourceSpan span;
    std::string stub;   // e.g. "nondetInt", "nondetDouble[]", "nondetBoolean(cond)"
};

enum class TransformStatus { Transformed, RejectedEmpty, RejectedUnresolvable };

struct TransformOutcome {
    TransformStatus status = TransformStatus::RejectedEmpty;
    Ast unit;   // meaningful when status == Transformed
    std::vector<RemovalEntry> removal_log;
    std::vector<InjectionEntry> injection_log;
};

struct TransformConfig {
    long long array_length_bound = 16;
};

/// One nondet-injection pass: unresolved expressions in contexts with a
/// known primitive expected type become Verifier.nondet<T>() calls; a
/// declaration or assignment of a primitive array from an unresolved source
/// becomes a synthesized fresh array of nondet length and elements.
/// Returns true if anything changed.
bool inject_nondet(Ast& unit, const Allowlist& allowlist, const TransformConfig& cfg,
                   std::vector<InjectionEntry>& log);

/// One pruning wave: removes fields/methods with external types, statements
/// still touching unresolved bindings (smallest enclosing construct first),
/// and non-allowlisted imports. Control-flow conditions that are unresolvable
/// get Verifier.nondetBoolean() instead of removal. Returns true if changed.
bool prune_external(Ast& unit, const Allowlist& allowlist,
                    std::vector<RemovalEntry>& removal_log,
                    std::vector<InjectionEntry>& injection_log);

enum class EntryResult { Synthesized, AlreadyPresent, NoInvocableMethod };

/// Appends `public static void main(String[] args)` invoking every surviving
/// method once with nondet arguments; instantiates the class when anything
/// is non-static. Methods whose parameters cannot be nondet-valued are
/// skipped and logged.
EntryResult synthesize_entry(Ast& unit, const TransformConfig& cfg,
                             std::vector<RemovalEntry>& removal_log);

/// Renames the class to Main (updating self-references), strips the package
/// declaration, and installs the provenance header comment.
void rename_standardize(Ast& unit, const Provenance& prov);

/// inject -> prune fixpoint, then entry synthesis and renaming.
TransformOutcome transform_file(const Ast& input, const Allowlist& allowlist,
                                const Provenance& prov, const TransformConfig& cfg);

/// Number of unresolved-external bindings in the unit (assigns ids).
int count_unresolved(Ast& unit, const Allowlist& allowlist);

} // namespace argforge
