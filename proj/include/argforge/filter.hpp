#pragma once

#include <set>
#include <string>

#include "argforge/ast.hpp"
#include "argforge/types.hpp"

namespace argforge {

struct FeatureProfile {
    long long if_count = 0;
    long long if_on_chosen_primitive = 0;
    long long loop_count = 0;
    long long boolean_connective_count = 0;   // && and ||
    long long type_expression_count = 0;      // casts + array creations
    long long type_parameter_count = 0;       // always 0: no generics in subset
    long long assert_count = 0;
    long long method_count = 0;

    bool operator==(const FeatureProfile&) const = default;
};

struct FilterCriteria {
    long long min_if = 0;
    long long min_if_on_chosen_primitive = 0;
    long long min_loops = 0;
    long long min_connectives = 0;
    long long min_type_expressions = 0;
    long long min_type_parameters = 0;        // accepted but never satisfiable above 0
    long long min_methods = 0;
};

/// Single AST walk. An `if` counts toward if_on_chosen_primitive iff its
/// condition subtree contains at least one expression whose resolved type is
/// a chosen primitive. Unresolvable operands simply do not contribute.
/// Requires assign_ids to have run on `unit`.
FeatureProfile profile(const Ast& unit, const std::set<Prim>& chosen,
                       const TypeTable& table);

/// Pure conjunction of >= comparisons.
bool accept(const FeatureProfile& p, const FilterCriteria& c);

} // namespace argforge
