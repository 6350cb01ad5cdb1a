#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ppcp/minor.hpp"
#include "ppcp/operation.hpp"
#include "ppcp/structure.hpp"

namespace ppcp {

inline constexpr std::size_t kDefaultPolyLeafBudget = 100'000'000;
inline constexpr std::size_t kDefaultPolyMergeBudget = 100'000'000;

bool is_polymorphism(const Structure& s, const FiniteOperation& f);

/// Searches for operations (one per condition symbol) that satisfy the
/// condition and are polymorphisms of the structure. Table cells are first
/// merged into the equivalence classes forced by the identities; the search
/// then assigns classes in order of their least cell, values ascending, with
/// generalized arc-consistency over the relation-preservation constraints.
/// "none" is only reported after a complete search; budget exhaustion throws.
std::optional<std::map<int, FiniteOperation>> find_polymorphism(
    const Structure& s, const MinorCondition& cond,
    std::size_t leaf_budget = kDefaultPolyLeafBudget,
    std::size_t merge_budget = kDefaultPolyMergeBudget);

/// All n-ary polymorphisms, by direct enumeration of value tables in
/// lexicographic order. Feasible only for tiny domains; the table-space
/// size D^(D^n) is checked against the budget.
std::vector<FiniteOperation> all_polymorphisms(const Structure& s, int arity,
                                               std::size_t budget = 1'000'000);

} // namespace ppcp
