#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppcp/structure.hpp"

namespace ppcp {

inline constexpr std::size_t kDefaultHomNodeBudget = 10'000'000;

struct Homomorphism {
  std::vector<int> map; // indexed by source domain
};

bool is_homomorphism(const Structure& source, const Structure& target, const std::vector<int>& map);

/// Complete backtracking search with generalized arc-consistency pruning.
/// Variable order: smallest remaining candidate set first; values ascending.
/// Relations present in the source but missing in the target count as empty.
/// Throws BudgetError after `node_budget` search nodes; "no homomorphism"
/// is only ever reported after a complete search.
std::optional<Homomorphism> find_homomorphism(const Structure& source, const Structure& target,
                                              std::size_t node_budget = kDefaultHomNodeBudget);

bool hom_equivalent(const Structure& a, const Structure& b,
                    std::size_t node_budget = kDefaultHomNodeBudget);

/// Relation-name-preserving isomorphism between two structures, by
/// backtracking with degree-profile pruning. Intended for small structures
/// (component size <= 15 in this project).
std::optional<std::vector<int>> find_isomorphism(const Structure& a, const Structure& b);

/// For each weakly connected component of a binary structure, the index of a
/// component isomorphic to its edge reversal, or nullopt if none exists.
/// Returns one entry per component, in component order.
std::vector<std::optional<int>> dual_pairing(const Structure& s);

/// Relational composition along a word of (relation name, forward?) steps:
/// the word [R, S] yields {(x,z) : exists y, R(x,y) and S(y,z)}; reversed
/// steps use the converse relation. The empty word is the identity relation.
/// All named relations must be binary.
std::vector<std::vector<int>> compose_relation_word(
    const Structure& s, const std::vector<std::pair<std::string, bool>>& word);

} // namespace ppcp
