#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ppcp/group.hpp"

namespace ppcp {

inline constexpr std::size_t kDefaultLatticeCap = 400;

/// One conjugacy class of subgroups of a parent group. The representative is
/// the canonical conjugate: the class member whose sorted element-index set
/// is lexicographically least.
struct SubgroupClass {
  Group representative;
  std::vector<int> element_indices; // sorted indices into the parent's element list
  std::size_t order = 0;
  std::size_t class_size = 0;
};

/// All subgroups of g up to conjugacy, sorted by (order, canonical element
/// set). Built bottom-up from cyclic subgroups by repeatedly joining class
/// representatives with cyclic subgroups. Requires |g| <= group_cap.
std::vector<SubgroupClass> subgroup_classes(const Group& g,
                                            std::size_t group_cap = kDefaultLatticeCap);

/// Conjugacy classes of maximal proper subgroups, in the same canonical order.
std::vector<SubgroupClass> maximal_subgroup_classes(const Group& g,
                                                    std::size_t group_cap = kDefaultLatticeCap);

/// All normal subgroups including the trivial and the full group, sorted by
/// (order, element set). Computed from normal closures, no lattice needed.
std::vector<Group> normal_subgroups(const Group& g);

/// A group is simple iff it has exactly two normal subgroups.
bool is_simple(const Group& g);

/// True iff h is a maximal proper subgroup of g, checked directly:
/// every x in g \ h must satisfy <h, x> = g.
bool is_maximal_subgroup(const Group& g, const Group& h);

/// Wraps a set of element indices of g as a Group with a small generating
/// set (greedily extracted, deterministic).
Group subgroup_from_element_indices(const Group& g, const std::vector<int>& indices,
                                    std::string name = "");

} // namespace ppcp
