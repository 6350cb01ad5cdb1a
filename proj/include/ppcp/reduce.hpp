#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppcp/action.hpp"

namespace ppcp {

/// Output of the reduction from an arbitrary finite group action to either a
/// global fixed point or a fixed-point-free action of a finite simple group.
struct ReduceResult {
  enum class Verdict { FixedPoint, SimpleGroup };
  Verdict verdict = Verdict::FixedPoint;
  std::optional<int> fixed_point;
  std::optional<Group> simple_group;   // concrete permutation group
  std::optional<Action> final_action;  // its fixed-point-free action
  std::vector<std::string> steps;
};

/// Implements the reduction as an algorithm:
///  - a global fixed point settles the question immediately;
///  - otherwise the group is replaced by its minimal-order subgroup acting
///    without a fixed point (first class in canonical order);
///  - a non-simple group is replaced by the permutation group it induces on
///    the fixed-point set of its first proper nontrivial normal subgroup,
///    and the procedure recurses. Group order strictly decreases.
ReduceResult reduce_to_simple(const Action& a, std::size_t group_cap = kDefaultLatticeCap);

} // namespace ppcp
