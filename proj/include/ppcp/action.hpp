#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ppcp/group.hpp"
#include "ppcp/subgroups.hpp"

namespace ppcp {

/// A group action: one permutation of the point set per generator, extending
/// to a homomorphism into Sym(points). The element-wise image table is built
/// and validated on construction (conflicting generator words are rejected).
class Action {
public:
  Action(Group group, int points, std::vector<Perm> generator_images);

  /// The group acting on its own degree points.
  static Action natural(const Group& g);
  /// Left multiplication on the element list.
  static Action regular(const Group& g);

  const Group& group() const { return group_; }
  int points() const { return points_; }
  const std::vector<Perm>& generator_images() const { return generator_images_; }
  /// Parallel to group().elements().
  const std::vector<Perm>& element_images() const { return element_images_; }
  const Perm& image(int element_index) const { return element_images_[element_index]; }
  int act(int element_index, int point) const { return element_images_[element_index](point); }

  std::optional<int> global_fixed_point() const;
  bool is_transitive() const;

  /// The same points acted on by a subgroup of the acting group.
  Action restricted_to(const Group& subgroup) const;

private:
  Group group_;
  int points_;
  std::vector<Perm> generator_images_;
  std::vector<Perm> element_images_;
};

/// Orbit partition; blocks sorted by least point, block entries ascending.
std::vector<std::vector<int>> orbits(const Action& a);

Group stabilizer(const Action& a, int point);
/// Setwise stabilizer {g : g(S) = S}.
Group set_stabilizer(const Action& a, const std::vector<int>& points);

/// Left-multiplication action on the cosets g*H. Points are ordered by the
/// lexicographically least coset member; point 0 is H itself, and its
/// stabilizer equals H.
Action coset_action(const Group& g, const Group& subgroup);

/// True iff the action has >= 2 points, is transitive, and a point
/// stabilizer is a maximal subgroup.
bool is_primitive(const Action& a);

/// Disjoint union of the coset actions G/M, one per conjugacy class of
/// maximal subgroups, in canonical class order.
Action prim_action(const Group& g, std::size_t group_cap = kDefaultLatticeCap);

/// No global fixed point, but every maximal proper subgroup fixes a point.
bool is_minimal_fixed_point_free(const Action& a, std::size_t group_cap = kDefaultLatticeCap);

} // namespace ppcp
