#include "ppcp/reduce.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ppcp {

namespace {

bool acts_without_fixed_point(const Action& parent, const std::vector<int>& element_indices) {
  for (int x = 0; x < parent.points(); ++x) {
    bool fixed = true;
    for (int idx : element_indices) {
      if (parent.act(idx, x) != x) {
        fixed = false;
        break;
      }
    }
    if (fixed) return false;
  }
  return true;
}

} // namespace

ReduceResult reduce_to_simple(const Action& a, std::size_t group_cap) {
  ReduceResult result;
  Action current = a;
  for (;;) {
    std::ostringstream step;
    step << "group of order " << current.group().order() << " acting on " << current.points()
         << " points";
    if (auto fp = current.global_fixed_point()) {
      step << ": global fixed point " << *fp;
      result.steps.push_back(step.str());
      result.verdict = ReduceResult::Verdict::FixedPoint;
      result.fixed_point = *fp;
      return result;
    }

    // minimal-order subgroup acting without a fixed point; classes arrive in
    // canonical order (order ascending, then least conjugate)
    auto classes = subgroup_classes(current.group(), group_cap);
    const SubgroupClass* chosen = nullptr;
    for (const auto& c : classes) {
      if (acts_without_fixed_point(current, c.element_indices)) {
        chosen = &c;
        break;
      }
    }
    if (!chosen) throw std::logic_error("reduce_to_simple: no fixed point yet every subgroup has one");
    step << ": minimal fixed-point-free subgroup has order " << chosen->order;
    result.steps.push_back(step.str());
    current = current.restricted_to(chosen->representative);

    auto normals = normal_subgroups(current.group());
    if (normals.size() == 2) {
      result.verdict = ReduceResult::Verdict::SimpleGroup;
      result.simple_group = current.group();
      result.final_action = current;
      std::ostringstream fin;
      fin << "simple group of order " << current.group().order() << " acting without fixed point on "
          << current.points() << " points";
      result.steps.push_back(fin.str());
      return result;
    }

    // first proper nontrivial normal subgroup, canonical order
    const Group* n_sub = nullptr;
    for (const auto& n : normals) {
      if (n.order() > 1 && n.order() < current.group().order()) {
        n_sub = &n;
        break;
      }
    }
    if (!n_sub) throw std::logic_error("reduce_to_simple: non-simple group without proper normal subgroup");

    // fixed-point set of N
    std::vector<int> fixed_set;
    for (int x = 0; x < current.points(); ++x) {
      bool fixed = true;
      for (const auto& p : n_sub->elements()) {
        int idx = current.group().index_of(p);
        if (current.act(idx, x) != x) {
          fixed = false;
          break;
        }
      }
      if (fixed) fixed_set.push_back(x);
    }
    if (fixed_set.empty())
      throw std::logic_error("reduce_to_simple: proper subgroup without fixed points");

    // the permutation group induced on the fixed-point set realizes the
    // quotient action concretely
    std::vector<int> position(current.points(), -1);
    for (std::size_t i = 0; i < fixed_set.size(); ++i) position[fixed_set[i]] = static_cast<int>(i);
    std::vector<Perm> induced;
    for (const auto& img : current.generator_images()) {
      std::vector<int> images(fixed_set.size());
      for (std::size_t i = 0; i < fixed_set.size(); ++i) images[i] = position[img(fixed_set[i])];
      induced.emplace_back(std::move(images));
    }
    std::ostringstream quo;
    quo << "normal subgroup of order " << n_sub->order() << "; restricting to its " << fixed_set.size()
        << " fixed points and acting by the induced quotient";
    result.steps.push_back(quo.str());

    // deduplicate generators, drop identities
    std::vector<Perm> gens;
    for (auto& p : induced) {
      if (p.is_identity()) continue;
      if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
    }
    if (gens.empty()) gens.emplace_back(static_cast<int>(fixed_set.size()));
    Group quotient(static_cast<int>(fixed_set.size()), std::move(gens));
    if (quotient.order() >= current.group().order())
      throw std::logic_error("reduce_to_simple: group order failed to decrease");
    current = Action::natural(quotient);
  }
}

} // namespace ppcp
