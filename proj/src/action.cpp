#include "ppcp/action.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ppcp/errors.hpp"

namespace ppcp {

Action::Action(Group group, int points, std::vector<Perm> generator_images)
    : group_(std::move(group)), points_(points), generator_images_(std::move(generator_images)) {
  if (points_ < 1) throw std::invalid_argument("Action: point count must be positive");
  if (generator_images_.size() != group_.generators().size())
    throw std::invalid_argument("Action: one image per generator required");
  for (const auto& p : generator_images_)
    if (p.degree() != points_) throw std::invalid_argument("Action: image degree mismatch");

  // Extend generator images to all elements along the Cayley graph. Every
  // edge is checked, so a conflict between two generator words representing
  // the same element is always detected.
  const auto& els = group_.elements();
  const std::size_t n = els.size();
  element_images_.assign(n, Perm(points_));
  std::vector<char> known(n, 0);
  const int e = group_.identity_index();
  known[e] = 1;
  std::vector<int> queue{e};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int i = queue[head];
    for (std::size_t k = 0; k < group_.generators().size(); ++k) {
      const Perm prod = els[i] * group_.generators()[k];
      const int j = group_.index_of(prod);
      Perm img = element_images_[i] * generator_images_[k];
      if (!known[j]) {
        known[j] = 1;
        element_images_[j] = std::move(img);
        queue.push_back(j);
      } else if (!(element_images_[j] == img)) {
        throw std::invalid_argument("Action: generator images do not extend to a homomorphism");
      }
    }
  }
}

Action Action::natural(const Group& g) {
  return Action(g, g.degree(), g.generators());
}

Action Action::regular(const Group& g) {
  const auto& els = g.elements();
  const int n = static_cast<int>(els.size());
  std::vector<Perm> images;
  images.reserve(g.generators().size());
  for (const auto& gen : g.generators()) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = g.index_of(gen * els[i]);
    images.emplace_back(std::move(img));
  }
  return Action(g, n, std::move(images));
}

std::optional<int> Action::global_fixed_point() const {
  for (int x = 0; x < points_; ++x) {
    bool fixed = true;
    for (const auto& p : generator_images_) {
      if (p(x) != x) {
        fixed = false;
        break;
      }
    }
    if (fixed) return x;
  }
  return std::nullopt;
}

bool Action::is_transitive() const { return orbits(*this).size() == 1; }

Action Action::restricted_to(const Group& subgroup) const {
  if (!subgroup.is_subgroup_of(group_))
    throw std::invalid_argument("Action: restriction target is not a subgroup");
  std::vector<Perm> images;
  images.reserve(subgroup.generators().size());
  for (const auto& gen : subgroup.generators()) images.push_back(element_images_[group_.index_of(gen)]);
  return Action(subgroup, points_, std::move(images));
}

std::vector<std::vector<int>> orbits(const Action& a) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(a.points(), 0);
  for (int x = 0; x < a.points(); ++x) {
    if (seen[x]) continue;
    std::vector<int> orbit{x};
    seen[x] = 1;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& p : a.generator_images()) {
        int y = p(orbit[head]);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

namespace {

Group group_from_kept_elements(const Group& g, const std::vector<int>& kept) {
  return subgroup_from_element_indices(g, kept);
}

} // namespace

Group stabilizer(const Action& a, int point) {
  if (point < 0 || point >= a.points()) throw std::invalid_argument("stabilizer: point out of range");
  std::vector<int> kept;
  for (std::size_t i = 0; i < a.element_images().size(); ++i)
    if (a.element_images()[i](point) == point) kept.push_back(static_cast<int>(i));
  return group_from_kept_elements(a.group(), kept);
}

Group set_stabilizer(const Action& a, const std::vector<int>& points) {
  if (points.empty()) throw std::invalid_argument("set_stabilizer: empty target set");
  std::vector<char> in(a.points(), 0);
  for (int x : points) {
    if (x < 0 || x >= a.points()) throw std::invalid_argument("set_stabilizer: point out of range");
    in[x] = 1;
  }
  std::vector<int> kept;
  for (std::size_t i = 0; i < a.element_images().size(); ++i) {
    bool ok = true;
    for (int x : points) {
      if (!in[a.element_images()[i](x)]) {
        ok = false;
        break;
      }
    }
    if (ok) kept.push_back(static_cast<int>(i));
  }
  return group_from_kept_elements(a.group(), kept);
}

Action coset_action(const Group& g, const Group& subgroup) {
  if (!subgroup.is_subgroup_of(g))
    throw std::invalid_argument("coset_action: not a subgroup of the ambient group");
  const auto& els = g.elements();
  const int n = static_cast<int>(els.size());
  std::vector<int> h_indices;
  for (const auto& p : subgroup.elements()) h_indices.push_back(g.index_of(p));

  // rep_of[i] = least element index in the coset els[i]*H
  std::vector<int> rep_of(n, -1);
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    if (rep_of[i] >= 0) continue;
    std::vector<int> coset;
    coset.reserve(h_indices.size());
    for (int h : h_indices) coset.push_back(g.mult(i, h));
    int rep = *std::min_element(coset.begin(), coset.end());
    for (int x : coset) rep_of[x] = rep;
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end());
  std::vector<int> point_of(n, -1);
  for (std::size_t p = 0; p < reps.size(); ++p) point_of[reps[p]] = static_cast<int>(p);

  std::vector<Perm> images;
  for (int gen_idx : g.generator_indices()) {
    std::vector<int> img(reps.size());
    for (std::size_t p = 0; p < reps.size(); ++p)
      img[p] = point_of[rep_of[g.mult(gen_idx, reps[p])]];
    images.emplace_back(std::move(img));
  }
  return Action(g, static_cast<int>(reps.size()), std::move(images));
}

bool is_primitive(const Action& a) {
  if (a.points() < 2) return false;
  if (!a.is_transitive()) return false;
  return is_maximal_subgroup(a.group(), stabilizer(a, 0));
}

Action prim_action(const Group& g, std::size_t group_cap) {
  if (g.order() < 2)
    throw std::invalid_argument("prim_action: the trivial group has no maximal subgroup");
  auto maximal = maximal_subgroup_classes(g, group_cap);

  std::vector<Action> parts;
  int total = 0;
  for (const auto& m : maximal) {
    parts.push_back(coset_action(g, m.representative));
    total += parts.back().points();
  }
  std::vector<Perm> images;
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    std::vector<int> img(total);
    int offset = 0;
    for (const auto& part : parts) {
      const Perm& p = part.generator_images()[k];
      for (int x = 0; x < part.points(); ++x) img[offset + x] = offset + p(x);
      offset += part.points();
    }
    images.emplace_back(std::move(img));
  }
  return Action(g, total, std::move(images));
}

bool is_minimal_fixed_point_free(const Action& a, std::size_t group_cap) {
  if (a.global_fixed_point()) return false;
  if (a.group().order() < 2) return false;
  for (const auto& m : maximal_subgroup_classes(a.group(), group_cap)) {
    bool has_fixed = false;
    for (int x = 0; x < a.points() && !has_fixed; ++x) {
      bool fixed = true;
      for (int idx : m.element_indices) {
        if (a.act(idx, x) != x) {
          fixed = false;
          break;
        }
      }
      has_fixed = fixed;
    }
    if (!has_fixed) return false;
  }
  return true;
}

} // namespace ppcp
