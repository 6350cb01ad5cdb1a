#include "ppcp/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "ppcp/errors.hpp"
#include "ppcp/util.hpp"

namespace ppcp {

namespace {

// Index-level view of a parent group: all subgroup arithmetic runs on
// element indices against the parent's multiplication table.
struct Ctx {
  const Group& g;
  int n;
  int e;

  explicit Ctx(const Group& group) : g(group), n(static_cast<int>(group.order())), e(group.identity_index()) {
    g.mult(0, 0); // force the table
  }

  int conj(int by, int x) const { // by * x * by^-1
    return g.mult(g.mult(by, x), g.inverse_index(by));
  }

  std::vector<int> closure(const std::vector<int>& gens) const {
    std::vector<char> in(n, 0);
    std::vector<int> queue;
    in[e] = 1;
    queue.push_back(e);
    for (int gi : gens) {
      if (!in[gi]) {
        in[gi] = 1;
        queue.push_back(gi);
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int gi : gens) {
        int x = g.mult(queue[head], gi);
        if (!in[x]) {
          in[x] = 1;
          queue.push_back(x);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
  }

  std::vector<int> conjugate_set(const std::vector<int>& s, int by) const {
    std::vector<int> out;
    out.reserve(s.size());
    for (int x : s) out.push_back(conj(by, x));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> order_multiset(const std::vector<int>& s) const {
    std::vector<int> out;
    out.reserve(s.size());
    for (int x : s) out.push_back(g.element_order(x));
    std::sort(out.begin(), out.end());
    return out;
  }

  // Greedy small generating set for a subgroup given by its element set.
  std::vector<int> small_gens(const std::vector<int>& s) const {
    std::vector<int> gens;
    std::vector<int> closed{e};
    if (s.size() == 1) return {e};
    for (int x : s) {
      if (std::binary_search(closed.begin(), closed.end(), x)) continue;
      gens.push_back(x);
      closed = closure(gens);
      if (closed.size() == s.size()) break;
    }
    return gens;
  }
};

struct ClassData {
  std::vector<int> elems; // sorted
  std::vector<char> mask;
  std::vector<int> gens;
  std::vector<int> order_ms;
};

bool conjugate_into(const Ctx& ctx, const std::vector<int>& gens, const std::vector<char>& target_mask,
                    std::size_t source_order, std::size_t target_order) {
  // exists g with g <gens> g^-1 inside target (equality when orders match)
  if (source_order > target_order) return false;
  for (int by = 0; by < ctx.n; ++by) {
    bool ok = true;
    for (int gi : gens) {
      if (!target_mask[ctx.conj(by, gi)]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

std::vector<ClassData> build_classes(const Ctx& ctx) {
  std::vector<ClassData> classes;
  std::unordered_set<std::vector<int>, VectorHash> seen_exact;
  // signature -> class indices with that (order, element-order multiset)
  std::unordered_map<std::size_t, std::vector<int>> by_sig;
  std::deque<int> worklist;

  auto sig_of = [&](const std::vector<int>& elems, const std::vector<int>& oms) {
    std::size_t h = hash_range(oms);
    return h ^ (elems.size() * 0x9e3779b97f4a7c15ull);
  };

  auto add_candidate = [&](std::vector<int> elems, std::vector<int> gens) {
    if (!seen_exact.insert(elems).second) return;
    auto oms = ctx.order_multiset(elems);
    std::size_t sig = sig_of(elems, oms);
    auto& bucket = by_sig[sig];
    std::vector<int> cand_gens;
    for (int ci : bucket) {
      const auto& c = classes[ci];
      if (c.elems.size() != elems.size() || c.order_ms != oms) continue;
      if (cand_gens.empty()) cand_gens = ctx.small_gens(elems);
      if (conjugate_into(ctx, cand_gens, c.mask, elems.size(), c.elems.size())) return;
    }
    ClassData cd;
    cd.mask.assign(ctx.n, 0);
    for (int x : elems) cd.mask[x] = 1;
    cd.elems = std::move(elems);
    cd.gens = std::move(gens);
    cd.order_ms = std::move(oms);
    classes.push_back(std::move(cd));
    bucket.push_back(static_cast<int>(classes.size() - 1));
    worklist.push_back(static_cast<int>(classes.size() - 1));
  };

  add_candidate({ctx.e}, {ctx.e});
  for (int x = 0; x < ctx.n; ++x) {
    if (x == ctx.e) continue;
    add_candidate(ctx.closure({x}), {x});
  }

  while (!worklist.empty()) {
    int ci = worklist.front();
    worklist.pop_front();
    if (classes[ci].elems.size() == static_cast<std::size_t>(ctx.n)) continue;
    // copy: classes may reallocate while we extend
    std::vector<int> base_gens = classes[ci].gens;
    std::vector<char> base_mask = classes[ci].mask;
    for (int x = 0; x < ctx.n; ++x) {
      if (base_mask[x]) continue;
      std::vector<int> gens = base_gens;
      gens.push_back(x);
      auto closed = ctx.closure(gens);
      add_candidate(std::move(closed), std::move(gens));
    }
  }
  return classes;
}

} // namespace

Group subgroup_from_element_indices(const Group& g, const std::vector<int>& indices, std::string name) {
  Ctx ctx(g);
  auto gens_idx = ctx.small_gens(indices);
  std::vector<Perm> gens;
  gens.reserve(gens_idx.size());
  for (int gi : gens_idx) gens.push_back(g.elements()[gi]);
  if (gens.empty()) gens.emplace_back(g.degree());
  return Group(g.degree(), std::move(gens), std::move(name), g.closure_cap());
}

std::vector<SubgroupClass> subgroup_classes(const Group& g, std::size_t group_cap) {
  if (g.order() > group_cap)
    throw BudgetError("subgroup lattice requested for group of order " + std::to_string(g.order()),
                      group_cap);
  Ctx ctx(g);
  auto classes = build_classes(ctx);

  std::vector<SubgroupClass> out;
  out.reserve(classes.size());
  for (auto& c : classes) {
    // canonical representative: lexicographically least conjugate element set
    std::vector<int> best = c.elems;
    int best_by = ctx.e;
    std::unordered_set<std::vector<int>, VectorHash> distinct;
    distinct.insert(c.elems);
    for (int by = 0; by < ctx.n; ++by) {
      auto conj = ctx.conjugate_set(c.elems, by);
      if (conj < best) {
        best = conj;
        best_by = by;
      }
      distinct.insert(std::move(conj));
    }
    std::vector<Perm> gen_perms;
    gen_perms.reserve(c.gens.size());
    for (int gi : c.gens) gen_perms.push_back(g.elements()[ctx.conj(best_by, gi)]);
    if (gen_perms.empty() || best.size() == 1) gen_perms = {Perm(g.degree())};
    out.push_back(SubgroupClass{Group(g.degree(), std::move(gen_perms), "", g.closure_cap()),
                                std::move(best), c.elems.size(), distinct.size()});
  }
  std::sort(out.begin(), out.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.element_indices < b.element_indices;
  });
  return out;
}

std::vector<SubgroupClass> maximal_subgroup_classes(const Group& g, std::size_t group_cap) {
  if (g.order() < 2) throw std::invalid_argument("maximal_subgroup_classes: trivial group");
  auto classes = subgroup_classes(g, group_cap);
  Ctx ctx(g);

  std::vector<SubgroupClass> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& h = classes[i];
    if (h.order == g.order()) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < classes.size() && maximal; ++j) {
      const auto& k = classes[j];
      if (k.order <= h.order || k.order == g.order()) continue;
      if (h.order * 2 > g.order()) continue; // nothing fits strictly between
      std::vector<char> k_mask(ctx.n, 0);
      for (int x : k.element_indices) k_mask[x] = 1;
      std::vector<int> h_gens;
      for (const auto& p : h.representative.generators()) h_gens.push_back(g.index_of(p));
      if (conjugate_into(ctx, h_gens, k_mask, h.order, k.order)) maximal = false;
    }
    if (maximal) out.push_back(h);
  }
  return out;
}

std::vector<Group> normal_subgroups(const Group& g) {
  Ctx ctx(g);
  std::vector<std::vector<int>> found;
  std::unordered_set<std::vector<int>, VectorHash> seen;
  auto add = [&](std::vector<int> s) {
    if (seen.insert(s).second) found.push_back(std::move(s));
  };

  add({ctx.e});
  // normal closures of single elements
  std::vector<std::vector<int>> closures;
  for (int x = 0; x < ctx.n; ++x) {
    if (x == ctx.e) continue;
    std::vector<int> class_of_x;
    for (int by = 0; by < ctx.n; ++by) class_of_x.push_back(ctx.conj(by, x));
    std::sort(class_of_x.begin(), class_of_x.end());
    class_of_x.erase(std::unique(class_of_x.begin(), class_of_x.end()), class_of_x.end());
    auto cl = ctx.closure(class_of_x);
    closures.push_back(cl);
    add(std::move(cl));
  }
  // close the set under joins (a join of normal subgroups is normal)
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& nc : closures) {
      std::vector<int> both = found[i];
      both.insert(both.end(), nc.begin(), nc.end());
      std::sort(both.begin(), both.end());
      both.erase(std::unique(both.begin(), both.end()), both.end());
      if (both.size() == found[i].size()) continue;
      add(ctx.closure(both));
    }
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Group> out;
  out.reserve(found.size());
  for (const auto& s : found) out.push_back(subgroup_from_element_indices(g, s));
  return out;
}

bool is_simple(const Group& g) { return normal_subgroups(g).size() == 2; }

bool is_maximal_subgroup(const Group& g, const Group& h) {
  if (!h.is_subgroup_of(g) || h.order() >= g.order()) return false;
  Ctx ctx(g);
  std::vector<int> h_gens;
  for (const auto& p : h.generators()) h_gens.push_back(g.index_of(p));
  std::vector<char> in_h(ctx.n, 0);
  for (const auto& p : h.elements()) in_h[g.index_of(p)] = 1;
  for (int x = 0; x < ctx.n; ++x) {
    if (in_h[x]) continue;
    std::vector<int> gens = h_gens;
    gens.push_back(x);
    if (ctx.closure(gens).size() != g.order()) return false;
  }
  return true;
}

} // namespace ppcp
