#include "ppcp/hom.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ppcp/errors.hpp"

namespace ppcp {

bool is_homomorphism(const Structure& source, const Structure& target, const std::vector<int>& map) {
  if (map.size() != static_cast<std::size_t>(source.domain_size())) return false;
  for (int v : map)
    if (v < 0 || v >= target.domain_size()) return false;
  for (const auto& [name, rel] : source.relations()) {
    if (rel.tuples.empty()) continue;
    if (!target.has_relation(name)) return false;
    const auto& trel = target.relation(name);
    if (trel.arity != rel.arity) return false;
    for (const auto& t : rel.tuples) {
      std::vector<int> img(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) img[i] = map[t[i]];
      if (!std::binary_search(trel.tuples.begin(), trel.tuples.end(), img)) return false;
    }
  }
  return true;
}

namespace {

// One constraint per source tuple: the image of the tuple must lie in the
// target relation's tuple set.
struct HomConstraint {
  std::vector<int> vars;                        // source vertices, by position
  const std::vector<std::vector<int>>* allowed; // target tuples
};

struct HomSearch {
  int n_source;
  int n_target;
  std::vector<HomConstraint> constraints;
  std::vector<std::vector<int>> watching; // var -> constraint indices
  std::size_t budget;
  std::size_t nodes = 0;

  using Domains = std::vector<std::vector<char>>; // var -> allowed target values

  bool revise(int ci, Domains& dom, std::vector<int>& changed) {
    const auto& c = constraints[ci];
    const std::size_t arity = c.vars.size();
    std::vector<std::vector<char>> support(arity, std::vector<char>(n_target, 0));
    bool any = false;
    for (const auto& t : *c.allowed) {
      bool ok = true;
      for (std::size_t i = 0; i < arity && ok; ++i) {
        if (!dom[c.vars[i]][t[i]]) ok = false;
        for (std::size_t j = 0; j < i && ok; ++j) // repeated variables
          if (c.vars[j] == c.vars[i] && t[j] != t[i]) ok = false;
      }
      if (!ok) continue;
      any = true;
      for (std::size_t i = 0; i < arity; ++i) support[i][t[i]] = 1;
    }
    if (!any) return false;
    for (std::size_t i = 0; i < arity; ++i) {
      auto& d = dom[c.vars[i]];
      bool touched = false;
      bool nonempty = false;
      for (int v = 0; v < n_target; ++v) {
        if (d[v] && !support[i][v]) {
          d[v] = 0;
          touched = true;
        }
        nonempty |= d[v] != 0;
      }
      if (!nonempty) return false;
      if (touched) changed.push_back(c.vars[i]);
    }
    return true;
  }

  bool propagate(Domains& dom, std::vector<int> queue) {
    std::vector<char> queued(constraints.size(), 0);
    for (int ci : queue) queued[ci] = 1;
    while (!queue.empty()) {
      int ci = queue.back();
      queue.pop_back();
      queued[ci] = 0;
      std::vector<int> changed;
      if (!revise(ci, dom, changed)) return false;
      for (int v : changed) {
        for (int cj : watching[v]) {
          if (!queued[cj]) {
            queued[cj] = 1;
            queue.push_back(cj);
          }
        }
      }
    }
    return true;
  }

  std::optional<std::vector<int>> search(Domains dom) {
    int best = -1;
    int best_count = n_target + 1;
    for (int v = 0; v < n_source; ++v) {
      int count = 0;
      for (int x = 0; x < n_target; ++x) count += dom[v][x];
      if (count == 0) return std::nullopt;
      if (count > 1 && count < best_count) {
        best_count = count;
        best = v;
      }
    }
    if (best == -1) { // all singletons
      std::vector<int> map(n_source);
      for (int v = 0; v < n_source; ++v)
        map[v] = static_cast<int>(std::find(dom[v].begin(), dom[v].end(), 1) - dom[v].begin());
      return map;
    }
    for (int x = 0; x < n_target; ++x) {
      if (!dom[best][x]) continue;
      if (++nodes > budget) throw BudgetError("homomorphism search exceeded node budget", budget);
      Domains next = dom;
      std::fill(next[best].begin(), next[best].end(), 0);
      next[best][x] = 1;
      if (propagate(next, watching[best])) {
        if (auto r = search(std::move(next))) return r;
      }
    }
    return std::nullopt;
  }
};

} // namespace

std::optional<Homomorphism> find_homomorphism(const Structure& source, const Structure& target,
                                              std::size_t node_budget) {
  static const std::vector<std::vector<int>> kEmpty;
  HomSearch hs;
  hs.n_source = source.domain_size();
  hs.n_target = target.domain_size();
  hs.budget = node_budget;
  for (const auto& [name, rel] : source.relations()) {
    const std::vector<std::vector<int>>* allowed = &kEmpty;
    if (target.has_relation(name) && target.relation(name).arity == rel.arity)
      allowed = &target.relation(name).tuples;
    for (const auto& t : rel.tuples) hs.constraints.push_back({t, allowed});
  }
  hs.watching.assign(hs.n_source, {});
  for (std::size_t ci = 0; ci < hs.constraints.size(); ++ci)
    for (int v : hs.constraints[ci].vars) hs.watching[v].push_back(static_cast<int>(ci));

  HomSearch::Domains dom(hs.n_source, std::vector<char>(hs.n_target, 1));
  std::vector<int> all;
  for (std::size_t ci = 0; ci < hs.constraints.size(); ++ci) all.push_back(static_cast<int>(ci));
  if (!hs.propagate(dom, std::move(all))) return std::nullopt;
  auto map = hs.search(std::move(dom));
  if (!map) return std::nullopt;
  return Homomorphism{std::move(*map)};
}

bool hom_equivalent(const Structure& a, const Structure& b, std::size_t node_budget) {
  return find_homomorphism(a, b, node_budget).has_value() &&
         find_homomorphism(b, a, node_budget).has_value();
}

namespace {

// per-vertex invariant: (out-degree, in-degree, loops) per relation
std::vector<std::vector<int>> degree_profiles(const Structure& s) {
  std::vector<std::vector<int>> prof(s.domain_size());
  for (const auto& [name, rel] : s.relations()) {
    std::vector<int> outd(s.domain_size(), 0), ind(s.domain_size(), 0), loop(s.domain_size(), 0);
    for (const auto& t : rel.tuples) {
      if (t.size() == 2) {
        outd[t[0]]++;
        ind[t[1]]++;
        if (t[0] == t[1]) loop[t[0]]++;
      } else {
        for (int v : t) outd[v]++;
      }
    }
    for (int v = 0; v < s.domain_size(); ++v) {
      prof[v].push_back(outd[v]);
      prof[v].push_back(ind[v]);
      prof[v].push_back(loop[v]);
    }
  }
  return prof;
}

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Structure& a, const Structure& b) {
  if (a.domain_size() != b.domain_size()) return std::nullopt;
  if (a.relations().size() != b.relations().size()) return std::nullopt;
  for (const auto& [name, rel] : a.relations()) {
    if (!b.has_relation(name)) return std::nullopt;
    const auto& brel = b.relation(name);
    if (brel.arity != rel.arity || brel.tuples.size() != rel.tuples.size()) return std::nullopt;
  }

  const auto pa = degree_profiles(a);
  const auto pb = degree_profiles(b);
  {
    auto sa = pa;
    auto sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  const int n = a.domain_size();
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);

  auto partial_ok = [&](int just_set) {
    for (const auto& [name, rel] : a.relations()) {
      const auto& brel = b.relation(name);
      for (const auto& t : rel.tuples) {
        bool involves = false;
        bool complete = true;
        for (int v : t) {
          involves |= v == just_set;
          complete &= map[v] >= 0;
        }
        if (!involves || !complete) continue;
        std::vector<int> img(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) img[i] = map[t[i]];
        if (!std::binary_search(brel.tuples.begin(), brel.tuples.end(), img)) return false;
      }
    }
    return true;
  };

  std::function<bool(int)> extend = [&](int next) -> bool {
    if (next == n) {
      // tuple counts match, so a tuple-preserving bijection is an isomorphism
      for (const auto& [name, rel] : a.relations()) {
        const auto& brel = b.relation(name);
        for (const auto& t : rel.tuples) {
          std::vector<int> img(t.size());
          for (std::size_t i = 0; i < t.size(); ++i) img[i] = map[t[i]];
          if (!std::binary_search(brel.tuples.begin(), brel.tuples.end(), img)) return false;
        }
      }
      return true;
    }
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand] || pa[next] != pb[cand]) continue;
      map[next] = cand;
      used[cand] = 1;
      if (partial_ok(next) && extend(next + 1)) return true;
      map[next] = -1;
      used[cand] = 0;
    }
    return false;
  };

  if (extend(0)) return map;
  return std::nullopt;
}

std::vector<std::optional<int>> dual_pairing(const Structure& s) {
  for (const auto& [name, rel] : s.relations())
    if (rel.arity != 2) throw std::invalid_argument("dual_pairing: relation " + name + " is not binary");
  auto comps = connected_components(s);
  std::vector<Structure> induced;
  std::vector<Structure> reversed;
  induced.reserve(comps.size());
  for (const auto& c : comps) {
    induced.push_back(induced_substructure(s, c));
    reversed.push_back(reversed_structure(induced.back()));
  }
  std::vector<std::optional<int>> out(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (find_isomorphism(reversed[i], induced[j])) {
        out[i] = static_cast<int>(j);
        break;
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> compose_relation_word(
    const Structure& s, const std::vector<std::pair<std::string, bool>>& word) {
  const int n = s.domain_size();
  std::vector<std::vector<int>> acc;
  for (int x = 0; x < n; ++x) acc.push_back({x, x});
  for (const auto& [name, forward] : word) {
    const auto& rel = s.relation(name);
    if (rel.arity != 2)
      throw std::invalid_argument("compose_relation_word: relation " + name + " is not binary");
    std::vector<std::vector<int>> next(n);
    for (const auto& t : rel.tuples) {
      if (forward)
        next[t[0]].push_back(t[1]);
      else
        next[t[1]].push_back(t[0]);
    }
    std::set<std::vector<int>> result;
    for (const auto& pair : acc)
      for (int z : next[pair[1]]) result.insert({pair[0], z});
    acc.assign(result.begin(), result.end());
  }
  return acc;
}

} // namespace ppcp
