#include "ppcp/polymorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include "ppcp/errors.hpp"
#include "ppcp/util.hpp"

namespace ppcp {

bool is_polymorphism(const Structure& s, const FiniteOperation& f) {
  if (f.domain_size() != s.domain_size()) return false;
  const int m = f.arity();
  std::vector<int> col_args(m);
  for (const auto& [name, rel] : s.relations()) {
    const auto& tuples = rel.tuples;
    if (tuples.empty()) continue;
    std::vector<int> choice(m, 0);
    const int nt = static_cast<int>(tuples.size());
    do {
      std::vector<int> out(rel.arity);
      for (int j = 0; j < rel.arity; ++j) {
        for (int i = 0; i < m; ++i) col_args[i] = tuples[choice[i]][j];
        out[j] = f(col_args);
      }
      if (!std::binary_search(tuples.begin(), tuples.end(), out)) return false;
    } while (next_tuple(choice, nt));
  }
  return true;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct PolyConstraint {
  std::vector<int> scope;                       // class ids, one per relation row
  const std::vector<std::vector<int>>* allowed; // relation tuples
};

struct PolyEngine {
  int domain;
  std::vector<PolyConstraint> constraints;
  std::vector<std::vector<int>> watching; // class -> constraints
  std::size_t leaf_budget;
  std::size_t leaves = 0;

  using Domains = std::vector<std::uint64_t>; // candidate masks per class

  bool revise(int ci, Domains& dom, std::vector<int>& changed) {
    const auto& c = constraints[ci];
    const std::size_t arity = c.scope.size();
    std::vector<std::uint64_t> support(arity, 0);
    bool any = false;
    for (const auto& t : *c.allowed) {
      bool ok = true;
      for (std::size_t i = 0; i < arity && ok; ++i) {
        if (!(dom[c.scope[i]] >> t[i] & 1)) ok = false;
        for (std::size_t j = 0; j < i && ok; ++j)
          if (c.scope[j] == c.scope[i] && t[j] != t[i]) ok = false;
      }
      if (!ok) continue;
      any = true;
      for (std::size_t i = 0; i < arity; ++i) support[i] |= 1ull << t[i];
    }
    if (!any) return false;
    for (std::size_t i = 0; i < arity; ++i) {
      auto& d = dom[c.scope[i]];
      std::uint64_t nd = d & support[i];
      if (nd == 0) return false;
      if (nd != d) {
        d = nd;
        changed.push_back(c.scope[i]);
      }
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
      for (int cls : changed)
        for (int cj : watching[cls])
          if (!queued[cj]) {
            queued[cj] = 1;
            queue.push_back(cj);
          }
    }
    return true;
  }

  // static order: classes are numbered by their least cell already
  std::optional<std::vector<int>> search(Domains dom, int next) {
    const int n_classes = static_cast<int>(dom.size());
    while (next < n_classes && std::popcount(dom[next]) == 1) ++next;
    if (next == n_classes) {
      std::vector<int> values(n_classes);
      for (int c = 0; c < n_classes; ++c) values[c] = std::countr_zero(dom[c]);
      return values;
    }
    for (int v = 0; v < domain; ++v) {
      if (!(dom[next] >> v & 1)) continue;
      if (++leaves > leaf_budget)
        throw BudgetError("polymorphism search exceeded leaf budget", leaf_budget);
      Domains d2 = dom;
      d2[next] = 1ull << v;
      if (propagate(d2, watching[next])) {
        if (auto r = search(std::move(d2), next + 1)) return r;
      }
    }
    return std::nullopt;
  }
};

} // namespace

std::optional<std::map<int, FiniteOperation>> find_polymorphism(const Structure& s,
                                                                const MinorCondition& cond,
                                                                std::size_t leaf_budget,
                                                                std::size_t merge_budget) {
  const int domain = s.domain_size();
  if (domain > 63) throw BudgetError("polymorphism search limited to domains of size 63", 63);

  // cells: per symbol, one per argument tuple
  std::vector<int> symbols;
  std::vector<std::size_t> offset;
  std::vector<std::size_t> table_size;
  std::size_t total = 0;
  for (const auto& [sym, arity] : cond.symbol_arities()) {
    auto size = checked_pow(domain, arity, merge_budget);
    if (!size) throw BudgetError("polymorphism table space exceeds budget", merge_budget);
    symbols.push_back(sym);
    offset.push_back(total);
    table_size.push_back(*size);
    total += *size;
    if (total > merge_budget)
      throw BudgetError("polymorphism table space exceeds budget", merge_budget);
  }
  auto symbol_slot = [&](int sym) {
    return static_cast<std::size_t>(
        std::find(symbols.begin(), symbols.end(), sym) - symbols.begin());
  };

  // merge cells along the identities
  Dsu dsu(total);
  std::size_t merges = 0;
  for (const auto& id : cond.identities()) {
    auto assignments = checked_pow(domain, id.variable_count, merge_budget);
    if (!assignments || (merges += *assignments) > merge_budget)
      throw BudgetError("identity merging exceeds budget", merge_budget);
    const std::size_t lslot = symbol_slot(id.lhs.symbol);
    const std::size_t rslot = symbol_slot(id.rhs.symbol);
    std::vector<int> assign(id.variable_count, 0);
    do {
      std::size_t li = 0, ri = 0;
      for (int v : id.lhs.args) li = li * domain + static_cast<std::size_t>(assign[v]);
      for (int v : id.rhs.args) ri = ri * domain + static_cast<std::size_t>(assign[v]);
      dsu.unite(static_cast<int>(offset[lslot] + li), static_cast<int>(offset[rslot] + ri));
    } while (next_tuple(assign, domain));
  }

  // number classes by least cell
  std::vector<int> class_of(total, -1);
  int n_classes = 0;
  for (std::size_t cell = 0; cell < total; ++cell) {
    int root = dsu.find(static_cast<int>(cell));
    if (class_of[root] == -1) class_of[root] = n_classes++;
    class_of[cell] = class_of[root];
  }

  PolyEngine eng;
  eng.domain = domain;
  eng.leaf_budget = leaf_budget;

  // relation-preservation constraints, deduplicated by scope + relation
  std::unordered_map<std::vector<int>, std::vector<char>, VectorHash> seen;
  std::size_t combos_total = 0;
  int rel_index = 0;
  for (const auto& [name, rel] : s.relations()) {
    const auto& tuples = rel.tuples;
    ++rel_index;
    if (tuples.empty()) {
      // an empty relation forbids everything only if the source side can
      // produce rows; with no tuples there are no constraints
      continue;
    }
    const int nt = static_cast<int>(tuples.size());
    for (std::size_t slot = 0; slot < symbols.size(); ++slot) {
      const int m = cond.symbol_arities().at(symbols[slot]);
      auto combos = checked_pow(nt, m, merge_budget);
      if (!combos || (combos_total += *combos) > merge_budget)
        throw BudgetError("constraint enumeration exceeds budget", merge_budget);
      std::vector<int> choice(m, 0);
      do {
        std::vector<int> scope(rel.arity);
        for (int j = 0; j < rel.arity; ++j) {
          std::size_t idx = 0;
          for (int i = 0; i < m; ++i) idx = idx * domain + tuples[choice[i]][j];
          scope[j] = class_of[offset[slot] + idx];
        }
        std::vector<int> key = scope;
        key.push_back(-rel_index); // distinguish relations with equal scopes
        if (seen.emplace(std::move(key), std::vector<char>{}).second)
          eng.constraints.push_back({std::move(scope), &tuples});
      } while (next_tuple(choice, nt));
    }
  }

  eng.watching.assign(n_classes, {});
  for (std::size_t ci = 0; ci < eng.constraints.size(); ++ci)
    for (int cls : eng.constraints[ci].scope) eng.watching[cls].push_back(static_cast<int>(ci));
  for (auto& w : eng.watching) {
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
  }

  PolyEngine::Domains dom(n_classes, (domain == 63) ? ~0ull >> 1 : (1ull << domain) - 1);
  std::vector<int> all(eng.constraints.size());
  std::iota(all.begin(), all.end(), 0);
  if (!eng.propagate(dom, std::move(all))) return std::nullopt;
  auto values = eng.search(std::move(dom), 0);
  if (!values) return std::nullopt;

  std::map<int, FiniteOperation> out;
  for (std::size_t slot = 0; slot < symbols.size(); ++slot) {
    std::vector<int> table(table_size[slot]);
    for (std::size_t i = 0; i < table_size[slot]; ++i) table[i] = (*values)[class_of[offset[slot] + i]];
    out.emplace(symbols[slot],
                FiniteOperation(domain, cond.symbol_arities().at(symbols[slot]), std::move(table)));
  }
  return out;
}

std::vector<FiniteOperation> all_polymorphisms(const Structure& s, int arity, std::size_t budget) {
  const int domain = s.domain_size();
  auto cells = checked_pow(domain, arity, budget);
  if (!cells) throw BudgetError("polymorphism enumeration exceeds budget", budget);
  auto tables = checked_pow(domain, *cells, budget);
  if (!tables) throw BudgetError("polymorphism enumeration exceeds budget", budget);

  std::vector<FiniteOperation> out;
  std::vector<int> table(*cells, 0);
  do {
    FiniteOperation f(domain, arity, table);
    if (is_polymorphism(s, f)) out.push_back(std::move(f));
  } while (next_tuple(table, domain));
  return out;
}

} // namespace ppcp
