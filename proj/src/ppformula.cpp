#include "ppcp/ppformula.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ppcp/errors.hpp"
#include "ppcp/util.hpp"

namespace ppcp {

PPFormula::PPFormula(int free_count, int exist_count, std::vector<Atom> atoms)
    : free_count_(free_count), exist_count_(exist_count), atoms_(std::move(atoms)) {
  if (free_count_ < 0 || exist_count_ < 0) throw std::invalid_argument("PPFormula: negative counts");
  for (const auto& a : atoms_) {
    for (int v : a.vars)
      if (v < 0 || v >= free_count_ + exist_count_)
        throw std::invalid_argument("PPFormula: variable index out of range");
    if (a.type == Atom::Type::Equality && a.vars.size() != 2)
      throw std::invalid_argument("PPFormula: equality needs exactly two variables");
  }
}

namespace {

struct RawVar {
  char block; // 'x', 'y' or 'z'
  int index;  // 1-based
};

RawVar parse_var(const std::string& tok) {
  if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y' && tok[0] != 'z'))
    throw std::invalid_argument("pp formula: bad variable '" + tok + "'");
  for (std::size_t i = 1; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      throw std::invalid_argument("pp formula: bad variable '" + tok + "'");
  return {tok[0], std::stoi(tok.substr(1))};
}

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

} // namespace

PPFormula PPFormula::parse(const std::string& text) {
  struct RawAtom {
    Atom::Type type;
    std::string relation;
    std::vector<RawVar> vars;
  };
  std::vector<RawAtom> raw;
  int max_x = 0, max_y = 0, max_z = 0;

  auto see = [&](const RawVar& v) {
    if (v.block == 'x') max_x = std::max(max_x, v.index);
    if (v.block == 'y') max_y = std::max(max_y, v.index);
    if (v.block == 'z') max_z = std::max(max_z, v.index);
  };

  std::size_t start = 0;
  while (start <= text.size()) {
    auto amp = text.find('&', start);
    std::string clause = trim(text.substr(start, amp == std::string::npos ? amp : amp - start));
    start = (amp == std::string::npos) ? text.size() + 1 : amp + 1;
    if (clause.empty()) continue;
    // strip an "exists z1, z2:" prefix; z variables are existential anyway
    if (clause.rfind("exists", 0) == 0) {
      auto colon = clause.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("pp formula: exists without ':'");
      std::string decls = clause.substr(6, colon - 6);
      std::istringstream ds(decls);
      std::string tok;
      while (std::getline(ds, tok, ',')) {
        auto v = parse_var(trim(tok));
        if (v.block != 'z') throw std::invalid_argument("pp formula: only z variables may be bound");
        see(v);
      }
      clause = trim(clause.substr(colon + 1));
      if (clause.empty()) continue;
    }
    auto paren = clause.find('(');
    auto eq = clause.find('=');
    if (eq != std::string::npos && (paren == std::string::npos || eq < paren)) {
      RawAtom a{Atom::Type::Equality, "", {}};
      a.vars.push_back(parse_var(trim(clause.substr(0, eq))));
      a.vars.push_back(parse_var(trim(clause.substr(eq + 1))));
      see(a.vars[0]);
      see(a.vars[1]);
      raw.push_back(std::move(a));
      continue;
    }
    if (paren == std::string::npos || clause.back() != ')')
      throw std::invalid_argument("pp formula: malformed atom '" + clause + "'");
    std::string name = trim(clause.substr(0, paren));
    std::string args = clause.substr(paren + 1, clause.size() - paren - 2);
    RawAtom a{name == "bottom" ? Atom::Type::Bottom : Atom::Type::Relation,
              name == "bottom" ? "" : name,
              {}};
    std::istringstream as(args);
    std::string tok;
    while (std::getline(as, tok, ',')) {
      auto v = parse_var(trim(tok));
      see(v);
      a.vars.push_back(v);
    }
    if (a.vars.empty()) throw std::invalid_argument("pp formula: atom without variables");
    raw.push_back(std::move(a));
  }

  const int free_count = max_x + max_y;
  auto flatten = [&](const RawVar& v) {
    if (v.block == 'x') return v.index - 1;
    if (v.block == 'y') return max_x + v.index - 1;
    return free_count + v.index - 1;
  };
  std::vector<Atom> atoms;
  atoms.reserve(raw.size());
  for (const auto& r : raw) {
    Atom a{r.type, r.relation, {}};
    for (const auto& v : r.vars) a.vars.push_back(flatten(v));
    atoms.push_back(std::move(a));
  }
  return PPFormula(free_count, max_z, std::move(atoms));
}

namespace {

// rows over an ordered list of bound variables
struct Rows {
  std::vector<int> vars;
  std::vector<std::vector<int>> rows;
};

// join rows with an atom's tuple set over its variable list
Rows join(const Rows& cur, const std::vector<int>& atom_vars,
          const std::vector<std::vector<int>>& tuples, std::size_t row_budget) {
  Rows out;
  out.vars = cur.vars;
  std::vector<int> new_positions; // positions in atom_vars that are new variables
  // (position in atom, j): j >= 0 checks row[j]; j < 0 checks t[-1-j], the
  // first occurrence of the same variable within this atom
  std::vector<std::pair<int, int>> shared;
  for (std::size_t i = 0; i < atom_vars.size(); ++i) {
    auto first = std::find(atom_vars.begin(), atom_vars.begin() + i, atom_vars[i]);
    if (first != atom_vars.begin() + i) {
      shared.emplace_back(static_cast<int>(i), -1 - static_cast<int>(first - atom_vars.begin()));
      continue;
    }
    auto it = std::find(cur.vars.begin(), cur.vars.end(), atom_vars[i]);
    if (it == cur.vars.end()) {
      new_positions.push_back(static_cast<int>(i));
      out.vars.push_back(atom_vars[i]);
    } else {
      shared.emplace_back(static_cast<int>(i), static_cast<int>(it - cur.vars.begin()));
    }
  }
  for (const auto& row : cur.rows) {
    for (const auto& t : tuples) {
      bool ok = true;
      for (auto [ai, ci] : shared) {
        int expected = ci >= 0 ? row[ci] : t[-1 - ci];
        if (t[ai] != expected) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::vector<int> merged = row;
      for (int np : new_positions) merged.push_back(t[np]);
      out.rows.push_back(std::move(merged));
      if (out.rows.size() > row_budget)
        throw BudgetError("pp evaluation intermediate relation exceeds budget", row_budget);
    }
  }
  std::sort(out.rows.begin(), out.rows.end());
  out.rows.erase(std::unique(out.rows.begin(), out.rows.end()), out.rows.end());
  return out;
}

} // namespace

std::vector<std::vector<int>> eval_pp(const Structure& base, const PPFormula& formula,
                                      std::size_t row_budget) {
  for (const auto& a : formula.atoms())
    if (a.type == PPFormula::Atom::Type::Bottom) return {};

  const int domain = base.domain_size();
  Rows cur;
  cur.rows.push_back({}); // one empty row over no variables

  std::vector<const PPFormula::Atom*> pending;
  for (const auto& a : formula.atoms()) pending.push_back(&a);

  auto tuples_for = [&](const PPFormula::Atom& a) -> std::vector<std::vector<int>> {
    if (a.type == PPFormula::Atom::Type::Equality) {
      std::vector<std::vector<int>> diag;
      for (int v = 0; v < domain; ++v) diag.push_back({v, v});
      return diag;
    }
    const auto& rel = base.relation(a.relation);
    if (static_cast<int>(a.vars.size()) != rel.arity)
      throw std::invalid_argument("eval_pp: atom arity mismatch for " + a.relation);
    return rel.tuples;
  };

  // greedy: join the pending atom that yields the smallest result
  while (!pending.empty()) {
    std::size_t best = 0;
    Rows best_rows;
    bool have = false;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      Rows candidate = join(cur, pending[i]->vars, tuples_for(*pending[i]), row_budget);
      if (!have || candidate.rows.size() < best_rows.rows.size()) {
        best = i;
        best_rows = std::move(candidate);
        have = true;
      }
    }
    cur = std::move(best_rows);
    pending.erase(pending.begin() + best);
    if (cur.rows.empty()) break;
  }

  // extend with unconstrained free variables, project to free order
  std::vector<int> position(formula.free_count(), -1);
  for (std::size_t i = 0; i < cur.vars.size(); ++i)
    if (cur.vars[i] < formula.free_count()) position[cur.vars[i]] = static_cast<int>(i);

  std::set<std::vector<int>> projected;
  for (const auto& row : cur.rows) {
    std::vector<std::vector<int>> expansion{{}};
    for (int fv = 0; fv < formula.free_count(); ++fv) {
      std::vector<std::vector<int>> next;
      for (const auto& partial : expansion) {
        if (position[fv] >= 0) {
          auto copy = partial;
          copy.push_back(row[position[fv]]);
          next.push_back(std::move(copy));
        } else {
          for (int v = 0; v < domain; ++v) {
            auto copy = partial;
            copy.push_back(v);
            next.push_back(std::move(copy));
          }
        }
        if (next.size() > row_budget)
          throw BudgetError("pp evaluation free-variable expansion exceeds budget", row_budget);
      }
      expansion = std::move(next);
    }
    projected.insert(expansion.begin(), expansion.end());
    if (projected.size() > row_budget)
      throw BudgetError("pp evaluation result exceeds budget", row_budget);
  }
  return {projected.begin(), projected.end()};
}

Structure pp_power(const PPPowerSpec& spec, std::size_t point_budget, std::size_t row_budget) {
  const int d = spec.base.domain_size();
  auto points = checked_pow(d, spec.dimension, point_budget);
  if (!points) throw BudgetError("pp power domain exceeds budget", point_budget);

  Structure out(static_cast<int>(*points));
  for (const auto& [name, arity_formula] : spec.relations) {
    const auto& [arity, formula] = arity_formula;
    if (formula.free_count() != arity * spec.dimension)
      throw std::invalid_argument("pp_power: formula for " + name + " must have arity*dimension free variables");
    out.add_relation(name, arity);
    for (const auto& flat : eval_pp(spec.base, formula, row_budget)) {
      std::vector<int> tuple(arity);
      for (int j = 0; j < arity; ++j) {
        std::size_t idx = 0;
        for (int c = 0; c < spec.dimension; ++c) idx = idx * d + flat[j * spec.dimension + c];
        tuple[j] = static_cast<int>(idx);
      }
      out.add_tuple(name, std::move(tuple));
    }
  }
  return out;
}

} // namespace ppcp
