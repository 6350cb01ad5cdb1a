#include "ppcp/minor.hpp"

#include <algorithm>
#include <stdexcept>

#include "ppcp/catalog.hpp"
#include "ppcp/errors.hpp"
#include "ppcp/util.hpp"

namespace ppcp {

MinorCondition::MinorCondition(std::string kind, std::map<int, int> symbol_arities,
                               std::vector<MinorIdentity> identities)
    : kind_(std::move(kind)), symbol_arities_(std::move(symbol_arities)),
      identities_(std::move(identities)) {
  for (const auto& [sym, ar] : symbol_arities_)
    if (ar < 1) throw std::invalid_argument("MinorCondition: symbol arity must be positive");
  for (const auto& id : identities_) {
    for (const auto* side : {&id.lhs, &id.rhs}) {
      auto it = symbol_arities_.find(side->symbol);
      if (it == symbol_arities_.end())
        throw std::invalid_argument("MinorCondition: identity uses unknown symbol");
      if (static_cast<int>(side->args.size()) != it->second)
        throw std::invalid_argument("MinorCondition: argument count does not match symbol arity");
      for (int v : side->args)
        if (v < 0 || v >= id.variable_count)
          throw std::invalid_argument("MinorCondition: variable index out of range");
    }
  }
}

namespace {

MinorIdentity identity2(int vars, int sym_l, std::vector<int> l, int sym_r, std::vector<int> r) {
  return MinorIdentity{vars, {sym_l, std::move(l)}, {sym_r, std::move(r)}};
}

MinorIdentity identity(int vars, std::vector<int> l, std::vector<int> r) {
  return identity2(vars, 0, std::move(l), 0, std::move(r));
}

std::vector<int> iota_vec(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

} // namespace

MinorCondition maltsev_condition() {
  // f(x,x,x) = f(x,y,y) and f(x,x,x) = f(y,y,x)
  return MinorCondition("maltsev", {{0, 3}},
                        {identity(2, {0, 0, 0}, {0, 1, 1}), identity(2, {0, 0, 0}, {1, 1, 0})});
}

MinorCondition majority_condition() {
  return MinorCondition("majority", {{0, 3}},
                        {identity(2, {0, 0, 0}, {0, 0, 1}), identity(2, {0, 0, 0}, {0, 1, 0}),
                         identity(2, {0, 0, 0}, {1, 0, 0})});
}

MinorCondition cyclic_condition(int p) {
  if (p < 2) throw std::invalid_argument("cyclic_condition: p must be at least 2");
  std::vector<int> lhs = iota_vec(p);
  std::vector<int> rhs(p);
  for (int i = 0; i < p; ++i) rhs[i] = (i + 1) % p;
  return MinorCondition("cyclic:" + std::to_string(p), {{0, p}},
                        {identity(p, std::move(lhs), std::move(rhs))});
}

MinorCondition fs_condition(int n) {
  if (n < 1) throw std::invalid_argument("fs_condition: n must be positive");
  std::vector<MinorIdentity> ids;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> rhs = iota_vec(n);
    std::swap(rhs[i], rhs[i + 1]);
    ids.push_back(identity(n, iota_vec(n), std::move(rhs)));
  }
  return MinorCondition("fs:" + std::to_string(n), {{0, n}}, std::move(ids));
}

MinorCondition ts_condition(int n) {
  if (n < 1) throw std::invalid_argument("ts_condition: n must be positive");
  auto fs = fs_condition(n);
  std::vector<MinorIdentity> ids = fs.identities();
  if (n >= 3) {
    // f(x,x,y,z..) = f(x,y,y,z..) over variables x=0, y=1, z_i = 2..n-2
    std::vector<int> lhs{0, 0, 1};
    std::vector<int> rhs{0, 1, 1};
    for (int i = 3; i < n; ++i) {
      lhs.push_back(i - 1);
      rhs.push_back(i - 1);
    }
    ids.push_back(identity(n - 1, std::move(lhs), std::move(rhs)));
  }
  return MinorCondition("ts:" + std::to_string(n), {{0, n}}, std::move(ids));
}

MinorCondition gmin_condition(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("gmin_condition: n must be odd and >= 3");
  auto fs = fs_condition(n);
  std::vector<MinorIdentity> ids = fs.identities();
  // f(x1..x_{n-2}, y, y) = f(x1..x_{n-2}, z, z); variables x_i = 0..n-3, y = n-2, z = n-1
  std::vector<int> lhs = iota_vec(n - 2);
  std::vector<int> rhs = iota_vec(n - 2);
  lhs.push_back(n - 2);
  lhs.push_back(n - 2);
  rhs.push_back(n - 1);
  rhs.push_back(n - 1);
  ids.push_back(identity(n, std::move(lhs), std::move(rhs)));
  return MinorCondition("gmin:" + std::to_string(n), {{0, n}}, std::move(ids));
}

MinorCondition gp_condition(int n, int k, std::size_t identity_budget) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("gp_condition: n must be odd and >= 3");
  if (k < 1 || k > n) throw std::invalid_argument("gp_condition: need 1 <= k <= n");
  // variables: 0 = the odd one, 1..(n-1)/2 = the pairs
  const int pairs = (n - 1) / 2;
  std::vector<MinorIdentity> ids;
  std::vector<int> lhs(n, 0);
  // arrangements of (1,1,2,2,...,pairs,pairs) over the n-1 non-v positions
  std::vector<int> base;
  for (int p = 1; p <= pairs; ++p) {
    base.push_back(p);
    base.push_back(p);
  }
  std::sort(base.begin(), base.end());
  for (int pos = 0; pos < k; ++pos) {
    std::vector<int> arrangement = base;
    do {
      std::vector<int> rhs;
      rhs.reserve(n);
      rhs.insert(rhs.end(), arrangement.begin(), arrangement.begin() + pos);
      rhs.push_back(0);
      rhs.insert(rhs.end(), arrangement.begin() + pos, arrangement.end());
      ids.push_back(identity(pairs + 1, lhs, std::move(rhs)));
      if (ids.size() > identity_budget)
        throw BudgetError("gp_condition identity enumeration exceeds budget", identity_budget);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  }
  return MinorCondition("gp:" + std::to_string(n) + ":" + std::to_string(k), {{0, n}},
                        std::move(ids));
}

MinorCondition symgp_condition(int n, std::size_t identity_budget) {
  auto gp = gp_condition(n, n, identity_budget);
  auto fs = fs_condition(n);
  std::vector<MinorIdentity> ids = fs.identities();
  ids.insert(ids.end(), gp.identities().begin(), gp.identities().end());
  return MinorCondition("symgp:" + std::to_string(n), {{0, n}}, std::move(ids));
}

MinorCondition compat_gmin_condition(int n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("compat_gmin_condition: n must be odd");
  std::map<int, int> arities;
  std::vector<MinorIdentity> ids;
  for (int m = 1; m <= n; m += 2) {
    const int sym = (m - 1) / 2;
    arities[sym] = m;
    auto fs = fs_condition(m);
    for (const auto& id : fs.identities())
      ids.push_back(identity2(id.variable_count, sym, id.lhs.args, sym, id.rhs.args));
  }
  for (int m = 1; m + 2 <= n; m += 2) {
    // g_{m+2}(y,y,x1..xm) = g_m(x1..xm); variables x_i = 0..m-1, y = m
    std::vector<int> lhs{m, m};
    for (int i = 0; i < m; ++i) lhs.push_back(i);
    ids.push_back(identity2(m + 1, (m + 1) / 2, std::move(lhs), (m - 1) / 2, iota_vec(m)));
  }
  return MinorCondition("compat_gmin:" + std::to_string(n), std::move(arities), std::move(ids));
}

MinorCondition action_condition(const Action& hact) {
  const int m = hact.points();
  std::vector<MinorIdentity> ids;
  for (const auto& h : hact.generator_images()) {
    std::vector<int> rhs(m);
    for (int y = 0; y < m; ++y) rhs[y] = h(y);
    ids.push_back(identity(m, iota_vec(m), std::move(rhs)));
  }
  std::string label = hact.group().name().empty() ? "action" : "action:" + hact.group().name();
  return MinorCondition(std::move(label), {{0, m}}, std::move(ids));
}

MinorCondition condition_from_literal(const std::string& literal) {
  auto split = [&]() {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      auto colon = literal.find(':', start);
      if (colon == std::string::npos) {
        parts.push_back(literal.substr(start));
        break;
      }
      parts.push_back(literal.substr(start, colon - start));
      start = colon + 1;
    }
    return parts;
  }();
  const std::string& head = split[0];
  auto arg = [&](std::size_t i) {
    if (i >= split.size()) throw std::invalid_argument("condition literal " + literal + ": missing parameter");
    return std::stoi(split[i]);
  };
  if (head == "maltsev") return maltsev_condition();
  if (head == "majority") return majority_condition();
  if (head == "cyclic") return cyclic_condition(arg(1));
  if (head == "fs") return fs_condition(arg(1));
  if (head == "ts") return ts_condition(arg(1));
  if (head == "gmin") return gmin_condition(arg(1));
  if (head == "gp") return gp_condition(arg(1), arg(2));
  if (head == "action") {
    if (split.size() < 2) throw std::invalid_argument("condition literal action: missing spec");
    std::string spec = literal.substr(std::string("action:").size());
    return action_condition(action_from_spec(spec));
  }
  throw std::invalid_argument("unknown condition literal: " + literal);
}

bool op_satisfies(const std::map<int, FiniteOperation>& ops, const MinorCondition& cond,
                  std::size_t budget) {
  int domain = -1;
  for (const auto& [sym, arity] : cond.symbol_arities()) {
    auto it = ops.find(sym);
    if (it == ops.end()) throw std::invalid_argument("op_satisfies: missing operation for symbol");
    if (it->second.arity() != arity)
      throw std::invalid_argument("op_satisfies: operation arity does not match symbol");
    if (domain < 0) domain = it->second.domain_size();
    if (it->second.domain_size() != domain)
      throw std::invalid_argument("op_satisfies: operations on different domains");
  }
  if (domain < 0) return true;

  std::size_t total = 0;
  for (const auto& id : cond.identities()) {
    auto count = checked_pow(domain, id.variable_count, budget);
    if (!count || (total += *count) > budget)
      throw BudgetError("op_satisfies assignment enumeration exceeds budget", budget);
  }

  std::vector<int> assign;
  std::vector<int> largs, rargs;
  for (const auto& id : cond.identities()) {
    const auto& fl = ops.at(id.lhs.symbol);
    const auto& fr = ops.at(id.rhs.symbol);
    assign.assign(id.variable_count, 0);
    largs.resize(id.lhs.args.size());
    rargs.resize(id.rhs.args.size());
    do {
      for (std::size_t i = 0; i < largs.size(); ++i) largs[i] = assign[id.lhs.args[i]];
      for (std::size_t i = 0; i < rargs.size(); ++i) rargs[i] = assign[id.rhs.args[i]];
      if (fl(largs) != fr(rargs)) return false;
    } while (next_tuple(assign, domain));
  }
  return true;
}

bool op_satisfies(const FiniteOperation& op, const MinorCondition& cond, std::size_t budget) {
  std::map<int, FiniteOperation> ops;
  for (const auto& [sym, arity] : cond.symbol_arities()) ops.emplace(sym, op);
  return op_satisfies(ops, cond, budget);
}

} // namespace ppcp
