#include "ppcp/forge.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ppcp/errors.hpp"
#include "ppcp/minor.hpp"
#include "ppcp/util.hpp"

namespace ppcp {

namespace {

std::vector<int> identity_map(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

} // namespace

bool check_gp(const FiniteOperation& op, int n, int k) {
  if (op.arity() != n) throw std::invalid_argument("check_gp: arity mismatch");
  if (n % 2 == 0 || k < 1 || k > n) throw std::invalid_argument("check_gp: need odd n and 1<=k<=n");
  const int domain = op.domain_size();
  std::vector<int> constant(n);
  std::vector<int> args(n, 0);
  std::vector<int> mult(domain);
  do {
    std::fill(mult.begin(), mult.end(), 0);
    for (int a : args) mult[a]++;
    int odd_value = -1;
    bool unique_odd = true;
    for (int v = 0; v < domain; ++v) {
      if (mult[v] % 2 == 0) continue;
      if (odd_value >= 0) {
        unique_odd = false;
        break;
      }
      odd_value = v;
    }
    if (!unique_odd || odd_value < 0) continue;
    bool in_front = false;
    for (int i = 0; i < k; ++i) {
      if (args[i] == odd_value) {
        in_front = true;
        break;
      }
    }
    if (!in_front) continue;
    std::fill(constant.begin(), constant.end(), odd_value);
    if (op(args) != op(constant)) return false;
  } while (next_tuple(args, domain));
  return true;
}

bool check_gp(const TermPtr& term, int n, int k, EvalSession& session) {
  return check_gp(tabulate(term, session), n, k);
}

namespace {

void require_majority(const TermPtr& maj, EvalSession& session) {
  if (maj->arity() != 3 || !op_satisfies(tabulate(maj, session), majority_condition()))
    throw std::invalid_argument("forge: majority input does not satisfy the quasi majority identities");
}

void require_maltsev(const TermPtr& malt, EvalSession& session) {
  if (malt->arity() != 3 || !op_satisfies(tabulate(malt, session), maltsev_condition()))
    throw std::invalid_argument("forge: Maltsev input does not satisfy the quasi Maltsev identities");
}

} // namespace

TermPtr gp_base_from_maltsev(const TermPtr& malt, EvalSession& session) {
  require_maltsev(malt, session);
  TermPtr base = Term::minor(malt, {0, 2, 1}, 3);
  if (!check_gp(base, 3, 2, session))
    throw std::logic_error("forge: converted Maltsev witness fails GP(3,2)");
  return base;
}

TermPtr gp_lift_position(const TermPtr& maj, const TermPtr& gp, int n, int k, EvalSession& session) {
  if (n % 2 == 0 || k < 2 || k >= n)
    throw std::invalid_argument("gp_lift_position: need odd n and 2 <= k < n");
  require_majority(maj, session);
  if (!check_gp(gp, n, k, session))
    throw std::invalid_argument("gp_lift_position: input does not satisfy GP(n,k)");

  // rows permute the arguments at 1-based positions k-1, k, k+1
  std::vector<int> row2 = identity_map(n);
  row2[k - 1] = k;
  row2[k] = k - 1;
  std::vector<int> row3 = identity_map(n);
  row3[k - 2] = k - 1;
  row3[k - 1] = k;
  row3[k] = k - 2;
  TermPtr lifted = Term::compose(
      maj, {gp, Term::minor(gp, std::move(row2), n), Term::minor(gp, std::move(row3), n)});
  if (!check_gp(lifted, n, k + 1, session))
    throw std::logic_error("gp_lift_position: output fails GP(n,k+1)");
  return lifted;
}

TermPtr gp_lift_arity(const TermPtr& malt, const TermPtr& p, EvalSession& session) {
  const int n = p->arity();
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("gp_lift_arity: need odd arity >= 3");
  require_maltsev(malt, session);
  if (!check_gp(p, n, n, session))
    throw std::invalid_argument("gp_lift_arity: input does not satisfy GP(n,n)");

  std::vector<int> first(n, 0);
  std::vector<int> middle(n);
  for (int i = 0; i < n; ++i) middle[i] = i + 2;
  std::vector<int> second(n, 1);
  TermPtr lifted =
      Term::compose(malt, {Term::minor(p, std::move(first), n + 2),
                           Term::minor(p, std::move(middle), n + 2),
                           Term::minor(p, std::move(second), n + 2)});
  if (!check_gp(lifted, n + 2, 2, session))
    throw std::logic_error("gp_lift_arity: output fails GP(n+2,2)");
  return lifted;
}

TermPtr build_gp(const TermPtr& maj, const TermPtr& malt, int n, EvalSession& session,
                 int max_arity) {
  if (n % 2 == 0 || n < 3) throw std::invalid_argument("build_gp: arity must be odd and >= 3");
  if (n > max_arity) throw BudgetError("build_gp: arity beyond configured maximum", max_arity);
  TermPtr t = gp_base_from_maltsev(malt, session);
  int m = 3;
  for (;;) {
    for (int k = 2; k < m; ++k) t = gp_lift_position(maj, t, m, k, session);
    if (m == n) break;
    t = gp_lift_arity(malt, t, session);
    m += 2;
  }
  return t;
}

TermPtr symmetrize_gp(const CountFunction& count, const TermPtr& p, EvalSession& session) {
  const int n = p->arity();
  if (!check_gp(p, n, n, session))
    throw std::invalid_argument("symmetrize_gp: input does not satisfy GP(n,n)");
  TermPtr sym = Term::symmetrize(count, p);
  if (!op_satisfies(tabulate(sym, session), fs_condition(n)))
    throw std::logic_error("symmetrize_gp: output is not fully symmetric");
  if (!check_gp(sym, n, n, session)) throw std::logic_error("symmetrize_gp: output fails GP(n,n)");
  return sym;
}

namespace {

// odd-size subsets of {0..m-1}, proper if requested, sorted by size then lex
std::vector<std::vector<int>> odd_subsets(int m, bool proper_only) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    if (std::popcount(mask) % 2 == 0) continue;
    if (proper_only && std::popcount(mask) == m) continue;
    std::vector<int> subset;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) subset.push_back(i);
    out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

} // namespace

std::vector<TermPtr> build_compatible_gmins(const std::vector<TermPtr>& sym_gps,
                                            EvalSession& session) {
  if (sym_gps.empty()) throw std::invalid_argument("build_compatible_gmins: no inputs");
  const int domain = sym_gps[0]->domain_size();
  std::vector<TermPtr> g;
  g.push_back(Term::projection(domain, 1, 0)); // g1

  for (std::size_t k = 1; k <= sym_gps.size(); ++k) {
    const int m = static_cast<int>(2 * k + 1);
    const auto subsets = odd_subsets(m, /*proper_only=*/true);
    const long long expected_arity = (1ll << (2 * k)) - 1; // 4^k - 1
    if (sym_gps[k - 1]->arity() != expected_arity)
      throw std::invalid_argument("build_compatible_gmins: stage " + std::to_string(k) +
                                  " input must have arity 4^k-1");
    if (static_cast<long long>(subsets.size()) != expected_arity)
      throw std::logic_error("build_compatible_gmins: subset count mismatch");

    std::vector<TermPtr> members;
    members.reserve(subsets.size());
    for (const auto& a : subsets) members.push_back(Term::minor(g[(a.size() - 1) / 2], a, m));
    TermPtr gm = Term::compose(sym_gps[k - 1], std::move(members));

    const auto& table = tabulate(gm, session);
    if (!op_satisfies(table, fs_condition(m)))
      throw std::logic_error("build_compatible_gmins: g is not fully symmetric");
    // g_m(y,y,x...) = g_{m-2}(x...)
    const auto& prev = tabulate(g.back(), session);
    std::vector<int> args(m, 0);
    do {
      if (args[0] != args[1]) continue;
      std::vector<int> rest(args.begin() + 2, args.end());
      if (table(args) != prev(rest))
        throw std::logic_error("build_compatible_gmins: compatibility identity fails");
    } while (next_tuple(args, domain));
    g.push_back(std::move(gm));
  }
  return g;
}

TermPtr build_ts(const std::vector<TermPtr>& gmins, const CountFunction& count, int n,
                 EvalSession& session) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("build_ts: arity must be odd");
  if (static_cast<int>(gmins.size()) < (n + 1) / 2)
    throw std::invalid_argument("build_ts: need minorities up to g_n");
  const auto subsets = odd_subsets(n, /*proper_only=*/false);
  if (count.family_size() != static_cast<long long>(subsets.size()))
    throw std::invalid_argument("build_ts: count family must be 2^(n-1)");

  std::vector<TermPtr> members;
  members.reserve(subsets.size());
  for (const auto& a : subsets)
    members.push_back(Term::minor(gmins[(a.size() - 1) / 2], a, n));
  TermPtr ts = Term::count_apply(count, std::move(members));

  // semantic total symmetry: equal value sets force equal outputs
  const auto& table = tabulate(ts, session);
  const int domain = table.domain_size();
  std::map<std::set<int>, int> value_by_set;
  std::vector<int> args(n, 0);
  do {
    std::set<int> support(args.begin(), args.end());
    auto [it, inserted] = value_by_set.emplace(std::move(support), table(args));
    if (!inserted && it->second != table(args))
      throw std::logic_error("build_ts: output is not totally symmetric");
  } while (next_tuple(args, domain));
  return ts;
}

std::string PipelineReport::text() const {
  std::ostringstream os;
  for (const auto& e : entries)
    os << (e.ok ? "[ok]   " : "[FAIL] ") << e.check << " (" << e.tuples << " tuples)\n";
  os << (all_ok ? "all checks passed\n" : "there were failures\n");
  return os.str();
}

PipelineReport pipeline(const FiniteOperation& maj, const FiniteOperation& malt, int n_max) {
  if (maj.domain_size() != 2 || malt.domain_size() != 2)
    throw std::invalid_argument("pipeline: implemented for 2-element domains");
  if (n_max % 2 == 0 || n_max < 3 || n_max > 5)
    throw std::invalid_argument("pipeline: n_max must be 3 or 5 (g7 would need arity 63)");
  if (!op_satisfies(maj, majority_condition()))
    throw std::invalid_argument("pipeline: first input does not satisfy the quasi majority identities");
  if (!op_satisfies(malt, maltsev_condition()))
    throw std::invalid_argument("pipeline: second input does not satisfy the quasi Maltsev identities");

  EvalSession session;
  PipelineReport report;
  auto record = [&](const std::string& check, std::uint64_t tuples, bool ok) {
    report.entries.push_back({check, tuples, ok});
    report.all_ok &= ok;
  };

  TermPtr maj_t = Term::base(maj);
  TermPtr malt_t = Term::base(malt);

  const int top_gp = (n_max == 5) ? 15 : 3;
  std::vector<int> gp_arities = (n_max == 5) ? std::vector<int>{3, 5, 15} : std::vector<int>{3};
  std::map<int, TermPtr> gp;
  for (int n : gp_arities) {
    gp[n] = build_gp(maj_t, malt_t, n, session, top_gp);
    record("GP(" + std::to_string(n) + "," + std::to_string(n) + ")", 1ull << n,
           check_gp(gp[n], n, n, session));
  }

  std::vector<TermPtr> sym_gps;
  std::vector<int> sym_arities = (n_max == 5) ? std::vector<int>{3, 15} : std::vector<int>{3};
  for (int n : sym_arities) {
    TermPtr sym = symmetrize_gp(boolean_fs_family(factorial(n)), gp[n], session);
    bool fs_ok = op_satisfies(tabulate(sym, session), fs_condition(n));
    bool gp_ok = check_gp(sym, n, n, session);
    record("SymGP(" + std::to_string(n) + ")", 1ull << n, fs_ok && gp_ok);
    sym_gps.push_back(std::move(sym));
  }

  auto gmins = build_compatible_gmins(sym_gps, session);
  {
    const auto& g3 = tabulate(gmins[1], session);
    record("g3 = ternary XOR", 8, g3 == FiniteOperation::boolean_xor3());
    bool ok = op_satisfies(g3, gmin_condition(3));
    record("g3 satisfies the generalized minority identities", 8, ok);
  }
  if (n_max == 5) {
    const auto& g5 = tabulate(gmins[2], session);
    const auto& g3 = tabulate(gmins[1], session);
    bool compat = true;
    std::vector<int> args(5, 0);
    do {
      if (args[0] != args[1]) continue;
      std::vector<int> rest(args.begin() + 2, args.end());
      compat &= g5(args) == g3(rest);
    } while (next_tuple(args, 2));
    record("g5 compatibility with g3 over all 2^5 tuples", 32,
           compat && op_satisfies(g5, fs_condition(5)));
  }

  // totally symmetric operations up to n_max; even arities by repeating the
  // last argument of the next odd one
  std::map<int, TermPtr> ts;
  for (int n = 3; n <= n_max; n += 2)
    ts[n] = build_ts(gmins, boolean_fs_family(1ll << (n - 1)), n, session);
  for (int n = 2; n <= n_max; ++n) {
    TermPtr t;
    if (n % 2 == 1) {
      t = ts[n];
    } else {
      std::vector<int> sigma(n + 1);
      for (int i = 0; i <= n; ++i) sigma[i] = std::min(i, n - 1);
      t = Term::minor(ts[n + 1], std::move(sigma), n);
    }
    // semantic check: equal supports give equal values
    const auto& table = tabulate(t, session);
    bool ok = true;
    std::map<std::set<int>, int> value_by_set;
    std::vector<int> args(n, 0);
    do {
      std::set<int> support(args.begin(), args.end());
      auto [it, inserted] = value_by_set.emplace(std::move(support), table(args));
      ok &= inserted || it->second == table(args);
    } while (next_tuple(args, 2));
    record("TS(" + std::to_string(n) + ")", 1ull << n, ok);
  }

  return report;
}

} // namespace ppcp
