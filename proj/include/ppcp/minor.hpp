#pragma once

#include <map>
#include <string>
#include <vector>

#include "ppcp/action.hpp"
#include "ppcp/operation.hpp"

namespace ppcp {

inline constexpr std::size_t kDefaultSatisfiesBudget = 100'000'000;

struct AppliedSymbol {
  int symbol = 0;
  std::vector<int> args; // variable indices
};

/// A single height-one identity "lhs = rhs" quantified over variable_count
/// variables.
struct MinorIdentity {
  int variable_count = 0;
  AppliedSymbol lhs, rhs;
};

/// A finite set of minor identities over abstract symbols. Conditions built
/// by the factories below carry a kind label and a reduced identity set that
/// is equivalent, for single operations, to the textbook generating set.
class MinorCondition {
public:
  MinorCondition(std::string kind, std::map<int, int> symbol_arities,
                 std::vector<MinorIdentity> identities);

  const std::string& kind() const { return kind_; }
  const std::map<int, int>& symbol_arities() const { return symbol_arities_; }
  const std::vector<MinorIdentity>& identities() const { return identities_; }
  int arity_of(int symbol) const { return symbol_arities_.at(symbol); }

private:
  std::string kind_;
  std::map<int, int> symbol_arities_;
  std::vector<MinorIdentity> identities_;
};

MinorCondition maltsev_condition();
MinorCondition majority_condition();
MinorCondition cyclic_condition(int p);
/// Adjacent transpositions only; equivalent to full symmetry for one symbol.
MinorCondition fs_condition(int n);
/// fs generators plus the duplicate-transfer identity
/// f(x,x,y,z...) = f(x,y,y,z...).
MinorCondition ts_condition(int n);
MinorCondition gmin_condition(int n); // n odd
/// Literal generalized-pairing identity set: the unique odd variable sits at
/// a position <= k, every other variable occurs exactly twice. Only sensible
/// for small n; the semantic check lives in forge.hpp.
MinorCondition gp_condition(int n, int k, std::size_t identity_budget = 100'000);
MinorCondition symgp_condition(int n, std::size_t identity_budget = 100'000);
/// Symbols g1, g3, ..., gn (symbol i has arity 2i+1) with the compatibility
/// identities g_{m+2}(y,y,x...) = g_m(x...) plus full symmetry per symbol.
MinorCondition compat_gmin_condition(int n);
/// One identity f(x_y : y) = f(x_{h.y} : y) per generator h of the acting
/// group; equivalent to the full condition since pre-composition is an
/// anti-homomorphism in h.
MinorCondition action_condition(const Action& hact);

/// Parses CLI literals: maltsev | majority | cyclic:p | fs:n | ts:n |
/// gmin:n | gp:n:k | action:<actionspec>.
MinorCondition condition_from_literal(const std::string& literal);

/// True iff every identity holds under every assignment of the variables.
bool op_satisfies(const std::map<int, FiniteOperation>& ops, const MinorCondition& cond,
                  std::size_t budget = kDefaultSatisfiesBudget);
/// Single-symbol convenience.
bool op_satisfies(const FiniteOperation& op, const MinorCondition& cond,
                  std::size_t budget = kDefaultSatisfiesBudget);

} // namespace ppcp
