#pragma once

#include <map>
#include <string>
#include <vector>

#include "ppcp/structure.hpp"

namespace ppcp {

inline constexpr std::size_t kDefaultJoinRowBudget = 1'000'000;
inline constexpr std::size_t kDefaultPowerPointBudget = 1'000'000;

/// A primitive positive formula: a conjunction of relation atoms, equalities
/// and bottom atoms over free variables 0..free-1 and existential variables
/// free..free+exist-1.
class PPFormula {
public:
  struct Atom {
    enum class Type { Relation, Equality, Bottom } type;
    std::string relation; // for Relation atoms
    std::vector<int> vars;
  };

  PPFormula(int free_count, int exist_count, std::vector<Atom> atoms);

  int free_count() const { return free_count_; }
  int exist_count() const { return exist_count_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  /// Text form: atoms joined by '&'. Variables x<i> index the first free
  /// block, y<i> the second (laid out after all x variables), z<i> the
  /// existentials; "exists z1:" prefixes are accepted and equivalent.
  /// Examples: "E(x1,z1) & E(z1,y1)", "x1 = y1", "bottom(x1,x2)".
  static PPFormula parse(const std::string& text);

private:
  int free_count_;
  int exist_count_;
  std::vector<Atom> atoms_;
};

/// Conjunctive-query evaluation over the base structure: the set of
/// free-variable tuples extendable to the existentials. Join order is
/// greedy: at each step the pending atom producing the smallest
/// intermediate relation is joined next. Intermediate relations larger
/// than the row budget raise BudgetError.
std::vector<std::vector<int>> eval_pp(const Structure& base, const PPFormula& formula,
                                      std::size_t row_budget = kDefaultJoinRowBudget);

/// A pp-power: dimension n over the base; every relation of arity k is
/// given by a formula with k*n free variables (coordinates of the k points,
/// blocked consecutively).
struct PPPowerSpec {
  Structure base;
  int dimension = 1;
  std::map<std::string, std::pair<int, PPFormula>> relations; // name -> (arity, formula)
};

Structure pp_power(const PPPowerSpec& spec, std::size_t point_budget = kDefaultPowerPointBudget,
                   std::size_t row_budget = kDefaultJoinRowBudget);

} // namespace ppcp
