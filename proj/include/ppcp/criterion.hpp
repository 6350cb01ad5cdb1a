#pragma once

#include <cstddef>
#include <vector>

#include "ppcp/action.hpp"
#include "ppcp/operation.hpp"

namespace ppcp {

inline constexpr std::size_t kDefaultCriterionBudget = 100'000'000;

/// Decides whether Pol(S(G acting on X)) satisfies the condition of the
/// H action on Y: true iff for every t in X^Y the setwise stabilizer in G of
/// the H-orbit of t has a fixed point in X.
///
/// Enumeration of t: first a cheap witness probe (the identity map when
/// X = Y), which can settle "false" even when X^Y is far beyond any budget;
/// then, for "true", either direct enumeration of X^Y or, when the H action
/// realizes the full symmetric group on Y, enumeration of value multisets.
/// If neither enumeration fits the budget and no witness was found, a
/// BudgetError is thrown - "true" is never claimed from a partial scan.
bool action_criterion(const Action& gact, const Action& hact,
                      std::size_t map_budget = kDefaultCriterionBudget, int threads = 1);

struct FsSpectrum {
  std::vector<std::size_t> component_sizes; // in canonical component order
  std::vector<int> failing_arities;         // k <= upto where FS_k fails
  int smallest_failing = 0;                 // = smallest component size
  int largest_index = 0;                    // largest maximal-subgroup index
  bool index_reading_differs = false;       // largest != smallest
  int upto = 0;
};

/// FS_k fails exactly when k is a sum of component sizes of the prim-action
/// structure (sizes may repeat). Reported up to the given arity bound.
FsSpectrum fs_spectrum(const Group& g, int upto, std::size_t group_cap = kDefaultLatticeCap);

/// The ternary minority on the action's point set, verified to satisfy the
/// quasi Maltsev identities and to preserve every generator relation.
FiniteOperation minority_polymorphism(const Action& a);

} // namespace ppcp
