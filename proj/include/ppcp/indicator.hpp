#pragma once

#include "ppcp/action.hpp"
#include "ppcp/structure.hpp"

namespace ppcp {

/// The structure on the n-ary polymorphisms of the base, with one binary
/// relation s<i> per adjacent transposition (i i+1) linking f to its minor
/// f after the swapped arguments. Points are polymorphisms only (the
/// non-polymorphism points of the full power are homomorphically redundant).
/// Practical for |base| = 2, n <= 3 and similar; the table space
/// |B|^(|B|^n) is checked against the budget.
Structure sn_indicator(const Structure& base, int n, std::size_t budget = 1'000'000);

/// The analogous structure for the prim action of a group: points are the
/// prim(G)-ary polymorphisms of the base, with one relation g<i> per group
/// generator linking f to t |-> f(t pre-composed with the generator).
/// The required table space |B|^(|B|^prim points) is enormous for every
/// non-abelian group; expect BudgetError outside G in {Z2, Z3}.
Structure prim_indicator(const Structure& base, const Group& g, std::size_t budget = 1'000'000,
                         std::size_t group_cap = kDefaultLatticeCap);

} // namespace ppcp
