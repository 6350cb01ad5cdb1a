#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ppcp/action.hpp"

namespace ppcp {

/// Numerical verification report for a set X^Y carrying the left action of G
/// (post-composition) and the right action of H (pre-composition), around a
/// chosen map t : Y -> X.
struct BiactionReport {
  std::size_t z_size = 0;            // |G(t) meet H(t)|
  std::size_t stab_g_t = 0;          // |stab_G(t)|
  std::size_t stab_g_orbit = 0;      // |stab_G(H(t))|, setwise
  std::size_t stab_h_t = 0;          // |stab_H(t)|
  std::size_t stab_h_orbit = 0;      // |stab_H(G(t))|, setwise
  std::size_t quotient_order = 0;
  bool pass = false;
  std::string detail;                // first failed check, empty when pass
};

/// Checks, by enumeration: both cosets-to-Z bijections, both normality
/// claims, and that the two induced products on Z agree (hence the two
/// quotients are isomorphic). t maps hact's points into gact's points.
BiactionReport biaction_subquotient(const Action& gact, const Action& hact,
                                    const std::vector<int>& t,
                                    std::size_t budget = 10'000'000);

} // namespace ppcp
