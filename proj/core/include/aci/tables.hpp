// SPDX-License-Identifier: MIT
#pragma once

#include <utility>

#include "aci/betti.hpp"

namespace aci {

// Closed-form Betti tables over Q for the tilde family in n variables:
// first the table of the almost complete intersection quotient R, then the
// table of the linked quotient A.  For even n these are the two-strand closed
// forms driven by the ρ and γ sequences; for odd n the tables arise from the
// even-(n-1) tables via the variable-splitting pushout
//   β_{i,j}(n) = β̄_{i,j}(n-1) + β̄_{i-1,j-2}(n-1).
std::pair<BettiTable, BettiTable> tilde_betti_tables_Q(int n);

}  // namespace aci
