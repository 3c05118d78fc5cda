// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "aci/betti.hpp"
#include "aci/series.hpp"

namespace aci {

// Σ_d h[d] (-1)^d t^d u^d on the (I, J) window.
BiSeries hilbert_neg_tu(const std::vector<long long>& h, int I, int J);
// (1 - tu)^e on the (I, J) window.
BiSeries one_minus_tu_pow(int e, int I, int J);

// Closed bigraded Poincaré series, each returned on the (I, J) window.
//
//   P_k^R = (-t)^ℓ / ( Hilb_R(-tu) + (1-tu)^n ((-t)^ℓ - 1)(1 - t²u²) )
//   P_k^A = (-t)^(ℓ-1) / ( Hilb_A(-tu) + (1-tu)^n ((-t)^(ℓ-1) - 1) )   [n ≥ 4]
//   P_A^P = 1 + ( (1-tu)^n - Hilb_A(-tu) ) / ( (-1)^(ℓ+1) t^ℓ (1-tu)^n )
//   P_R^P = 1 + t u² · P_A^P
//   P_k^P = 1 / (1-tu)^n            (complete intersection of quadrics)
//
// Every division is performed by divide_with_cancellation, so the stated
// cancellations are verified, not assumed.
BiSeries poincare_k_over_R_closed(int n, int I, int J);
BiSeries poincare_k_over_A_closed(int n, int I, int J);
BiSeries poincare_A_over_P_closed(int n, int I, int J);
BiSeries poincare_R_over_P_closed(int n, int I, int J);
BiSeries poincare_k_over_CI(int n, int I, int J);

// Golod bound with equality: Pk / (1 - t (PM - 1)).
BiSeries golod_compose(const BiSeries& Pk, const BiSeries& PM);

// 1 + u^ℓ Σ_{i≥1} (a[i] + b[i] u) (tu)^i with a, b indexed from 1 (index 0
// ignored); missing entries are 0.
BiSeries two_strand_series(int ell, const std::vector<long long>& a,
                           const std::vector<long long>& b, int I, int J);

// Σ β_{i,j} t^i u^j and its inverse reading (coefficients must be nonnegative
// integers that fit the table's entry type).
BiSeries poincare_from_betti(const BettiTable& T, int I, int J);
BettiTable betti_from_series(const BiSeries& s, int max_i, int max_j);

}  // namespace aci
