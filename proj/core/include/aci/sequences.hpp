// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <vector>

namespace aci {

// The parameter ℓ = floor((n - 2) / 2) attached to n.
inline int ell_of(int n) { return (n - 2) / 2; }

// Predicted Hilbert functions of the four quotients attached to n + 1 general
// quadrics in n variables (also exact for the tilde family):
//   Q  — the polynomial ring itself,
//   P  — the quotient by the first n quadrics (a complete intersection),
//   R  — the quotient by all n + 1 quadrics,
//   A  — the quotient by the link (J : I).
long long hilb_Q(int n, int d);  // C(n + d - 1, d)
long long hilb_P(int n, int d);  // C(n, d)
long long hilb_R(int n, int d);  // max(C(n, d) - C(n, d - 2), 0)
long long hilb_A(int n, int d);  // min(C(n, d), C(n, d + 2))

// ρ_0(n), ..., ρ_{k_max}(n): the alternating-sum recurrence attached to the
// length-(ℓ+1) linear strand of the first quotient's resolution.
std::vector<long long> rho_sequence(int n, int k_max);

// γ_0(n), ..., γ_{min(k_max, n)}(n): the companion sequence for the linked
// quotient; defined by its recurrence for k <= ℓ + 1 and extended by the
// symmetry γ_k = γ_{n-k}.  γ_0 = 1 when n = 2 and 0 otherwise.
std::vector<long long> gamma_sequence(int n, int k_max);

// Catalan numbers C_0, ..., C_{m_max}.
std::vector<long long> catalan_sequence(int m_max);

}  // namespace aci
