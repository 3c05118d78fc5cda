// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace aci {

// Exponent vector of a monomial; length = number of variables.
using Expo = std::vector<uint8_t>;

// C(a, b) as uint64 (0 when b > a); requires a <= 67 so the value fits.
uint64_t binom_u64(unsigned a, unsigned b);

// |Γ_d| = number of monomials of degree d in n variables = C(n + d - 1, d).
uint64_t monomial_count(int n, int d);

// All exponent vectors of total degree d in n variables, in graded-lex order
// with x1 > x2 > ... > xn: the lexicographically largest exponent vector
// (x1^d) has index 0.
std::vector<Expo> monomial_basis(int n, int d);

// Position of e within the degree block Γ_{|e|} of the graded-lex order.
std::size_t monomial_rank(const Expo& e);

Expo monomial_unrank(int n, int d, std::size_t r);

// Index in Γ_{d+1} of x_k · (the monomial of index r in Γ_d); k is 0-based.
std::size_t monomial_mult_var(int n, int d, std::size_t r, int k);

// Index in Γ_{d+e} of the product of monomials with indices r ∈ Γ_d, s ∈ Γ_e.
std::size_t monomial_mult(int n, int d, std::size_t r, int e, std::size_t s);

}  // namespace aci
