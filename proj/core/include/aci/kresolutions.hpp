// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <vector>

#include "aci/betti.hpp"
#include "aci/quotient_ring.hpp"

namespace aci {

// A complex of free modules with linear differential entries, given over the
// ambient variables: generator g of C_i carries an internal degree, and each
// differential entry (tgt, src) is a linear form Σ_k lin[k] x_k with
// coefficients in GF(p).  All three explicit k-resolutions used here (Koszul,
// hypersurface, complete-intersection) have this shape, which is also what
// certifies their minimality.
struct LinearComplex {
  int n = 0;
  int max_i = 0;
  std::vector<std::vector<int>> gen_deg;  // [i][g], 0 <= i <= max_i
  struct Entry {
    uint32_t tgt = 0, src = 0;
    std::vector<uint32_t> lin;  // length n
  };
  std::vector<std::vector<Entry>> diff;  // diff[i]: C_i -> C_{i-1}, valid for i >= 1

  std::size_t rank(int i) const {
    if (i < 0 || i > max_i) return 0;
    return gen_deg[static_cast<std::size_t>(i)].size();
  }
};

// Koszul complex on x_1..x_n, resolving k over Q.  Generators of C_i are the
// i-element subsets of {1..n} in lexicographic order; the differential is
// E_B -> Σ_t (-1)^t x_{b_t} E_{B \ b_t} over the sorted elements b_1 < ... < b_i.
LinearComplex koszul_complex(int n, int max_i, const PrimeField& field);

// The y-extension of the Koszul complex by one quadric f, resolving k over the
// hypersurface Q/(f).  Generators of C_i are pairs (B, u) with |B| + 2u = i,
// listed with u ascending then B lexicographic; rank C_i = Σ_u C(n, i - 2u).
// Splitting f = Σ_j c_j x_j with c_j = Σ_{i' <= j} a_{i'j} x_{i'}, the
// differential adds to the Koszul part the exterior multiplication
// (B, u) -> Σ_{j ∉ B} (-1)^{#{b in B : b < j}} c_j (B ∪ {j}, u - 1).
LinearComplex hypersurface_k_resolution(int n, const SparsePoly& f, int max_i,
                                        const PrimeField& field);

// The multi-quadric extension for a regular sequence f_1..f_m, resolving k
// over Q/(f_1..f_m).  Generators of C_i are pairs (B, α) with α in N^m and
// |B| + 2|α| = i, listed with |α| ascending, α graded-lex within its weight,
// then B lexicographic; the differential is the Koszul part plus
// Σ_t ζ^{(t)} lowering α_t by one, where ζ^{(t)} is exterior multiplication by
// the splitting of f_t.
LinearComplex ci_k_resolution(int n, const std::vector<SparsePoly>& fs, int max_i,
                              const PrimeField& field);

// Verify ∂_i ∘ ∂_{i+1} = 0 after tensoring with M, for 1 <= i < C.max_i and
// internal degrees up to (degree of C_i gens) + extra_degrees.
bool complex_squares_to_zero(const LinearComplex& C, const GradedQuotientRing& M,
                             int extra_degrees);

// Betti table of M over the base ring of C: β_{i,j} = dim H_i((C ⊗ M)_j) for
// i <= max_i, j <= max_j.  Ranks are computed per internal degree in ascending
// homological order, so each elimination is capped by the kernel dimension
// left by the previous one (early exit on saturation).
BettiTable tensor_homology_betti(const LinearComplex& C, const GradedQuotientRing& M,
                                 int max_i, int max_j);

// The Hilbert-series identity Σ_i (-1)^i Σ_j β_{i,j} h_S-shift = h_M: verify a
// computed table against the alternating sum over a window (used as a global
// guard on every engine result): Σ_{i,j} (-1)^i β_{i,j} h_S(d - j) == h_M(d)
// for all d <= through; requires the window to contain every entry that can
// contribute.
bool euler_identity_holds(const BettiTable& t,
                          const std::vector<long long>& h_S_vals,
                          const std::vector<long long>& h_M_vals, int through);

}  // namespace aci
