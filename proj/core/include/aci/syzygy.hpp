// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "aci/betti.hpp"
#include "aci/quotient_ring.hpp"

namespace aci {

// One relation of a graded module presentation: a homogeneous element of the
// free module ⊕_g S(-gen_deg[g]).  comp[g] holds its g-component in the
// Λ_{deg - gen_deg[g]} coordinates of S (empty means zero).
struct PresentationColumn {
  int deg = 0;
  std::vector<std::vector<uint32_t>> comp;
};

// M = coker(⊕ S(-d_c) -> ⊕_g S(-gen_deg[g])).  The generators must be a
// minimal generating set of M; the columns must generate the full relation
// submodule (they need not be minimal — the engine minimizes as it goes).
struct GradedModulePresentation {
  std::vector<int> gen_deg;
  std::vector<PresentationColumn> columns;
};

// The residue field k = S/m: one generator in degree 0, relations x_1..x_n.
GradedModulePresentation k_presentation(const GradedQuotientRing& S);
// S/(g_1, ..., g_m) for ambient homogeneous polynomials (zero classes are
// dropped).
GradedModulePresentation cyclic_presentation(const GradedQuotientRing& S,
                                             const std::vector<SparsePoly>& gens);
// S/U where the ideal U is handed over as per-degree spanning sets already in
// Λ_d coordinates: pieces = {(d, {vectors})}.
GradedModulePresentation cyclic_presentation_from_pieces(
    const std::vector<std::pair<int, std::vector<std::vector<uint32_t>>>>& pieces);

// Graded Betti numbers β_{i,j}(M) over S for i <= max_i, j <= max_j, computed
// by iterated minimal syzygies with exact linear algebra over GF(p).
//
// Per level the engine walks internal degrees upward keeping one eliminator
// whose row space is the degree-d piece of the current syzygy module: the
// degree-(d-1) rows multiplied by the variables land first (their span is
// m·Syz), then the expected dimension K_d — an Euler-characteristic alternating
// sum over the part of the resolution already built — serves as a rank target.
// Saturation at K_d certifies β_{i,d} = 0 with no kernel computation; short of
// saturation, β_{i,d} = K_d - dim(m·Syz)_d, and the kernel of the assembled
// differential is streamed in to complete the span (and to mint the new
// generators carried to the next level).
//
// Requires S.h(d) certified for all d <= max_j (choose the ring cutoff
// accordingly); h_M may or may not vanish inside the window.
BettiTable minimal_syzygy_betti(const GradedQuotientRing& S,
                                const GradedModulePresentation& pres, int max_i,
                                int max_j);

}  // namespace aci
