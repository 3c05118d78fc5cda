// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "aci/elimination.hpp"
#include "aci/matrix.hpp"
#include "aci/monomials.hpp"
#include "aci/prime_field.hpp"

namespace aci {

// Homogeneous element of the ambient polynomial ring, stored sparsely as
// (index in Γ_deg, coefficient) pairs; indices follow the graded-lex order.
struct SparsePoly {
  int deg = 0;
  std::vector<std::pair<uint32_t, uint32_t>> terms;
};

// A standard-graded quotient of the polynomial ring k[x_1..x_n] over GF(p) by
// a homogeneous ideal, realized degree by degree up to a cutoff:
//   * h(d) — the Hilbert function,
//   * Λ_d — the standard monomial basis (complement of the ideal's pivot
//     monomials inside Γ_d, listed by ascending graded-lex index),
//   * red_d — normal forms of all degree-d monomials in Λ_d coordinates,
//   * χ_{k,d} — multiplication by x_k as an h(d+1) x h(d) matrix.
//
// Degrees past the first one with h(d) = 0 are certified zero without further
// elimination (ideal pieces saturate), so artinian quotients close out cheaply.
class GradedQuotientRing {
 public:
  // rows_for_degree(d) must return a spanning set of the ideal's degree-d
  // piece for every 1 <= d <= cutoff reached before the quotient vanishes.
  GradedQuotientRing(int n, PrimeField f, int cutoff,
                     std::function<std::vector<SparsePoly>(int)> rows_for_degree);

  int n() const { return n_; }
  int cutoff() const { return cutoff_; }
  const PrimeField& field() const { return f_; }

  // Hilbert value; 0 for d < 0, certified 0 past the cutoff only when the
  // quotient vanished at or before it (throws otherwise).
  long long h(int d) const;
  bool vanishes_eventually() const { return vanished_; }
  int top_degree() const;  // last d with h(d) > 0 (requires vanishing)
  std::vector<long long> hilbert_vector() const;  // h(0..last certified nonzero window)

  const std::vector<uint32_t>& std_monomials(int d) const;
  // Normal form of the degree-d monomial with Γ_d index g, in Λ_d coordinates.
  std::vector<uint32_t> reduce_monomial(int d, std::size_t g) const;
  // Normal form of a sparse ambient polynomial.
  std::vector<uint32_t> reduce_poly(const SparsePoly& f) const;

  // χ_{k,d} for 0-based k; requires d + 1 <= cutoff. Cached.
  const Mat& chi(int k, int d) const;
  // Multiplication tensor: row (mu * h(a) + lam) holds the Λ_{a+b} coordinates
  // of (standard monomial mu of degree b) * (standard monomial lam, degree a).
  const Mat& mult_table(int b, int a) const;

  // Matrix of multiplication by the class of f: h(d + f.deg) x h(d).
  Mat mult_matrix(const SparsePoly& f, int d) const;
  // True when multiplication by f has rank min(h(d), h(d + f.deg)) for every
  // degree d >= 0 with d + f.deg <= through_degree.
  bool is_maximal_rank_element(const SparsePoly& f, int through_degree) const;
  // Kernel of multiplication by f in degree d, canonical basis over Λ_d.
  std::vector<std::vector<uint32_t>> annihilator_piece(const SparsePoly& f, int d) const;

  // dim of the ideal's degree-d piece (|Γ_d| - h(d)).
  long long ideal_dim(int d) const;
  // The eliminator holding the ideal piece in degree d (nullptr when the piece
  // is zero or the whole of Γ_d was certified by saturation).
  Eliminator* ideal_piece(int d) const;

  // Count of minimal ideal generators per degree, for 1 <= d <= through_degree
  // (only nonzero counts appear).  through_degree must be within certification.
  std::map<int, long long> minimal_generator_degrees(int through_degree) const;

 private:
  void build(const std::function<std::vector<SparsePoly>(int)>& rows_for_degree);

  int n_;
  PrimeField f_;
  int cutoff_;
  bool vanished_ = false;
  std::vector<long long> h_;                       // per degree 0..cutoff
  std::vector<std::vector<uint32_t>> lam_;         // Λ_d as ascending Γ indices
  std::vector<std::vector<uint16_t>> red_;         // [d]: |Γ_d| x h(d), row-major by Γ index
  std::vector<std::unique_ptr<Eliminator>> elim_;  // ideal pieces
  mutable std::map<std::pair<int, int>, Mat> chi_cache_;    // (k, d)
  mutable std::map<std::pair<int, int>, Mat> mult_cache_;   // (b, a)
};

// Socle dimensions per degree: the common kernel of all χ_{k,d}; requires the
// quotient to vanish within its cutoff so the answer is complete.
std::map<int, long long> socle(const GradedQuotientRing& ring);

// The tilde quadrics x_1^2, ..., x_n^2, (x_1 + ... + x_n)^2.
std::vector<SparsePoly> tilde_quadrics(int n, const PrimeField& f);

// A degree-d sparse monomial helper: the class of x_k^e ... built from an
// exponent vector.
SparsePoly poly_from_expo(const Expo& e, uint32_t coeff);

// Provider for an arbitrary homogeneous ideal: degree-d rows are all products
// (monomial of degree d - deg g) * g over the generators g.
std::function<std::vector<SparsePoly>(int)> ideal_rows(int n,
                                                       std::vector<SparsePoly> gens);
// The same, asserting every generator is a quadric.
std::function<std::vector<SparsePoly>(int)> quadric_rows(int n,
                                                         std::vector<SparsePoly> gens);

}  // namespace aci
