// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aci/quotient_ring.hpp"

namespace aci {

// The tower of quotients attached to n + 1 quadrics f_1, ..., f_{n+1} in n
// variables:
//   Q  = k[x_1..x_n],
//   P1 = Q/(f_1),
//   P  = Q/(f_1..f_n),
//   R  = Q/(f_1..f_{n+1}),
//   A  = Q/G where G = (f_1..f_n) : (f_1..f_{n+1}), realized degree by degree
//        as G_d = J_d + (lift of the annihilator of f_{n+1} in P).
// Rings are constructed lazily and cached; all share one cutoff.
class RingFamily {
 public:
  RingFamily(int n, PrimeField f, std::string variant, std::optional<uint64_t> seed,
             std::vector<SparsePoly> quadrics, int cutoff);

  int n() const { return n_; }
  int ell() const { return (n_ - 2) / 2; }
  const PrimeField& field() const { return f_; }
  const std::string& variant() const { return variant_; }
  std::optional<uint64_t> seed() const { return seed_; }
  int cutoff() const { return cutoff_; }
  const std::vector<SparsePoly>& quadrics() const { return quadrics_; }
  const SparsePoly& f_last() const { return quadrics_.back(); }

  const GradedQuotientRing& Q() const;
  const GradedQuotientRing& P1() const;
  const GradedQuotientRing& P() const;
  const GradedQuotientRing& R() const;
  const GradedQuotientRing& A() const;
  // Ring by label: "Q", "P1", "P", "R", "A".
  const GradedQuotientRing& ring(const std::string& label) const;

  // Annihilator of f_{n+1} in P at degree d (canonical kernel basis), cached.
  const std::vector<std::vector<uint32_t>>& annihilator(int d) const;

 private:
  int n_;
  PrimeField f_;
  std::string variant_;
  std::optional<uint64_t> seed_;
  std::vector<SparsePoly> quadrics_;
  int cutoff_;
  mutable std::unique_ptr<GradedQuotientRing> q_, p1_, p_, r_, a_;
  mutable std::map<int, std::vector<std::vector<uint32_t>>> ann_cache_;
};

// The tilde family x_1^2, ..., x_n^2, (x_1 + ... + x_n)^2.
// cutoff < 0 selects the default n + 2.
RingFamily tilde_family(int n, PrimeField f, int cutoff = -1);

// Genericity detector for a sampled family:
//   (i)  f_1..f_n form a regular sequence — equivalently h_P(d) = C(n, d) for
//        all d <= n + 1 (which forces vanishing at n + 1);
//   (ii) multiplication by f_{n+1} on P has maximal rank in every degree.
struct GenericityReport {
  bool regular_sequence = false;
  bool max_rank = false;
  bool accepted() const { return regular_sequence && max_rank; }
};
GenericityReport check_genericity(const RingFamily& fam);

// Draw n + 1 dense quadrics from a deterministic stream seeded by `seed`.
// Coefficients are sampled by rejection from 64-bit draws, so the stream is
// platform-independent.
std::vector<SparsePoly> sample_quadrics(int n, const PrimeField& f, uint64_t seed,
                                        int attempt);

struct SampleResult {
  RingFamily family;
  int attempts = 0;  // number of draws consumed (accepted one included)
};

// Sample with the genericity detector: tries attempts 0, 1, ... up to
// max_attempts - 1 with fresh draws, returning the first accepted family.
// Throws std::runtime_error if all draws are rejected.
SampleResult sample_family(int n, PrimeField f, uint64_t seed, int max_attempts = 16,
                           int cutoff = -1);

}  // namespace aci
