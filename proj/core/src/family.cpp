// SPDX-License-Identifier: MIT
#include "aci/family.hpp"

#include <cassert>
#include <random>
#include <stdexcept>

#include "aci/sequences.hpp"

namespace aci {

RingFamily::RingFamily(int n, PrimeField f, std::string variant,
                       std::optional<uint64_t> seed, std::vector<SparsePoly> quadrics,
                       int cutoff)
    : n_(n),
      f_(f),
      variant_(std::move(variant)),
      seed_(seed),
      quadrics_(std::move(quadrics)),
      cutoff_(cutoff < 0 ? n + 2 : cutoff) {
  if (quadrics_.size() != static_cast<std::size_t>(n_) + 1)
    throw std::invalid_argument("RingFamily: expected n + 1 quadrics");
}

const GradedQuotientRing& RingFamily::Q() const {
  if (!q_)
    q_ = std::make_unique<GradedQuotientRing>(
        n_, f_, cutoff_, [](int) { return std::vector<SparsePoly>{}; });
  return *q_;
}

const GradedQuotientRing& RingFamily::P1() const {
  if (!p1_)
    p1_ = std::make_unique<GradedQuotientRing>(
        n_, f_, cutoff_, quadric_rows(n_, {quadrics_[0]}));
  return *p1_;
}

const GradedQuotientRing& RingFamily::P() const {
  if (!p_) {
    std::vector<SparsePoly> first_n(quadrics_.begin(), quadrics_.end() - 1);
    p_ = std::make_unique<GradedQuotientRing>(n_, f_, cutoff_,
                                              quadric_rows(n_, std::move(first_n)));
  }
  return *p_;
}

const GradedQuotientRing& RingFamily::R() const {
  if (!r_)
    r_ = std::make_unique<GradedQuotientRing>(n_, f_, cutoff_,
                                              quadric_rows(n_, quadrics_));
  return *r_;
}

const GradedQuotientRing& RingFamily::A() const {
  if (!a_) {
    auto jrows = quadric_rows(n_, std::vector<SparsePoly>(quadrics_.begin(),
                                                          quadrics_.end() - 1));
    a_ = std::make_unique<GradedQuotientRing>(
        n_, f_, cutoff_, [this, jrows](int d) {
          // G_d = J_d + lift of ann_P(f_{n+1})_d.
          auto rows = jrows(d);
          const auto& lamP = P().std_monomials(d);
          for (const auto& v : annihilator(d)) {
            SparsePoly r;
            r.deg = d;
            for (std::size_t t = 0; t < v.size(); ++t)
              if (v[t]) r.terms.emplace_back(lamP[t], v[t]);
            rows.push_back(std::move(r));
          }
          return rows;
        });
  }
  return *a_;
}

const GradedQuotientRing& RingFamily::ring(const std::string& label) const {
  if (label == "Q") return Q();
  if (label == "P1") return P1();
  if (label == "P") return P();
  if (label == "R") return R();
  if (label == "A") return A();
  throw std::invalid_argument("unknown ring label: " + label);
}

const std::vector<std::vector<uint32_t>>& RingFamily::annihilator(int d) const {
  auto it = ann_cache_.find(d);
  if (it != ann_cache_.end()) return it->second;
  if (d + 2 > cutoff_)
    throw std::out_of_range("annihilator: degree " + std::to_string(d) +
                            " needs P up to " + std::to_string(d + 2) +
                            " beyond cutoff " + std::to_string(cutoff_));
  auto v = P().annihilator_piece(f_last(), d);
  return ann_cache_.emplace(d, std::move(v)).first->second;
}

RingFamily tilde_family(int n, PrimeField f, int cutoff) {
  return RingFamily(n, f, "tilde", std::nullopt, tilde_quadrics(n, f), cutoff);
}

GenericityReport check_genericity(const RingFamily& fam) {
  GenericityReport rep;
  const int n = fam.n();
  const auto& P = fam.P();
  rep.regular_sequence = true;
  for (int d = 0; d <= n + 1 && d <= fam.cutoff(); ++d)
    if (P.h(d) != hilb_P(n, d)) {
      rep.regular_sequence = false;
      break;
    }
  if (rep.regular_sequence)
    rep.max_rank = P.is_maximal_rank_element(fam.f_last(), P.vanishes_eventually()
                                                               ? P.top_degree() + 2
                                                               : fam.cutoff());
  return rep;
}

std::vector<SparsePoly> sample_quadrics(int n, const PrimeField& f, uint64_t seed,
                                        int attempt) {
  std::mt19937_64 eng(seed);
  const std::size_t g2 = static_cast<std::size_t>(monomial_count(n, 2));
  const uint64_t p = f.p;
  const uint64_t limit = (~uint64_t{0} / p) * p;  // rejection bound for uniformity
  auto draw = [&]() {
    uint64_t v = eng();
    while (v >= limit) v = eng();
    return static_cast<uint32_t>(v % p);
  };
  std::vector<SparsePoly> out;
  for (int a = 0; a <= attempt; ++a) {
    out.clear();
    for (int t = 0; t < n + 1; ++t) {
      SparsePoly q;
      q.deg = 2;
      for (std::size_t g = 0; g < g2; ++g) {
        const uint32_t c = draw();
        if (c) q.terms.emplace_back(static_cast<uint32_t>(g), c);
      }
      out.push_back(std::move(q));
    }
  }
  return out;
}

SampleResult sample_family(int n, PrimeField f, uint64_t seed, int max_attempts,
                           int cutoff) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    RingFamily fam(n, f, "random", seed, sample_quadrics(n, f, seed, attempt), cutoff);
    if (check_genericity(fam).accepted()) return SampleResult{std::move(fam), attempt + 1};
  }
  throw std::runtime_error("sample_family: no accepted draw within " +
                           std::to_string(max_attempts) + " attempts (n = " +
                           std::to_string(n) + ", seed = " + std::to_string(seed) + ")");
}

}  // namespace aci
