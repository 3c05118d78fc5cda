// SPDX-License-Identifier: MIT
#include "aci/quotient_ring.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace aci {

GradedQuotientRing::GradedQuotientRing(
    int n, PrimeField f, int cutoff,
    std::function<std::vector<SparsePoly>(int)> rows_for_degree)
    : n_(n), f_(f), cutoff_(cutoff) {
  if (n < 1 || cutoff < 1) throw std::invalid_argument("GradedQuotientRing: bad n or cutoff");
  h_.assign(static_cast<std::size_t>(cutoff) + 1, 0);
  lam_.resize(static_cast<std::size_t>(cutoff) + 1);
  red_.resize(static_cast<std::size_t>(cutoff) + 1);
  elim_.resize(static_cast<std::size_t>(cutoff) + 1);
  build(rows_for_degree);
}

void GradedQuotientRing::build(
    const std::function<std::vector<SparsePoly>(int)>& rows_for_degree) {
  h_[0] = 1;
  lam_[0] = {0};
  red_[0] = {1};
  for (int d = 1; d <= cutoff_; ++d) {
    const std::size_t di = static_cast<std::size_t>(d);
    if (h_[di - 1] == 0) {  // ideal pieces saturate: zero stays zero
      h_[di] = 0;
      vanished_ = true;
      continue;
    }
    const std::size_t gcount = static_cast<std::size_t>(monomial_count(n_, d));
    auto rows = rows_for_degree(d);
    if (rows.empty()) {
      h_[di] = static_cast<long long>(gcount);
      auto& lam = lam_[di];
      lam.resize(gcount);
      for (std::size_t g = 0; g < gcount; ++g) lam[g] = static_cast<uint32_t>(g);
      // red is the identity; represented implicitly (empty red_, elim_ null).
      continue;
    }
    auto el = std::make_unique<Eliminator>(f_, gcount);
    for (const auto& r : rows) {
      assert(r.deg == d);
      if (r.terms.size() == 1)
        el->feed_unit(r.terms[0].first);
      else
        el->feed_sparse(r.terms);
    }
    const std::size_t rank = el->rank();
    h_[di] = static_cast<long long>(gcount - rank);
    if (h_[di] == 0) vanished_ = true;
    auto pivs = el->pivot_cols();
    std::vector<uint8_t> is_piv(gcount, 0);
    for (auto c : pivs) is_piv[c] = 1;
    auto& lam = lam_[di];
    lam.reserve(gcount - rank);
    for (std::size_t g = 0; g < gcount; ++g)
      if (!is_piv[g]) lam.push_back(static_cast<uint32_t>(g));
    // Extract red: for a standard monomial the normal form is itself; for a
    // pivot monomial it is minus the free-column part of its rref row.
    const std::size_t h = static_cast<std::size_t>(h_[di]);
    if (h > 0) {
      auto& red = red_[di];
      red.assign(gcount * h, 0);
      std::vector<std::size_t> lam_pos(gcount, SIZE_MAX);
      for (std::size_t t = 0; t < lam.size(); ++t) lam_pos[lam[t]] = t;
      for (std::size_t t = 0; t < lam.size(); ++t) red[lam[t] * h + t] = 1;
      for (std::size_t i = 0; i < pivs.size(); ++i) {
        const auto row = el->rref_row(i);
        uint16_t* dst = red.data() + pivs[i] * h;
        for (std::size_t t = 0; t < lam.size(); ++t) {
          const uint32_t v = row[lam[t]];
          if (v) dst[t] = static_cast<uint16_t>(f_.p - v);
        }
      }
    }
    elim_[di] = std::move(el);
  }
}

long long GradedQuotientRing::h(int d) const {
  if (d < 0) return 0;
  if (d <= cutoff_) return h_[static_cast<std::size_t>(d)];
  if (vanished_) return 0;
  throw std::out_of_range("GradedQuotientRing::h: degree " + std::to_string(d) +
                          " beyond cutoff " + std::to_string(cutoff_) +
                          " of a non-vanishing quotient");
}

int GradedQuotientRing::top_degree() const {
  if (!vanished_)
    throw std::logic_error("top_degree: quotient does not vanish within the cutoff");
  int top = 0;
  for (int d = 0; d <= cutoff_; ++d)
    if (h_[static_cast<std::size_t>(d)] > 0) top = d;
  return top;
}

std::vector<long long> GradedQuotientRing::hilbert_vector() const {
  std::vector<long long> out;
  const int last = vanished_ ? top_degree() : cutoff_;
  for (int d = 0; d <= last; ++d) out.push_back(h_[static_cast<std::size_t>(d)]);
  return out;
}

const std::vector<uint32_t>& GradedQuotientRing::std_monomials(int d) const {
  static const std::vector<uint32_t> kEmpty;
  if (d < 0 || (d > cutoff_ && vanished_)) return kEmpty;
  if (d > cutoff_) throw std::out_of_range("std_monomials beyond cutoff");
  return lam_[static_cast<std::size_t>(d)];
}

std::vector<uint32_t> GradedQuotientRing::reduce_monomial(int d, std::size_t g) const {
  const std::size_t h_d = static_cast<std::size_t>(h(d));
  std::vector<uint32_t> out(h_d, 0);
  if (h_d == 0) return out;
  const auto& red = red_[static_cast<std::size_t>(d)];
  if (red.empty()) {
    // Identity reduction: the ideal piece is zero, so Γ index = Λ position.
    out[g] = 1;
    return out;
  }
  const uint16_t* src = red.data() + g * h_d;
  for (std::size_t t = 0; t < h_d; ++t) out[t] = src[t];
  return out;
}

std::vector<uint32_t> GradedQuotientRing::reduce_poly(const SparsePoly& fpoly) const {
  const std::size_t h_d = static_cast<std::size_t>(h(fpoly.deg));
  std::vector<uint32_t> out(h_d, 0);
  if (h_d == 0) return out;
  const auto& red = red_[static_cast<std::size_t>(fpoly.deg)];
  for (const auto& [g, c] : fpoly.terms) {
    if (red.empty()) {
      out[g] = f_.add(out[g], c % f_.p);
    } else {
      const uint16_t* src = red.data() + static_cast<std::size_t>(g) * h_d;
      for (std::size_t t = 0; t < h_d; ++t)
        if (src[t]) out[t] = f_.add(out[t], f_.mul(c % f_.p, src[t]));
    }
  }
  return out;
}

const Mat& GradedQuotientRing::chi(int k, int d) const {
  auto key = std::make_pair(k, d);
  auto it = chi_cache_.find(key);
  if (it != chi_cache_.end()) return it->second;
  const std::size_t hd = static_cast<std::size_t>(h(d));
  const std::size_t hd1 = static_cast<std::size_t>(h(d + 1));
  Mat m(hd1, hd);
  if (hd && hd1) {
    const auto& lam = std_monomials(d);
    for (std::size_t c = 0; c < hd; ++c) {
      const std::size_t tgt = monomial_mult_var(n_, d, lam[c], k);
      const auto col = reduce_monomial(d + 1, tgt);
      for (std::size_t r = 0; r < hd1; ++r)
        if (col[r]) m.at(r, c) = col[r];
    }
  }
  return chi_cache_.emplace(key, std::move(m)).first->second;
}

const Mat& GradedQuotientRing::mult_table(int b, int a) const {
  auto key = std::make_pair(b, a);
  auto it = mult_cache_.find(key);
  if (it != mult_cache_.end()) return it->second;
  const std::size_t ha = static_cast<std::size_t>(h(a));
  const std::size_t hb = static_cast<std::size_t>(h(b));
  const std::size_t hab = static_cast<std::size_t>(h(a + b));
  Mat m(hb * ha, hab);
  if (ha && hb && hab) {
    const auto& lamA = std_monomials(a);
    const auto& lamB = std_monomials(b);
    for (std::size_t mu = 0; mu < hb; ++mu)
      for (std::size_t la = 0; la < ha; ++la) {
        const std::size_t prod = monomial_mult(n_, b, lamB[mu], a, lamA[la]);
        const auto nf = reduce_monomial(a + b, prod);
        uint32_t* dst = m.row(mu * ha + la);
        for (std::size_t t = 0; t < hab; ++t) dst[t] = nf[t];
      }
  }
  return mult_cache_.emplace(key, std::move(m)).first->second;
}

Mat GradedQuotientRing::mult_matrix(const SparsePoly& fpoly, int d) const {
  const std::size_t hd = static_cast<std::size_t>(h(d));
  const std::size_t he = static_cast<std::size_t>(h(d + fpoly.deg));
  Mat m(he, hd);
  if (!hd || !he) return m;
  const auto& lam = std_monomials(d);
  for (std::size_t c = 0; c < hd; ++c) {
    std::vector<uint32_t> acc(he, 0);
    for (const auto& [g, coeff] : fpoly.terms) {
      const std::size_t prod = monomial_mult(n_, fpoly.deg, g, d, lam[c]);
      const auto nf = reduce_monomial(d + fpoly.deg, prod);
      for (std::size_t r = 0; r < he; ++r)
        if (nf[r]) acc[r] = f_.add(acc[r], f_.mul(coeff % f_.p, nf[r]));
    }
    for (std::size_t r = 0; r < he; ++r) m.at(r, c) = acc[r];
  }
  return m;
}

bool GradedQuotientRing::is_maximal_rank_element(const SparsePoly& fpoly,
                                                 int through_degree) const {
  for (int d = 0; d + fpoly.deg <= through_degree; ++d) {
    const long long hd = h(d), he = h(d + fpoly.deg);
    if (hd == 0) continue;
    const long long want = hd < he ? hd : he;
    if (want == 0) continue;
    Mat m = mult_matrix(fpoly, d);
    Eliminator el(f_, m.cols);
    el.set_rank_target(static_cast<std::size_t>(want));
    el.feed_rows(m);
    if (static_cast<long long>(el.rank()) != want) return false;
  }
  return true;
}

std::vector<std::vector<uint32_t>> GradedQuotientRing::annihilator_piece(
    const SparsePoly& fpoly, int d) const {
  if (h(d) == 0) return {};
  return kernel_basis(mult_matrix(fpoly, d), f_);
}

long long GradedQuotientRing::ideal_dim(int d) const {
  if (d < 0) return 0;
  if (d > cutoff_ && !vanished_) throw std::out_of_range("ideal_dim beyond cutoff");
  return static_cast<long long>(monomial_count(n_, d)) - h(d);
}

Eliminator* GradedQuotientRing::ideal_piece(int d) const {
  if (d < 0 || d > cutoff_) return nullptr;
  return elim_[static_cast<std::size_t>(d)].get();
}

std::map<int, long long> GradedQuotientRing::minimal_generator_degrees(
    int through_degree) const {
  if (through_degree > cutoff_)
    throw std::out_of_range("minimal_generator_degrees: beyond cutoff");
  std::map<int, long long> out;
  for (int d = 1; d <= through_degree; ++d) {
    const long long dim_d = ideal_dim(d);
    if (dim_d == 0) continue;
    const long long dim_prev = ideal_dim(d - 1);
    long long count;
    if (dim_prev == 0) {
      count = dim_d;
    } else {
      // rank of S_1 * I_{d-1} inside Γ_d from the stored basis of I_{d-1}
      Eliminator* prev = ideal_piece(d - 1);
      long long sub_rank;
      if (!prev) {
        // I_{d-1} = Γ_{d-1} (saturated piece): S_1 * I_{d-1} = Γ_d
        sub_rank = static_cast<long long>(monomial_count(n_, d));
      } else {
        const std::size_t gcount = static_cast<std::size_t>(monomial_count(n_, d));
        Eliminator el(f_, gcount);
        el.set_rank_target(static_cast<std::size_t>(dim_d));
        const std::size_t prev_rank = prev->rank();
        std::vector<std::pair<uint32_t, uint32_t>> sparse;
        for (std::size_t i = 0; i < prev_rank && !el.saturated(); ++i) {
          const auto row = prev->rref_row(i);
          for (int k = 0; k < n_ && !el.saturated(); ++k) {
            sparse.clear();
            for (std::size_t g = 0; g < row.size(); ++g)
              if (row[g])
                sparse.emplace_back(
                    static_cast<uint32_t>(monomial_mult_var(n_, d - 1, g, k)), row[g]);
            el.feed_sparse(sparse);
          }
        }
        sub_rank = static_cast<long long>(el.rank());
      }
      count = dim_d - sub_rank;
    }
    if (count) out[d] = count;
  }
  return out;
}

std::map<int, long long> socle(const GradedQuotientRing& ring) {
  if (!ring.vanishes_eventually())
    throw std::logic_error(
        "socle: quotient does not vanish within its cutoff, socle would be truncated");
  std::map<int, long long> out;
  const int top = ring.top_degree();
  for (int d = 0; d <= top; ++d) {
    const long long hd = ring.h(d);
    if (hd == 0) continue;
    const long long hd1 = ring.h(d + 1);
    long long dim;
    if (hd1 == 0) {
      dim = hd;
    } else {
      Mat stacked(static_cast<std::size_t>(ring.n() * hd1), static_cast<std::size_t>(hd));
      for (int k = 0; k < ring.n(); ++k) {
        const Mat& m = ring.chi(k, d);
        for (std::size_t r = 0; r < m.rows; ++r)
          for (std::size_t c = 0; c < m.cols; ++c)
            stacked.at(static_cast<std::size_t>(k) * m.rows + r, c) = m.at(r, c);
      }
      dim = hd - static_cast<long long>(rank_of(stacked, ring.field()));
    }
    if (dim) out[d] = dim;
  }
  return out;
}

SparsePoly poly_from_expo(const Expo& e, uint32_t coeff) {
  SparsePoly p;
  for (auto x : e) p.deg += x;
  p.terms.emplace_back(static_cast<uint32_t>(monomial_rank(e)), coeff);
  return p;
}

std::vector<SparsePoly> tilde_quadrics(int n, const PrimeField& f) {
  std::vector<SparsePoly> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int t = 0; t < n; ++t) {
    Expo e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(t)] = 2;
    out.push_back(poly_from_expo(e, 1));
  }
  SparsePoly s;
  s.deg = 2;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Expo e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)]++;
      e[static_cast<std::size_t>(j)]++;
      s.terms.emplace_back(static_cast<uint32_t>(monomial_rank(e)),
                           i == j ? 1u : 2u % f.p);
    }
  std::sort(s.terms.begin(), s.terms.end());
  out.push_back(std::move(s));
  return out;
}

std::function<std::vector<SparsePoly>(int)> ideal_rows(int n,
                                                       std::vector<SparsePoly> gens) {
  return [n, gens = std::move(gens)](int d) {
    std::vector<SparsePoly> rows;
    for (const auto& g : gens) {
      if (d < g.deg) continue;
      const std::size_t mcount =
          static_cast<std::size_t>(monomial_count(n, d - g.deg));
      for (std::size_t mu = 0; mu < mcount; ++mu) {
        SparsePoly r;
        r.deg = d;
        r.terms.reserve(g.terms.size());
        for (const auto& [idx, c] : g.terms)
          r.terms.emplace_back(
              static_cast<uint32_t>(monomial_mult(n, d - g.deg, mu, g.deg, idx)),
              c);
        rows.push_back(std::move(r));
      }
    }
    return rows;
  };
}

std::function<std::vector<SparsePoly>(int)> quadric_rows(int n,
                                                         std::vector<SparsePoly> gens) {
  for ([[maybe_unused]] const auto& g : gens) assert(g.deg == 2);
  return ideal_rows(n, std::move(gens));
}

}  // namespace aci
