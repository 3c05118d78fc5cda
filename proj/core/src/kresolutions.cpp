// SPDX-License-Identifier: MIT
#include "aci/kresolutions.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace aci {

namespace {

// All size-m subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int m) {
  std::vector<std::vector<int>> out;
  if (m < 0 || m > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = m - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - m + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

uint64_t subset_code(const std::vector<int>& b) {
  uint64_t m = 0;
  for (int x : b) m |= (uint64_t{1} << x);
  return m;
}

// Split a quadric f = Σ_j c_j x_j with c_j = Σ_{i' <= j} a_{i'j} x_{i'}:
// c[j] is a dense linear-form coefficient vector of length n.
std::vector<std::vector<uint32_t>> split_quadric(int n, const SparsePoly& f,
                                                 const PrimeField& field) {
  std::vector<std::vector<uint32_t>> c(
      static_cast<std::size_t>(n), std::vector<uint32_t>(static_cast<std::size_t>(n), 0));
  for (const auto& [idx, coeff] : f.terms) {
    const Expo e = monomial_unrank(n, 2, idx);
    int lo = -1, hi = -1;
    for (int k = 0; k < n; ++k) {
      if (e[static_cast<std::size_t>(k)] == 2) {
        lo = hi = k;
        break;
      }
      if (e[static_cast<std::size_t>(k)] == 1) {
        if (lo < 0)
          lo = k;
        else
          hi = k;
      }
    }
    assert(lo >= 0 && hi >= 0);
    auto& dst = c[static_cast<std::size_t>(hi)][static_cast<std::size_t>(lo)];
    dst = field.add(dst, coeff % field.p);
  }
  return c;
}

std::size_t weight_of(const Expo& a) {
  std::size_t s = 0;
  for (auto x : a) s += x;
  return s;
}

// Stable code for an α-multi-index (weight, then rank within its weight).
std::size_t acode_of(const Expo& a) {
  if (a.empty()) return 0;
  return monomial_rank(a) + (std::size_t{1} << 40) * weight_of(a);
}

// Koszul complex extended by quadrics f_1..f_m (m = 0: plain Koszul):
// generators (B, α) with |B| + 2|α| = i.
LinearComplex extended_complex(int n, const std::vector<SparsePoly>& fs, int max_i,
                               const PrimeField& field) {
  const int m = static_cast<int>(fs.size());
  LinearComplex C;
  C.n = n;
  C.max_i = max_i;
  C.gen_deg.resize(static_cast<std::size_t>(max_i) + 1);
  C.diff.resize(static_cast<std::size_t>(max_i) + 1);

  std::vector<std::vector<std::vector<uint32_t>>> cs;
  cs.reserve(static_cast<std::size_t>(m));
  for (const auto& f : fs) cs.push_back(split_quadric(n, f, field));

  struct Gen {
    std::vector<int> B;
    Expo alpha;  // empty when m == 0
  };
  std::vector<std::vector<Gen>> gens(static_cast<std::size_t>(max_i) + 1);
  std::vector<std::map<std::pair<uint64_t, std::size_t>, uint32_t>> index(
      static_cast<std::size_t>(max_i) + 1);

  for (int i = 0; i <= max_i; ++i) {
    auto& gi = gens[static_cast<std::size_t>(i)];
    for (int w = 0; 2 * w <= i; ++w) {
      std::vector<Expo> alphas;
      if (m == 0) {
        if (w == 0) alphas.push_back(Expo{});
      } else {
        alphas = monomial_basis(m, w);
      }
      if (alphas.empty()) continue;
      const auto bs = combinations(n, i - 2 * w);
      for (const auto& a : alphas)
        for (const auto& B : bs) gi.push_back(Gen{B, a});
    }
    auto& gd = C.gen_deg[static_cast<std::size_t>(i)];
    for (std::size_t g = 0; g < gi.size(); ++g) {
      gd.push_back(i);
      index[static_cast<std::size_t>(i)][{subset_code(gi[g].B), acode_of(gi[g].alpha)}] =
          static_cast<uint32_t>(g);
    }
  }

  for (int i = 1; i <= max_i; ++i) {
    auto& D = C.diff[static_cast<std::size_t>(i)];
    const auto& gi = gens[static_cast<std::size_t>(i)];
    const auto& idx_prev = index[static_cast<std::size_t>(i - 1)];
    for (std::size_t g = 0; g < gi.size(); ++g) {
      const auto& B = gi[g].B;
      const auto& alpha = gi[g].alpha;
      // Koszul part: remove b_t, sign (-1)^{t+1} for 1-based position t+1.
      for (std::size_t t = 0; t < B.size(); ++t) {
        std::vector<int> Bm = B;
        Bm.erase(Bm.begin() + static_cast<std::ptrdiff_t>(t));
        LinearComplex::Entry e;
        e.src = static_cast<uint32_t>(g);
        e.tgt = idx_prev.at({subset_code(Bm), acode_of(alpha)});
        e.lin.assign(static_cast<std::size_t>(n), 0);
        e.lin[static_cast<std::size_t>(B[t])] = ((t + 1) % 2 == 0) ? 1u : field.p - 1u;
        D.push_back(std::move(e));
      }
      // ζ^{(t)}: α_t -> α_t - 1, adjoin j ∉ B carrying the splitting c^{(t)}_j
      // with the exterior sign (-1)^{#{b in B : b < j}}.
      for (int t = 0; t < m; ++t) {
        if (alpha.empty() || alpha[static_cast<std::size_t>(t)] == 0) continue;
        Expo am = alpha;
        am[static_cast<std::size_t>(t)]--;
        const std::size_t am_code = acode_of(am);
        for (int j = 0; j < n; ++j) {
          if (std::find(B.begin(), B.end(), j) != B.end()) continue;
          const auto& cj = cs[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
          bool nonzero = false;
          for (auto v : cj)
            if (v) {
              nonzero = true;
              break;
            }
          if (!nonzero) continue;
          std::vector<int> Bp = B;
          Bp.insert(std::upper_bound(Bp.begin(), Bp.end(), j), j);
          int below = 0;
          for (int b : B)
            if (b < j) ++below;
          LinearComplex::Entry e;
          e.src = static_cast<uint32_t>(g);
          e.tgt = idx_prev.at({subset_code(Bp), am_code});
          e.lin.assign(static_cast<std::size_t>(n), 0);
          for (int k = 0; k < n; ++k) {
            const uint32_t v = cj[static_cast<std::size_t>(k)];
            e.lin[static_cast<std::size_t>(k)] = (below % 2 == 0 || v == 0) ? v : field.p - v;
          }
          D.push_back(std::move(e));
        }
      }
    }
  }
  return C;
}

// Apply the differential diff[i], tensored with M in internal degree j, to the
// basis vector (generator g, Λ-position la); accumulate into out (length =
// dim of (C_{i-1} ⊗ M)_j) using the target block offsets.
void apply_diff_column(const LinearComplex& C, const GradedQuotientRing& M, int i, int j,
                       const std::vector<const LinearComplex::Entry*>& entries_of_src,
                       std::size_t la, const std::vector<std::size_t>& tgt_off,
                       int src_mdeg, uint32_t* out) {
  const PrimeField& f = M.field();
  for (const auto* ep : entries_of_src) {
    const auto& e = *ep;
    const std::size_t o = tgt_off[e.tgt];
    const std::size_t h_tgt = tgt_off[e.tgt + 1] - o;
    if (!h_tgt) continue;
    for (int k = 0; k < C.n; ++k) {
      const uint32_t cf = e.lin[static_cast<std::size_t>(k)];
      if (!cf) continue;
      const Mat& chi = M.chi(k, src_mdeg);
      for (std::size_t r = 0; r < h_tgt; ++r) {
        const uint32_t v = chi.at(r, la);
        if (v) out[o + r] = f.add(out[o + r], f.mul(cf, v));
      }
    }
  }
  (void)i;
  (void)j;
}

std::vector<std::size_t> block_offsets(const std::vector<int>& gd,
                                       const GradedQuotientRing& M, int j) {
  std::vector<std::size_t> off(gd.size() + 1, 0);
  for (std::size_t g = 0; g < gd.size(); ++g) {
    const int a = j - gd[g];
    off[g + 1] = off[g] + static_cast<std::size_t>(a >= 0 ? M.h(a) : 0);
  }
  return off;
}

}  // namespace

LinearComplex koszul_complex(int n, int max_i, const PrimeField& field) {
  return extended_complex(n, {}, max_i, field);
}

LinearComplex hypersurface_k_resolution(int n, const SparsePoly& f, int max_i,
                                        const PrimeField& field) {
  return extended_complex(n, {f}, max_i, field);
}

LinearComplex ci_k_resolution(int n, const std::vector<SparsePoly>& fs, int max_i,
                              const PrimeField& field) {
  return extended_complex(n, fs, max_i, field);
}

bool complex_squares_to_zero(const LinearComplex& C, const GradedQuotientRing& M,
                             int extra_degrees) {
  const PrimeField& f = M.field();
  for (int i = 1; i + 1 <= C.max_i; ++i) {
    std::vector<std::vector<const LinearComplex::Entry*>> by_src_hi(C.rank(i + 1)),
        by_src_lo(C.rank(i));
    for (const auto& e : C.diff[static_cast<std::size_t>(i + 1)])
      by_src_hi[e.src].push_back(&e);
    for (const auto& e : C.diff[static_cast<std::size_t>(i)]) by_src_lo[e.src].push_back(&e);
    for (int j = i + 1; j <= i + 1 + extra_degrees; ++j) {
      const auto& gd2 = C.gen_deg[static_cast<std::size_t>(i + 1)];
      const auto& gd1 = C.gen_deg[static_cast<std::size_t>(i)];
      const auto& gd0 = C.gen_deg[static_cast<std::size_t>(i - 1)];
      const auto off2 = block_offsets(gd2, M, j);
      const auto off1 = block_offsets(gd1, M, j);
      const auto off0 = block_offsets(gd0, M, j);
      if (!off2.back() || !off1.back() || !off0.back()) continue;
      std::vector<uint32_t> mid(off1.back()), outv(off0.back());
      for (std::size_t g2 = 0; g2 < gd2.size(); ++g2) {
        const int a2 = j - gd2[g2];
        if (a2 < 0 || M.h(a2) == 0) continue;
        const std::size_t ha2 = static_cast<std::size_t>(M.h(a2));
        for (std::size_t la = 0; la < ha2; ++la) {
          std::fill(mid.begin(), mid.end(), 0u);
          std::fill(outv.begin(), outv.end(), 0u);
          apply_diff_column(C, M, i + 1, j, by_src_hi[g2], la, off1, a2, mid.data());
          for (std::size_t g1 = 0; g1 < gd1.size(); ++g1) {
            const std::size_t src_off = off1[g1];
            const std::size_t h_src = off1[g1 + 1] - src_off;
            if (!h_src) continue;
            const int a1 = j - gd1[g1];
            for (const auto* ep : by_src_lo[g1]) {
              const auto& e = *ep;
              const std::size_t o = off0[e.tgt];
              const std::size_t h_tgt = off0[e.tgt + 1] - o;
              if (!h_tgt) continue;
              for (int k = 0; k < C.n; ++k) {
                const uint32_t cf = e.lin[static_cast<std::size_t>(k)];
                if (!cf) continue;
                const Mat& chi = M.chi(k, a1);
                for (std::size_t c = 0; c < h_src; ++c) {
                  const uint32_t x = mid[src_off + c];
                  if (!x) continue;
                  const uint32_t cx = f.mul(cf, x);
                  for (std::size_t r = 0; r < h_tgt; ++r) {
                    const uint32_t v = chi.at(r, c);
                    if (v) outv[o + r] = f.add(outv[o + r], f.mul(cx, v));
                  }
                }
              }
            }
          }
          for (auto v : outv)
            if (v) return false;
        }
      }
    }
  }
  return true;
}

BettiTable tensor_homology_betti(const LinearComplex& C, const GradedQuotientRing& M,
                                 int max_i, int max_j) {
  if (max_i + 1 > C.max_i)
    throw std::invalid_argument("tensor_homology_betti: complex too short for max_i");
  const PrimeField& f = M.field();
  BettiTable T;
  T.max_i = max_i;
  T.max_j = max_j;

  std::vector<std::vector<std::vector<const LinearComplex::Entry*>>> by_src(
      static_cast<std::size_t>(max_i) + 2);
  for (int i = 1; i <= max_i + 1; ++i) {
    by_src[static_cast<std::size_t>(i)].resize(C.rank(i));
    for (const auto& e : C.diff[static_cast<std::size_t>(i)])
      by_src[static_cast<std::size_t>(i)][e.src].push_back(&e);
  }

  for (int j = 0; j <= max_j; ++j) {
    std::vector<std::vector<std::size_t>> off(static_cast<std::size_t>(max_i) + 2);
    std::vector<std::size_t> dims(static_cast<std::size_t>(max_i) + 2, 0);
    for (int i = 0; i <= max_i + 1; ++i) {
      off[static_cast<std::size_t>(i)] =
          block_offsets(C.gen_deg[static_cast<std::size_t>(i)], M, j);
      dims[static_cast<std::size_t>(i)] = off[static_cast<std::size_t>(i)].back();
    }
    // Ranks in ascending homological order; each capped by the kernel left by
    // the previous differential (exactness bound), enabling early exit.
    std::vector<std::size_t> rank(static_cast<std::size_t>(max_i) + 3, 0);
    for (int i = 1; i <= max_i + 1; ++i) {
      const std::size_t dim_src = dims[static_cast<std::size_t>(i)];
      const std::size_t dim_tgt = dims[static_cast<std::size_t>(i - 1)];
      if (!dim_src || !dim_tgt) continue;
      const std::size_t ceiling = dim_tgt - rank[static_cast<std::size_t>(i - 1)];
      if (!ceiling) continue;
      Eliminator el(f, dim_tgt);
      el.set_rank_target(ceiling);
      std::vector<uint32_t> colbuf(dim_tgt);
      const auto& gd = C.gen_deg[static_cast<std::size_t>(i)];
      for (std::size_t g = 0; g < gd.size() && !el.saturated(); ++g) {
        const int a = j - gd[g];
        if (a < 0 || M.h(a) == 0) continue;
        const std::size_t ha = static_cast<std::size_t>(M.h(a));
        const auto& entries = by_src[static_cast<std::size_t>(i)][g];
        for (std::size_t la = 0; la < ha && !el.saturated(); ++la) {
          std::fill(colbuf.begin(), colbuf.end(), 0u);
          apply_diff_column(C, M, i, j, entries, la, off[static_cast<std::size_t>(i - 1)],
                            a, colbuf.data());
          el.feed(colbuf.data());
        }
      }
      rank[static_cast<std::size_t>(i)] = el.rank();
    }
    for (int i = 0; i <= max_i; ++i) {
      const long long beta = static_cast<long long>(dims[static_cast<std::size_t>(i)]) -
                             static_cast<long long>(rank[static_cast<std::size_t>(i)]) -
                             static_cast<long long>(rank[static_cast<std::size_t>(i) + 1]);
      if (beta < 0) throw std::logic_error("tensor_homology_betti: negative homology rank");
      if (beta) T.set(i, j, static_cast<unsigned long long>(beta));
    }
  }
  return T;
}

bool euler_identity_holds(const BettiTable& t, const std::vector<long long>& h_S_vals,
                          const std::vector<long long>& h_M_vals, int through) {
  auto hs = [&](int d) -> long long {
    if (d < 0 || d >= static_cast<int>(h_S_vals.size())) return 0;
    return h_S_vals[static_cast<std::size_t>(d)];
  };
  auto hm = [&](int d) -> long long {
    if (d < 0 || d >= static_cast<int>(h_M_vals.size())) return 0;
    return h_M_vals[static_cast<std::size_t>(d)];
  };
  for (int d = 0; d <= through; ++d) {
    long long sum = 0;
    for (const auto& [ij, v] : t.e) {
      const auto [i, jj] = ij;
      const long long term = static_cast<long long>(v) * hs(d - jj);
      sum += (i % 2 == 0) ? term : -term;
    }
    if (sum != hm(d)) return false;
  }
  return true;
}

}  // namespace aci
