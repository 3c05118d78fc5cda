// SPDX-License-Identifier: MIT
#include "aci/syzygy.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace aci {

namespace {

struct GenVec {
  int deg = 0;
  std::vector<uint32_t> v;  // coordinates in the free module one level down
};

std::vector<std::size_t> block_offsets(const GradedQuotientRing& S,
                                       const std::vector<int>& degs, int d) {
  std::vector<std::size_t> off(degs.size() + 1, 0);
  for (std::size_t g = 0; g < degs.size(); ++g) {
    const int a = d - degs[g];
    off[g + 1] = off[g] + static_cast<std::size_t>(a >= 0 ? S.h(a) : 0);
  }
  return off;
}

long long dim_free(const GradedQuotientRing& S, const std::vector<int>& degs, int d) {
  long long s = 0;
  for (int deg : degs)
    if (d >= deg) s += S.h(d - deg);
  return s;
}

// Feed x_k * (every basis row of src) into dst.  src rows live in the free
// module's degree-(dsrc) piece with block layout off_src; images land in the
// degree-(dsrc+1) piece with layout off_dst.  Stops once dst saturates.
void feed_variable_multiples(const GradedQuotientRing& S, Eliminator& src,
                             const std::vector<int>& degs,
                             const std::vector<std::size_t>& off_src, int dsrc,
                             const std::vector<std::size_t>& off_dst, Eliminator& dst) {
  const PrimeField& f = S.field();
  const int n = S.n();
  std::vector<uint32_t> row(src.width()), out(dst.width());
  const std::size_t nrows = src.basis_rows();
  int since_check = 0;
  for (std::size_t r = 0; r < nrows; ++r) {
    src.basis_row(r, row.data());
    for (int k = 0; k < n; ++k) {
      std::fill(out.begin(), out.end(), 0u);
      bool nonzero = false;
      for (std::size_t g = 0; g < degs.size(); ++g) {
        const int a = dsrc - degs[g];
        if (a < 0 || S.h(a) == 0 || S.h(a + 1) == 0) continue;
        const Mat& X = S.chi(k, a);
        const std::size_t ha = static_cast<std::size_t>(S.h(a));
        const std::size_t hb = static_cast<std::size_t>(S.h(a + 1));
        for (std::size_t c = 0; c < ha; ++c) {
          const uint32_t vc = row[off_src[g] + c];
          if (!vc) continue;
          for (std::size_t rr = 0; rr < hb; ++rr) {
            const uint32_t x = X.at(rr, c);
            if (x) {
              auto& cell = out[off_dst[g] + rr];
              cell = f.add(cell, f.mul(x, vc));
              nonzero = true;
            }
          }
        }
      }
      if (!nonzero) continue;
      dst.feed(out.data());
      // Saturation polls force a flush, so only look every few feeds to keep
      // the elimination blocks full.
      if (++since_check >= 8) {
        since_check = 0;
        if (dst.saturated()) return;
      }
    }
  }
}

}  // namespace

GradedModulePresentation k_presentation(const GradedQuotientRing& S) {
  GradedModulePresentation p;
  p.gen_deg = {0};
  for (int k = 0; k < S.n(); ++k) {
    Expo e(static_cast<std::size_t>(S.n()), 0);
    e[static_cast<std::size_t>(k)] = 1;
    PresentationColumn col;
    col.deg = 1;
    col.comp.push_back(S.reduce_poly(poly_from_expo(e, 1)));
    p.columns.push_back(std::move(col));
  }
  return p;
}

GradedModulePresentation cyclic_presentation(const GradedQuotientRing& S,
                                             const std::vector<SparsePoly>& gens) {
  GradedModulePresentation p;
  p.gen_deg = {0};
  for (const auto& q : gens) {
    std::vector<uint32_t> red = S.reduce_poly(q);
    if (std::all_of(red.begin(), red.end(), [](uint32_t v) { return v == 0; })) continue;
    PresentationColumn col;
    col.deg = q.deg;
    col.comp.push_back(std::move(red));
    p.columns.push_back(std::move(col));
  }
  return p;
}

GradedModulePresentation cyclic_presentation_from_pieces(
    const std::vector<std::pair<int, std::vector<std::vector<uint32_t>>>>& pieces) {
  GradedModulePresentation p;
  p.gen_deg = {0};
  for (const auto& [d, vecs] : pieces)
    for (const auto& v : vecs) {
      PresentationColumn col;
      col.deg = d;
      col.comp.push_back(v);
      p.columns.push_back(std::move(col));
    }
  return p;
}

BettiTable minimal_syzygy_betti(const GradedQuotientRing& S,
                                const GradedModulePresentation& pres, int max_i,
                                int max_j) {
  if (max_i < 0 || max_j < 0) throw std::invalid_argument("minimal_syzygy_betti: bad window");
  if (pres.gen_deg.empty())
    throw std::invalid_argument("minimal_syzygy_betti: presentation has no generators");
  S.h(max_j);  // certification probe: throws if the ring window is too small
  const PrimeField& f = S.field();

  BettiTable T;
  T.max_i = max_i;
  T.max_j = max_j;
  for (int deg : pres.gen_deg)
    if (0 <= deg && deg <= max_j) T.add(0, deg, 1);

  // Degrees of the generators of each F_i, in recording order (the order fixes
  // the block layout of coordinate vectors over that free module).
  std::vector<std::vector<int>> level_degs(static_cast<std::size_t>(max_i) + 1);
  level_degs[0] = pres.gen_deg;

  std::vector<long long> hM(static_cast<std::size_t>(max_j) + 1, 0);
  std::vector<GenVec> gens_prev;  // level-1 generators in F_0 coordinates

  // ---- level 1: relations fed from the presentation columns ----
  {
    const std::vector<int>& degs0 = level_degs[0];
    std::unique_ptr<Eliminator> Eprev;
    std::vector<std::size_t> off_prev;
    for (int d = 0; d <= max_j; ++d) {
      auto off = block_offsets(S, degs0, d);
      const std::size_t w = off.back();
      std::unique_ptr<Eliminator> E;
      if (w) {
        E = std::make_unique<Eliminator>(f, w);
        if (Eprev && Eprev->rank() > 0)
          feed_variable_multiples(S, *Eprev, degs0, off_prev, d - 1, off, *E);
        for (const auto& col : pres.columns) {
          if (col.deg != d) continue;
          if (col.comp.size() != degs0.size())
            throw std::invalid_argument("presentation column has wrong arity");
          std::vector<uint32_t> v(w, 0);
          for (std::size_t g = 0; g < degs0.size(); ++g) {
            const auto& c = col.comp[g];
            if (c.empty()) continue;
            if (c.size() != off[g + 1] - off[g])
              throw std::invalid_argument("presentation column block has wrong length");
            std::copy(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(off[g]));
          }
          const std::size_t r0 = E->rank();
          E->feed(v);
          if (E->rank() > r0) {
            if (max_i >= 1) T.add(1, d, 1);
            if (max_i >= 2) gens_prev.push_back(GenVec{d, std::move(v)});
          }
        }
        hM[static_cast<std::size_t>(d)] = static_cast<long long>(w) - static_cast<long long>(E->rank());
      }
      Eprev = std::move(E);
      off_prev = std::move(off);
    }
  }
  if (max_i < 2) return T;
  for (const auto& g : gens_prev) level_degs[1].push_back(g.deg);

  // ---- levels >= 2: syzygies of the previous level's generators ----
  for (int lvl = 2; lvl <= max_i; ++lvl) {
    const std::vector<int>& degs_prev = level_degs[static_cast<std::size_t>(lvl - 1)];
    const std::vector<int>& degs_pp = level_degs[static_cast<std::size_t>(lvl - 2)];
    if (degs_prev.empty()) break;  // resolution has terminated

    // Expected syzygy dimensions by Euler characteristic over the window.
    std::vector<long long> K(static_cast<std::size_t>(max_j) + 1, 0);
    for (int d = 0; d <= max_j; ++d) {
      long long s = 0;
      for (int m = 0; m < lvl; ++m) {
        const long long dim = dim_free(S, level_degs[static_cast<std::size_t>(m)], d);
        s += ((lvl - 1 - m) % 2 == 0) ? dim : -dim;
      }
      s += (lvl % 2 == 0) ? hM[static_cast<std::size_t>(d)] : -hM[static_cast<std::size_t>(d)];
      if (s < 0 || s > dim_free(S, degs_prev, d))
        throw std::logic_error("minimal_syzygy_betti: Euler count out of range");
      K[static_cast<std::size_t>(d)] = s;
    }
    int last_active = -1;
    for (int d = 0; d <= max_j; ++d)
      if (K[static_cast<std::size_t>(d)] > 0) last_active = d;

    std::vector<GenVec> gens_new;
    std::unique_ptr<Eliminator> Eprev;
    std::vector<std::size_t> off_prev;
    for (int d = 0; d <= max_j; ++d) {
      auto off = block_offsets(S, degs_prev, d);
      const std::size_t w = off.back();
      const long long Kd = K[static_cast<std::size_t>(d)];
      std::unique_ptr<Eliminator> E;
      if (w && Kd >= 0) {
        E = std::make_unique<Eliminator>(f, w);
        E->set_rank_target(static_cast<std::size_t>(Kd));
        if (Kd > 0 && Eprev && Eprev->rank() > 0)
          feed_variable_multiples(S, *Eprev, degs_prev, off_prev, d - 1, off, *E);
        const std::size_t rank_u = E->rank();
        const long long beta = Kd - static_cast<long long>(rank_u);
        if (beta < 0) throw std::logic_error("minimal_syzygy_betti: rank exceeds Euler count");
        if (beta > 0) T.add(lvl, d, static_cast<unsigned long long>(beta));

        const bool completion_matters = (lvl < max_i) || (d < last_active);
        if (beta > 0 && completion_matters) {
          // Assemble the differential F_{lvl-1} -> F_{lvl-2} in degree d and
          // stream its kernel into E until the syzygy span is complete.
          auto tgt_off = block_offsets(S, degs_pp, d);
          const std::size_t tgt_w = tgt_off.back();
          std::vector<uint32_t> A(tgt_w * w, 0);
          for (std::size_t g = 0; g < degs_prev.size(); ++g) {
            const int degg = degs_prev[g];
            const int b = d - degg;
            if (b < 0 || S.h(b) == 0) continue;
            const std::size_t hb = static_cast<std::size_t>(S.h(b));
            const auto& v = gens_prev[g].v;
            auto offv = block_offsets(S, degs_pp, degg);
            for (std::size_t gp = 0; gp < degs_pp.size(); ++gp) {
              const int a = degg - degs_pp[gp];
              if (a < 0 || S.h(a) == 0) continue;
              const std::size_t ha = static_cast<std::size_t>(S.h(a));
              const long long hab_ll = S.h(a + b);
              if (hab_ll == 0) continue;
              const std::size_t hab = static_cast<std::size_t>(hab_ll);
              const Mat& MT = S.mult_table(b, a);
              for (std::size_t m = 0; m < ha; ++m) {
                const uint32_t vm = v[offv[gp] + m];
                if (!vm) continue;
                for (std::size_t lam = 0; lam < hb; ++lam) {
                  const uint32_t* mrow = MT.row(lam * ha + m);
                  uint32_t* colbase = A.data() + (off[g] + lam);
                  for (std::size_t rr = 0; rr < hab; ++rr) {
                    const uint32_t x = mrow[rr];
                    if (!x) continue;
                    uint32_t& cell = colbase[(tgt_off[gp] + rr) * w];
                    cell = f.add(cell, f.mul(x, vm));
                  }
                }
              }
            }
          }
          Eliminator ME(f, w);
          ME.set_rank_target(w - static_cast<std::size_t>(Kd));
          for (std::size_t r = 0; r < tgt_w && !ME.saturated(); ++r)
            ME.feed(A.data() + r * w);
          if (ME.rank() != w - static_cast<std::size_t>(Kd))
            throw std::logic_error("minimal_syzygy_betti: differential rank mismatch");
          A.clear();
          A.shrink_to_fit();

          const Mat RR = ME.rref();
          const auto piv = ME.pivot_cols();
          std::vector<char> is_piv(w, 0);
          for (std::size_t c : piv) is_piv[c] = 1;
          std::vector<std::pair<uint32_t, uint32_t>> sparse;
          for (std::size_t c = 0; c < w && !E->saturated(); ++c) {
            if (is_piv[c]) continue;
            sparse.clear();
            for (std::size_t r = 0; r < piv.size(); ++r) {
              if (piv[r] > c) break;
              const uint32_t x = RR.at(r, c);
              if (x) sparse.emplace_back(static_cast<uint32_t>(piv[r]), f.p - x);
            }
            sparse.emplace_back(static_cast<uint32_t>(c), 1);
            const std::size_t r0 = E->rank();
            E->feed_sparse(sparse);
            if (E->rank() > r0 && lvl < max_i) {
              GenVec gv;
              gv.deg = d;
              gv.v.assign(w, 0);
              for (const auto& [cc, vv] : sparse) gv.v[cc] = vv;
              gens_new.push_back(std::move(gv));
            }
          }
          if (!E->saturated())
            throw std::logic_error("minimal_syzygy_betti: kernel did not reach Euler count");
        }
      } else if (Kd != 0) {
        throw std::logic_error("minimal_syzygy_betti: syzygies in an empty degree");
      }
      Eprev = std::move(E);
      off_prev = std::move(off);
    }

    if (lvl < max_i) {
      for (const auto& g : gens_new) level_degs[static_cast<std::size_t>(lvl)].push_back(g.deg);
      gens_prev = std::move(gens_new);
    }
  }
  return T;
}

}  // namespace aci
