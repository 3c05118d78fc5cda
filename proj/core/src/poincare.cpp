// SPDX-License-Identifier: MIT
#include "aci/poincare.hpp"

#include <algorithm>
#include <stdexcept>

#include "aci/sequences.hpp"

namespace aci {

BiSeries hilbert_neg_tu(const std::vector<long long>& h, int I, int J) {
  BiSeries s(I, J);
  for (std::size_t d = 0; d < h.size(); ++d) {
    const int di = static_cast<int>(d);
    if (di > I || di > J) break;
    s.at(di, di) = (d % 2 == 0) ? BigInt(h[d]) : BigInt(-h[d]);
  }
  return s;
}

BiSeries one_minus_tu_pow(int e, int I, int J) {
  BiSeries base(I, J);
  base.at(0, 0) = 1;
  if (1 <= I && 1 <= J) base.at(1, 1) = -1;
  BiSeries out = BiSeries::one(I, J);
  for (int k = 0; k < e; ++k) out = out.mul(base);
  return out;
}

namespace {

std::vector<long long> hilbert_vector_of(int n, long long (*h)(int, int)) {
  std::vector<long long> v;
  for (int d = 0;; ++d) {
    const long long x = h(n, d);
    if (x == 0 && d > 0) break;
    v.push_back(x);
  }
  return v;
}

}  // namespace

BiSeries poincare_k_over_R_closed(int n, int I, int J) {
  if (n < 2) throw std::invalid_argument("poincare_k_over_R_closed: n >= 2 required");
  const int ell = ell_of(n);
  const int Iw = I + ell, Jw = J;
  const BiSeries H = hilbert_neg_tu(hilbert_vector_of(n, &hilb_R), Iw, Jw);
  // ((-t)^ℓ - 1) (1 - t²u²)
  BiSeries fac = BiSeries::monomial(Iw, Jw, ell, 0, (ell % 2 == 0) ? 1 : -1)
                     .sub(BiSeries::one(Iw, Jw));
  fac = fac.mul(BiSeries::one(Iw, Jw).sub(BiSeries::monomial(Iw, Jw, 2, 2, 1)));
  const BiSeries D = H.add(one_minus_tu_pow(n, Iw, Jw).mul(fac));
  const BiSeries N = BiSeries::monomial(Iw, Jw, ell, 0, (ell % 2 == 0) ? 1 : -1);
  return divide_with_cancellation(N, D);
}

BiSeries poincare_k_over_A_closed(int n, int I, int J) {
  if (n < 4) throw std::invalid_argument("poincare_k_over_A_closed: n >= 4 required");
  const int ell = ell_of(n);
  const int Iw = I + (ell - 1), Jw = J;
  const BiSeries H = hilbert_neg_tu(hilbert_vector_of(n, &hilb_A), Iw, Jw);
  const BigInt sgn = ((ell - 1) % 2 == 0) ? 1 : -1;
  const BiSeries fac =
      BiSeries::monomial(Iw, Jw, ell - 1, 0, sgn).sub(BiSeries::one(Iw, Jw));
  const BiSeries D = H.add(one_minus_tu_pow(n, Iw, Jw).mul(fac));
  const BiSeries N = BiSeries::monomial(Iw, Jw, ell - 1, 0, sgn);
  return divide_with_cancellation(N, D);
}

BiSeries poincare_A_over_P_closed(int n, int I, int J) {
  if (n < 4) throw std::invalid_argument("poincare_A_over_P_closed: n >= 4 required");
  const int ell = ell_of(n);
  const int Iw = I + ell, Jw = J;
  const BiSeries N =
      one_minus_tu_pow(n, Iw, Jw).sub(hilbert_neg_tu(hilbert_vector_of(n, &hilb_A), Iw, Jw));
  const BigInt sgn = ((ell + 1) % 2 == 0) ? 1 : -1;
  const BiSeries D =
      one_minus_tu_pow(n, Iw, Jw).mul(BiSeries::monomial(Iw, Jw, ell, 0, sgn));
  return BiSeries::one(I, J).add(divide_with_cancellation(N, D));
}

BiSeries poincare_R_over_P_closed(int n, int I, int J) {
  const BiSeries A = poincare_A_over_P_closed(n, I, J);
  return BiSeries::one(I, J).add(A.shift_up(1, 2));
}

BiSeries poincare_k_over_CI(int n, int I, int J) {
  return one_minus_tu_pow(n, I, J).reciprocal();
}

BiSeries golod_compose(const BiSeries& Pk, const BiSeries& PM) {
  const BiSeries den =
      BiSeries::one(PM.tmax, PM.umax)
          .sub(PM.sub(BiSeries::one(PM.tmax, PM.umax)).shift_up(1, 0));
  return Pk.mul(den.reciprocal());
}

BiSeries two_strand_series(int ell, const std::vector<long long>& a,
                           const std::vector<long long>& b, int I, int J) {
  BiSeries s = BiSeries::one(I, J);
  const std::size_t top = std::max(a.size(), b.size());
  for (std::size_t i = 1; i < top; ++i) {
    const int it = static_cast<int>(i);
    if (it > I) break;
    const long long ai = i < a.size() ? a[i] : 0;
    const long long bi = i < b.size() ? b[i] : 0;
    if (ai && it + ell <= J) s.at(it, it + ell) += ai;
    if (bi && it + ell + 1 <= J) s.at(it, it + ell + 1) += bi;
  }
  return s;
}

BiSeries poincare_from_betti(const BettiTable& T, int I, int J) {
  BiSeries s(I, J);
  for (const auto& [ij, v] : T.e) {
    const auto [i, j] = ij;
    if (0 <= i && i <= I && 0 <= j && j <= J) s.at(i, j) += BigInt(v);
  }
  return s;
}

BettiTable betti_from_series(const BiSeries& s, int max_i, int max_j) {
  if (max_i > s.tmax || max_j > s.umax)
    throw std::invalid_argument("betti_from_series: window exceeds series");
  BettiTable T;
  T.max_i = max_i;
  T.max_j = max_j;
  for (int i = 0; i <= max_i; ++i)
    for (int j = 0; j <= max_j; ++j) {
      const BigInt& v = s.at(i, j);
      if (v == 0) continue;
      if (v < 0 || v > BigInt(~0ull >> 1))
        throw std::domain_error("betti_from_series: coefficient out of range");
      T.set(i, j, static_cast<unsigned long long>(v));
    }
  return T;
}

}  // namespace aci
