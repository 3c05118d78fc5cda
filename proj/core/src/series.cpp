// SPDX-License-Identifier: MIT
#include "aci/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace aci {

namespace {
inline int min_i(int a, int b) { return a < b ? a : b; }
}

BiSeries BiSeries::add(const BiSeries& o) const {
  BiSeries r(min_i(tmax, o.tmax), min_i(umax, o.umax));
  for (int i = 0; i <= r.tmax; ++i)
    for (int j = 0; j <= r.umax; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
  return r;
}

BiSeries BiSeries::sub(const BiSeries& o) const {
  BiSeries r(min_i(tmax, o.tmax), min_i(umax, o.umax));
  for (int i = 0; i <= r.tmax; ++i)
    for (int j = 0; j <= r.umax; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
  return r;
}

BiSeries BiSeries::mul(const BiSeries& o) const {
  BiSeries r(min_i(tmax, o.tmax), min_i(umax, o.umax));
  for (int i = 0; i <= r.tmax; ++i)
    for (int j = 0; j <= r.umax; ++j) {
      if (at(i, j) == 0) continue;
      const int ti = r.tmax - i, tj = r.umax - j;
      for (int k = 0; k <= ti; ++k)
        for (int l = 0; l <= tj; ++l) {
          const BigInt& b = o.at(k, l);
          if (b != 0) r.at(i + k, j + l) += at(i, j) * b;
        }
    }
  return r;
}

BiSeries BiSeries::scale(const BigInt& k) const {
  BiSeries r = *this;
  for (auto& x : r.c) x *= k;
  return r;
}

BiSeries BiSeries::shift_up(int dt, int du) const {
  BiSeries r(tmax, umax);
  for (int i = 0; i + dt <= tmax; ++i)
    for (int j = 0; j + du <= umax; ++j) r.at(i + dt, j + du) = at(i, j);
  return r;
}

BiSeries BiSeries::shift_down_t(int m) const {
  if (m == 0) return *this;
  if (m > tmax) throw std::domain_error("shift_down_t: window too small");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= umax; ++j)
      if (at(i, j) != 0) throw std::domain_error("shift_down_t: low t-rows are nonzero");
  BiSeries r(tmax - m, umax);
  for (int i = 0; i <= r.tmax; ++i)
    for (int j = 0; j <= umax; ++j) r.at(i, j) = at(i + m, j);
  return r;
}

int BiSeries::t_order() const {
  for (int i = 0; i <= tmax; ++i)
    for (int j = 0; j <= umax; ++j)
      if (at(i, j) != 0) return i;
  return tmax + 1;
}

bool BiSeries::is_zero() const {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

bool BiSeries::operator==(const BiSeries& o) const {
  return tmax == o.tmax && umax == o.umax && c == o.c;
}

BiSeries BiSeries::reciprocal() const {
  // Work in Z[u]/(u^{umax+1}) as the coefficient ring; invert row by row in t.
  if (at(0, 0) != 1 && at(0, 0) != -1)
    throw std::domain_error("reciprocal: constant coefficient must be ±1");
  const int J = umax;
  // Invert the t-degree-0 row a0(u) as a power series in u over Z: the
  // constant is ±1 so the inverse has integer coefficients.
  std::vector<BigInt> a0(static_cast<std::size_t>(J + 1));
  for (int j = 0; j <= J; ++j) a0[static_cast<std::size_t>(j)] = at(0, j);
  std::vector<BigInt> inv0(static_cast<std::size_t>(J + 1));
  inv0[0] = a0[0];  // 1/±1 = ±1
  for (int j = 1; j <= J; ++j) {
    BigInt s = 0;
    for (int k = 1; k <= j; ++k) s += a0[static_cast<std::size_t>(k)] * inv0[static_cast<std::size_t>(j - k)];
    inv0[static_cast<std::size_t>(j)] = -a0[0] * s;  // a0[0]^{-1} = a0[0]
  }
  auto mul_upoly = [J](const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
    std::vector<BigInt> r(static_cast<std::size_t>(J + 1));
    for (int i = 0; i <= J; ++i) {
      if (x[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; i + j <= J; ++j)
        if (y[static_cast<std::size_t>(j)] != 0)
          r[static_cast<std::size_t>(i + j)] += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
    }
    return r;
  };
  BiSeries b(tmax, umax);
  // b_0 = inv0; b_i = -inv0 * sum_{k=1..i} a_k b_{i-k}
  for (int j = 0; j <= J; ++j) b.at(0, j) = inv0[static_cast<std::size_t>(j)];
  std::vector<BigInt> acc(static_cast<std::size_t>(J + 1)), ak(static_cast<std::size_t>(J + 1)),
      bk(static_cast<std::size_t>(J + 1));
  for (int i = 1; i <= tmax; ++i) {
    std::fill(acc.begin(), acc.end(), BigInt(0));
    for (int k = 1; k <= i; ++k) {
      for (int j = 0; j <= J; ++j) {
        ak[static_cast<std::size_t>(j)] = at(k, j);
        bk[static_cast<std::size_t>(j)] = b.at(i - k, j);
      }
      auto prod = mul_upoly(ak, bk);
      for (int j = 0; j <= J; ++j) acc[static_cast<std::size_t>(j)] += prod[static_cast<std::size_t>(j)];
    }
    auto row = mul_upoly(inv0, acc);
    for (int j = 0; j <= J; ++j) b.at(i, j) = -row[static_cast<std::size_t>(j)];
  }
  return b;
}

std::vector<BigInt> BiSeries::at_u1() const {
  std::vector<BigInt> out(static_cast<std::size_t>(tmax + 1));
  for (int i = 0; i <= tmax; ++i) {
    BigInt s = 0;
    for (int j = 0; j <= umax; ++j) s += at(i, j);
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

BiSeries divide_with_cancellation(const BiSeries& N, const BiSeries& D) {
  const int m = D.t_order();
  if (m > D.tmax) throw std::domain_error("divide_with_cancellation: zero denominator");
  if (N.t_order() < m)
    throw std::domain_error("divide_with_cancellation: numerator t-order below denominator");
  const BiSeries Ns = N.shift_down_t(m);
  const BiSeries Ds = D.shift_down_t(m);
  if (Ds.at(0, 0) != 1 && Ds.at(0, 0) != -1)
    throw std::domain_error(
        "divide_with_cancellation: stripped denominator constant is not ±1");
  const BiSeries q = Ns.mul(Ds.reciprocal());
  // Verify D*q == N on the retained window.
  const BiSeries back = Ds.mul(q);
  for (int i = 0; i <= back.tmax; ++i)
    for (int j = 0; j <= back.umax; ++j)
      if (back.at(i, j) != Ns.at(i, j))
        throw std::domain_error("divide_with_cancellation: verification failed");
  return q;
}

}  // namespace aci
