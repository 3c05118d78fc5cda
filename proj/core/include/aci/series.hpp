// SPDX-License-Identifier: MIT
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace aci {

using BigInt = boost::multiprecision::cpp_int;

// Truncated bivariate power series over Z: the coefficient of t^i u^j is kept
// for 0 <= i <= tmax, 0 <= j <= umax.  Poincaré series coefficients grow fast,
// so entries are arbitrary-precision integers.
struct BiSeries {
  int tmax = 0, umax = 0;
  std::vector<BigInt> c;  // (tmax+1) x (umax+1), row-major by t-power

  BiSeries() : c(1) {}
  BiSeries(int I, int J)
      : tmax(I), umax(J), c(static_cast<std::size_t>(I + 1) * (J + 1)) {}

  static BiSeries one(int I, int J) {
    BiSeries s(I, J);
    s.at(0, 0) = 1;
    return s;
  }
  // The monomial c * t^i u^j on the given window.
  static BiSeries monomial(int I, int J, int i, int j, const BigInt& coeff) {
    BiSeries s(I, J);
    if (i <= I && j <= J) s.at(i, j) = coeff;
    return s;
  }

  BigInt& at(int i, int j) { return c[static_cast<std::size_t>(i) * (umax + 1) + j]; }
  const BigInt& at(int i, int j) const {
    return c[static_cast<std::size_t>(i) * (umax + 1) + j];
  }

  BiSeries add(const BiSeries& o) const;
  BiSeries sub(const BiSeries& o) const;
  BiSeries mul(const BiSeries& o) const;
  BiSeries scale(const BigInt& k) const;
  // Multiply by t^dt u^du (dt, du >= 0); coefficients pushed past the window
  // are dropped.
  BiSeries shift_up(int dt, int du) const;
  // Divide by t^m; requires the first m t-rows to vanish.  The window shrinks
  // by m in the t direction.
  BiSeries shift_down_t(int m) const;

  int t_order() const;  // smallest i with a nonzero row, or tmax+1 if zero
  bool is_zero() const;
  bool operator==(const BiSeries& o) const;

  // Multiplicative inverse on the same window; requires at(0,0) = ±1.
  BiSeries reciprocal() const;

  // Coefficients after substituting u = 1: index i gives sum_j c(i, j).
  std::vector<BigInt> at_u1() const;
};

// N/D with cancellation of the common power of t: let m be the t-order of D
// (m must not exceed the t-order of N, and the stripped D must have constant
// coefficient ±1).  Both are divided by t^m and the quotient is formed via the
// reciprocal; the identity D * q == N is re-verified on the common window.
// Throws std::domain_error when any requirement fails.
BiSeries divide_with_cancellation(const BiSeries& N, const BiSeries& D);

}  // namespace aci
