// SPDX-License-Identifier: MIT
#include "aci/monomials.hpp"

#include <cassert>
#include <stdexcept>

namespace aci {

uint64_t binom_u64(unsigned a, unsigned b) {
  if (b > a) return 0;
  if (a > 67) throw std::overflow_error("binom_u64: a > 67 may overflow uint64");
  if (b > a - b) b = a - b;
  uint64_t r = 1;
  for (unsigned i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

uint64_t monomial_count(int n, int d) {
  assert(n >= 1 && d >= 0);
  return binom_u64(static_cast<unsigned>(n + d - 1), static_cast<unsigned>(d));
}

namespace {
void gen_rec(int n, int d, int i, Expo& cur, std::vector<Expo>& out) {
  if (i == n - 1) {
    cur[static_cast<std::size_t>(i)] = static_cast<uint8_t>(d);
    out.push_back(cur);
    return;
  }
  for (int a = d; a >= 0; --a) {
    cur[static_cast<std::size_t>(i)] = static_cast<uint8_t>(a);
    gen_rec(n, d - a, i + 1, cur, out);
  }
}
}  // namespace

std::vector<Expo> monomial_basis(int n, int d) {
  assert(n >= 1 && d >= 0);
  std::vector<Expo> out;
  out.reserve(monomial_count(n, d));
  Expo cur(static_cast<std::size_t>(n), 0);
  gen_rec(n, d, 0, cur, out);
  return out;
}

std::size_t monomial_rank(const Expo& e) {
  const int n = static_cast<int>(e.size());
  int dd = 0;
  for (auto x : e) dd += x;
  std::size_t pos = 0;
  for (int i = 0; i < n - 1; ++i) {
    const int ei = e[static_cast<std::size_t>(i)];
    for (int a = dd; a > ei; --a)
      pos += static_cast<std::size_t>(monomial_count(n - i - 1, dd - a));
    dd -= ei;
  }
  return pos;
}

Expo monomial_unrank(int n, int d, std::size_t r) {
  Expo e(static_cast<std::size_t>(n), 0);
  int dd = d;
  for (int i = 0; i < n - 1; ++i) {
    std::size_t acc = 0;
    for (int a = dd; a >= 0; --a) {
      const std::size_t block = static_cast<std::size_t>(monomial_count(n - i - 1, dd - a));
      if (r < acc + block) {
        e[static_cast<std::size_t>(i)] = static_cast<uint8_t>(a);
        r -= acc;
        dd -= a;
        break;
      }
      acc += block;
    }
  }
  e[static_cast<std::size_t>(n - 1)] = static_cast<uint8_t>(dd);
  return e;
}

std::size_t monomial_mult_var(int n, int d, std::size_t r, int k) {
  Expo e = monomial_unrank(n, d, r);
  e[static_cast<std::size_t>(k)]++;
  return monomial_rank(e);
}

std::size_t monomial_mult(int n, int d, std::size_t r, int e, std::size_t s) {
  Expo a = monomial_unrank(n, d, r);
  Expo b = monomial_unrank(n, e, s);
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] =
      static_cast<uint8_t>(a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)]);
  return monomial_rank(a);
}

}  // namespace aci
