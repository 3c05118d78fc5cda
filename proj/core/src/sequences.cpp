// SPDX-License-Identifier: MIT
#include "aci/sequences.hpp"

#include <cassert>
#include <stdexcept>

#include "aci/monomials.hpp"

namespace aci {

namespace {
long long C(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  return static_cast<long long>(binom_u64(static_cast<unsigned>(a), static_cast<unsigned>(b)));
}
}  // namespace

long long hilb_Q(int n, int d) {
  if (d < 0) return 0;
  return C(n + d - 1, d);
}

long long hilb_P(int n, int d) { return d < 0 ? 0 : C(n, d); }

long long hilb_R(int n, int d) {
  if (d < 0) return 0;
  const long long v = C(n, d) - C(n, d - 2);
  return v > 0 ? v : 0;
}

long long hilb_A(int n, int d) {
  if (d < 0) return 0;
  const long long a = C(n, d), b = C(n, d + 2);
  return a < b ? a : b;
}

std::vector<long long> rho_sequence(int n, int k_max) {
  assert(n >= 2 && k_max >= 0);
  const int l = ell_of(n);
  std::vector<long long> rho(static_cast<std::size_t>(k_max) + 1, 0);
  rho[0] = 0;
  for (int k = 1; k <= k_max; ++k) {
    long long v = 0;
    for (int i = 0; i < k; ++i) {
      const long long sgn = ((i + k + 1) % 2 == 0) ? 1 : -1;
      v += sgn * C(n + k - i - 1, n - 1) * rho[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i <= l; ++i) {
      const long long sgn = ((i + k + 1) % 2 == 0) ? 1 : -1;
      v += sgn * C(n + k + l - 2 * i, n - 1) * C(n + 1, i);
    }
    rho[static_cast<std::size_t>(k)] = v;
  }
  return rho;
}

std::vector<long long> gamma_sequence(int n, int k_max) {
  assert(n >= 2 && k_max >= 0);
  const int l = ell_of(n);
  const int top = k_max < n ? k_max : n;
  std::vector<long long> g(static_cast<std::size_t>(top) + 1, 0);
  g[0] = (n == 2) ? 1 : 0;
  // Recurrence up to k = ℓ + 1, then the symmetry γ_k = γ_{n-k}.
  for (int k = 1; k <= top && k <= l + 1; ++k) {
    const long long sk = (k % 2 == 0) ? 1 : -1;
    long long v = sk * C(n, k + l + 2);
    for (int i = 0; i < k; ++i) {
      const long long sgn = ((i + k) % 2 == 0) ? 1 : -1;
      v -= sgn * C(n - 1 + k - i, n - 1) * g[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i <= l - 1; ++i) {
      const long long sgn = ((i + k) % 2 == 0) ? 1 : -1;
      v -= sgn * C(n - 1 + l + k - 2 * i, n - 1) * C(n, i);
    }
    g[static_cast<std::size_t>(k)] = v;
  }
  for (int k = l + 2; k <= top; ++k) {
    const int m = n - k;
    if (m < 0 || m > l + 1)
      throw std::logic_error("gamma_sequence: symmetry index out of recurrence range");
    g[static_cast<std::size_t>(k)] = g[static_cast<std::size_t>(m)];
  }
  return g;
}

std::vector<long long> catalan_sequence(int m_max) {
  std::vector<long long> c(static_cast<std::size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) c[static_cast<std::size_t>(m)] = C(2 * m, m) / (m + 1);
  return c;
}

}  // namespace aci
