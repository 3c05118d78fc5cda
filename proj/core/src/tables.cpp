// SPDX-License-Identifier: MIT
#include "aci/tables.hpp"

#include <cassert>
#include <stdexcept>

#include "aci/monomials.hpp"
#include "aci/sequences.hpp"

namespace aci {

namespace {

unsigned long long C(int a, int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  return binom_u64(static_cast<unsigned>(a), static_cast<unsigned>(b));
}

void refresh_window(BettiTable& t, int structural_max_i) {
  t.max_i = structural_max_i;
  int mj = 0;
  for (const auto& [ij, v] : t.e) {
    (void)v;
    if (ij.second > mj) mj = ij.second;
  }
  t.max_j = mj;
}

// Even-n closed forms.
std::pair<BettiTable, BettiTable> even_tables(int n) {
  assert(n % 2 == 0 && n >= 2);
  const int l = ell_of(n);
  const auto rho = rho_sequence(n, n + 1);
  const auto gam = gamma_sequence(n, n);

  BettiTable R;
  for (int i = 0; i <= l; ++i) R.add(i, 2 * i, C(n + 1, i));
  for (int i = 0; i <= n + 1; ++i)
    if (rho[static_cast<std::size_t>(i)] > 0)
      R.add(i, i + l + 1, static_cast<unsigned long long>(rho[static_cast<std::size_t>(i)]));
  refresh_window(R, n + 1);

  BettiTable A;
  for (int i = 0; i <= l - 1; ++i) A.add(i, 2 * i, C(n, i));
  for (int i = l + 3; i <= n; ++i) A.add(i, 2 * i - 2, C(n, i));
  for (int i = 0; i <= n; ++i)
    if (gam[static_cast<std::size_t>(i)] > 0)
      A.add(i, i + l, static_cast<unsigned long long>(gam[static_cast<std::size_t>(i)]));
  refresh_window(A, n);

  return {R, A};
}

BettiTable pushout(const BettiTable& even, int structural_max_i) {
  BettiTable t;
  for (const auto& [ij, v] : even.e) {
    t.add(ij.first, ij.second, v);
    t.add(ij.first + 1, ij.second + 2, v);
  }
  refresh_window(t, structural_max_i);
  return t;
}

}  // namespace

std::pair<BettiTable, BettiTable> tilde_betti_tables_Q(int n) {
  if (n < 2) throw std::invalid_argument("tilde_betti_tables_Q: n >= 2 required");
  if (n % 2 == 0) return even_tables(n);
  auto [Rbar, Abar] = even_tables(n - 1);
  return {pushout(Rbar, n + 1), pushout(Abar, n)};
}

}  // namespace aci
