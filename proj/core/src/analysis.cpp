// SPDX-License-Identifier: MIT
#include "aci/analysis.hpp"

#include <numeric>
#include <stdexcept>

namespace aci {

Frac::Frac(long long n, long long d) {
  if (d == 0) throw std::invalid_argument("Frac: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long long g = std::gcd(n < 0 ? -n : n, d);
  num = g ? n / g : n;
  den = g ? d / g : d;
}

bool Frac::operator<(const Frac& o) const {
  // Denominators are positive, so cross-multiplication preserves order.
  return num * o.den < o.num * den;
}

std::string Frac::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string RateResult::str() const {
  std::string s = window_limited ? ">= " : "= ";
  s += rate.str();
  s += " (witness i = " + std::to_string(witness_i) + ")";
  return s;
}

namespace {

RateResult rate_from_tau(std::vector<int> tau, int i_min) {
  RateResult r;
  r.tau = std::move(tau);
  bool found = false;
  for (int i = i_min; i < static_cast<int>(r.tau.size()); ++i) {
    if (i < 2 || r.tau[i] < 0) continue;
    const Frac cand(r.tau[i] - 1, i - 1);
    if (!found || r.rate < cand) {
      r.rate = cand;
      r.witness_i = i;
      found = true;
    }
  }
  if (!found)
    throw std::invalid_argument("rate: no nonzero strand in the probed range");
  return r;
}

}  // namespace

RateResult rate_of_table(const BettiTable& T, int i_min) {
  std::vector<int> tau(static_cast<std::size_t>(T.max_i) + 1, -1);
  for (const auto& [ij, v] : T.e) {
    (void)v;
    if (ij.first >= 0 && ij.first <= T.max_i && ij.second > tau[ij.first])
      tau[ij.first] = ij.second;
  }
  return rate_from_tau(std::move(tau), i_min);
}

RateResult rate_of_series(const BiSeries& S, int i_min, int i_max) {
  if (i_max > S.tmax)
    throw std::invalid_argument("rate_of_series: i_max exceeds series window");
  std::vector<int> tau(static_cast<std::size_t>(i_max) + 1, -1);
  for (int i = 0; i <= i_max; ++i)
    for (int j = S.umax; j >= 0; --j)
      if (S.at(i, j) != 0) {
        tau[i] = j;
        break;
      }
  return rate_from_tau(std::move(tau), i_min);
}

std::string RegularityResult::printed() const {
  return (window_limited ? ">= " : "") + std::to_string(value);
}

RegularityResult regularity(const BettiTable& T) {
  if (T.e.empty()) throw std::invalid_argument("regularity: empty Betti table");
  RegularityResult r;
  r.value = T.top_shift();
  for (const auto& [ij, v] : T.e) {
    (void)v;
    if (ij.second - ij.first == r.value &&
        (ij.first == T.max_i || ij.second == T.max_j)) {
      r.window_limited = true;
      break;
    }
  }
  return r;
}

GolodReport golod_hypothesis_check(const BettiTable& T, GolodMode mode, int b,
                                   std::optional<std::pair<int, int>> i0j0) {
  if (T.max_i < 3)
    throw std::invalid_argument(
        "golod_hypothesis_check: window has fewer than 3 homological steps");
  if (b < 1) throw std::invalid_argument("golod_hypothesis_check: b must be >= 1");

  GolodReport rep;
  rep.mode = mode;
  rep.b = b;

  if (mode == GolodMode::I) {
    for (const auto& [ij, v] : T.e) {
      const auto [i, j] = ij;
      if (i < 1) continue;
      const int s = j - i;
      if (v != 0 && (s < b || s >= 2 * b)) rep.violations.push_back(ij);
    }
    rep.pass = rep.violations.empty();
    if (!rep.pass) rep.note = "nonzero entry outside the band b <= j-i < 2b";
    return rep;
  }

  // Mode II.
  if (!i0j0)
    throw std::invalid_argument(
        "golod_hypothesis_check: mode II requires the exception position (i0, j0)");
  const auto [i0, j0] = *i0j0;
  rep.exception = *i0j0;
  if (i0 % 2 == 0 || j0 - i0 < 1 || b < j0 - i0) {
    rep.pass = false;
    rep.note = "mode II parameters invalid: need i0 odd and b >= j0-i0 >= 1";
    rep.violations.push_back({i0, j0});
    return rep;
  }
  if (T.get(i0, j0) != 1) rep.violations.push_back({i0, j0});
  for (const auto& [ij, v] : T.e) {
    const auto [i, j] = ij;
    if (i < 1 || ij == std::pair<int, int>{i0, j0}) continue;
    const int s = j - i;
    if (v != 0 && (s < b || s >= b + (j0 - i0))) rep.violations.push_back(ij);
  }
  rep.pass = rep.violations.empty();
  if (!rep.pass)
    rep.note = "entry violates the mode II band or the unit exception";
  return rep;
}

long long betti_from_hilbert_strand(const std::function<long long(int)>& h_S,
                                    const std::function<long long(int)>& h_M,
                                    const BettiTable& known, int k, int a) {
  const int d = k + a;
  long long acc = h_M(d);
  for (const auto& [ij, beta] : known.e) {
    const auto [i, j] = ij;
    if ((i == k && j == d) || j > d || beta == 0) continue;
    const long long term =
        (i % 2 == 0 ? 1LL : -1LL) * h_S(d - j) * static_cast<long long>(beta);
    acc -= term;
  }
  const long long result = (k % 2 == 0 ? acc : -acc);
  if (result < 0)
    throw std::domain_error(
        "betti_from_hilbert_strand: negative value, inputs inconsistent");
  return result;
}

}  // namespace aci
