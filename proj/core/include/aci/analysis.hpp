// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aci/betti.hpp"
#include "aci/series.hpp"

namespace aci {

// Exact rational number p/q in lowest terms with q > 0.
struct Frac {
  long long num = 0;
  long long den = 1;

  Frac() = default;
  Frac(long long n, long long d);

  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Frac& o) const { return !(*this == o); }
  bool operator<(const Frac& o) const;
  bool operator<=(const Frac& o) const { return *this < o || *this == o; }

  std::string str() const;  // "p/q", or "p" when q = 1
};

// Rate data extracted from a window of a Betti table or Poincaré series:
//   tau_i = max{ j : coefficient of t^i u^j is nonzero }  (-1 for empty strand)
//   rate  = max over the probed i-range of (tau_i - 1) / (i - 1).
// The value is a lower bound for the true rate: only finitely many rows are
// visible, so `rate` carries a witness index instead of an equality claim.
struct RateResult {
  Frac rate{0, 1};
  int witness_i = 0;          // smallest i attaining the max
  std::vector<int> tau;       // tau[i] for 0 <= i <= i_max of the scan
  bool window_limited = true; // computed from a finite window; always a bound
  std::string str() const;    // e.g. ">= 2 (witness i = 2)"
};

// Scan a Betti table (rows i_min..T.max_i).  Throws std::invalid_argument if
// no row in the range has a nonzero entry.
RateResult rate_of_table(const BettiTable& T, int i_min = 2);

// Scan a bivariate series on rows i_min..i_max of its window.
RateResult rate_of_series(const BiSeries& S, int i_min, int i_max);

// Castelnuovo-Mumford regularity over the certified window:
//   max{ j - i : beta_{i,j} != 0 }.
// When the max is attained on the window boundary the value is only a lower
// bound and is printed with ">=".
struct RegularityResult {
  int value = 0;
  bool window_limited = false;
  std::string printed() const;
};

RegularityResult regularity(const BettiTable& T);

// Golod-homomorphism hypothesis predicates on a Betti table over a complete
// intersection base, checked for all table rows 1 <= i <= max_i.
//
// Mode I  (parameter b >= 1):
//   beta_{i,j} = 0 unless b <= j - i < 2b.
// Mode II (parameters b >= 1 and an exception position (i0, j0) with i0 odd
// and b >= j0 - i0 >= 1):
//   beta_{i,j} = 0 if j - i < b, except beta_{i0,j0} = 1 exactly;
//   beta_{i,j} = 0 if j - i >= b + (j0 - i0).
enum class GolodMode { I, II };

struct GolodReport {
  bool pass = false;
  GolodMode mode = GolodMode::I;
  int b = 0;
  std::optional<std::pair<int, int>> exception;   // (i0, j0) in mode II
  std::vector<std::pair<int, int>> violations;    // offending (i, j) positions
  std::string note;                               // reason when pass == false
};

// Throws std::invalid_argument when the window is too small to be meaningful
// (fewer than 3 homological steps) or required parameters are missing.
GolodReport golod_hypothesis_check(
    const BettiTable& T, GolodMode mode, int b,
    std::optional<std::pair<int, int>> i0j0 = std::nullopt);

// The alternating-sum recurrence expressing one Betti number through Hilbert
// functions and the other table entries:
//   beta_{k,k+a} = (-1)^k [ h_M(k+a)
//                  - sum_{(i,j) != (k,k+a), j <= k+a} (-1)^i h_S(k+a-j) beta_{i,j} ].
// `known` must supply every entry the sum touches.  Throws std::domain_error
// when the result is negative (inconsistent inputs).
long long betti_from_hilbert_strand(const std::function<long long(int)>& h_S,
                                    const std::function<long long(int)>& h_M,
                                    const BettiTable& known, int k, int a);

}  // namespace aci
