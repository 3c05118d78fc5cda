// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <utility>

namespace aci {

// A graded Betti table over a window: entries β_{i,j} for 0 <= i <= max_i,
// 0 <= j <= max_j, with only nonzero values stored.  Iteration over `e` is in
// ascending (i, j) order.
struct BettiTable {
  int max_i = 0, max_j = 0;
  std::map<std::pair<int, int>, unsigned long long> e;

  unsigned long long get(int i, int j) const {
    auto it = e.find({i, j});
    return it == e.end() ? 0ull : it->second;
  }
  void set(int i, int j, unsigned long long v) {
    if (v)
      e[{i, j}] = v;
    else
      e.erase({i, j});
  }
  void add(int i, int j, unsigned long long v) {
    if (!v) return;
    e[{i, j}] += v;
  }
  bool operator==(const BettiTable& o) const {
    return max_i == o.max_i && max_j == o.max_j && e == o.e;
  }
  // Largest j - i over stored entries (the window regularity), or -1 if empty.
  int top_shift() const {
    int r = -1;
    for (const auto& [ij, v] : e) {
      (void)v;
      const int s = ij.second - ij.first;
      if (s > r) r = s;
    }
    return r;
  }
};

}  // namespace aci
