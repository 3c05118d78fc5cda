// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace aci {

// Dense row-major matrix over GF(p); entries are values in [0, p).
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<uint32_t> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0u) {}

  uint32_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  uint32_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  const uint32_t* row(std::size_t r) const { return a.data() + r * cols; }
  uint32_t* row(std::size_t r) { return a.data() + r * cols; }

  static Mat from(std::initializer_list<std::initializer_list<uint32_t>> data) {
    Mat m;
    m.rows = data.size();
    m.cols = data.size() ? data.begin()->size() : 0;
    m.a.reserve(m.rows * m.cols);
    for (const auto& r : data) m.a.insert(m.a.end(), r.begin(), r.end());
    return m;
  }
};

}  // namespace aci
