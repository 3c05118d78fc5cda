// SPDX-License-Identifier: MIT
#include "aci/elimination.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace aci {

Eliminator::Eliminator(PrimeField f, std::size_t width)
    : f_(f), width_(width), pivot_at_(width, -1) {}

uint64_t* Eliminator::pending_slot() {
  if (sat_) return nullptr;
  if (block_.empty()) block_.assign(kBlock * width_, 0);
  if (pending_ == kBlock) flush();
  if (sat_) return nullptr;
  uint64_t* buf = block_.data() + pending_ * width_;
  ++pending_;
  return buf;
}

void Eliminator::feed(const uint32_t* row) {
  uint64_t* buf = pending_slot();
  if (!buf) return;
  for (std::size_t i = 0; i < width_; ++i) buf[i] = row[i];
}

void Eliminator::feed(const std::vector<uint32_t>& row) {
  assert(row.size() == width_);
  feed(row.data());
}

void Eliminator::feed_sparse(const std::vector<std::pair<uint32_t, uint32_t>>& entries) {
  uint64_t* buf = pending_slot();
  if (!buf) return;
  std::fill(buf, buf + width_, 0);
  for (auto [c, v] : entries) buf[c] += v;  // repeated columns accumulate
}

void Eliminator::feed_unit(std::size_t col) {
  assert(col < width_);
  if (sat_) return;
  if (pivot_at_[col] < 0) {
    // Flush first so pivoting keeps the stream order, then claim directly.
    flush();
    if (sat_) return;
    if (pivot_at_[col] < 0) {
      PivRow r;
      r.col = static_cast<uint32_t>(col);
      r.unit = true;
      pivot_at_[col] = static_cast<int32_t>(rows_.size());
      rows_.push_back(std::move(r));
      ++rank_;
      reduced_ = false;
      if (target_ && rank_ >= *target_) sat_ = true;
      return;
    }
  }
  uint64_t* buf = pending_slot();
  if (!buf) return;
  std::fill(buf, buf + width_, 0);
  buf[col] = 1;
}

void Eliminator::feed_rows(const Mat& m) {
  assert(m.cols == width_ || m.rows == 0);
  for (std::size_t r = 0; r < m.rows; ++r) feed(m.row(r));
}

void Eliminator::flush() {
  if (pending_ == 0) return;
  const std::size_t nr = pending_;
  pending_ = 0;
  if (sat_) return;
  const uint64_t p = f_.p;
  bool retired[kBlock] = {};
  for (std::size_t c = 0; c < width_; ++c) {
    for (std::size_t r = 0; r < nr; ++r) {
      if (retired[r]) continue;
      uint64_t* buf = block_.data() + r * width_;
      const uint32_t v = static_cast<uint32_t>(buf[c] % p);
      if (!v) {
        buf[c] = 0;
        continue;
      }
      const int32_t pi = pivot_at_[c];
      if (pi >= 0) {
        const PivRow& pr = rows_[static_cast<std::size_t>(pi)];
        if (pr.unit) {
          buf[c] = 0;
          continue;
        }
        const uint16_t* s = pr.suffix.data();
        const std::size_t len = pr.suffix.size();
        uint64_t* b = buf + c;
        const uint64_t fm = v;
        for (std::size_t k = 0; k < len; ++k) b[k] += fm * (p - s[k]);
        b[0] = 0;
      } else {
        const uint32_t iv = f_.inv(v);
        PivRow row;
        row.col = static_cast<uint32_t>(c);
        const std::size_t len = width_ - c;
        bool unit = true;
        for (std::size_t k = 1; k < len; ++k)
          if (buf[c + k] % p) {
            unit = false;
            break;
          }
        if (unit) {
          row.unit = true;
        } else {
          row.suffix.resize(len);
          row.suffix[0] = 1;
          for (std::size_t k = 1; k < len; ++k)
            row.suffix[k] =
                static_cast<uint16_t>(f_.mul(static_cast<uint32_t>(buf[c + k] % p), iv));
        }
        pivot_at_[c] = static_cast<int32_t>(rows_.size());
        rows_.push_back(std::move(row));
        ++rank_;
        reduced_ = false;
        retired[r] = true;
        if (target_ && rank_ >= *target_) {
          sat_ = true;
          return;
        }
      }
    }
  }
}

std::size_t Eliminator::rank() {
  flush();
  return rank_;
}

bool Eliminator::saturated() {
  flush();
  return sat_;
}

std::vector<std::size_t> Eliminator::pivot_cols() {
  flush();
  std::vector<std::size_t> out;
  out.reserve(rank_);
  for (std::size_t c = 0; c < width_; ++c)
    if (pivot_at_[c] >= 0) out.push_back(c);
  return out;
}

bool Eliminator::has_pivot(std::size_t col) {
  flush();
  return pivot_at_[col] >= 0;
}

std::size_t Eliminator::basis_rows() {
  flush();
  return rows_.size();
}

void Eliminator::basis_row(std::size_t i, uint32_t* out) {
  flush();
  const PivRow& r = rows_[i];
  std::fill(out, out + width_, 0u);
  if (r.unit) {
    out[r.col] = 1;
    return;
  }
  for (std::size_t k = 0; k < r.suffix.size(); ++k) out[r.col + k] = r.suffix[k];
}

void Eliminator::make_reduced() {
  flush();
  if (reduced_) return;
  std::vector<std::size_t> order;
  order.reserve(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) order.push_back(i);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return rows_[x].col < rows_[y].col; });
  const uint64_t p = f_.p;
  std::vector<uint64_t> scratch;
  for (std::size_t oi = order.size(); oi-- > 0;) {
    PivRow& pr = rows_[order[oi]];
    if (pr.unit) continue;
    const std::size_t c = pr.col, len = pr.suffix.size();
    scratch.assign(pr.suffix.begin(), pr.suffix.end());
    bool changed = false;
    for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
      const PivRow& qr = rows_[order[oj]];
      const std::size_t off = qr.col - c;
      if (off >= len) break;  // pivot columns ascend with oj
      const uint32_t v = static_cast<uint32_t>(scratch[off] % p);
      if (!v) {
        scratch[off] = 0;
        continue;
      }
      changed = true;
      if (qr.unit) {
        scratch[off] = 0;
        continue;
      }
      const uint16_t* s = qr.suffix.data();
      const std::size_t ql = qr.suffix.size();
      const uint64_t fm = v;
      uint64_t* b = scratch.data() + off;
      for (std::size_t k = 0; k < ql; ++k) b[k] += fm * (p - s[k]);
      b[0] = 0;
    }
    if (changed)
      for (std::size_t k = 0; k < len; ++k)
        pr.suffix[k] = static_cast<uint16_t>(scratch[k] % p);
  }
  reduced_ = true;
}

Mat Eliminator::rref() {
  make_reduced();
  const auto pcols = pivot_cols();
  Mat out(pcols.size(), width_);
  for (std::size_t i = 0; i < pcols.size(); ++i) {
    const PivRow& pr = rows_[static_cast<std::size_t>(pivot_at_[pcols[i]])];
    uint32_t* dst = out.row(i);
    if (pr.unit) {
      dst[pr.col] = 1;
    } else {
      for (std::size_t k = 0; k < pr.suffix.size(); ++k) dst[pr.col + k] = pr.suffix[k];
    }
  }
  return out;
}

std::vector<uint32_t> Eliminator::rref_row(std::size_t i) {
  make_reduced();
  const auto pcols = pivot_cols();
  assert(i < pcols.size());
  const PivRow& pr = rows_[static_cast<std::size_t>(pivot_at_[pcols[i]])];
  std::vector<uint32_t> dst(width_, 0);
  if (pr.unit) {
    dst[pr.col] = 1;
  } else {
    for (std::size_t k = 0; k < pr.suffix.size(); ++k) dst[pr.col + k] = pr.suffix[k];
  }
  return dst;
}

std::vector<std::vector<uint32_t>> Eliminator::kernel_basis() {
  make_reduced();
  const auto pcols = pivot_cols();
  std::vector<uint8_t> is_piv(width_, 0);
  for (auto c : pcols) is_piv[c] = 1;
  std::vector<std::vector<uint32_t>> out;
  out.reserve(width_ - rank_);
  for (std::size_t fcol = 0; fcol < width_; ++fcol) {
    if (is_piv[fcol]) continue;
    std::vector<uint32_t> v(width_, 0);
    v[fcol] = 1;
    for (auto c : pcols) {
      if (c >= fcol) break;
      const PivRow& pr = rows_[static_cast<std::size_t>(pivot_at_[c])];
      if (pr.unit) continue;
      const std::size_t off = fcol - c;
      if (off < pr.suffix.size()) {
        const uint16_t x = pr.suffix[off];
        if (x) v[c] = f_.p - x;
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<uint32_t> Eliminator::reduce_dense(const std::vector<uint32_t>& row) {
  assert(row.size() == width_);
  make_reduced();
  const uint64_t p = f_.p;
  std::vector<uint64_t> buf(row.begin(), row.end());
  for (std::size_t c = 0; c < width_; ++c) {
    const uint32_t v = static_cast<uint32_t>(buf[c] % p);
    buf[c] = v;
    if (!v) continue;
    const int32_t pi = pivot_at_[c];
    if (pi < 0) continue;
    const PivRow& pr = rows_[static_cast<std::size_t>(pi)];
    if (pr.unit) {
      buf[c] = 0;
      continue;
    }
    const uint16_t* s = pr.suffix.data();
    const std::size_t len = pr.suffix.size();
    uint64_t* b = buf.data() + c;
    const uint64_t fm = v;
    for (std::size_t k = 0; k < len; ++k) b[k] += fm * (p - s[k]);
    b[0] = 0;
  }
  std::vector<uint32_t> out(width_);
  for (std::size_t i = 0; i < width_; ++i) out[i] = static_cast<uint32_t>(buf[i] % p);
  return out;
}

std::size_t Eliminator::stored_bytes() const {
  std::size_t b = 0;
  for (const auto& r : rows_) b += r.suffix.size() * sizeof(uint16_t);
  return b;
}

std::size_t rank_of(const Mat& m, const PrimeField& f) {
  Eliminator e(f, m.cols);
  e.feed_rows(m);
  return e.rank();
}

Mat rref_of(const Mat& m, const PrimeField& f) {
  Eliminator e(f, m.cols);
  e.feed_rows(m);
  return e.rref();
}

std::vector<std::vector<uint32_t>> kernel_basis(const Mat& m, const PrimeField& f) {
  Eliminator e(f, m.cols);
  e.feed_rows(m);
  return e.kernel_basis();
}

std::vector<std::size_t> column_span_pivots(const Mat& m, const PrimeField& f) {
  // The greedy left-to-right independent columns of m are exactly the pivot
  // columns of its row-echelon form.
  Eliminator e(f, m.cols);
  e.feed_rows(m);
  return e.pivot_cols();
}

}  // namespace aci
