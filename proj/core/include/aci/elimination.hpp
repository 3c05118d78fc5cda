// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "aci/matrix.hpp"
#include "aci/prime_field.hpp"

namespace aci {

// Incremental Gauss elimination over GF(p), tuned for streaming many rows into
// a fixed set of columns on a single core.
//
//  * Pivot rows are stored normalized (leading coefficient 1) as uint16
//    suffixes starting at their pivot column; a row that is a single unit
//    entry is stored implicitly and eliminates in O(1).
//  * Incoming rows accumulate in 64-bit buffers and are processed in small
//    blocks, so each pivot row is read once per block instead of once per row.
//  * Pivoting is deterministic: within the stream order, each row claims a
//    pivot at its first column that is nonzero after reduction against the
//    pivots present at that point.  Results are independent of the internal
//    block size.
//
// An optional rank target stops absorption early: once the rank reaches the
// target, remaining rows are discarded.  The caller must guarantee the target
// is an upper bound for the rank of everything it feeds (e.g. the dimension of
// a space known to contain all fed rows); then the row space is already
// complete at saturation and rref/kernel extraction remain valid.
class Eliminator {
 public:
  Eliminator(PrimeField f, std::size_t width);

  void set_rank_target(std::size_t target) { target_ = target; }
  void clear_rank_target() { target_.reset(); }

  void feed(const uint32_t* row);  // dense row, width() entries in [0, p)
  void feed(const std::vector<uint32_t>& row);
  void feed_unit(std::size_t col);  // the standard basis row e_col
  void feed_sparse(const std::vector<std::pair<uint32_t, uint32_t>>& entries);  // (col, coeff)
  void feed_rows(const Mat& m);

  std::size_t rank();      // flushes pending rows
  bool saturated();        // true once a rank target was hit
  std::size_t width() const { return width_; }
  const PrimeField& field() const { return f_; }

  std::vector<std::size_t> pivot_cols();  // ascending
  bool has_pivot(std::size_t col);        // flushes, then checks

  // Row-space basis access without back-substitution: basis_rows() rows, each
  // written into `out` (width() entries).  The rows are echelon (one pivot
  // each), not the reduced form; they span exactly the fed row space.
  std::size_t basis_rows();
  void basis_row(std::size_t i, uint32_t* out);

  // Reduced row-echelon form: one row per pivot, ascending pivot column.
  Mat rref();
  // Row i of the reduced echelon form as a dense width() vector.
  std::vector<uint32_t> rref_row(std::size_t i);
  // Canonical kernel basis of the matrix whose rows were fed: one vector per
  // free column f (ascending), with entry 1 at f and -rref[j][f] at the j-th
  // pivot column.
  std::vector<std::vector<uint32_t>> kernel_basis();

  // Reduce a dense row against the current pivot rows (no absorption); the
  // result is the normal form modulo the row space, valid after make_reduced.
  std::vector<uint32_t> reduce_dense(const std::vector<uint32_t>& row);

  std::size_t stored_bytes() const;  // approximate pivot storage footprint

 private:
  struct PivRow {
    uint32_t col = 0;
    bool unit = false;
    std::vector<uint16_t> suffix;  // suffix[0] = 1 at `col`; empty iff unit
  };

  void flush();
  void make_reduced();
  uint64_t* pending_slot();

  PrimeField f_;
  std::size_t width_ = 0;
  std::size_t rank_ = 0;
  std::optional<std::size_t> target_;
  bool sat_ = false;
  bool reduced_ = true;  // vacuously reduced while empty

  std::vector<PivRow> rows_;        // insertion order
  std::vector<int32_t> pivot_at_;   // col -> index into rows_, or -1

  static constexpr std::size_t kBlock = 8;
  std::vector<uint64_t> block_;     // kBlock * width_ accumulation buffers
  std::size_t pending_ = 0;
};

// One-shot conveniences.
std::size_t rank_of(const Mat& m, const PrimeField& f);
Mat rref_of(const Mat& m, const PrimeField& f);
std::vector<std::vector<uint32_t>> kernel_basis(const Mat& m, const PrimeField& f);
// Indices of a maximal set of columns picked greedily left to right so that
// each is independent of the span of the chosen columns before it.
std::vector<std::size_t> column_span_pivots(const Mat& m, const PrimeField& f);

}  // namespace aci
