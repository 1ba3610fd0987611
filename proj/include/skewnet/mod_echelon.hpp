#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace skewnet {

/// Incremental reduced row echelon basis over GF(p), p < 2^31.
///
/// Rows are inserted one at a time and reduced against the current basis with
/// delayed modular reduction; the basis is kept fully reduced, so the
/// multiplier of each basis row is read off the incoming row directly.
class ModEchelon {
 public:
  using SparseRow = std::vector<std::pair<std::uint32_t, std::uint32_t>>;  // (column, value)

  ModEchelon(std::uint32_t p, std::size_t cols);

  /// Returns true when the row was independent of the basis.
  bool insert(const std::vector<std::uint32_t>& row);
  bool insert_sparse(const SparseRow& row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::uint32_t prime() const { return p_; }
  bool full() const { return rows_.size() == cols_; }

  /// Pivot columns in increasing order.
  std::vector<std::size_t> pivots() const;
  /// Basis rows ordered by pivot column.
  std::vector<std::vector<std::uint32_t>> basis() const;
  /// Right kernel of the inserted rows: one vector per free column, with a
  /// 1 at that column and 0 at the other free columns.
  std::vector<std::vector<std::uint32_t>> kernel() const;
  /// Reduces a vector modulo the row space (the result vanishes at pivots).
  std::vector<std::uint32_t> reduce(const std::vector<std::uint32_t>& row) const;

 private:
  std::vector<std::uint32_t> reduce_acc(std::vector<std::uint64_t>& acc) const;

  std::uint32_t p_;
  std::size_t cols_;
  std::uint64_t batch_;  // products that fit in an accumulator before reduction
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivot_of_row_;
  std::vector<std::int64_t> row_of_pivot_;  // -1 when the column is free
};

}  // namespace skewnet
