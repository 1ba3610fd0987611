#include "skewnet/mod_echelon.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "skewnet/field.hpp"

namespace skewnet {

ModEchelon::ModEchelon(std::uint32_t p, std::size_t cols) : p_(p), cols_(cols), row_of_pivot_(cols, -1) {
  if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("ModEchelon: prime out of range");
  const std::uint64_t sq = static_cast<std::uint64_t>(p - 1) * (p - 1);
  batch_ = std::max<std::uint64_t>(1, (std::numeric_limits<std::uint64_t>::max() - p) / sq - 1);
}

std::vector<std::uint32_t> ModEchelon::reduce_acc(std::vector<std::uint64_t>& acc) const {
  std::uint64_t pending = 1;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t c = pivot_of_row_[i];
    const std::uint64_t x = acc[c] % p_;
    if (x == 0) continue;
    const std::uint64_t f = p_ - x;
    const auto& b = rows_[i];
    for (std::size_t j = 0; j < cols_; ++j)
      if (b[j]) acc[j] += f * b[j];
    if (++pending >= batch_) {
      for (auto& v : acc) v %= p_;
      pending = 1;
    }
  }
  std::vector<std::uint32_t> out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = static_cast<std::uint32_t>(acc[j] % p_);
  return out;
}

std::vector<std::uint32_t> ModEchelon::reduce(const std::vector<std::uint32_t>& row) const {
  if (row.size() != cols_) throw std::invalid_argument("ModEchelon: row length mismatch");
  std::vector<std::uint64_t> acc(row.begin(), row.end());
  return reduce_acc(acc);
}

bool ModEchelon::insert(const std::vector<std::uint32_t>& row) {
  if (full()) return false;
  auto r = reduce(row);
  std::size_t c = 0;
  while (c < cols_ && r[c] == 0) ++c;
  if (c == cols_) return false;
  const std::uint32_t inv = mod_inverse(r[c], p_);
  for (auto& v : r)
    if (v) v = mod_mul(v, inv, p_);
  for (auto& b : rows_) {
    const std::uint32_t x = b[c];
    if (!x) continue;
    const std::uint64_t f = p_ - x;
    for (std::size_t j = 0; j < cols_; ++j)
      if (r[j]) b[j] = static_cast<std::uint32_t>((b[j] + f * r[j]) % p_);
  }
  row_of_pivot_[c] = static_cast<std::int64_t>(rows_.size());
  pivot_of_row_.push_back(c);
  rows_.push_back(std::move(r));
  return true;
}

bool ModEchelon::insert_sparse(const SparseRow& row) {
  std::vector<std::uint32_t> dense(cols_, 0);
  for (auto [c, v] : row) dense[c] = static_cast<std::uint32_t>((dense[c] + static_cast<std::uint64_t>(v)) % p_);
  return insert(dense);
}

std::vector<std::size_t> ModEchelon::pivots() const {
  std::vector<std::size_t> out = pivot_of_row_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::uint32_t>> ModEchelon::basis() const {
  std::vector<std::vector<std::uint32_t>> out;
  for (auto c : pivots()) out.push_back(rows_[static_cast<std::size_t>(row_of_pivot_[c])]);
  return out;
}

std::vector<std::vector<std::uint32_t>> ModEchelon::kernel() const {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (row_of_pivot_[f] >= 0) continue;
    std::vector<std::uint32_t> v(cols_, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::uint32_t x = rows_[i][f];
      v[pivot_of_row_[i]] = x ? p_ - x : 0;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace skewnet
