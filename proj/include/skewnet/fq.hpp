#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "skewnet/field.hpp"

namespace skewnet {

/// Compact arithmetic on element codes of a finite field.
///
/// Codes are the indices of Field::element_at, so a prime-field code is the
/// residue itself. Extension fields up to 2^22 elements use log tables.
class Fq {
 public:
  static const Fq& of(const Field& field);

  const Field& field() const { return field_; }
  std::uint32_t p() const { return p_; }
  std::uint64_t q() const { return q_; }
  bool is_prime_field() const { return k_ == 1; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) {
      const std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_ext(a, b);
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_ext(a);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    return mul_ext(a, b);
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
  std::uint32_t from_int(std::int64_t v) const { return encode(field_.from_int(v)); }

  std::uint32_t encode(const FieldElement& x) const;
  FieldElement decode(std::uint32_t code) const { return field_.element_at(code); }

 private:
  explicit Fq(const Field& field);
  std::uint32_t add_ext(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_ext(std::uint32_t a) const;
  std::uint32_t mul_ext(std::uint32_t a, std::uint32_t b) const;

  Field field_;
  std::uint32_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint32_t> log_, exp_;  // empty when q is too large
  std::vector<std::uint32_t> add_table_;  // q*q entries for q <= 1024
};

/// Dense row-major matrix of element codes.
struct FqMat {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint32_t> a;

  FqMat() = default;
  FqMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> fq_rref(const Fq& F, FqMat& m);
std::size_t fq_rank(const Fq& F, FqMat m);
/// Right kernel basis (rows), one vector per free column with a 1 there.
FqMat fq_kernel(const Fq& F, FqMat m);
FqMat fq_multiply(const Fq& F, const FqMat& a, const FqMat& b);
/// Throws std::domain_error when singular.
FqMat fq_inverse(const Fq& F, const FqMat& m);
/// Characteristic polynomial det(x I - m), ascending coefficients.
std::vector<std::uint32_t> fq_charpoly(const Fq& F, FqMat m);

}  // namespace skewnet
