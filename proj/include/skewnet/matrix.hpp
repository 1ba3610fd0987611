#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "skewnet/field.hpp"
#include "skewnet/fq.hpp"

namespace skewnet {

using Vector = std::vector<FieldElement>;

/// Dense exact matrix over a single field.
class ExactMatrix {
 public:
  ExactMatrix() : ExactMatrix(Field::rationals(), 0, 0) {}
  ExactMatrix(const Field& field, std::size_t rows, std::size_t cols);

  static ExactMatrix identity(const Field& field, std::size_t n);
  static ExactMatrix from_ints(const Field& field, const std::vector<std::vector<long>>& rows);
  static ExactMatrix from_rows(const Field& field, const std::vector<Vector>& rows);
  static ExactMatrix from_fq(const Fq& F, const FqMat& m);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  ExactMatrix transpose() const;
  ExactMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  ExactMatrix reduce_to(const Field& target) const;
  FqMat to_fq(const Fq& F) const;

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  Vector operator*(const Vector& v) const;
  ExactMatrix scaled(const FieldElement& c) const;

  bool is_zero() const;
  bool is_skew() const;
  bool operator==(const ExactMatrix& o) const;
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  void check_shape(const ExactMatrix& o) const;

  Field field_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> data_;
};

struct RankKernel {
  std::size_t rank = 0;
  /// Right-kernel basis in reduced column-echelon form: vector i has a 1 at
  /// the i-th free column and 0 at every other free column.
  std::vector<Vector> kernel;
  std::vector<std::size_t> pivot_columns;
};

RankKernel rank_kernel(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);
/// Basis of the left kernel {x : x^T m = 0}.
std::vector<Vector> left_kernel(const ExactMatrix& m);
FieldElement determinant(const ExactMatrix& m);
/// Reduced row echelon form (nonzero rows only).
ExactMatrix rref(const ExactMatrix& m);
/// Fraction-free elimination of an integer matrix; returns the rank and the
/// final Bareiss pivot (the determinant when square and of full rank).
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a, mpz_class* last_pivot = nullptr);

/// Pfaffian by memoized expansion along the first row. Size must be even and
/// at most 12, the matrix exactly skew, and the characteristic not 2.
FieldElement pfaffian_scalar(const ExactMatrix& m);

FieldElement dot(const Vector& a, const Vector& b);
bool is_zero_vector(const Vector& v);
/// Scales so that the first nonzero coordinate is 1 (finite fields) or the
/// vector is a primitive integer vector with positive leading entry (QQ).
Vector normalize_projective(Vector v);

}  // namespace skewnet
