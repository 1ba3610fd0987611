#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "skewnet/field.hpp"
#include "skewnet/matrix.hpp"

namespace skewnet {

constexpr unsigned kMaxVars = 32;
using Exponent = std::array<std::uint8_t, kMaxVars>;

unsigned total_degree(const Exponent& e);

/// Graded lexicographic order, largest first (x0 > x1 > ...).
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const;
};

class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Sparse polynomial in `nvars` variables with exact coefficients.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, FieldElement, GrlexGreater>;

  MultiPoly() : MultiPoly(Field::rationals(), 0) {}
  MultiPoly(const Field& field, unsigned nvars);

  static MultiPoly constant(const Field& field, unsigned nvars, const FieldElement& c);
  static MultiPoly variable(const Field& field, unsigned nvars, unsigned i);
  static MultiPoly monomial(const Field& field, unsigned nvars, const Exponent& e, const FieldElement& c);
  /// sum_i coeffs[i] * x_i
  static MultiPoly linear(const Field& field, const Vector& coeffs);

  const Field& field() const { return field_; }
  unsigned nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Largest total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Throws std::invalid_argument unless homogeneous of the given degree.
  void require_homogeneous(int degree = -1) const;
  const Exponent& leading_exponent() const;
  const FieldElement& leading_coefficient() const;
  FieldElement coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const FieldElement& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly scaled(const FieldElement& c) const;
  MultiPoly pow(unsigned e) const;
  MultiPoly partial_derivative(unsigned i) const;
  FieldElement evaluate(const Vector& point) const;
  /// Replaces x_i by images[i]; all images share one ring.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  MultiPoly reduce_to(const Field& target) const;
  /// Scales so the leading coefficient is 1 (finite fields) or the coefficients
  /// are coprime integers with positive leading coefficient (QQ).
  MultiPoly normalized() const;

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// Canonical text: terms in decreasing grlex order, e.g. "2*x0^2*x1 - 1/3*x2 + 5".
  std::string to_string(const std::string& var = "x") const;
  static MultiPoly parse(const std::string& text, const Field& field, unsigned nvars, const std::string& var = "x");

 private:
  void check_ring(const MultiPoly& o) const;

  Field field_;
  unsigned nvars_;
  Terms terms_;
};

/// Returns q with num = q * den; throws InexactDivision on a nonzero remainder.
MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den);

/// All exponent vectors of total degree t in n variables, in decreasing grlex order.
class MonomialBasis {
 public:
  MonomialBasis(unsigned nvars, unsigned degree);
  unsigned nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Exponent& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Exponent>& monomials() const { return monomials_; }
  /// -1 when absent.
  std::int64_t index_of(const Exponent& e) const;

 private:
  unsigned nvars_, degree_;
  std::vector<Exponent> monomials_;
  std::unordered_map<Exponent, std::size_t, ExponentHash> index_;
};

std::uint64_t binomial(std::int64_t n, std::int64_t k);
/// dim of degree-t forms in n variables; 0 for t < 0.
std::uint64_t num_monomials(unsigned nvars, std::int64_t t);

/// Matrix of polynomials in a common ring.
class PolyMatrix {
 public:
  PolyMatrix(const Field& field, unsigned nvars, std::size_t rows, std::size_t cols);

  const Field& field() const { return field_; }
  unsigned nvars() const { return nvars_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  MultiPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ExactMatrix evaluate(const Vector& point) const;
  PolyMatrix substitute(const std::vector<MultiPoly>& images) const;
  /// Determinant of the submatrix on the given rows and columns (Laplace expansion, memoized).
  MultiPoly minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  MultiPoly determinant() const;
  /// All r x r minors, rows and columns in lexicographic subset order.
  std::vector<MultiPoly> minors(std::size_t r) const;
  bool is_skew() const;

 private:
  Field field_;
  unsigned nvars_;
  std::size_t rows_, cols_;
  std::vector<MultiPoly> data_;
};

/// A skew-symmetric matrix of polynomials.
class SkewPolyMatrix {
 public:
  explicit SkewPolyMatrix(PolyMatrix m);
  const PolyMatrix& matrix() const { return m_; }
  std::size_t size() const { return m_.rows(); }

 private:
  PolyMatrix m_;
};

/// Pfaffian of a skew matrix of homogeneous entries of a common degree (size <= 8, memoized).
MultiPoly pfaffian_poly(const SkewPolyMatrix& m);
/// Pfaffian of the principal submatrix on `indices`.
MultiPoly pfaffian_poly(const PolyMatrix& m, const std::vector<std::size_t>& indices);

/// Lexicographic k-subsets of {0..n-1}.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace skewnet
