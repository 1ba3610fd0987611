#pragma once

#include <string>
#include <vector>

#include "skewnet/matrix.hpp"
#include "skewnet/multipoly.hpp"

namespace skewnet {

enum class Tri { Yes, No, Unknown };
const char* to_string(Tri t);

struct TriVerdict {
  Tri value = Tri::Unknown;
  std::string witness;
};

class DegenerateNet : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A linear map f: A -> Lambda^2 V^*, stored as n skew matrices F_1..F_n of
/// size 2m; f(a) = sum a_i F_i.
class ANet {
 public:
  ANet(const Field& field, std::vector<ExactMatrix> matrices);

  const Field& field() const { return field_; }
  std::size_t n() const { return mats_.size(); }
  std::size_t two_m() const { return dim_; }
  const ExactMatrix& matrix(std::size_t i) const { return mats_.at(i); }
  const std::vector<ExactMatrix>& matrices() const { return mats_; }

  /// Rank of the n x C(2m,2) coefficient matrix equals n.
  bool independent() const;
  ANet reduce_to(const Field& target) const;

  /// f(a) as a scalar skew matrix.
  ExactMatrix at(const Vector& a) const;
  /// F_i(u, w) = u^T F_i w.
  FieldElement form(std::size_t i, const Vector& u, const Vector& w) const;
  /// f(a) as a skew matrix of linear forms in a_1..a_n.
  SkewPolyMatrix symbolic() const;
  /// The n x 2m matrix of linear forms in v whose row i is f(e_i)(v, -).
  PolyMatrix fv_matrix() const;
  /// fv_matrix evaluated at v.
  ExactMatrix fv_at(const Vector& v) const;

  /// a_1 e_12 + a_2 e_34 + a_3 e_56 padded with two fixed dense forms (n = 5, 2m = 6).
  static ANet block_net(const Field& field);

 private:
  Field field_;
  std::size_t dim_;
  std::vector<ExactMatrix> mats_;
};

/// Skew matrix from its strict upper triangle, row-major.
ExactMatrix skew_from_upper(const Field& field, std::size_t dim, const std::vector<long>& upper);

}  // namespace skewnet
