#include "skewnet/net.hpp"

#include "skewnet/grassmann.hpp"

namespace skewnet {

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

ANet::ANet(const Field& field, std::vector<ExactMatrix> matrices) : field_(field), mats_(std::move(matrices)) {
  if (mats_.empty()) throw std::invalid_argument("a net needs at least one form");
  dim_ = mats_[0].rows();
  if (dim_ % 2 || dim_ < 2) throw std::invalid_argument("dim V must be even and positive");
  for (const auto& m : mats_) {
    if (m.field() != field_) throw FieldMismatch("net matrix over another field");
    if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("net matrices must all be 2m x 2m");
    if (!m.is_skew()) throw std::invalid_argument("net matrix is not skew-symmetric");
  }
}

bool ANet::independent() const {
  const auto pairs = pair_list(dim_);
  ExactMatrix c(field_, n(), pairs.size());
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t k = 0; k < pairs.size(); ++k) c(i, k) = mats_[i](pairs[k].first, pairs[k].second);
  return rank(c) == n();
}

ANet ANet::reduce_to(const Field& target) const {
  std::vector<ExactMatrix> r;
  for (const auto& m : mats_) r.push_back(m.reduce_to(target));
  return ANet(target, std::move(r));
}

ExactMatrix ANet::at(const Vector& a) const {
  if (a.size() != n()) throw std::invalid_argument("point of P(A) has the wrong length");
  ExactMatrix m(field_, dim_, dim_);
  for (std::size_t i = 0; i < n(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = r + 1; c < dim_; ++c) {
        const auto& x = mats_[i](r, c);
        if (x.is_zero()) continue;
        m(r, c) += a[i] * x;
      }
  }
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r + 1; c < dim_; ++c) m(c, r) = -m(r, c);
  return m;
}

FieldElement ANet::form(std::size_t i, const Vector& u, const Vector& w) const {
  const auto& F = mats_.at(i);
  FieldElement s = field_.zero();
  for (std::size_t r = 0; r < dim_; ++r) {
    if (u[r].is_zero()) continue;
    for (std::size_t c = 0; c < dim_; ++c)
      if (!F(r, c).is_zero()) s += u[r] * F(r, c) * w[c];
  }
  return s;
}

SkewPolyMatrix ANet::symbolic() const {
  const unsigned nv = static_cast<unsigned>(n());
  PolyMatrix m(field_, nv, dim_, dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) {
      Vector coeffs(n(), field_.zero());
      for (std::size_t i = 0; i < n(); ++i) coeffs[i] = mats_[i](r, c);
      m(r, c) = MultiPoly::linear(field_, coeffs);
    }
  return SkewPolyMatrix(std::move(m));
}

PolyMatrix ANet::fv_matrix() const {
  PolyMatrix m(field_, static_cast<unsigned>(dim_), n(), dim_);
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = MultiPoly::linear(field_, mats_[i].column(j));
  return m;
}

ExactMatrix ANet::fv_at(const Vector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector of V has the wrong length");
  ExactMatrix m(field_, n(), dim_);
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      if (v[k].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        const auto& x = mats_[i](k, j);
        if (!x.is_zero()) m(i, j) += v[k] * x;
      }
    }
  return m;
}

ExactMatrix skew_from_upper(const Field& field, std::size_t dim, const std::vector<long>& upper) {
  if (upper.size() != dim * (dim - 1) / 2) throw std::invalid_argument("upper triangle has the wrong length");
  ExactMatrix m(field, dim, dim);
  std::size_t k = 0;
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = r + 1; c < dim; ++c) {
      m(r, c) = field.from_int(upper[k++]);
      m(c, r) = -m(r, c);
    }
  return m;
}

ANet ANet::block_net(const Field& field) {
  std::vector<ExactMatrix> mats;
  // pairs: 01 02 03 04 05 12 13 14 15 23 24 25 34 35 45
  mats.push_back(skew_from_upper(field, 6, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
  mats.push_back(skew_from_upper(field, 6, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0}));
  mats.push_back(skew_from_upper(field, 6, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
  mats.push_back(skew_from_upper(field, 6, {0, 1, 2, -1, 3, 1, -2, 0, 1, 0, 2, -1, 0, 3, 0}));
  mats.push_back(skew_from_upper(field, 6, {0, -1, 1, 2, 0, 3, 1, -1, 2, 0, 1, 1, 0, -2, 0}));
  return ANet(field, std::move(mats));
}

}  // namespace skewnet
