#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skewnet/fq.hpp"
#include "skewnet/matrix.hpp"
#include "skewnet/multipoly.hpp"

namespace skewnet {

/// Index of the pair (i < j) in the lexicographic list of pairs of {0..dim-1}.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t dim);
std::vector<std::pair<std::size_t, std::size_t>> pair_list(std::size_t dim);

/// A point of P(Lambda^2 V) in Plucker coordinates p_ij (i < j, lexicographic).
struct PluckerPoint {
  std::size_t dim = 0;  // dim V
  Vector coords;
  std::optional<ExactMatrix> basis;  // cached 2 x dim basis

  const Field& field() const { return coords.at(0).field(); }
  const FieldElement& at(std::size_t i, std::size_t j) const { return coords[pair_index(i, j, dim)]; }
  /// p_ij p_kl - p_ik p_jl + p_il p_jk = 0 on every 4-subset.
  bool satisfies_quadrics() const;
  /// Same projective point.
  bool same_point(const PluckerPoint& o) const;
  PluckerPoint normalized() const;
  std::string to_string() const;
};

PluckerPoint plucker_from_basis(const ExactMatrix& b);
/// Throws std::invalid_argument when p is not decomposable.
ExactMatrix plane_from_plucker(const PluckerPoint& p);
/// The C(dim,4) quadrics in the C(dim,2) Plucker variables, variable order as pair_index.
std::vector<MultiPoly> plucker_quadrics(const Field& field, std::size_t dim);

std::uint64_t gaussian_binomial(unsigned n, unsigned k, std::uint64_t q);

/// Calls fn(row0, row1) once per 2-plane of GF(q)^dim, rows in reduced echelon
/// form (codes). Returns the number of planes. Throws when the count exceeds `limit`.
std::uint64_t enumerate_grassmannian_codes(std::size_t dim, const Fq& F,
                                           const std::function<void(const std::uint32_t*, const std::uint32_t*)>& fn,
                                           std::uint64_t limit = 10'000'000);
/// Same enumeration yielding Plucker points with cached bases.
std::uint64_t enumerate_grassmannian(std::size_t dim, const Field& field, const std::function<void(const PluckerPoint&)>& fn,
                                     std::uint64_t limit = 10'000'000);

/// Calls fn(codes) for each point of P^{n-1}(GF(q)), first nonzero coordinate 1.
std::uint64_t for_each_projective_point(std::size_t n, const Fq& F, const std::function<void(const std::vector<std::uint32_t>&)>& fn,
                                        std::uint64_t limit = 10'000'000);

/// The pencil {U : v in U subset W}.
struct GrassmannLine {
  Vector v;
  ExactMatrix W;  // 3 x dim basis of W; row 0 is v
  PluckerPoint p0, p1;

  /// Plucker point of span(v, s*w1 + t*w2).
  PluckerPoint point_at(const FieldElement& s, const FieldElement& t) const;
  /// Plane basis for the parameter (s:t).
  ExactMatrix plane_at(const FieldElement& s, const FieldElement& t) const;
};

GrassmannLine pencil_line(const Vector& v, const ExactMatrix& W);

/// Enumerates the first `count` points of P^1 over the field: (1:0), (0:1), (1:1), ...
std::vector<std::pair<FieldElement, FieldElement>> p1_points(const Field& field, std::size_t count);

}  // namespace skewnet
