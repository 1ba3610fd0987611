#include "skewnet/grassmann.hpp"

#include <sstream>

namespace skewnet {

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t dim) {
  if (i >= j || j >= dim) throw std::out_of_range("pair_index needs i < j < dim");
  // pairs (0,1),(0,2),...,(0,d-1),(1,2),...
  return i * (2 * dim - i - 1) / 2 + (j - i - 1);
}

std::vector<std::pair<std::size_t, std::size_t>> pair_list(std::size_t dim) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) out.emplace_back(i, j);
  return out;
}

namespace {
// p_ab with sign for a > b and 0 on the diagonal
FieldElement signed_coord(const PluckerPoint& p, std::size_t a, std::size_t b) {
  if (a == b) return p.field().zero();
  if (a < b) return p.at(a, b);
  return -p.at(b, a);
}
}  // namespace

bool PluckerPoint::satisfies_quadrics() const {
  for (const auto& s : subsets(dim, 4)) {
    const std::size_t i = s[0], j = s[1], k = s[2], l = s[3];
    const FieldElement r = at(i, j) * at(k, l) - at(i, k) * at(j, l) + at(i, l) * at(j, k);
    if (!r.is_zero()) return false;
  }
  return true;
}

bool PluckerPoint::same_point(const PluckerPoint& o) const {
  if (dim != o.dim) return false;
  return normalize_projective(coords) == normalize_projective(o.coords);
}

PluckerPoint PluckerPoint::normalized() const {
  PluckerPoint p = *this;
  p.coords = normalize_projective(coords);
  return p;
}

std::string PluckerPoint::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? ":" : "") << coords[i];
  os << ")";
  return os.str();
}

PluckerPoint plucker_from_basis(const ExactMatrix& b) {
  if (b.rows() != 2) throw std::invalid_argument("plucker_from_basis: need a 2-row basis");
  PluckerPoint p;
  p.dim = b.cols();
  p.coords.reserve(p.dim * (p.dim - 1) / 2);
  bool nonzero = false;
  for (std::size_t i = 0; i < p.dim; ++i)
    for (std::size_t j = i + 1; j < p.dim; ++j) {
      p.coords.push_back(b(0, i) * b(1, j) - b(0, j) * b(1, i));
      nonzero = nonzero || !p.coords.back().is_zero();
    }
  if (!nonzero) throw std::invalid_argument("plucker_from_basis: basis has rank < 2");
  p.basis = b;
  return p;
}

ExactMatrix plane_from_plucker(const PluckerPoint& p) {
  if (!p.satisfies_quadrics()) throw std::invalid_argument("plane_from_plucker: vector is not decomposable");
  std::size_t i = 0, j = 0;
  bool found = false;
  for (const auto& [a, b] : pair_list(p.dim))
    if (!p.at(a, b).is_zero()) {
      i = a;
      j = b;
      found = true;
      break;
    }
  if (!found) throw std::invalid_argument("plane_from_plucker: zero vector");
  ExactMatrix basis(p.field(), 2, p.dim);
  for (std::size_t c = 0; c < p.dim; ++c) {
    basis(0, c) = signed_coord(p, i, c);
    basis(1, c) = signed_coord(p, j, c);
  }
  if (!plucker_from_basis(basis).same_point(p)) throw std::invalid_argument("plane_from_plucker: not decomposable");
  return basis;
}

std::vector<MultiPoly> plucker_quadrics(const Field& field, std::size_t dim) {
  if (dim < 4) throw std::invalid_argument("plucker_quadrics: dim must be at least 4");
  const unsigned nv = static_cast<unsigned>(dim * (dim - 1) / 2);
  auto var = [&](std::size_t a, std::size_t b) {
    return MultiPoly::variable(field, nv, static_cast<unsigned>(pair_index(a, b, dim)));
  };
  std::vector<MultiPoly> out;
  for (const auto& s : subsets(dim, 4)) {
    const std::size_t i = s[0], j = s[1], k = s[2], l = s[3];
    out.push_back(var(i, j) * var(k, l) - var(i, k) * var(j, l) + var(i, l) * var(j, k));
  }
  return out;
}

std::uint64_t gaussian_binomial(unsigned n, unsigned k, std::uint64_t q) {
  if (k > n) return 0;
  unsigned __int128 num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    unsigned __int128 a = 1, b = 1;
    for (unsigned e = 0; e < n - i; ++e) a *= q;
    for (unsigned e = 0; e < i + 1; ++e) b *= q;
    num *= (a - 1);
    den *= (b - 1);
  }
  return static_cast<std::uint64_t>(num / den);
}

std::uint64_t enumerate_grassmannian_codes(std::size_t dim, const Fq& F,
                                           const std::function<void(const std::uint32_t*, const std::uint32_t*)>& fn,
                                           std::uint64_t limit) {
  const std::uint64_t total = gaussian_binomial(static_cast<unsigned>(dim), 2, F.q());
  if (total > limit) throw std::length_error("Grassmannian enumeration exceeds the limit");
  const std::uint32_t q = static_cast<std::uint32_t>(F.q());
  std::vector<std::uint32_t> r0(dim), r1(dim);
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      // free positions: row0 at c > i, c != j; row1 at c > j
      std::vector<std::uint32_t*> free;
      std::fill(r0.begin(), r0.end(), 0);
      std::fill(r1.begin(), r1.end(), 0);
      r0[i] = 1;
      r1[j] = 1;
      for (std::size_t c = i + 1; c < dim; ++c)
        if (c != j) free.push_back(&r0[c]);
      for (std::size_t c = j + 1; c < dim; ++c) free.push_back(&r1[c]);
      while (true) {
        fn(r0.data(), r1.data());
        ++count;
        std::size_t k = 0;
        while (k < free.size()) {
          if (++*free[k] < q) break;
          *free[k] = 0;
          ++k;
        }
        if (k == free.size()) break;
      }
    }
  return count;
}

std::uint64_t enumerate_grassmannian(std::size_t dim, const Field& field, const std::function<void(const PluckerPoint&)>& fn,
                                     std::uint64_t limit) {
  const Fq& F = Fq::of(field);
  return enumerate_grassmannian_codes(
      dim, F,
      [&](const std::uint32_t* a, const std::uint32_t* b) {
        ExactMatrix basis(field, 2, dim);
        for (std::size_t c = 0; c < dim; ++c) {
          basis(0, c) = F.decode(a[c]);
          basis(1, c) = F.decode(b[c]);
        }
        fn(plucker_from_basis(basis));
      },
      limit);
}

std::uint64_t for_each_projective_point(std::size_t n, const Fq& F, const std::function<void(const std::vector<std::uint32_t>&)>& fn,
                                        std::uint64_t limit) {
  const std::uint32_t q = static_cast<std::uint32_t>(F.q());
  std::uint64_t total = 0, pw = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total += pw;
    pw *= q;
    if (total > limit) throw std::length_error("projective enumeration exceeds the limit");
  }
  std::vector<std::uint32_t> x(n);
  std::uint64_t count = 0;
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::fill(x.begin(), x.end(), 0);
    x[lead] = 1;
    while (true) {
      fn(x);
      ++count;
      std::size_t k = lead + 1;
      while (k < n) {
        if (++x[k] < q) break;
        x[k] = 0;
        ++k;
      }
      if (k >= n) break;
    }
  }
  return count;
}

PluckerPoint GrassmannLine::point_at(const FieldElement& s, const FieldElement& t) const {
  return plucker_from_basis(plane_at(s, t));
}

ExactMatrix GrassmannLine::plane_at(const FieldElement& s, const FieldElement& t) const {
  ExactMatrix b(W.field(), 2, W.cols());
  for (std::size_t c = 0; c < W.cols(); ++c) {
    b(0, c) = W(0, c);
    b(1, c) = s * W(1, c) + t * W(2, c);
  }
  return b;
}

GrassmannLine pencil_line(const Vector& v, const ExactMatrix& W) {
  if (W.rows() != 3 || rank(W) != 3) throw std::invalid_argument("pencil_line: W must be 3-dimensional");
  if (v.size() != W.cols()) throw std::invalid_argument("pencil_line: vector length mismatch");
  std::vector<Vector> rows{v};
  for (std::size_t i = 0; i < 3; ++i) rows.push_back(W.row(i));
  if (rank(ExactMatrix::from_rows(W.field(), rows)) != 3) throw std::invalid_argument("pencil_line: v is not in W");
  if (is_zero_vector(v)) throw std::invalid_argument("pencil_line: v is zero");
  // complete v to a basis of W with rows of W
  std::vector<Vector> basis{v};
  for (std::size_t i = 0; i < 3 && basis.size() < 3; ++i) {
    auto trial = basis;
    trial.push_back(W.row(i));
    if (rank(ExactMatrix::from_rows(W.field(), trial)) == trial.size()) basis = trial;
  }
  GrassmannLine line;
  line.v = v;
  line.W = ExactMatrix::from_rows(W.field(), basis);
  const Field& f = W.field();
  line.p0 = line.point_at(f.one(), f.zero());
  line.p1 = line.point_at(f.zero(), f.one());
  return line;
}

std::vector<std::pair<FieldElement, FieldElement>> p1_points(const Field& field, std::size_t count) {
  std::vector<std::pair<FieldElement, FieldElement>> out;
  if (count == 0) return out;
  out.emplace_back(field.one(), field.zero());
  if (field.is_finite() && count > field.order() + 1) throw std::invalid_argument("P^1 has too few points");
  for (std::uint64_t i = 0; out.size() < count; ++i) {
    const FieldElement c = field.is_finite() ? field.element_at(i) : field.from_int(static_cast<std::int64_t>(i));
    out.emplace_back(c, field.one());
  }
  return out;
}

}  // namespace skewnet
