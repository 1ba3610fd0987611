#include "skewnet/correspondence.hpp"

#include <set>
#include <sstream>

namespace skewnet {

// ---------------------------------------------------------------------------
// NetCodes

NetCodes::NetCodes(const ANet& net) : F(&Fq::of(net.field())), n(net.n()), dim(net.two_m()) {
  for (const auto& m : net.matrices()) mats.push_back(m.to_fq(*F));
}

FqMat NetCodes::fa(const std::vector<std::uint32_t>& a) const {
  FqMat m(dim, dim);
  for (std::size_t i = 0; i < n; ++i) {
    if (!a[i]) continue;
    const auto& M = mats[i];
    for (std::size_t k = 0; k < dim * dim; ++k)
      if (M.a[k]) m.a[k] = F->add(m.a[k], F->mul(a[i], M.a[k]));
  }
  return m;
}

FqMat NetCodes::fv(const std::vector<std::uint32_t>& v) const {
  FqMat m(n, dim);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& M = mats[i];
    for (std::size_t k = 0; k < dim; ++k) {
      if (!v[k]) continue;
      for (std::size_t j = 0; j < dim; ++j)
        if (M(k, j)) m(i, j) = F->add(m(i, j), F->mul(v[k], M(k, j)));
    }
  }
  return m;
}

std::uint32_t NetCodes::form(std::size_t i, const std::uint32_t* u, const std::uint32_t* w) const {
  const auto& M = mats[i];
  std::uint32_t s = 0;
  for (std::size_t r = 0; r < dim; ++r) {
    if (!u[r]) continue;
    std::uint32_t inner = 0;
    for (std::size_t c = 0; c < dim; ++c)
      if (M(r, c) && w[c]) inner = F->add(inner, F->mul(M(r, c), w[c]));
    s = F->add(s, F->mul(u[r], inner));
  }
  return s;
}

Vector NetCodes::decode(const std::vector<std::uint32_t>& x) const {
  Vector v;
  v.reserve(x.size());
  for (auto c : x) v.push_back(F->decode(c));
  return v;
}

// ---------------------------------------------------------------------------

HomogeneousIdeal subpfaffian_ideal(const ANet& net) {
  const auto sym = net.symbolic();
  HomogeneousIdeal ideal(net.field(), static_cast<unsigned>(net.n()));
  const std::size_t d = net.two_m();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      std::vector<std::size_t> idx;
      for (std::size_t k = 0; k < d; ++k)
        if (k != i && k != j) idx.push_back(k);
      ideal.add(pfaffian_poly(sym.matrix(), idx));
    }
  return ideal;
}

namespace {

std::string vector_text(const Vector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ":" : "") << v[i];
  os << ")";
  return os.str();
}

// Small integer points of P^{n-1}, for witnesses over QQ.
std::optional<Vector> find_low_rank_point(const ANet& net, std::size_t max_rank) {
  const Field& f = net.field();
  const std::size_t n = net.n();
  if (f.is_finite()) {
    std::uint64_t size = 1;
    for (std::size_t i = 1; i < n; ++i) size *= f.order();
    if (size > 200000) return std::nullopt;
    auto [r, a] = min_rank_point(net);
    if (r <= max_rank) return a;
    return std::nullopt;
  }
  std::vector<int> c(n, -1);
  while (true) {
    bool nonzero = false;
    for (auto x : c) nonzero = nonzero || x != 0;
    if (nonzero) {
      Vector a;
      for (auto x : c) a.push_back(f.from_int(x));
      if (rank(net.at(a)) <= max_rank) return normalize_projective(a);
    }
    std::size_t k = 0;
    while (k < n && ++c[k] > 1) c[k++] = -1;
    if (k == n) break;
  }
  return std::nullopt;
}

}  // namespace

RegularityResult is_regular(const ANet& net, const Options& opts) {
  RegularityResult res;
  res.emptiness = is_empty_projective(subpfaffian_ideal(net), opts);
  switch (res.emptiness.state) {
    case Emptiness::Empty:
      res.verdict.value = Tri::Yes;
      res.verdict.witness = "sub-Pfaffian ideal: " + res.emptiness.reason;
      break;
    case Emptiness::NonEmpty:
      res.verdict.value = Tri::No;
      res.bad_point = find_low_rank_point(net, net.two_m() - 4);
      res.verdict.witness = res.bad_point ? "rank f(a) <= " + std::to_string(net.two_m() - 4) + " at a = " +
                                                vector_text(*res.bad_point)
                                          : "sub-Pfaffian ideal: " + res.emptiness.reason;
      break;
    case Emptiness::Inconclusive:
      res.verdict.value = Tri::Unknown;
      res.verdict.witness = "sub-Pfaffian ideal: " + res.emptiness.reason;
      break;
  }
  return res;
}

MultiPoly pfaffian_hypersurface(const ANet& net) {
  MultiPoly pf = pfaffian_poly(net.symbolic());
  if (pf.is_zero()) throw DegenerateNet("Pfaffian of the net vanishes identically");
  return pf;
}

HomogeneousIdeal x_ideal(const ANet& net) {
  const std::size_t d = net.two_m();
  HomogeneousIdeal ideal(net.field(), static_cast<unsigned>(d * (d - 1) / 2), plucker_quadrics(net.field(), d));
  const auto pairs = pair_list(d);
  for (std::size_t i = 0; i < net.n(); ++i) {
    Vector coeffs;
    for (const auto& [j, k] : pairs) coeffs.push_back(net.matrix(i)(j, k));
    ideal.add(MultiPoly::linear(net.field(), coeffs));
  }
  return ideal;
}

bool on_x(const ANet& net, const PluckerPoint& p) {
  const auto pairs = pair_list(net.two_m());
  for (std::size_t i = 0; i < net.n(); ++i) {
    FieldElement s = net.field().zero();
    for (std::size_t k = 0; k < pairs.size(); ++k) s += net.matrix(i)(pairs[k].first, pairs[k].second) * p.coords[k];
    if (!s.is_zero()) return false;
  }
  return true;
}

PluckerPoint kappa(const ANet& net, const Vector& a) {
  const auto rk = rank_kernel(net.at(a));
  const std::size_t d = net.two_m();
  if (rk.rank == d) throw std::invalid_argument("kappa: a is not on Y");
  if (rk.rank < d - 2) throw std::domain_error("kappa: rank f(a) < 2m-2 (irregular point)");
  return plucker_from_basis(ExactMatrix::from_rows(net.field(), rk.kernel));
}

QuarticResult q_quartic_routes(const ANet& net) {
  if (net.n() + 1 != net.two_m()) throw std::invalid_argument("q_quartic needs n = 2m - 1");
  const PolyMatrix fv = net.fv_matrix();
  const unsigned nv = static_cast<unsigned>(net.two_m());
  std::vector<std::size_t> rows(net.n());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  QuarticResult res;
  std::optional<MultiPoly> ref;
  for (std::size_t i = 0; i < net.two_m(); ++i) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < net.two_m(); ++j)
      if (j != i) cols.push_back(j);
    const MultiPoly delta = fv.minor(rows, cols);
    if (delta.is_zero()) {
      res.routes.emplace_back(net.field(), nv);
      continue;
    }
    MultiPoly quot = exact_divide(delta, MultiPoly::variable(net.field(), nv, static_cast<unsigned>(i)));
    if (i % 2) quot = -quot;
    if (!ref) ref = quot;
    else if (quot != *ref) res.consistent = false;
    res.routes.push_back(std::move(quot));
  }
  if (!ref) throw DegenerateNet("all maximal minors of f_v vanish");
  if (!res.consistent) throw std::domain_error("q_quartic: minor-division routes disagree");
  res.q = ref->normalized();
  return res;
}

MultiPoly q_quartic(const ANet& net) { return q_quartic_routes(net).q; }

HomogeneousIdeal c_ideal(const ANet& net) { return minors_ideal(net.fv_matrix(), 4); }
HomogeneousIdeal rank2_ideal(const ANet& net) { return minors_ideal(net.fv_matrix(), 3); }

std::size_t rank_fv(const ANet& net, const Vector& v) {
  if (is_zero_vector(v)) throw std::invalid_argument("rank_fv: v = 0");
  return rank(net.fv_at(v));
}

std::vector<Vector> psi_fiber(const ANet& net, const Vector& v) {
  auto ker = left_kernel(net.fv_at(v));
  if (ker.empty()) throw std::invalid_argument("psi_fiber: v is not on Q");
  for (auto& k : ker) k = normalize_projective(k);
  return ker;
}

PhiFiber phi_fiber(const ANet& net, const Vector& v) {
  const auto rk = rank_kernel(net.fv_at(v));
  PhiFiber out;
  const std::size_t dim = rk.kernel.size();
  if (dim <= 1) throw std::invalid_argument("phi_fiber: v is not on Q");
  if (dim > 3) throw std::domain_error("phi_fiber: rank f_v <= 2");
  const ExactMatrix W = ExactMatrix::from_rows(net.field(), rk.kernel);
  if (dim == 2) out.point = plucker_from_basis(W);
  else out.line = pencil_line(v, W);
  return out;
}

// ---------------------------------------------------------------------------

std::uint64_t pencil_sections(const ANet& net, const Vector& a0, const Vector& a1, unsigned t) {
  if (t == 0) return 0;
  // V (x) S_{t-1} -> V* (x) S_t, block (k+1, k) is F1 and (k, k) is F0
  const unsigned s = t - 1;
  const ExactMatrix F0 = net.at(a0), F1 = net.at(a1);
  const std::size_t d = net.two_m();
  ExactMatrix m(net.field(), d * (s + 2), d * (s + 1));
  for (std::size_t k = 0; k <= s; ++k)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        m(k * d + r, k * d + c) = F0(r, c);
        m((k + 1) * d + r, k * d + c) = F1(r, c);
      }
  return m.cols() - rank(m);
}

SplittingType splitting_type_on_line(const ANet& net, const Vector& a0, const Vector& a1) {
  const Field& f = net.field();
  const std::size_t d = net.two_m();
  if (rank(ExactMatrix::from_rows(f, {a0, a1})) != 2) throw std::invalid_argument("splitting: a0, a1 do not span a line");
  // M must lie on Y
  if (!(f.is_finite() && f.characteristic() == 2)) {
    const MultiPoly pf = pfaffian_poly(net.symbolic());
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < net.n(); ++i) {
      Vector c{a0[i], a1[i]};
      images.push_back(MultiPoly::linear(f, c));
    }
    if (!pf.substitute(images).is_zero()) throw std::invalid_argument("splitting: line is not on Y");
  }
  const std::size_t samples = f.is_finite() ? std::min<std::uint64_t>(f.order() + 1, d + 1) : d + 1;
  for (const auto& [s, t] : p1_points(f, samples)) {
    Vector a(net.n(), f.zero());
    for (std::size_t i = 0; i < net.n(); ++i) a[i] = s * a0[i] + t * a1[i];
    const std::size_t r = rank(net.at(a));
    if (r == d) throw std::invalid_argument("splitting: line is not on Y");
    if (r < d - 2) throw std::domain_error("splitting: rank drops to <= 2m-4 on the line");
  }
  SplittingType st;
  int d1 = -1;
  for (unsigned s = 0; s <= 2 * d + 2; ++s) {
    const std::uint64_t h = pencil_sections(net, a0, a1, s);
    st.h0.push_back(h);
    if (d1 < 0) {
      if (h == 0) continue;
      if (h > 2) throw std::domain_error("splitting: kernel of rank above 2");
      d1 = static_cast<int>(s);
      if (h == 2) {
        st.d1 = st.d2 = d1;
        return st;
      }
      continue;
    }
    if (h > static_cast<std::uint64_t>(static_cast<int>(s) - d1 + 1)) {
      st.d1 = d1;
      st.d2 = static_cast<int>(s);
      return st;
    }
  }
  throw std::domain_error("splitting: section counts did not determine the type");
}

bool tangent_test_x(const ANet& net, const ExactMatrix& U) {
  const Field& f = net.field();
  const std::size_t d = net.two_m();
  if (U.rows() != 2 || U.cols() != d || rank(U) != 2) throw std::invalid_argument("tangent_test_x: U is not a plane");
  const Vector u0 = U.row(0), u1 = U.row(1);
  for (std::size_t i = 0; i < net.n(); ++i)
    if (!net.form(i, u0, u1).is_zero()) throw std::invalid_argument("tangent_test_x: U is not on X");
  std::vector<Vector> basis{u0, u1}, comp;
  for (std::size_t e = 0; e < d && comp.size() < d - 2; ++e) {
    Vector w(d, f.zero());
    w[e] = f.one();
    auto trial = basis;
    trial.push_back(w);
    if (rank(ExactMatrix::from_rows(f, trial)) == trial.size()) {
      basis = trial;
      comp.push_back(w);
    }
  }
  ExactMatrix m(f, net.n(), 2 * comp.size());
  for (std::size_t i = 0; i < net.n(); ++i)
    for (std::size_t l = 0; l < comp.size(); ++l) {
      m(i, l) = net.form(i, u0, comp[l]);
      m(i, comp.size() + l) = net.form(i, u1, comp[l]);
    }
  return rank(m) < net.n();
}

// ---------------------------------------------------------------------------
// enumerations over finite fields

std::vector<Vector> y_points(const ANet& net, std::uint64_t limit) {
  const NetCodes nc(net);
  std::vector<Vector> out;
  for_each_projective_point(
      net.n(), *nc.F,
      [&](const std::vector<std::uint32_t>& a) {
        if (fq_rank(*nc.F, nc.fa(a)) < nc.dim) out.push_back(nc.decode(a));
      },
      limit);
  return out;
}

std::pair<std::size_t, Vector> min_rank_point(const ANet& net, std::uint64_t limit) {
  const NetCodes nc(net);
  std::size_t best = nc.dim + 1;
  std::vector<std::uint32_t> arg;
  for_each_projective_point(
      net.n(), *nc.F,
      [&](const std::vector<std::uint32_t>& a) {
        const std::size_t r = fq_rank(*nc.F, nc.fa(a));
        if (r < best) {
          best = r;
          arg = a;
        }
      },
      limit);
  return {best, nc.decode(arg)};
}

namespace {

std::vector<std::uint32_t> canonical_codes(const Fq& F, const std::uint32_t* r0, const std::uint32_t* r1, std::size_t dim) {
  FqMat m(2, dim);
  std::copy(r0, r0 + dim, m.a.begin());
  std::copy(r1, r1 + dim, m.a.begin() + static_cast<std::ptrdiff_t>(dim));
  fq_rref(F, m);
  return m.a;
}

std::vector<ExactMatrix> planes_from_codes(const Fq& F, const std::set<std::vector<std::uint32_t>>& planes, std::size_t dim) {
  std::vector<ExactMatrix> out;
  for (const auto& codes : planes) {
    FqMat m(2, dim);
    m.a = codes;
    out.push_back(ExactMatrix::from_fq(F, m));
  }
  return out;
}

}  // namespace

ExactMatrix canonical_plane(const ExactMatrix& basis) {
  ExactMatrix r = rref(basis);
  if (r.rows() != 2) throw std::invalid_argument("canonical_plane: not a plane");
  return r;
}

std::vector<ExactMatrix> x_points(const ANet& net, std::uint64_t limit) {
  const NetCodes nc(net);
  const Fq& F = *nc.F;
  const std::size_t dim = nc.dim;
  std::set<std::vector<std::uint32_t>> planes;
  for_each_projective_point(
      dim, F,
      [&](const std::vector<std::uint32_t>& u) {
        FqMat ker = fq_kernel(F, nc.fv(u));
        if (ker.rows < 2) return;
        // complete u to a basis of the kernel
        FqMat acc(1, dim);
        std::copy(u.begin(), u.end(), acc.a.begin());
        std::vector<std::vector<std::uint32_t>> comp;
        for (std::size_t r = 0; r < ker.rows; ++r) {
          FqMat trial(acc.rows + 1, dim);
          std::copy(acc.a.begin(), acc.a.end(), trial.a.begin());
          std::copy(ker.a.begin() + static_cast<std::ptrdiff_t>(r * dim),
                    ker.a.begin() + static_cast<std::ptrdiff_t>((r + 1) * dim),
                    trial.a.begin() + static_cast<std::ptrdiff_t>(acc.rows * dim));
          if (fq_rank(F, trial) == trial.rows) {
            acc = trial;
            comp.emplace_back(ker.a.begin() + static_cast<std::ptrdiff_t>(r * dim),
                              ker.a.begin() + static_cast<std::ptrdiff_t>((r + 1) * dim));
          }
        }
        for_each_projective_point(comp.size(), F, [&](const std::vector<std::uint32_t>& c) {
          std::vector<std::uint32_t> w(dim, 0);
          for (std::size_t i = 0; i < comp.size(); ++i) {
            if (!c[i]) continue;
            for (std::size_t j = 0; j < dim; ++j) w[j] = F.add(w[j], F.mul(c[i], comp[i][j]));
          }
          planes.insert(canonical_codes(F, u.data(), w.data(), dim));
        });
      },
      limit);
  return planes_from_codes(F, planes, dim);
}

std::vector<ExactMatrix> x_points_by_grassmannian(const ANet& net, std::uint64_t limit) {
  const NetCodes nc(net);
  std::set<std::vector<std::uint32_t>> planes;
  enumerate_grassmannian_codes(
      nc.dim, *nc.F,
      [&](const std::uint32_t* r0, const std::uint32_t* r1) {
        for (std::size_t i = 0; i < nc.n; ++i)
          if (nc.form(i, r0, r1)) return;
        std::vector<std::uint32_t> codes(r0, r0 + nc.dim);
        codes.insert(codes.end(), r1, r1 + nc.dim);
        planes.insert(std::move(codes));
      },
      limit);
  return planes_from_codes(*nc.F, planes, nc.dim);
}

// ---------------------------------------------------------------------------
// classification

std::optional<Field> enumeration_field(const ANet& net, std::uint64_t q) {
  const Field target = Field::of_order(q);
  const Field& f = net.field();
  if (f.is_rational()) return target;
  if (f == target) return target;
  if (f.kind() == Field::Kind::Prime && f.characteristic() == target.characteristic()) return target;
  return std::nullopt;
}

namespace {
std::string plane_text(const ExactMatrix& m) { return m.to_string(); }
}  // namespace

FieldConsistency check_field_consistency(const ANet& net, const Field& field, const Options& opts) {
  FieldConsistency fc;
  fc.field = field.name();
  const ANet netq = net.field() == field ? net : net.reduce_to(field);
  if (!netq.independent()) {
    fc.status = "inconclusive";
    fc.note = "forms become dependent over " + fc.field;
    return fc;
  }
  const auto [min_rank, where] = min_rank_point(netq, opts.enumeration_limit);
  if (min_rank + 2 < netq.two_m()) {
    fc.status = "inconclusive";
    fc.note = "bad reduction: rank f(a) = " + std::to_string(min_rank) + " at a = " + vector_text(where);
    return fc;
  }
  const auto xs = x_points(netq, opts.enumeration_limit);
  const auto ys = y_points(netq, opts.enumeration_limit);
  fc.x_points = xs.size();
  fc.y_points = ys.size();
  for (const auto& U : xs)
    if (tangent_test_x(netq, U)) fc.sing_x.push_back(U);
  std::set<std::vector<std::uint32_t>> kap;
  const Fq& F = Fq::of(field);
  for (const auto& a : ys) {
    const auto k = kappa(netq, a);
    if (!on_x(netq, k)) continue;
    FqMat m = canonical_plane(*k.basis).to_fq(F);
    kap.insert(m.a);
  }
  fc.kappa_y_on_x = planes_from_codes(F, kap, netq.two_m());
  fc.sets_equal = fc.sing_x == fc.kappa_y_on_x;
  fc.status = fc.sets_equal ? "pass" : "fail";
  std::ostringstream os;
  os << "#X = " << fc.x_points << ", #Y = " << fc.y_points << ", #sing X = " << fc.sing_x.size()
     << ", #(X cap kappa(Y)) = " << fc.kappa_y_on_x.size();
  fc.note = os.str();
  return fc;
}

TriVerdict y_smooth(const ANet& net, const Options& opts) {
  TriVerdict v;
  if (net.field().is_finite() && net.field().characteristic() == 2) {
    v.witness = "Pfaffian not taken in characteristic 2";
    return v;
  }
  MultiPoly pf;
  try {
    pf = pfaffian_hypersurface(net);
  } catch (const DegenerateNet& e) {
    v.value = Tri::No;
    v.witness = e.what();
    return v;
  }
  const auto res = is_empty_projective(jacobian_ideal(HomogeneousIdeal(net.field(), static_cast<unsigned>(net.n()), {pf})), opts);
  v.value = res.state == Emptiness::Empty ? Tri::Yes : res.state == Emptiness::NonEmpty ? Tri::No : Tri::Unknown;
  v.witness = "Jacobian ideal: " + res.reason;
  return v;
}

NetClassification classify(const ANet& net, const Options& opts) {
  NetClassification c;
  c.regular = is_regular(net, opts);
  if (c.regular.verdict.value != Tri::Yes) {
    c.y_smooth.witness = c.x_smooth.witness = "skipped: regularity not established";
    return c;
  }
  c.y_smooth = y_smooth(net, opts);
  std::vector<std::string> clean, singular;
  for (auto q : opts.fields) {
    auto field = enumeration_field(net, q);
    if (!field) continue;
    auto fc = check_field_consistency(net, *field, opts);
    if (fc.status != "inconclusive") {
      if (fc.sing_x.empty()) clean.push_back(fc.field);
      else singular.push_back(fc.field + " at " + plane_text(fc.sing_x.front()));
    }
    c.consistency.push_back(std::move(fc));
  }
  if (!singular.empty()) {
    c.x_smooth.value = Tri::No;
    c.x_smooth.witness = "singular point over " + singular.front();
  } else if (!clean.empty()) {
    c.x_smooth.value = Tri::Yes;
    std::string s;
    for (const auto& f : clean) s += (s.empty() ? "" : ", ") + f;
    c.x_smooth.witness = "no singular point over " + s;
  } else {
    c.x_smooth.witness = "no field enumerated";
  }
  return c;
}

// ---------------------------------------------------------------------------
// fixtures

namespace {

ExactMatrix random_skew(std::mt19937_64& rng, long bound, std::size_t dim) {
  std::vector<long> upper;
  for (std::size_t k = 0; k < dim * (dim - 1) / 2; ++k)
    upper.push_back(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound);
  return skew_from_upper(Field::rationals(), dim, upper);
}

bool good_reduction(const ANet& net, std::uint64_t q, const Options& opts) {
  const auto field = enumeration_field(net, q);
  if (!field) return false;
  const ANet netq = net.reduce_to(*field);
  if (!netq.independent()) return false;
  if (min_rank_point(netq, opts.enumeration_limit).first + 2 < net.two_m()) return false;
  const auto fc = check_field_consistency(netq, *field, opts);
  if (fc.status != "pass" || !fc.sing_x.empty() || !fc.kappa_y_on_x.empty()) return false;
  if (q % 2) {
    const ANet netp = net.reduce_to(Field::prime(field->characteristic()));
    if (is_regular(netp, opts).verdict.value != Tri::Yes) return false;
    if (y_smooth(netp, opts).value != Tri::Yes) return false;
  }
  return true;
}

}  // namespace

GeneratedNet random_regular_net(std::uint64_t seed, long bound, std::size_t n, std::size_t two_m, const Options& opts,
                                std::size_t max_attempts) {
  if (bound < 1) throw std::invalid_argument("entry bound must be positive");
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<ExactMatrix> mats;
    for (std::size_t i = 0; i < n; ++i) mats.push_back(random_skew(rng, bound, two_m));
    ANet net(Field::rationals(), std::move(mats));
    if (!net.independent()) continue;
    bool ok = true;
    for (auto q : opts.fields)
      if (!good_reduction(net, q, opts)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    if (is_regular(net, opts).verdict.value != Tri::Yes) continue;
    if (y_smooth(net, opts).value != Tri::Yes) continue;
    return {std::move(net), attempt};
  }
  throw std::runtime_error("random_regular_net: retry cap of " + std::to_string(max_attempts) + " exceeded");
}

GeneratedNet degenerate_net(std::uint64_t seed, long bound, std::size_t max_attempts) {
  const Field Q = Field::rationals();
  std::mt19937_64 rng(seed);
  const ExactMatrix F1 = skew_from_upper(Q, 6, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
  Options opts;
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<ExactMatrix> mats{F1};
    for (int i = 0; i < 4; ++i) {
      ExactMatrix m = random_skew(rng, bound, 6);
      m(0, 1) = Q.zero();
      m(1, 0) = Q.zero();
      mats.push_back(std::move(m));
    }
    ANet net(Q, std::move(mats));
    if (!net.independent()) continue;
    bool ok = true;
    for (std::uint64_t q : {2, 3}) {
      const ANet netq = net.reduce_to(Field::prime(static_cast<std::uint32_t>(q)));
      if (!netq.independent() || min_rank_point(netq).first < 4) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (is_regular(net, opts).verdict.value != Tri::Yes) continue;
    return {std::move(net), attempt};
  }
  throw std::runtime_error("degenerate_net: retry cap exceeded");
}

std::vector<std::vector<long>> net_upper_triangles(const ANet& net) {
  std::vector<std::vector<long>> out;
  const Field& f = net.field();
  for (const auto& m : net.matrices()) {
    std::vector<long> upper;
    for (std::size_t r = 0; r < net.two_m(); ++r)
      for (std::size_t c = r + 1; c < net.two_m(); ++c) {
        const auto& x = m(r, c);
        if (f.is_rational()) {
          if (x.rational().get_den() != 1 || !x.rational().get_num().fits_slong_p())
            throw std::invalid_argument("net entries must be machine integers");
          upper.push_back(x.rational().get_num().get_si());
        } else {
          const auto coeffs = x.coefficients();
          for (std::size_t i = 1; i < coeffs.size(); ++i)
            if (coeffs[i]) throw std::invalid_argument("net entries must lie in the prime field");
          upper.push_back(static_cast<long>(coeffs[0]));
        }
      }
    out.push_back(std::move(upper));
  }
  return out;
}

}  // namespace skewnet
