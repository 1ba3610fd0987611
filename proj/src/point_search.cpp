#include "skewnet/point_search.hpp"

#include <sstream>

namespace skewnet {

std::vector<std::uint32_t> roots_mod_p(const std::vector<std::uint32_t>& coeffs, std::uint32_t p) {
  std::vector<std::uint32_t> out;
  bool zero = true;
  for (auto c : coeffs) zero = zero && c == 0;
  if (zero) throw std::invalid_argument("roots_mod_p: zero polynomial");
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = (acc * x + coeffs[i]) % p;
    if (acc == 0) out.push_back(x);
  }
  return out;
}

namespace {

// Coefficients of the polynomial of degree <= d through (s, y[s]), s = 0..d.
std::vector<std::uint32_t> interpolate(const std::vector<std::uint32_t>& y, std::uint32_t p) {
  const std::size_t n = y.size();
  std::vector<std::uint32_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!y[i]) continue;
    std::vector<std::uint32_t> basis{1};
    std::uint32_t denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      // basis *= (s - j)
      std::vector<std::uint32_t> next(basis.size() + 1, 0);
      const std::uint32_t mj = mod_reduce(-static_cast<std::int64_t>(j), p);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] = (next[k + 1] + basis[k]) % p;
        next[k] = static_cast<std::uint32_t>((next[k] + static_cast<std::uint64_t>(basis[k]) * mj) % p);
      }
      basis = std::move(next);
      denom = mod_mul(denom, mod_reduce(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j), p), p);
    }
    const std::uint32_t scale = mod_mul(y[i], mod_inverse(denom, p), p);
    for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<std::uint32_t>((out[k] + static_cast<std::uint64_t>(basis[k]) * scale) % p);
  }
  return out;
}

std::string field_log(const std::string& name, const std::string& text) { return name + ": " + text; }

bool usable_reduction(const ANet& net, const Field& field, std::string& why, const Options& opts) {
  const ANet netq = net.field() == field ? net : net.reduce_to(field);
  if (!netq.independent()) {
    why = "forms dependent";
    return false;
  }
  const std::uint32_t p = field.characteristic();
  if (p == 2) return true;
  const ANet netp = net.field().is_rational() ? net.reduce_to(Field::prime(p)) : netq;
  if (is_regular(netp, opts).verdict.value != Tri::Yes) {
    why = "not regular mod " + std::to_string(p);
    return false;
  }
  if (y_smooth(netp, opts).value != Tri::Yes) {
    why = "Y singular mod " + std::to_string(p);
    return false;
  }
  return true;
}

}  // namespace

std::vector<Vector> c_points_by_enumeration(const ANet& net, std::uint64_t limit) {
  const NetCodes nc(net);
  std::vector<Vector> out;
  for_each_projective_point(
      nc.dim, *nc.F,
      [&](const std::vector<std::uint32_t>& v) {
        if (fq_rank(*nc.F, nc.fv(v)) <= 3) out.push_back(nc.decode(v));
      },
      limit);
  return out;
}

std::vector<Vector> c_points_by_hyperplane_section(const ANet& net, std::uint64_t seed, const Options& opts,
                                                   std::string* note) {
  const Field& f = net.field();
  if (f.kind() != Field::Kind::Prime) throw std::invalid_argument("hyperplane sections need a prime field");
  const std::uint32_t p = f.characteristic();
  const Fq& F = Fq::of(f);
  const unsigned nv = static_cast<unsigned>(net.two_m());
  std::mt19937_64 rng(seed);
  auto random_linear = [&] {
    Vector c;
    for (unsigned i = 0; i < nv; ++i) c.push_back(f.from_int(static_cast<std::int64_t>(1 + rng() % (p - 1))));
    return c;
  };
  const Vector h = random_linear(), l0 = random_linear(), l1 = random_linear();
  HomogeneousIdeal J = c_ideal(net);
  J.add(MultiPoly::linear(f, h));

  // degree with HF(t-1) = HF(t) > 0
  std::optional<ModEchelon> prev;
  std::uint64_t prev_hf = 0;
  unsigned t = 0;
  for (unsigned s = static_cast<unsigned>(std::max(1, J.max_degree())); s <= static_cast<unsigned>(opts.degree_cap); ++s) {
    ModEchelon e = macaulay_echelon(J, s);
    const std::uint64_t hf = e.cols() - e.rank();
    if (prev && hf == prev_hf && hf > 0) {
      t = s;
      prev.emplace(std::move(e));
      break;
    }
    prev.emplace(std::move(e));
    prev_hf = hf;
  }
  if (!t) {
    if (note) *note = "Hilbert function of the section did not stabilize";
    return {};
  }
  const ModEchelon cur = std::move(*prev);
  const ModEchelon lower = macaulay_echelon(J, t - 1);
  const auto lambda = cur.kernel();
  const std::size_t N = lambda.size();
  std::vector<std::size_t> free_lower;
  {
    std::vector<bool> piv(lower.cols(), false);
    for (auto c : lower.pivots()) piv[c] = true;
    for (std::size_t c = 0; c < lower.cols(); ++c)
      if (!piv[c]) free_lower.push_back(c);
  }
  if (free_lower.size() != N) {
    if (note) *note = "dual spaces differ in dimension";
    return {};
  }
  const MonomialBasis Bt(nv, t), Bl(nv, t - 1);
  // column index of x_k * m for m in the lower basis
  auto up = [&](std::size_t m, unsigned k) {
    Exponent e = Bl[m];
    ++e[k];
    return static_cast<std::size_t>(Bt.index_of(e));
  };
  FqMat A0(N, N), A1(N, N);
  for (std::size_t b = 0; b < N; ++b)
    for (unsigned k = 0; k < nv; ++k) {
      const std::size_t col = up(free_lower[b], k);
      const std::uint32_t c0 = F.encode(l0[k]), c1 = F.encode(l1[k]);
      for (std::size_t j = 0; j < N; ++j) {
        const std::uint32_t v = lambda[j][col];
        if (!v) continue;
        A0(b, j) = F.add(A0(b, j), F.mul(c0, v));
        A1(b, j) = F.add(A1(b, j), F.mul(c1, v));
      }
    }
  FqMat T;
  try {
    T = fq_multiply(F, fq_inverse(F, A0), A1);
  } catch (const std::domain_error&) {
    if (note) *note = "singular multiplication matrix";
    return {};
  }
  const auto chi = fq_charpoly(F, T);
  std::vector<Vector> out;
  std::size_t simple = 0;
  for (auto mu : roots_mod_p(chi, p)) {
    FqMat S = T;
    for (std::size_t i = 0; i < N; ++i) S(i, i) = F.sub(S(i, i), mu);
    const FqMat ker = fq_kernel(F, S);
    if (ker.rows != 1) continue;
    ++simple;
    std::vector<std::uint32_t> lam(Bt.size(), 0);
    for (std::size_t j = 0; j < N; ++j) {
      const std::uint32_t x = ker(0, j);
      if (!x) continue;
      for (std::size_t c = 0; c < Bt.size(); ++c)
        if (lambda[j][c]) lam[c] = F.add(lam[c], F.mul(x, lambda[j][c]));
    }
    for (unsigned j = 0; j < nv; ++j) {
      Exponent base{};
      base[j] = static_cast<std::uint8_t>(t - 1);
      Vector P;
      for (unsigned i = 0; i < nv; ++i) {
        Exponent e = base;
        ++e[i];
        P.push_back(F.decode(lam[static_cast<std::size_t>(Bt.index_of(e))]));
      }
      if (is_zero_vector(P)) continue;
      P = normalize_projective(P);
      if (rank(net.fv_at(P)) <= 3 && dot(h, P).is_zero()) out.push_back(P);
      break;
    }
  }
  if (note) {
    std::ostringstream os;
    os << "degree " << t << ", " << N << " section points, " << simple << " rational, " << out.size() << " verified";
    *note = os.str();
  }
  return out;
}

CPointSearch search_c_points(const ANet& net, const Options& opts, std::size_t max_points) {
  if (net.n() != 5 || net.two_m() != 6) throw std::invalid_argument("C-point search needs (n, 2m) = (5, 6)");
  CPointSearch res;
  for (std::uint64_t q : {3, 5, 7, 9}) {
    const auto field = enumeration_field(net, q);
    if (!field) continue;
    std::string why;
    if (!usable_reduction(net, *field, why, opts)) {
      res.log.push_back(field_log(field->name(), "skipped, " + why));
      continue;
    }
    const ANet netq = net.field() == *field ? net : net.reduce_to(*field);
    const auto pts = c_points_by_enumeration(netq, opts.enumeration_limit);
    res.log.push_back(field_log(field->name(), std::to_string(pts.size()) + " C-points by enumeration"));
    for (const auto& c : pts) {
      if (res.points.size() >= max_points) break;
      res.points.push_back({*field, c, "enumeration"});
    }
    if (!res.points.empty()) return res;
  }
  std::optional<ANet> netp;
  if (net.field().is_rational()) {
    for (std::uint32_t p = opts.prime; !netp; p = next_prime(p)) {
      try {
        netp = net.reduce_to(Field::prime(p));
      } catch (const std::domain_error&) {
      }
    }
  } else if (net.field().kind() == Field::Kind::Prime && net.field().characteristic() > 2704) {
    netp = net;
  }
  if (!netp) {
    res.log.push_back("no large prime field available for hyperplane sections");
    return res;
  }
  std::string why;
  if (!usable_reduction(*netp, netp->field(), why, opts)) {
    res.log.push_back(field_log(netp->field().name(), "skipped, " + why));
    return res;
  }
  for (std::uint64_t k = 0; k < 20 && res.points.size() < std::min<std::size_t>(3, max_points); ++k) {
    std::string note;
    const auto pts = c_points_by_hyperplane_section(*netp, opts.seed * 1000 + k, opts, &note);
    res.log.push_back(field_log(netp->field().name(), "section " + std::to_string(k) + ": " + note));
    for (const auto& c : pts) {
      bool dup = false;
      for (const auto& o : res.points) dup = dup || o.c == c;
      if (!dup && res.points.size() < max_points) res.points.push_back({netp->field(), c, "hyperplane-section"});
    }
  }
  return res;
}

LinesOnY lines_on_y(const ANet& net, std::uint64_t limit) {
  const NetCodes nc(net);
  const Fq& F = *nc.F;
  if (F.q() + 1 <= nc.dim / 2) throw std::invalid_argument("lines_on_y: field too small to certify vanishing");
  LinesOnY out;
  out.field = net.field().name();
  std::vector<std::uint32_t> a(nc.n);
  std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> found;
  out.lines_checked = enumerate_grassmannian_codes(
      nc.n, F,
      [&](const std::uint32_t* r0, const std::uint32_t* r1) {
        // every point s*r0 + r1 and r0 itself
        std::copy(r0, r0 + nc.n, a.begin());
        if (fq_rank(F, nc.fa(a)) == nc.dim) return;
        for (std::uint64_t s = 0; s < F.q(); ++s) {
          const std::uint32_t sc = static_cast<std::uint32_t>(s);
          for (std::size_t i = 0; i < nc.n; ++i) a[i] = F.add(F.mul(sc, r0[i]), r1[i]);
          if (fq_rank(F, nc.fa(a)) == nc.dim) return;
        }
        found.emplace_back(std::vector<std::uint32_t>(r0, r0 + nc.n), std::vector<std::uint32_t>(r1, r1 + nc.n));
      },
      limit);
  for (const auto& [c0, c1] : found) {
    YLine line;
    line.a0 = nc.decode(c0);
    line.a1 = nc.decode(c1);
    const FqMat k0 = fq_kernel(F, nc.fa(c0)), k1 = fq_kernel(F, nc.fa(c1));
    FqMat both(k0.rows + k1.rows, nc.dim);
    std::copy(k0.a.begin(), k0.a.end(), both.a.begin());
    std::copy(k1.a.begin(), k1.a.end(), both.a.begin() + static_cast<std::ptrdiff_t>(k0.a.size()));
    line.is_mc = fq_rank(F, both) < both.rows;
    line.split = splitting_type_on_line(net, line.a0, line.a1);
    out.lines.push_back(std::move(line));
  }
  return out;
}

// ---------------------------------------------------------------------------

LargeFieldSampler::LargeFieldSampler(const ANet& net, std::uint64_t seed) : LargeFieldSampler(net, MultiPoly(), seed) {}

LargeFieldSampler::LargeFieldSampler(const ANet& net, MultiPoly q, std::uint64_t seed) : net_(net), q_(std::move(q)), rng_(seed) {
  const Field& f = net.field();
  if (f.kind() != Field::Kind::Prime || f.characteristic() == 2)
    throw std::invalid_argument("sampler needs a prime field of odd characteristic");
  if (net.n() != 5 || net.two_m() != 6) throw std::invalid_argument("sampler needs (n, 2m) = (5, 6)");
  p_ = f.characteristic();
  if (q_.is_zero()) q_ = q_quartic(net);
  if (q_.field() != f) throw FieldMismatch("sampler quartic over another field");
}

Vector LargeFieldSampler::random_vector(std::size_t len) {
  Vector v;
  for (std::size_t i = 0; i < len; ++i) v.push_back(net_.field().from_int(static_cast<std::int64_t>(rng_() % p_)));
  return v;
}

Vector LargeFieldSampler::root_on_line(const std::function<FieldElement(const Vector&)>& g, unsigned degree,
                                       std::size_t len) {
  const Field& f = net_.field();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Vector b0 = random_vector(len), b1 = random_vector(len);
    std::vector<std::uint32_t> y;
    for (unsigned s = 0; s <= degree; ++s) {
      Vector x(len, f.zero());
      for (std::size_t i = 0; i < len; ++i) x[i] = b0[i] + f.from_int(s) * b1[i];
      y.push_back(g(x).residue());
    }
    const auto coeffs = interpolate(y, p_);
    bool zero = true;
    for (auto c : coeffs) zero = zero && c == 0;
    if (zero) continue;
    const auto roots = roots_mod_p(coeffs, p_);
    if (roots.empty()) continue;
    const std::uint32_t s = roots[rng_() % roots.size()];
    Vector x(len, f.zero());
    for (std::size_t i = 0; i < len; ++i) x[i] = b0[i] + f.from_int(s) * b1[i];
    if (is_zero_vector(x)) continue;
    return normalize_projective(x);
  }
  throw std::runtime_error("sampler: no root found on 1000 random lines");
}

Vector LargeFieldSampler::y_point() {
  while (true) {
    Vector a = root_on_line([&](const Vector& x) { return pfaffian_scalar(net_.at(x)); }, 3, net_.n());
    if (rank(net_.at(a)) == net_.two_m() - 2) return a;
  }
}

Vector LargeFieldSampler::q_point() {
  while (true) {
    Vector v = root_on_line([&](const Vector& x) { return q_.evaluate(x); }, 4, net_.two_m());
    const std::size_t r = rank(net_.fv_at(v));
    if (r == 3 || r == 4) return v;
  }
}

ExactMatrix LargeFieldSampler::x_point() {
  const PhiFiber fib = phi_fiber(net_, q_point());
  if (fib.point) return *fib.point->basis;
  const FieldElement s = net_.field().from_int(static_cast<std::int64_t>(rng_() % p_));
  return fib.line->plane_at(s, net_.field().one());
}

std::pair<Vector, ExactMatrix> LargeFieldSampler::w_point() {
  while (true) {
    const Vector v = q_point();
    const auto ker = psi_fiber(net_, v);
    Vector a = ker[0];
    if (ker.size() > 1) {
      const FieldElement s = net_.field().from_int(static_cast<std::int64_t>(rng_() % p_));
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = s * ker[0][i] + ker[1][i];
      a = normalize_projective(a);
    }
    if (rank(net_.at(a)) != net_.two_m() - 2) continue;
    const PhiFiber fib = phi_fiber(net_, v);
    if (fib.point) return {a, *fib.point->basis};
    const FieldElement s = net_.field().from_int(static_cast<std::int64_t>(rng_() % p_));
    return {a, fib.line->plane_at(s, net_.field().one())};
  }
}

}  // namespace skewnet
