#include "skewnet/ideals.hpp"

#include <sstream>

#include "skewnet/fq.hpp"

namespace skewnet {

HomogeneousIdeal::HomogeneousIdeal(const Field& field, unsigned nvars, std::vector<MultiPoly> generators)
    : field_(field), nvars_(nvars) {
  for (auto& g : generators) add(g);
}

void HomogeneousIdeal::add(const MultiPoly& g) {
  if (g.field() != field_) throw FieldMismatch("ideal generator over another field");
  if (g.nvars() != nvars_) throw std::invalid_argument("ideal generator in another ring");
  if (g.is_zero()) return;
  g.require_homogeneous();
  gens_.push_back(g);
}

int HomogeneousIdeal::max_degree() const {
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

HomogeneousIdeal HomogeneousIdeal::reduce_to(const Field& target) const {
  HomogeneousIdeal r(target, nvars_);
  for (const auto& g : gens_) r.add(g.reduce_to(target));
  return r;
}

bool HomogeneousIdeal::vanishes_at(const Vector& point) const {
  for (const auto& g : gens_)
    if (!g.evaluate(point).is_zero()) return false;
  return true;
}

namespace {

template <class Emit>
void for_each_macaulay_row(const HomogeneousIdeal& ideal, unsigned t, const MonomialBasis& cols, Emit emit) {
  for (const auto& g : ideal.generators()) {
    const int dg = g.degree();
    if (dg > static_cast<int>(t)) continue;
    const MonomialBasis mult(ideal.nvars(), t - static_cast<unsigned>(dg));
    for (const auto& m : mult.monomials()) {
      std::vector<std::pair<std::size_t, const FieldElement*>> row;
      row.reserve(g.size());
      for (const auto& [e, c] : g.terms()) {
        Exponent s;
        for (unsigned i = 0; i < kMaxVars; ++i) s[i] = static_cast<std::uint8_t>(e[i] + m[i]);
        row.emplace_back(static_cast<std::size_t>(cols.index_of(s)), &c);
      }
      emit(row);
    }
  }
}

std::uint64_t rank_prime(const HomogeneousIdeal& ideal, unsigned t) { return macaulay_echelon(ideal, t).rank(); }

std::uint64_t rank_finite(const HomogeneousIdeal& ideal, unsigned t) {
  if (ideal.field().kind() == Field::Kind::Prime) return rank_prime(ideal, t);
  const Fq& F = Fq::of(ideal.field());
  const MonomialBasis cols(ideal.nvars(), t);
  std::vector<std::vector<std::uint32_t>> rows;
  for_each_macaulay_row(ideal, t, cols, [&](const auto& row) {
    std::vector<std::uint32_t> dense(cols.size(), 0);
    for (auto [j, c] : row) dense[j] = F.encode(*c);
    rows.push_back(std::move(dense));
  });
  FqMat m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    std::copy(rows[i].begin(), rows[i].end(), m.a.begin() + static_cast<std::ptrdiff_t>(i * cols.size()));
  return fq_rank(F, std::move(m));
}

// Reduces a rational ideal modulo the first usable prime at or after `p`.
HomogeneousIdeal reduce_mod(const HomogeneousIdeal& ideal, std::uint32_t& p) {
  for (;; p = next_prime(p)) {
    try {
      return ideal.reduce_to(Field::prime(p));
    } catch (const std::domain_error&) {
      continue;
    }
  }
}

}  // namespace

ExactMatrix macaulay_matrix(const HomogeneousIdeal& ideal, unsigned t) {
  const MonomialBasis cols(ideal.nvars(), t);
  std::vector<Vector> rows;
  for_each_macaulay_row(ideal, t, cols, [&](const auto& row) {
    Vector r(cols.size(), ideal.field().zero());
    for (auto [j, c] : row) r[j] = *c;
    rows.push_back(std::move(r));
  });
  if (rows.empty()) return ExactMatrix(ideal.field(), 0, cols.size());
  return ExactMatrix::from_rows(ideal.field(), rows);
}

ModEchelon macaulay_echelon(const HomogeneousIdeal& ideal, unsigned t) {
  if (ideal.field().kind() != Field::Kind::Prime) throw std::invalid_argument("macaulay_echelon needs a prime field");
  const std::uint32_t p = ideal.field().characteristic();
  const MonomialBasis cols(ideal.nvars(), t);
  ModEchelon ech(p, cols.size());
  std::vector<std::uint32_t> dense(cols.size(), 0);
  for_each_macaulay_row(ideal, t, cols, [&](const auto& row) {
    if (ech.full()) return;
    for (auto [j, c] : row) dense[j] = c->residue();
    ech.insert(dense);
    for (auto [j, c] : row) dense[j] = 0;
  });
  return ech;
}

std::uint64_t macaulay_rank(const HomogeneousIdeal& ideal, unsigned t, const Options& opts) {
  if (ideal.field().is_finite()) return rank_finite(ideal, t);
  std::uint32_t p1 = opts.prime, p2 = opts.second_prime;
  const auto i1 = reduce_mod(ideal, p1);
  if (p2 == p1) p2 = next_prime(p1);
  const auto i2 = reduce_mod(ideal, p2);
  const auto r1 = rank_prime(i1, t), r2 = rank_prime(i2, t);
  if (r1 == r2) return r1;
  return rank(macaulay_matrix(ideal, t));
}

std::uint64_t hilbert_function(const HomogeneousIdeal& ideal, unsigned t, const Options& opts) {
  return num_monomials(ideal.nvars(), t) - macaulay_rank(ideal, t, opts);
}

// ---------------------------------------------------------------------------

namespace {

// Interpolating polynomial (ascending coefficients) through (x0 + i, y_i).
std::vector<mpq_class> interpolate(unsigned x0, const std::vector<std::uint64_t>& ys) {
  const std::size_t n = ys.size();
  std::vector<mpq_class> result(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<mpq_class> basis{1};
    mpq_class denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const mpq_class xj = static_cast<unsigned long>(x0 + j);
      std::vector<mpq_class> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xj;
      }
      basis = std::move(next);
      denom *= mpq_class(static_cast<long>(i) - static_cast<long>(j));
    }
    const mpq_class scale = mpq_class(static_cast<unsigned long>(ys[i])) / denom;
    for (std::size_t k = 0; k < n; ++k) result[k] += basis[k] * scale;
  }
  for (auto& c : result) c.canonicalize();
  return result;
}

mpq_class eval_poly(const std::vector<mpq_class>& c, long t) {
  mpq_class r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * t + c[i];
  return r;
}

}  // namespace

std::string HilbertData::polynomial_text() const {
  if (!polynomial) return "";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = polynomial->size(); i-- > 0;) {
    mpq_class c = (*polynomial)[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    const bool unit = c == 1 && i > 0;
    if (!unit) os << c.get_str();
    if (i > 0) os << (unit ? "" : "*") << "t" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return first ? "0" : os.str();
}

HilbertData fit_hilbert_polynomial(const HomogeneousIdeal& input, unsigned expected_dim, const Options& opts) {
  if (expected_dim >= input.nvars()) throw std::invalid_argument("expected_dim must be below nvars");
  HomogeneousIdeal ideal = input;
  if (input.field().is_rational()) {
    std::uint32_t p = opts.prime;
    ideal = reduce_mod(input, p);
  }
  HilbertData data;
  data.expected_dim = expected_dim;
  data.field = ideal.field().name();
  const unsigned start = static_cast<unsigned>(std::max(0, ideal.max_degree()));
  const std::size_t need = expected_dim + 2;
  for (unsigned t = 0; t <= static_cast<unsigned>(opts.degree_cap); ++t) {
    data.values.push_back(hilbert_function(ideal, t, opts));
    data.window_end = t;
    if (t < start + need - 1) continue;
    const unsigned t0 = t + 1 - static_cast<unsigned>(need);
    std::vector<std::uint64_t> head(data.values.begin() + t0, data.values.begin() + t0 + expected_dim + 1);
    auto poly = interpolate(t0, head);
    if (poly.back() == 0) continue;
    if (eval_poly(poly, t) != mpq_class(static_cast<unsigned long>(data.values.back()))) continue;
    data.polynomial = poly;
    data.fit_start = t0;
    mpz_class fact = 1;
    for (unsigned i = 2; i <= expected_dim; ++i) fact *= i;
    data.degree = poly.back() * fact;
    data.arithmetic_genus = (poly[0] - 1) * (expected_dim % 2 ? -1 : 1);
    return data;
  }
  throw std::runtime_error("Hilbert function did not stabilize to degree " + std::to_string(expected_dim) +
                           " by the degree cap " + std::to_string(opts.degree_cap));
}

// ---------------------------------------------------------------------------

const char* to_string(Emptiness e) {
  switch (e) {
    case Emptiness::Empty: return "empty";
    case Emptiness::NonEmpty: return "nonempty";
    case Emptiness::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::uint64_t macaulay_bound(std::uint64_t h, unsigned t) {
  if (h == 0) return 0;
  if (t == 0) throw std::invalid_argument("macaulay_bound needs t >= 1");
  std::uint64_t out = 0;
  for (unsigned i = t; i >= 1 && h > 0; --i) {
    std::int64_t k = i;
    while (binomial(k + 1, i) <= h) ++k;
    h -= binomial(k, i);
    out += binomial(k + 1, i + 1);
  }
  return out;
}

EmptinessResult is_empty_projective(const HomogeneousIdeal& ideal, const Options& opts) {
  EmptinessResult res;
  const unsigned gotzmann_from = static_cast<unsigned>(std::max(1, ideal.max_degree()));
  for (unsigned t = 0; t <= static_cast<unsigned>(opts.degree_cap); ++t) {
    const std::uint64_t h = hilbert_function(ideal, t, opts);
    res.values.push_back(h);
    if (h == 0) {
      res.state = Emptiness::Empty;
      res.witness_degree = static_cast<int>(t);
      res.reason = "HF(" + std::to_string(t) + ") = 0";
      return res;
    }
    if (t >= 1 && t - 1 >= gotzmann_from) {
      const std::uint64_t prev = res.values[t - 1];
      if (h == macaulay_bound(prev, t - 1)) {
        res.state = Emptiness::NonEmpty;
        res.witness_degree = static_cast<int>(t - 1);
        res.reason = "Gotzmann persistence at degree " + std::to_string(t - 1) + " with HF = " + std::to_string(prev);
        return res;
      }
    }
  }
  const auto n = res.values.size();
  if (n >= 2 && res.values[n - 1] >= res.values[n - 2]) {
    res.state = Emptiness::NonEmpty;
    res.witness_degree = static_cast<int>(n - 1);
    res.reason = "HF positive and non-decreasing at the degree cap";
  } else {
    res.state = Emptiness::Inconclusive;
    res.witness_degree = static_cast<int>(n - 1);
    res.reason = "HF still decreasing at the degree cap";
  }
  return res;
}

HomogeneousIdeal jacobian_ideal(const HomogeneousIdeal& ideal, unsigned codim) {
  const auto& gens = ideal.generators();
  HomogeneousIdeal out(ideal.field(), ideal.nvars(), gens);
  if (gens.empty() || codim == 0) return out;
  PolyMatrix jac(ideal.field(), ideal.nvars(), gens.size(), ideal.nvars());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (unsigned j = 0; j < ideal.nvars(); ++j) jac(i, j) = gens[i].partial_derivative(j);
  if (codim > gens.size() || codim > ideal.nvars()) return out;
  for (auto& m : jac.minors(codim)) out.add(m);
  return out;
}

HomogeneousIdeal minors_ideal(const PolyMatrix& m, std::size_t r) {
  if (r == 0 || r > std::min(m.rows(), m.cols())) throw std::invalid_argument("minors_ideal: bad minor size");
  HomogeneousIdeal out(m.field(), m.nvars());
  for (auto& g : m.minors(r)) out.add(g);
  return out;
}

}  // namespace skewnet
