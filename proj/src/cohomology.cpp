#include "skewnet/cohomology.hpp"

#include <sstream>

#include "skewnet/correspondence.hpp"
#include "skewnet/mod_echelon.hpp"

namespace skewnet {

const char* to_string(CohomologyCell::Kind k) {
  switch (k) {
    case CohomologyCell::Kind::None: return "none";
    case CohomologyCell::Kind::Exact: return "exact";
    case CohomologyCell::Kind::UpperBound: return "upper-bound";
  }
  return "?";
}

CohomologyTable::CohomologyTable(std::string n, int p, int lo, int hi) : name(std::move(n)), p_max(p), t_min(lo), t_max(hi) {
  if (hi < lo || p < 0) throw std::invalid_argument("empty cohomology table");
  cells.assign(static_cast<std::size_t>(p + 1), std::vector<CohomologyCell>(static_cast<std::size_t>(hi - lo + 1)));
}

CohomologyCell& CohomologyTable::at(int p, int t) {
  if (p < 0 || p > p_max || t < t_min || t > t_max) throw std::out_of_range("cohomology cell out of range");
  return cells[static_cast<std::size_t>(p)][static_cast<std::size_t>(t - t_min)];
}

const CohomologyCell& CohomologyTable::at(int p, int t) const { return const_cast<CohomologyTable*>(this)->at(p, t); }

Status CohomologyTable::verdict() const {
  Status s = Status::Pass;
  for (const auto& row : cells)
    for (const auto& c : row) s = combine(s, c.verdict);
  return s;
}

std::string CohomologyTable::to_string() const {
  std::ostringstream os;
  os << "t";
  for (int t = t_min; t <= t_max; ++t) os << '\t' << t;
  os << '\n';
  for (int p = p_max; p >= 0; --p) {
    os << "h" << p;
    for (int t = t_min; t <= t_max; ++t) {
      const auto& c = at(p, t);
      os << '\t';
      if (c.value) os << *c.value;
      else if (c.expected) os << (c.kind == CohomologyCell::Kind::UpperBound ? "<=" : "") << *c.expected;
      else os << '.';
      if (c.verdict == Status::Fail) os << '!';
    }
    os << '\n';
  }
  return os.str();
}

std::int64_t chi_projective(unsigned n, std::int64_t t) {
  // C(t + n - 1, n - 1) as a polynomial in t
  mpz_class num = 1, den = 1;
  for (unsigned i = 1; i < n; ++i) {
    num *= t + static_cast<std::int64_t>(i);
    den *= i;
  }
  mpz_class q = num / den;
  return q.get_si();
}

namespace {

struct Entry {
  std::size_t row, col;
  FieldElement value;
};

std::vector<Entry> multiplication_entries(const ANet& net, unsigned d, std::size_t& rows, std::size_t& cols) {
  const unsigned n = static_cast<unsigned>(net.n());
  const std::size_t dim = net.two_m();
  const MonomialBasis src(n, d), dst(n, d + 1);
  rows = dim * src.size();
  cols = dim * dst.size();
  std::vector<Entry> out;
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t g = 0; g < src.size(); ++g) {
      const std::size_t row = k * src.size() + g;
      for (unsigned i = 0; i < n; ++i) {
        Exponent e = src[g];
        ++e[i];
        const std::size_t mono = static_cast<std::size_t>(dst.index_of(e));
        for (std::size_t j = 0; j < dim; ++j) {
          const auto& x = net.matrix(i)(j, k);
          if (!x.is_zero()) out.push_back({row, j * dst.size() + mono, x});
        }
      }
    }
  return out;
}

std::uint64_t rank_at_prime(const std::vector<Entry>& entries, std::size_t rows, std::size_t cols, std::uint32_t p) {
  ModEchelon ech(p, cols);
  std::vector<ModEchelon::SparseRow> sparse(rows);
  for (const auto& e : entries) sparse[e.row].emplace_back(static_cast<std::uint32_t>(e.col), mod_reduce(e.value.rational(), p));
  for (const auto& r : sparse) {
    if (ech.full()) break;
    ech.insert_sparse(r);
  }
  return ech.rank();
}

bool reducible(const std::vector<Entry>& entries, std::uint32_t p) {
  for (const auto& e : entries)
    if (mpz_divisible_ui_p(e.value.rational().get_den_mpz_t(), p)) return false;
  return true;
}

}  // namespace

std::uint64_t multiplication_rank(const ANet& net, std::int64_t d, const Options& opts) {
  if (d < 0) return 0;
  std::size_t rows = 0, cols = 0;
  const auto entries = multiplication_entries(net, static_cast<unsigned>(d), rows, cols);
  const Field& f = net.field();
  if (f.is_finite()) {
    const Fq& F = Fq::of(f);
    if (f.kind() == Field::Kind::Prime) {
      ModEchelon ech(f.characteristic(), cols);
      std::vector<ModEchelon::SparseRow> sparse(rows);
      for (const auto& e : entries) sparse[e.row].emplace_back(static_cast<std::uint32_t>(e.col), e.value.residue());
      for (const auto& r : sparse) ech.insert_sparse(r);
      return ech.rank();
    }
    FqMat m(rows, cols);
    for (const auto& e : entries) m(e.row, e.col) = F.encode(e.value);
    return fq_rank(F, std::move(m));
  }
  std::uint32_t p1 = opts.prime;
  while (!reducible(entries, p1)) p1 = next_prime(p1);
  std::uint32_t p2 = std::max(opts.second_prime, static_cast<std::uint32_t>(p1 + 1));
  while (!is_prime(p2) || !reducible(entries, p2)) p2 = next_prime(p2);
  const auto r1 = rank_at_prime(entries, rows, cols, p1), r2 = rank_at_prime(entries, rows, cols, p2);
  if (r1 == r2) return r1;
  ExactMatrix m(f, rows, cols);
  for (const auto& e : entries) m(e.row, e.col) = e.value;
  return rank(m);
}

std::vector<std::uint64_t> theta_cohomology(const ANet& net, std::int64_t t, const Options& opts, bool check_regular) {
  const unsigned n = static_cast<unsigned>(net.n());
  if (n < 3) throw std::invalid_argument("theta_cohomology needs n >= 3");
  if (check_regular) {
    const auto reg = is_regular(net, opts);
    if (reg.verdict.value != Tri::Yes) throw DegenerateNet("theta_cohomology: net not regular (" + reg.verdict.witness + ")");
  }
  const std::uint64_t dim = net.two_m();
  std::vector<std::uint64_t> h(n, 0);
  h[0] = dim * num_monomials(n, t) - multiplication_rank(net, t - 1, opts);
  const std::int64_t d = -t - static_cast<std::int64_t>(n);
  const std::uint64_t r = multiplication_rank(net, d, opts);
  h[n - 2] += dim * num_monomials(n, d + 1) - r;
  h[n - 1] += dim * num_monomials(n, d) - r;
  return h;
}

namespace {

void set_computed(CohomologyCell& c, std::int64_t v, bool rank_used) {
  c.value = v;
  c.provenance = rank_used ? "rank" : "closed-form";
  if (!c.expected) return;
  const bool ok = c.kind == CohomologyCell::Kind::UpperBound ? v <= *c.expected : v == *c.expected;
  c.verdict = ok ? Status::Pass : Status::Fail;
}

// whether the cell's value needed a nonzero multiplication map
bool uses_rank(unsigned n, std::int64_t t, unsigned p) {
  if (p == 0) return t - 1 >= 0;
  const std::int64_t d = -t - static_cast<std::int64_t>(n);
  if (p == n - 2 || p == n - 1) return d >= 0;
  return false;
}

}  // namespace

CohomologyTable theta_table(const ANet& net, int t_min, int t_max, const Options& opts) {
  const unsigned n = static_cast<unsigned>(net.n());
  const auto reg = is_regular(net, opts);
  if (reg.verdict.value != Tri::Yes) throw DegenerateNet("theta_table: net not regular (" + reg.verdict.witness + ")");
  CohomologyTable tab("theta", static_cast<int>(n) - 1, t_min, t_max);
  const std::int64_t dim = static_cast<std::int64_t>(net.two_m());
  for (int t = t_min; t <= t_max; ++t) {
    const auto h = theta_cohomology(net, t, opts, false);
    std::int64_t alt = 0;
    for (unsigned p = 0; p < n; ++p) {
      auto& c = tab.at(static_cast<int>(p), t);
      if (t >= -static_cast<int>(n - 1) && t <= 0) {
        c.kind = CohomologyCell::Kind::Exact;
        c.expected = ((p == 0 && t == 0) || (p == n - 2 && t == -static_cast<int>(n - 1))) ? dim : 0;
      }
      set_computed(c, static_cast<std::int64_t>(h[p]), uses_rank(n, t, p));
      alt += (p % 2 ? -1 : 1) * static_cast<std::int64_t>(h[p]);
    }
    const std::int64_t chi = dim * (chi_projective(n, t) - chi_projective(n, t - 1));
    if (alt != chi) {
      tab.notes.push_back("Euler characteristic mismatch at t = " + std::to_string(t));
      tab.at(0, t).verdict = Status::Fail;
    }
  }
  tab.notes.push_back("alternating sums equal 2m (chi(O(t)) - chi(O(t-1))) on every column");
  return tab;
}

CohomologyTable expected_instanton_table(int d, int k) {
  if (k < 2) throw std::invalid_argument("instanton charge must be at least 2");
  CohomologyTable tab("instanton d=" + std::to_string(d) + " k=" + std::to_string(k), 3, -3, 1);
  using K = CohomologyCell::Kind;
  for (int p = 0; p <= 3; ++p)
    for (int t = -3; t <= 1; ++t) {
      auto& c = tab.at(p, t);
      c.kind = K::Exact;
      c.expected = 0;
      c.provenance = "expected";
    }
  auto bound = [&](int p, int t, std::int64_t v) {
    auto& c = tab.at(p, t);
    c.expected = v;
    c.kind = v == 0 ? K::Exact : K::UpperBound;
  };
  bound(3, -3, 2 * d);
  bound(2, -3, 2 * k - 4);
  tab.at(2, -2).expected = k - 2;
  tab.at(1, 0).expected = k - 2;
  bound(1, 1, 2 * k - 4);
  bound(0, 1, 2 * d);
  if (k == 2) {
    // h^1(1) = 0 forces h^0(1) = 2d - 2k + 4 = 2d, and h^3(-3) = h^0(1)
    tab.at(0, 1).kind = K::Exact;
    tab.at(3, -3).kind = K::Exact;
  }
  tab.notes.push_back("h^3(-3) = h^0(1), h^2(-3) = h^1(1), h^0(1) - h^1(1) = " + std::to_string(2 * d - 2 * k + 4));
  return tab;
}

CohomologyTable charge2_instanton_table(const ANet& net, const Options& opts) {
  if (net.n() != 5 || net.two_m() != 6) throw std::invalid_argument("charge2 table needs (n, 2m) = (5, 6)");
  const auto reg = is_regular(net, opts);
  if (reg.verdict.value != Tri::Yes) throw DegenerateNet("charge2 table: net not regular (" + reg.verdict.witness + ")");
  CohomologyTable tab = expected_instanton_table(3, 2);
  tab.name = "charge2";
  const unsigned n = 5;
  for (int t = -3; t <= 1; ++t) {
    const auto h = theta_cohomology(net, t - 1, opts, false);
    std::int64_t alt = 0;
    for (int p = 0; p <= 3; ++p) {
      set_computed(tab.at(p, t), static_cast<std::int64_t>(h[static_cast<std::size_t>(p)]), uses_rank(n, t - 1, static_cast<unsigned>(p)));
      alt += (p % 2 ? -1 : 1) * static_cast<std::int64_t>(h[static_cast<std::size_t>(p)]);
    }
    if (h[4] != 0) {
      tab.at(3, t).verdict = Status::Fail;
      tab.notes.push_back("h^4 nonzero at t = " + std::to_string(t));
    }
    const std::int64_t chi = 6 * (chi_projective(n, t - 1) - chi_projective(n, t - 2));
    if (alt != chi) {
      tab.at(0, t).verdict = Status::Fail;
      tab.notes.push_back("Euler characteristic mismatch at t = " + std::to_string(t));
    }
  }
  return tab;
}

std::vector<std::int64_t> hypersurface_line_bundle_cohomology(int d, int n, std::int64_t t) {
  if (n < 3 || d < 1) throw std::invalid_argument("hypersurface cohomology needs n >= 3 and d >= 1");
  const unsigned un = static_cast<unsigned>(n);
  std::vector<std::int64_t> h(static_cast<std::size_t>(n - 1), 0);
  h[0] = static_cast<std::int64_t>(num_monomials(un, t)) - static_cast<std::int64_t>(num_monomials(un, t - d));
  auto top = [&](std::int64_t s) { return static_cast<std::int64_t>(num_monomials(un, -s - n)); };
  h[static_cast<std::size_t>(n - 2)] += top(t - d) - top(t);
  return h;
}

Verdict exceptional_pair_check_y(int d, int n) {
  Verdict v;
  std::vector<std::int64_t> unit(static_cast<std::size_t>(n - 1), 0);
  unit[0] = 1;
  const std::vector<std::int64_t> zero(static_cast<std::size_t>(n - 1), 0);
  const auto h0 = hypersurface_line_bundle_cohomology(d, n, 0);
  const auto hm1 = hypersurface_line_bundle_cohomology(d, n, -1);
  auto row = [](const std::vector<std::int64_t>& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + ")";
  };
  const bool ok = h0 == unit && hm1 == zero;
  v.status = ok ? Status::Pass : Status::Fail;
  v.witness = "Ext(O,O) = Ext(O(1),O(1)) = " + row(h0) + ", Ext(O(1),O) = " + row(hm1);
  return v;
}

LineIdealResult line_ideal_membership(const ANet& net, const Vector& a0, const Vector& a1, const Options& opts) {
  (void)opts;
  const Field& f = net.field();
  const unsigned n = static_cast<unsigned>(net.n());
  if (n < 4) throw std::invalid_argument("line_ideal_membership needs n >= 4");
  if (f.is_finite() && f.characteristic() == 2) throw std::invalid_argument("line_ideal_membership needs characteristic != 2");
  if (rank(ExactMatrix::from_rows(f, {a0, a1})) != 2) throw std::invalid_argument("a0, a1 do not span a line");
  const MultiPoly pf = pfaffian_hypersurface(net);
  std::vector<MultiPoly> images;
  for (unsigned i = 0; i < n; ++i) images.push_back(MultiPoly::linear(f, Vector{a0[i], a1[i]}));
  if (!pf.substitute(images).is_zero()) throw std::invalid_argument("line is not on Y");
  const int d = pf.degree();

  LineIdealResult res;
  res.verdict.status = Status::Pass;
  std::ostringstream wit;
  for (int t : {0, -1}) {
    const auto hy = hypersurface_line_bundle_cohomology(d, static_cast<int>(n), t);
    std::int64_t r = 0;
    if (t >= 0) {
      // restriction of degree-t forms to the line, as binary forms
      const MonomialBasis B(n, static_cast<unsigned>(t));
      std::vector<Vector> rows;
      for (const auto& e : B.monomials()) {
        MultiPoly g = MultiPoly::monomial(f, n, e, f.one()).substitute(images);
        Vector row;
        for (int k = 0; k <= t; ++k) {
          Exponent x{};
          x[0] = static_cast<std::uint8_t>(t - k);
          x[1] = static_cast<std::uint8_t>(k);
          row.push_back(g.coefficient(x));
        }
        rows.push_back(std::move(row));
      }
      r = static_cast<std::int64_t>(rank(ExactMatrix::from_rows(f, rows)));
    }
    const std::int64_t hm0 = std::max<std::int64_t>(0, t + 1), hm1 = std::max<std::int64_t>(0, -t - 1);
    std::vector<std::int64_t> h(n - 1, 0);
    h[0] = hy[0] - r;
    h[1] = hm0 - r + hy[1];
    h[2] = hm1 + hy[2];
    for (unsigned p = 3; p < n - 1; ++p) h[p] = hy[p];
    wit << (t == 0 ? "" : "; ") << "t=" << t << ": (";
    for (std::size_t p = 0; p < h.size(); ++p) {
      wit << (p ? "," : "") << h[p];
      if (h[p] != 0) res.verdict.status = Status::Fail;
    }
    wit << ")";
    res.twists.push_back(t);
    res.rows.push_back(std::move(h));
  }
  res.verdict.witness = "h^p(I_M(t)) " + wit.str();
  return res;
}

}  // namespace skewnet
