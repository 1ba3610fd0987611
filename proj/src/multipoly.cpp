#include "skewnet/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace skewnet {

unsigned total_degree(const Exponent& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;  // lexicographic on the array, x0 most significant
}

std::size_t ExponentHash::operator()(const Exponent& e) const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : e) h = (h ^ x) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly(const Field& field, unsigned nvars) : field_(field), nvars_(nvars) {
  if (nvars > kMaxVars) throw std::invalid_argument("too many variables");
}

MultiPoly MultiPoly::constant(const Field& field, unsigned nvars, const FieldElement& c) {
  return monomial(field, nvars, Exponent{}, c);
}

MultiPoly MultiPoly::variable(const Field& field, unsigned nvars, unsigned i) {
  if (i >= nvars) throw std::out_of_range("variable index");
  Exponent e{};
  e[i] = 1;
  return monomial(field, nvars, e, field.one());
}

MultiPoly MultiPoly::monomial(const Field& field, unsigned nvars, const Exponent& e, const FieldElement& c) {
  MultiPoly p(field, nvars);
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::linear(const Field& field, const Vector& coeffs) {
  MultiPoly p(field, static_cast<unsigned>(coeffs.size()));
  for (unsigned i = 0; i < coeffs.size(); ++i) {
    Exponent e{};
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.begin()->first));
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

void MultiPoly::require_homogeneous(int d) const {
  if (!is_homogeneous()) throw std::invalid_argument("polynomial is not homogeneous");
  if (d >= 0 && !is_zero() && degree() != d) throw std::invalid_argument("polynomial has the wrong degree");
}

const Exponent& MultiPoly::leading_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const FieldElement& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

FieldElement MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_.zero() : it->second;
}

void MultiPoly::add_term(const Exponent& e, const FieldElement& c) {
  if (c.field() != field_) throw FieldMismatch("add_term: coefficient from another field");
  for (unsigned i = nvars_; i < kMaxVars; ++i)
    if (e[i]) throw std::invalid_argument("exponent uses a variable outside the ring");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_ring(const MultiPoly& o) const {
  if (field_ != o.field_) throw FieldMismatch("polynomials over different fields");
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomials in different numbers of variables");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  return r += o;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  return r -= o;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_ring(o);
  MultiPoly r(field_, nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponent e;
      for (unsigned i = 0; i < kMaxVars; ++i) {
        const unsigned s = ea[i] + eb[i];
        if (s > 255) throw std::overflow_error("exponent overflow");
        e[i] = static_cast<std::uint8_t>(s);
      }
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::scaled(const FieldElement& c) const {
  MultiPoly r(field_, nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(field_, nvars_, field_.one()), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::partial_derivative(unsigned i) const {
  if (i >= nvars_) throw std::out_of_range("derivative variable");
  MultiPoly r(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    if (!e[i]) continue;
    Exponent d = e;
    --d[i];
    r.add_term(d, c * field_.from_int(e[i]));
  }
  return r;
}

FieldElement MultiPoly::evaluate(const Vector& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluate: point has the wrong length");
  for (const auto& x : point)
    if (x.field() != field_) throw FieldMismatch("evaluate: point from another field");
  // powers cached per variable
  std::vector<std::vector<FieldElement>> powers(nvars_);
  FieldElement sum = field_.zero();
  for (const auto& [e, c] : terms_) {
    FieldElement t = c;
    for (unsigned i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(field_.one());
      while (pw.size() <= e[i]) pw.push_back(pw.back() * point[i]);
      t *= pw[e[i]];
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != nvars_) throw std::invalid_argument("substitute: wrong number of images");
  if (images.empty()) return *this;
  const Field& f = images[0].field();
  const unsigned nv = images[0].nvars();
  for (const auto& im : images)
    if (im.field() != f || im.nvars() != nv) throw std::invalid_argument("substitute: images in different rings");
  if (f != field_) throw FieldMismatch("substitute: images over another field");
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  MultiPoly r(f, nv);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(f, nv, c);
    for (unsigned i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(f, nv, f.one()));
      while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[e[i]];
    }
    r += t;
  }
  return r;
}

MultiPoly MultiPoly::reduce_to(const Field& target) const {
  MultiPoly r(target, nvars_);
  for (const auto& [e, c] : terms_) r.add_term(e, c.reduce_to(target));
  return r;
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return *this;
  if (field_.is_finite()) return scaled(leading_coefficient().inverse());
  Vector coeffs;
  for (const auto& [e, c] : terms_) coeffs.push_back(c);
  const FieldElement factor = normalize_projective(coeffs)[0] / coeffs[0];
  return scaled(factor);
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (field_ != o.field_ || nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (e != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

std::string MultiPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coef;
    bool negative = false;
    if (field_.is_rational()) {
      mpq_class v = c.rational();
      if (v < 0) {
        negative = true;
        v = -v;
      }
      coef = v.get_str();
    } else {
      coef = c.to_string();
    }
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    std::string mono;
    for (unsigned i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += var + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) os << coef;
    else if (coef == "1") os << mono;
    else os << coef << "*" << mono;
  }
  return os.str();
}

MultiPoly MultiPoly::parse(const std::string& text, const Field& field, unsigned nvars, const std::string& var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  MultiPoly p(field, nvars);
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("bad polynomial text near position " + std::to_string(pos));
    }
    std::size_t end = pos;
    int depth = 0;
    while (end < s.size()) {
      const char ch = s[end];
      if (ch == '{') ++depth;
      if (ch == '}') --depth;
      if (depth == 0 && (ch == '+' || ch == '-') && end > pos && s[end - 1] != '^') break;
      ++end;
    }
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw std::invalid_argument("empty term in polynomial");
    FieldElement coef = field.one();
    Exponent e{};
    std::size_t fpos = 0;
    while (fpos <= term.size()) {
      std::size_t star = fpos;
      depth = 0;
      while (star < term.size() && !(term[star] == '*' && depth == 0)) {
        if (term[star] == '{') ++depth;
        if (term[star] == '}') --depth;
        ++star;
      }
      const std::string factor = term.substr(fpos, star - fpos);
      if (factor.empty()) throw std::invalid_argument("empty factor in term " + term);
      if (factor.rfind(var, 0) == 0 && factor.size() > var.size() &&
          std::isdigit(static_cast<unsigned char>(factor[var.size()]))) {
        const auto caret = factor.find('^');
        const unsigned idx = static_cast<unsigned>(std::stoul(factor.substr(var.size(), caret - var.size())));
        const unsigned ex = caret == std::string::npos ? 1u : static_cast<unsigned>(std::stoul(factor.substr(caret + 1)));
        if (idx >= nvars) throw std::invalid_argument("variable index out of range: " + factor);
        if (e[idx] + ex > 255) throw std::invalid_argument("exponent too large");
        e[idx] = static_cast<std::uint8_t>(e[idx] + ex);
      } else {
        coef *= FieldElement::parse(factor, field);
      }
      fpos = star + 1;
    }
    p.add_term(e, negative ? -coef : coef);
    pos = end;
  }
  return p;
}

MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (num.field() != den.field() || num.nvars() != den.nvars())
    throw std::invalid_argument("exact_divide: operands in different rings");
  const Exponent& lead = den.leading_exponent();
  const FieldElement lead_inv = den.leading_coefficient().inverse();
  MultiPoly rem = num, quot(num.field(), num.nvars());
  while (!rem.is_zero()) {
    const Exponent& e = rem.leading_exponent();
    Exponent q{};
    for (unsigned i = 0; i < kMaxVars; ++i) {
      if (e[i] < lead[i]) throw InexactDivision("exact_divide: nonzero remainder");
      q[i] = static_cast<std::uint8_t>(e[i] - lead[i]);
    }
    const FieldElement c = rem.leading_coefficient() * lead_inv;
    const MultiPoly t = MultiPoly::monomial(num.field(), num.nvars(), q, c);
    quot += t;
    rem -= t * den;
  }
  return quot;
}

// ---------------------------------------------------------------------------

MonomialBasis::MonomialBasis(unsigned nvars, unsigned degree) : nvars_(nvars), degree_(degree) {
  if (nvars > kMaxVars) throw std::invalid_argument("too many variables");
  if (nvars == 0) {
    if (degree == 0) monomials_.push_back(Exponent{});
  } else {
    Exponent e{};
    auto rec = [&](auto& self, unsigned i, unsigned left) -> void {
      if (i + 1 == nvars) {
        e[i] = static_cast<std::uint8_t>(left);
        monomials_.push_back(e);
        e[i] = 0;
        return;
      }
      for (unsigned k = left + 1; k-- > 0;) {
        e[i] = static_cast<std::uint8_t>(k);
        self(self, i + 1, left - k);
      }
      e[i] = 0;
    };
    rec(rec, 0, degree);
  }
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::int64_t MonomialBasis::index_of(const Exponent& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t num_monomials(unsigned nvars, std::int64_t t) {
  if (t < 0) return 0;
  if (nvars == 0) return t == 0 ? 1 : 0;
  return binomial(t + nvars - 1, nvars - 1);
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------

PolyMatrix::PolyMatrix(const Field& field, unsigned nvars, std::size_t rows, std::size_t cols)
    : field_(field), nvars_(nvars), rows_(rows), cols_(cols), data_(rows * cols, MultiPoly(field, nvars)) {}

ExactMatrix PolyMatrix::evaluate(const Vector& point) const {
  ExactMatrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).evaluate(point);
  return m;
}

PolyMatrix PolyMatrix::substitute(const std::vector<MultiPoly>& images) const {
  const unsigned nv = images.empty() ? nvars_ : images[0].nvars();
  PolyMatrix r(field_, nv, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i].substitute(images);
  return r;
}

MultiPoly PolyMatrix::minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor: not square");
  const std::size_t k = rows.size();
  if (k > 20) throw std::invalid_argument("minor: too large");
  std::map<std::uint32_t, MultiPoly> memo;
  // D(mask) = determinant of rows[0..|mask|-1] x (cols selected by mask)
  auto rec = [&](auto& self, std::uint32_t mask) -> MultiPoly {
    const unsigned size = static_cast<unsigned>(__builtin_popcount(mask));
    if (size == 0) return MultiPoly::constant(field_, nvars_, field_.one());
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const std::size_t r = rows[size - 1];
    MultiPoly sum(field_, nvars_);
    unsigned pos = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (!(mask >> j & 1)) continue;
      const MultiPoly& a = (*this)(r, cols[j]);
      // column j is the pos-th selected column; expansion along the last row
      const bool plus = ((size - 1 + pos) % 2) == 0;
      ++pos;
      if (a.is_zero()) continue;
      MultiPoly t = a * self(self, mask & ~(1u << j));
      if (plus) sum += t;
      else sum -= t;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  return rec(rec, k == 0 ? 0u : static_cast<std::uint32_t>((1ull << k) - 1));
}

MultiPoly PolyMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  std::vector<std::size_t> idx(rows_);
  for (std::size_t i = 0; i < rows_; ++i) idx[i] = i;
  return minor(idx, idx);
}

std::vector<MultiPoly> PolyMatrix::minors(std::size_t r) const {
  std::vector<MultiPoly> out;
  for (const auto& rs : subsets(rows_, r))
    for (const auto& cs : subsets(cols_, r)) out.push_back(minor(rs, cs));
  return out;
}

bool PolyMatrix::is_skew() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < rows_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  }
  return true;
}

SkewPolyMatrix::SkewPolyMatrix(PolyMatrix m) : m_(std::move(m)) {
  if (m_.rows() % 2) throw std::invalid_argument("skew matrix must have even size");
  if (!m_.is_skew()) throw std::invalid_argument("matrix is not skew-symmetric");
}

MultiPoly pfaffian_poly(const PolyMatrix& m, const std::vector<std::size_t>& indices) {
  const std::size_t n = indices.size();
  if (n % 2) throw std::invalid_argument("pfaffian: odd size");
  int common = -1;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const MultiPoly& e = m(indices[a], indices[b]);
      if (e.is_zero()) continue;
      if (!e.is_homogeneous()) throw std::invalid_argument("pfaffian: inhomogeneous entry");
      if (common < 0) common = e.degree();
      else if (e.degree() != common) throw std::invalid_argument("pfaffian: entries of different degrees");
    }
  std::map<std::uint32_t, MultiPoly> memo;
  auto rec = [&](auto& self, std::uint32_t mask) -> MultiPoly {
    if (mask == 0) return MultiPoly::constant(m.field(), m.nvars(), m.field().one());
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const unsigned i0 = static_cast<unsigned>(__builtin_ctz(mask));
    MultiPoly sum(m.field(), m.nvars());
    int pos = 0;
    for (unsigned j = i0 + 1; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      ++pos;
      const MultiPoly& a = m(indices[i0], indices[j]);
      if (a.is_zero()) continue;
      MultiPoly t = a * self(self, mask & ~(1u << i0) & ~(1u << j));
      if (pos % 2) sum += t;
      else sum -= t;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  return rec(rec, n == 0 ? 0u : static_cast<std::uint32_t>((1ull << n) - 1));
}

MultiPoly pfaffian_poly(const SkewPolyMatrix& m) {
  if (m.size() > 8) throw std::invalid_argument("pfaffian_poly: size above 8");
  std::vector<std::size_t> idx(m.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return pfaffian_poly(m.matrix(), idx);
}

}  // namespace skewnet
