#include "skewnet/matrix.hpp"

#include <map>
#include <sstream>

namespace skewnet {

ExactMatrix::ExactMatrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

ExactMatrix ExactMatrix::identity(const Field& field, std::size_t n) {
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

ExactMatrix ExactMatrix::from_ints(const Field& field, const std::vector<std::vector<long>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  ExactMatrix m(field, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
  }
  return m;
}

ExactMatrix ExactMatrix::from_rows(const Field& field, const std::vector<Vector>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  ExactMatrix m(field, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) {
      if (rows[i][j].field() != field) throw FieldMismatch("from_rows: entry from another field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

ExactMatrix ExactMatrix::from_fq(const Fq& F, const FqMat& a) {
  ExactMatrix m(F.field(), a.rows, a.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) m(i, j) = F.decode(a(i, j));
  return m;
}

Vector ExactMatrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector ExactMatrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  ExactMatrix s(field_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

ExactMatrix ExactMatrix::reduce_to(const Field& target) const {
  ExactMatrix r(target, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i].reduce_to(target);
  return r;
}

FqMat ExactMatrix::to_fq(const Fq& F) const {
  if (F.field() != field_) throw FieldMismatch("to_fq: field mismatch");
  FqMat m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.a[i] = F.encode(data_[i]);
  return m;
}

void ExactMatrix::check_shape(const ExactMatrix& o) const {
  if (field_ != o.field_) throw FieldMismatch("matrix fields differ");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shapes differ");
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  check_shape(o);
  ExactMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  check_shape(o);
  ExactMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (field_ != o.field_) throw FieldMismatch("matrix fields differ");
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  ExactMatrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

Vector ExactMatrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector r(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

ExactMatrix ExactMatrix::scaled(const FieldElement& c) const {
  ExactMatrix r = *this;
  for (auto& x : r.data_) x *= c;
  return r;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_skew() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  }
  return true;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// elimination

namespace {

std::vector<std::vector<mpz_class>> integer_rows(const ExactMatrix& m, std::vector<mpz_class>* scales = nullptr) {
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  if (scales) scales->assign(m.rows(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& x = m(i, j).rational();
      a[i][j] = x.get_num() * (l / x.get_den());
    }
    if (scales) (*scales)[i] = l;
  }
  return a;
}

// Fraction-free forward elimination. Leaves `a` in row echelon form.
std::size_t bareiss_echelon(std::vector<std::vector<mpz_class>>& a, std::vector<std::size_t>& pivots, int& sign,
                            mpz_class& prev) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  prev = 1;
  sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return r;
}

RankKernel rank_kernel_rational(const ExactMatrix& m) {
  auto a = integer_rows(m);
  std::vector<std::size_t> pivots;
  int sign;
  mpz_class prev;
  const std::size_t r = bareiss_echelon(a, pivots, sign, prev);

  // back substitution on the r echelon rows gives the RREF
  std::vector<std::vector<mpq_class>> e(r, std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e[i][j] = a[i][j];
  for (std::size_t i = r; i-- > 0;) {
    const mpq_class lead = e[i][pivots[i]];
    for (auto& x : e[i]) x /= lead;
    for (std::size_t k = 0; k < i; ++k) {
      const mpq_class f = e[k][pivots[i]];
      if (f == 0) continue;
      for (std::size_t j = pivots[i]; j < m.cols(); ++j) e[k][j] -= f * e[i][j];
    }
  }
  RankKernel out;
  out.rank = r;
  out.pivot_columns = pivots;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  const Field& Q = m.field();
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), Q.zero());
    v[free] = Q.one();
    for (std::size_t i = 0; i < r; ++i) v[pivots[i]] = Q.from_rational(-e[i][free]);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a, mpz_class* last_pivot) {
  std::vector<std::size_t> pivots;
  int sign;
  mpz_class prev;
  const std::size_t r = bareiss_echelon(a, pivots, sign, prev);
  if (last_pivot) *last_pivot = prev * sign;
  return r;
}

RankKernel rank_kernel(const ExactMatrix& m) {
  if (m.field().is_rational()) return rank_kernel_rational(m);
  const Fq& F = Fq::of(m.field());
  FqMat a = m.to_fq(F);
  FqMat reduced = a;
  RankKernel out;
  out.pivot_columns = fq_rref(F, reduced);
  out.rank = out.pivot_columns.size();
  FqMat ker = fq_kernel(F, std::move(a));
  for (std::size_t i = 0; i < ker.rows; ++i) {
    Vector v;
    v.reserve(ker.cols);
    for (std::size_t j = 0; j < ker.cols; ++j) v.push_back(F.decode(ker(i, j)));
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const ExactMatrix& m) {
  if (m.field().is_rational()) return bareiss_rank(integer_rows(m));
  const Fq& F = Fq::of(m.field());
  return fq_rank(F, m.to_fq(F));
}

std::vector<Vector> left_kernel(const ExactMatrix& m) { return rank_kernel(m.transpose()).kernel; }

FieldElement determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Field& field = m.field();
  if (m.rows() == 0) return field.one();
  if (field.is_rational()) {
    std::vector<mpz_class> scales;
    auto a = integer_rows(m, &scales);
    std::vector<std::size_t> pivots;
    int sign;
    mpz_class prev;
    const std::size_t r = bareiss_echelon(a, pivots, sign, prev);
    if (r < m.rows()) return field.zero();
    mpz_class denom = 1;
    for (const auto& s : scales) denom *= s;
    return field.from_rational(mpq_class(prev * sign, denom));
  }
  const Fq& F = Fq::of(field);
  FqMat a = m.to_fq(F);
  const std::size_t n = a.rows;
  std::uint32_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return field.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = F.neg(det);
    }
    det = F.mul(det, a(c, c));
    const std::uint32_t inv = F.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (!a(i, c)) continue;
      const std::uint32_t f = F.neg(F.mul(a(i, c), inv));
      for (std::size_t j = c; j < n; ++j) a(i, j) = F.add(a(i, j), F.mul(f, a(c, j)));
    }
  }
  return F.decode(det);
}

ExactMatrix rref(const ExactMatrix& m) {
  const Field& field = m.field();
  if (field.is_rational()) {
    // rows of the RREF are recovered from the kernel-free description
    RankKernel rk = rank_kernel_rational(m);
    ExactMatrix r(field, rk.rank, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : rk.pivot_columns) is_pivot[c] = true;
    for (std::size_t i = 0; i < rk.rank; ++i) r(i, rk.pivot_columns[i]) = field.one();
    std::size_t f = 0;
    for (std::size_t col = 0; col < m.cols(); ++col) {
      if (is_pivot[col]) continue;
      for (std::size_t i = 0; i < rk.rank; ++i) r(i, col) = -rk.kernel[f][rk.pivot_columns[i]];
      ++f;
    }
    return r;
  }
  const Fq& F = Fq::of(field);
  FqMat a = m.to_fq(F);
  const auto pivots = fq_rref(F, a);
  FqMat top(pivots.size(), a.cols);
  std::copy(a.a.begin(), a.a.begin() + static_cast<std::ptrdiff_t>(pivots.size() * a.cols), top.a.begin());
  return ExactMatrix::from_fq(F, top);
}

FieldElement pfaffian_scalar(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("pfaffian: matrix not square");
  if (m.rows() % 2) throw std::invalid_argument("pfaffian: odd size");
  if (m.rows() > 12) throw std::invalid_argument("pfaffian: size above 12");
  if (m.field().is_finite() && m.field().characteristic() == 2)
    throw std::domain_error("pfaffian: characteristic 2 is not supported");
  if (!m.is_skew()) throw std::invalid_argument("pfaffian: matrix not skew-symmetric");

  const std::size_t n = m.rows();
  std::map<std::uint32_t, FieldElement> memo;
  auto rec = [&](auto& self, std::uint32_t mask) -> FieldElement {
    if (mask == 0) return m.field().one();
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const unsigned i0 = static_cast<unsigned>(__builtin_ctz(mask));
    FieldElement sum = m.field().zero();
    int pos = 0;
    for (unsigned j = i0 + 1; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      ++pos;
      const FieldElement& a = m(i0, j);
      if (a.is_zero()) continue;
      FieldElement term = a * self(self, mask & ~(1u << i0) & ~(1u << j));
      if (pos % 2) sum += term;
      else sum -= term;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  return rec(rec, n == 0 ? 0u : (1u << n) - 1);
}

FieldElement dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size() || a.empty()) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    return Field::rationals().zero();
  }
  FieldElement s = a[0].field().zero();
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero_vector(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector normalize_projective(Vector v) {
  std::size_t lead = 0;
  while (lead < v.size() && v[lead].is_zero()) ++lead;
  if (lead == v.size()) return v;
  const Field& field = v[lead].field();
  if (field.is_finite()) {
    const FieldElement inv = v[lead].inverse();
    for (auto& x : v) x *= inv;
    return v;
  }
  mpz_class l = 1, g = 0;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.rational().get_den_mpz_t());
  for (const auto& x : v) {
    mpz_class num = x.rational().get_num() * (l / x.rational().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  mpq_class factor(l, g);
  if (v[lead].rational() < 0) factor = -factor;
  factor.canonicalize();
  const FieldElement f = field.from_rational(factor);
  for (auto& x : v) x *= f;
  return v;
}

}  // namespace skewnet
