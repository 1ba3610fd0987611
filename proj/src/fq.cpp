#include "skewnet/fq.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace skewnet {

namespace {
constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 22;
constexpr std::uint64_t kAddTableLimit = 1024;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}
}  // namespace

const Fq& Fq::of(const Field& field) {
  static std::mutex mutex;
  static std::map<std::tuple<std::uint32_t, unsigned, const void*>, std::unique_ptr<Fq>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(field.characteristic(), field.degree(), static_cast<const void*>(field.extension_data()));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::unique_ptr<Fq>(new Fq(field))).first;
  return *it->second;
}

Fq::Fq(const Field& field) : field_(field) {
  if (!field.is_finite()) throw std::invalid_argument("Fq needs a finite field");
  p_ = field.characteristic();
  k_ = field.degree();
  q_ = field.order();
  if (k_ == 1 || q_ > kLogTableLimit) return;

  const auto factors = prime_factors(q_ - 1);
  FieldElement g = field.one();
  for (std::uint64_t c = 1; c < q_; ++c) {
    FieldElement cand = field.element_at(c);
    bool primitive = true;
    for (auto r : factors)
      if (cand.pow((q_ - 1) / r).is_one()) {
        primitive = false;
        break;
      }
    if (primitive) {
      g = cand;
      break;
    }
  }
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  FieldElement x = field.one();
  for (std::uint64_t i = 0; i + 1 < q_; ++i) {
    const auto code = static_cast<std::uint32_t>(field.index_of(x));
    exp_[i] = code;
    log_[code] = static_cast<std::uint32_t>(i);
    x *= g;
  }
  if (q_ <= kAddTableLimit) {
    add_table_.resize(q_ * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::uint32_t r = 0, scale = 1, aa = a, bb = b;
        for (unsigned i = 0; i < k_; ++i) {
          r += ((aa % p_ + bb % p_) % p_) * scale;
          aa /= p_;
          bb /= p_;
          scale *= p_;
        }
        add_table_[a * q_ + b] = r;
      }
  }
}

std::uint32_t Fq::add_ext(std::uint32_t a, std::uint32_t b) const {
  if (!add_table_.empty()) return add_table_[a * q_ + b];
  std::uint64_t r = 0, scale = 1, aa = a, bb = b;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((aa % p_ + bb % p_) % p_) * scale;
    aa /= p_;
    bb /= p_;
    scale *= p_;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t Fq::neg_ext(std::uint32_t a) const {
  std::uint64_t r = 0, scale = 1, aa = a;
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint64_t d = aa % p_;
    r += (d == 0 ? 0 : p_ - d) * scale;
    aa /= p_;
    scale *= p_;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t Fq::mul_ext(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
  return encode(decode(a) * decode(b));
}

std::uint32_t Fq::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("division by zero");
  if (k_ == 1) return mod_inverse(a, p_);
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return encode(decode(a).inverse());
}

std::uint32_t Fq::encode(const FieldElement& x) const {
  if (k_ == 1) return x.reduce_to(field_).residue();
  return static_cast<std::uint32_t>(field_.index_of(x.reduce_to(field_)));
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> fq_rref(const Fq& F, FqMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
    const std::uint32_t inv = F.inv(m(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) = F.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const std::uint32_t f = F.neg(m(i, c));
      for (std::size_t j = c; j < m.cols; ++j)
        if (m(r, j)) m(i, j) = F.add(m(i, j), F.mul(f, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t fq_rank(const Fq& F, FqMat m) { return fq_rref(F, m).size(); }

FqMat fq_kernel(const Fq& F, FqMat m) {
  const auto pivots = fq_rref(F, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  FqMat ker(m.cols - pivots.size(), m.cols);
  std::size_t row = 0;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    ker(row, free) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) ker(row, pivots[i]) = F.neg(m(i, free));
    ++row;
  }
  return ker;
}

FqMat fq_multiply(const Fq& F, const FqMat& a, const FqMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("fq_multiply: shape mismatch");
  FqMat c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const std::uint32_t x = a(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        if (b(k, j)) c(i, j) = F.add(c(i, j), F.mul(x, b(k, j)));
    }
  return c;
}

FqMat fq_inverse(const Fq& F, const FqMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("fq_inverse: not square");
  const std::size_t n = m.rows;
  FqMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = fq_rref(F, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  FqMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<std::uint32_t> fq_charpoly(const Fq& F, FqMat h) {
  if (h.rows != h.cols) throw std::invalid_argument("fq_charpoly: not square");
  const std::size_t n = h.rows;
  // similarity reduction to upper Hessenberg form
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h(i, j) == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, j + 1));
    }
    const std::uint32_t inv = F.inv(h(j + 1, j));
    for (std::size_t r = j + 2; r < n; ++r) {
      const std::uint32_t u = F.mul(h(r, j), inv);
      if (!u) continue;
      for (std::size_t c = 0; c < n; ++c) h(r, c) = F.sub(h(r, c), F.mul(u, h(j + 1, c)));
      for (std::size_t rr = 0; rr < n; ++rr) h(rr, j + 1) = F.add(h(rr, j + 1), F.mul(u, h(rr, r)));
    }
  }
  std::vector<std::vector<std::uint32_t>> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::uint32_t> next(k + 2, 0);
    for (std::size_t d = 0; d <= k; ++d) {
      next[d + 1] = F.add(next[d + 1], p[k][d]);
      next[d] = F.sub(next[d], F.mul(h(k, k), p[k][d]));
    }
    std::uint32_t t = 1;
    for (std::size_t i = k; i-- > 0;) {
      t = F.mul(t, h(i + 1, i));
      const std::uint32_t c = F.mul(h(i, k), t);
      if (!c) continue;
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] = F.sub(next[d], F.mul(c, p[i][d]));
    }
    p[k + 1] = std::move(next);
  }
  return p[n];
}

}  // namespace skewnet
