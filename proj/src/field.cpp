#include "skewnet/field.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <tuple>

namespace skewnet {

namespace detail {

using Poly = std::vector<std::uint32_t>;  // ascending coefficients over GF(p)

struct ExtensionData {
  std::uint32_t p;
  unsigned k;
  std::uint64_t seed;
  Poly modulus;  // monic, size k + 1
  std::uint64_t order;
};

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = mod_inverse(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint32_t c = mod_mul(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint32_t sub = mod_mul(c, m[i], p);
      a[shift + i] = (a[shift + i] + p - sub) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(base, m, p);
  while (e > 0) {
    if (e & 1) result = poly_mod(poly_mul(result, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Inverse of a modulo m via the extended Euclidean algorithm.
Poly poly_inverse(const Poly& a, const Poly& m, std::uint32_t p) {
  Poly r0 = m, r1 = a, s0{}, s1{1};
  trim(r1);
  while (!r1.empty() && r1.size() > 1) {
    // quotient of r0 / r1
    Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
    Poly rem = r0;
    const std::uint32_t inv = mod_inverse(r1.back(), p);
    while (rem.size() >= r1.size() && !rem.empty()) {
      const std::uint32_t c = mod_mul(rem.back(), inv, p);
      const std::size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i)
        rem[shift + i] = (rem[shift + i] + p - mod_mul(c, r1[i], p)) % p;
      trim(rem);
    }
    trim(q);
    Poly s2 = poly_sub(s0, poly_mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw std::domain_error("element is not invertible");
  const std::uint32_t inv = mod_inverse(r1[0], p);
  for (auto& c : s1) c = mod_mul(c, inv, p);
  return poly_mod(s1, m, p);
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  if (k <= 1) return true;
  Poly x{0, 1};
  Poly xp = x;
  for (unsigned j = 1; j < k; ++j) {
    xp = poly_powmod(xp, p, f, p);  // x^(p^j) mod f
    Poly g = poly_gcd(f, poly_sub(xp, x, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::uint64_t checked_power(std::uint32_t p, unsigned k) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > (std::uint64_t{1} << 62) / p) throw std::invalid_argument("field order exceeds 2^62");
    q *= p;
  }
  return q;
}

const ExtensionData* intern_extension(std::uint32_t p, unsigned k, std::uint64_t seed) {
  static std::mutex mutex;
  static std::map<std::tuple<std::uint32_t, unsigned, std::uint64_t>, std::unique_ptr<ExtensionData>> registry;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(p, k, seed);
  if (auto it = registry.find(key); it != registry.end()) return it->second.get();

  const std::uint64_t q = checked_power(p, k);
  Poly f(k + 1, 0);
  f[k] = 1;
  for (std::uint64_t s = seed;; ++s) {
    if (s >= q + seed) throw std::logic_error("no irreducible polynomial found");
    std::uint64_t idx = s % q;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(idx % p);
      idx /= p;
    }
    if (f[0] != 0 && is_irreducible(f, p)) break;
  }
  auto data = std::make_unique<ExtensionData>(ExtensionData{p, k, seed, f, q});
  auto* raw = data.get();
  registry.emplace(key, std::move(data));
  return raw;
}

}  // namespace
}  // namespace detail

// ---------------------------------------------------------------------------
// modular helpers

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t next_prime(std::uint32_t n) {
  std::uint32_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p, base = a % p;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  if (new_r == 0) throw std::domain_error("division by zero");
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t mod_reduce(std::int64_t a, std::uint32_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_reduce(const mpq_class& a, std::uint32_t p) {
  const std::uint32_t num = static_cast<std::uint32_t>(mpz_fdiv_ui(a.get_num_mpz_t(), p));
  const std::uint32_t den = static_cast<std::uint32_t>(mpz_fdiv_ui(a.get_den_mpz_t(), p));
  if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
  return mod_mul(num, mod_inverse(den, p), p);
}

// ---------------------------------------------------------------------------
// Field

Field Field::rationals() { return Field{}; }

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) throw std::invalid_argument("GF(p) needs a prime p < 2^31");
  Field f;
  f.kind_ = Kind::Prime;
  f.p_ = p;
  f.k_ = 1;
  return f;
}

Field Field::extension(std::uint32_t p, unsigned k, std::uint64_t seed) {
  if (k == 0 || k > kMaxExtensionDegree) throw std::invalid_argument("extension degree must be in 1..8");
  if (k == 1) return prime(p);
  if (!is_prime(p)) throw std::invalid_argument("GF(p^k) needs a prime p");
  Field f;
  f.kind_ = Kind::Extension;
  f.p_ = p;
  f.k_ = static_cast<std::uint8_t>(k);
  f.ext_ = detail::intern_extension(p, k, seed);
  return f;
}

Field Field::of_order(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  for (std::uint64_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    unsigned k = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r != 1 || !is_prime(p)) throw std::invalid_argument("field order must be a prime power");
    return extension(static_cast<std::uint32_t>(p), k);
  }
  throw std::invalid_argument("field order must be a prime power");
}

Field Field::parse(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = strip(text);
  if (text == "QQ") return rationals();
  if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
    std::string_view inner = text.substr(3, text.size() - 4);
    auto comma = inner.find(',');
    auto to_u64 = [&](std::string_view s) {
      s = strip(s);
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || ptr != s.data() + s.size()) throw std::invalid_argument("bad field name");
      return v;
    };
    if (comma == std::string_view::npos) return of_order(to_u64(inner));
    const auto p = to_u64(inner.substr(0, comma));
    const auto k = to_u64(inner.substr(comma + 1));
    if (p >= (1ull << 31)) throw std::invalid_argument("characteristic too large");
    return extension(static_cast<std::uint32_t>(p), static_cast<unsigned>(k));
  }
  throw std::invalid_argument("unrecognised field name: " + std::string(text));
}

std::uint64_t Field::order() const {
  switch (kind_) {
    case Kind::Rational: return 0;
    case Kind::Prime: return p_;
    case Kind::Extension: return ext_->order;
  }
  return 0;
}

const std::vector<std::uint32_t>& Field::modulus() const {
  if (kind_ != Kind::Extension) throw std::logic_error("modulus requested for a non-extension field");
  return ext_->modulus;
}

std::string Field::name() const {
  switch (kind_) {
    case Kind::Rational: return "QQ";
    case Kind::Prime: return "GF(" + std::to_string(p_) + ")";
    case Kind::Extension: return "GF(" + std::to_string(p_) + "," + std::to_string(k_) + ")";
  }
  return "?";
}

bool operator==(const Field& a, const Field& b) {
  if (a.kind_ != b.kind_ || a.p_ != b.p_ || a.k_ != b.k_) return false;
  if (a.kind_ == Field::Kind::Extension) return a.ext_ == b.ext_ || a.ext_->modulus == b.ext_->modulus;
  return true;
}

FieldElement Field::zero() const {
  if (kind_ == Kind::Rational) return FieldElement(*this, mpq_class(0));
  return FieldElement(*this, FieldElement::Residue{});
}

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(std::int64_t value) const {
  if (kind_ == Kind::Rational) return FieldElement(*this, mpq_class(static_cast<long>(value)));
  FieldElement::Residue r{};
  r[0] = mod_reduce(value, p_);
  return FieldElement(*this, r);
}

FieldElement Field::from_rational(const mpq_class& value) const {
  if (kind_ == Kind::Rational) {
    mpq_class v = value;
    v.canonicalize();
    return FieldElement(*this, v);
  }
  FieldElement::Residue r{};
  r[0] = mod_reduce(value, p_);
  return FieldElement(*this, r);
}

FieldElement Field::element_at(std::uint64_t index) const {
  if (kind_ == Kind::Rational) throw std::logic_error("QQ has no element enumeration");
  if (index >= order()) throw std::out_of_range("element index out of range");
  FieldElement::Residue r{};
  for (unsigned i = 0; i < k_; ++i) {
    r[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return FieldElement(*this, r);
}

std::uint64_t Field::index_of(const FieldElement& x) const {
  if (x.field() != *this) throw FieldMismatch("index_of: element from another field");
  if (kind_ == Kind::Rational) throw std::logic_error("QQ has no element enumeration");
  std::uint64_t idx = 0;
  const auto c = x.coefficients();
  for (unsigned i = k_; i-- > 0;) idx = idx * p_ + c[i];
  return idx;
}

FieldElement Field::random(std::mt19937_64& rng) const {
  if (kind_ == Kind::Rational) throw std::logic_error("QQ has no uniform distribution");
  return element_at(rng() % order());
}

FieldElement Field::from_coefficients(const std::vector<std::uint32_t>& coeffs) const {
  if (kind_ == Kind::Rational) throw std::logic_error("QQ elements have no residue coefficients");
  FieldElement::Residue r{};
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i >= k_) {
      if (coeffs[i] % p_ != 0) throw std::invalid_argument("too many residue coefficients");
      continue;
    }
    r[i] = coeffs[i] % p_;
  }
  return FieldElement(*this, r);
}

// ---------------------------------------------------------------------------
// FieldElement

void FieldElement::check_same(const FieldElement& o) const {
  if (field_ != o.field_) throw FieldMismatch("arithmetic between " + field_.name() + " and " + o.field_.name());
}

bool FieldElement::is_zero() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 0;
  const auto& r = res();
  return std::all_of(r.begin(), r.begin() + field_.degree(), [](auto c) { return c == 0; });
}

bool FieldElement::is_one() const { return *this == field_.one(); }

const mpq_class& FieldElement::rational() const {
  if (!field_.is_rational()) throw std::logic_error("rational() on a finite-field element");
  return std::get<mpq_class>(value_);
}

std::uint32_t FieldElement::residue() const {
  if (field_.kind() != Field::Kind::Prime) throw std::logic_error("residue() needs a prime-field element");
  return res()[0];
}

std::vector<std::uint32_t> FieldElement::coefficients() const {
  if (field_.is_rational()) throw std::logic_error("coefficients() on a rational");
  const auto& r = res();
  return std::vector<std::uint32_t>(r.begin(), r.begin() + field_.degree());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  if (field_.is_rational()) return FieldElement(field_, mpq_class(rational() + o.rational()));
  Residue r{};
  const auto p = field_.characteristic();
  for (unsigned i = 0; i < field_.degree(); ++i) {
    const std::uint32_t s = res()[i] + o.res()[i];
    r[i] = s >= p ? s - p : s;
  }
  return FieldElement(field_, r);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  if (field_.is_rational()) return FieldElement(field_, mpq_class(rational() - o.rational()));
  Residue r{};
  const auto p = field_.characteristic();
  for (unsigned i = 0; i < field_.degree(); ++i) {
    r[i] = res()[i] >= o.res()[i] ? res()[i] - o.res()[i] : res()[i] + p - o.res()[i];
  }
  return FieldElement(field_, r);
}

FieldElement FieldElement::operator-() const { return field_.zero() - *this; }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  const auto p = field_.characteristic();
  switch (field_.kind()) {
    case Field::Kind::Rational: return FieldElement(field_, mpq_class(rational() * o.rational()));
    case Field::Kind::Prime: {
      Residue r{};
      r[0] = mod_mul(res()[0], o.res()[0], p);
      return FieldElement(field_, r);
    }
    case Field::Kind::Extension: {
      const unsigned k = field_.degree();
      const auto& m = field_.modulus();
      std::array<std::uint64_t, 2 * Field::kMaxExtensionDegree> prod{};
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(res()[i]) * o.res()[j]) % p;
      for (unsigned d = 2 * k - 1; d-- > k;) {
        const std::uint64_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (unsigned i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * m[i]) % p;
      }
      Residue r{};
      for (unsigned i = 0; i < k; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
      return FieldElement(field_, r);
    }
  }
  return field_.zero();
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  const auto p = field_.characteristic();
  switch (field_.kind()) {
    case Field::Kind::Rational: return FieldElement(field_, mpq_class(1 / rational()));
    case Field::Kind::Prime: {
      Residue r{};
      r[0] = mod_inverse(res()[0], p);
      return FieldElement(field_, r);
    }
    case Field::Kind::Extension: {
      auto inv = detail::poly_inverse(coefficients(), field_.modulus(), p);
      return field_.from_coefficients(inv);
    }
  }
  return field_.zero();
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return *this * o.inverse();
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result = field_.one(), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

FieldElement FieldElement::reduce_to(const Field& target) const {
  if (field_ == target) return *this;
  if (field_.is_rational()) {
    if (target.is_rational()) return *this;
    return target.from_rational(rational());
  }
  if (field_.kind() == Field::Kind::Prime && target.is_finite() && target.characteristic() == field_.characteristic())
    return target.from_int(res()[0]);
  throw FieldMismatch("no canonical map from " + field_.name() + " to " + target.name());
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (field_ != o.field_) return false;
  if (field_.is_rational()) return rational() == o.rational();
  for (unsigned i = 0; i < field_.degree(); ++i)
    if (res()[i] != o.res()[i]) return false;
  return true;
}

std::string FieldElement::to_string() const {
  switch (field_.kind()) {
    case Field::Kind::Rational: return rational().get_str();
    case Field::Kind::Prime: return std::to_string(res()[0]);
    case Field::Kind::Extension: {
      std::string s = "{";
      for (unsigned i = 0; i < field_.degree(); ++i) {
        if (i) s += ",";
        s += std::to_string(res()[i]);
      }
      return s + "}";
    }
  }
  return "?";
}

FieldElement FieldElement::parse(std::string_view text, const Field& field) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw std::invalid_argument("empty scalar");
  if (s.front() == '{') {
    if (s.back() != '}' || field.kind() != Field::Kind::Extension) throw std::invalid_argument("bad residue vector: " + s);
    std::vector<std::uint32_t> coeffs;
    std::stringstream ss(s.substr(1, s.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(mod_reduce(std::stoll(item), field.characteristic()));
    return field.from_coefficients(coeffs);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad scalar: " + s);
  q.canonicalize();
  return field.from_rational(q);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }
std::ostream& operator<<(std::ostream& os, const Field& f) { return os << f.name(); }

}  // namespace skewnet
