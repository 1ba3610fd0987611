#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace skewnet {

/// Raised whenever two operands live in different fields.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {
struct ExtensionData;
}

class FieldElement;

/// Exact base field: QQ, GF(p) or GF(p^k) with k <= 8.
///
/// A Field is a small handle; extension fields share an interned, immutable
/// description (characteristic, degree, monic irreducible modulus).
class Field {
 public:
  enum class Kind : std::uint8_t { Rational, Prime, Extension };

  static constexpr unsigned kMaxExtensionDegree = 8;

  static Field rationals();
  /// `p` must be prime and below 2^31.
  static Field prime(std::uint32_t p);
  /// The modulus is the first monic irreducible polynomial of degree `k` met
  /// when enumerating coefficient vectors in lexicographic order starting at
  /// index `seed`.
  static Field extension(std::uint32_t p, unsigned k, std::uint64_t seed = 0);
  /// Finite field of order `q` (a prime power); k = 1 gives a prime field.
  static Field of_order(std::uint64_t q);
  /// Accepts "QQ", "GF(p)" and "GF(p,k)".
  static Field parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  bool is_finite() const { return kind_ != Kind::Rational; }
  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  /// Number of elements; 0 for QQ.
  std::uint64_t order() const;
  /// Coefficients c_0..c_k of the monic modulus (extension fields only).
  const std::vector<std::uint32_t>& modulus() const;
  std::string name() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t value) const;
  FieldElement from_rational(const mpq_class& value) const;
  /// Bijection [0, order) -> field, base-p digits as residue coefficients.
  FieldElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElement& x) const;
  FieldElement random(std::mt19937_64& rng) const;
  FieldElement from_coefficients(const std::vector<std::uint32_t>& coeffs) const;

  friend bool operator==(const Field& a, const Field& b);
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

  const detail::ExtensionData* extension_data() const { return ext_; }

 private:
  Kind kind_ = Kind::Rational;
  std::uint32_t p_ = 0;
  std::uint8_t k_ = 1;
  const detail::ExtensionData* ext_ = nullptr;
};

bool is_prime(std::uint64_t n);
std::uint32_t next_prime(std::uint32_t n);

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);
std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
inline std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
/// Residue of an integer (possibly negative) modulo p.
std::uint32_t mod_reduce(std::int64_t a, std::uint32_t p);
/// Residue of a rational; throws std::domain_error when p divides the denominator.
std::uint32_t mod_reduce(const mpq_class& a, std::uint32_t p);

/// An exact scalar tagged with its field. Operations between elements of
/// different fields throw FieldMismatch.
class FieldElement {
 public:
  using Residue = std::array<std::uint32_t, Field::kMaxExtensionDegree>;

  FieldElement() : FieldElement(Field::rationals().zero()) {}

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value (QQ only).
  const mpq_class& rational() const;
  /// Residue in [0, p) (prime fields only).
  std::uint32_t residue() const;
  /// Residue polynomial coefficients (finite fields; length = degree).
  std::vector<std::uint32_t> coefficients() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  /// Image under the canonical map into `target` (QQ -> GF, GF(p) -> GF(p^k)).
  FieldElement reduce_to(const Field& target) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  /// "-3/4" for rationals, "5" for prime fields, "{c0,c1,...}" for GF(p^k).
  std::string to_string() const;
  static FieldElement parse(std::string_view text, const Field& field);

 private:
  friend class Field;
  FieldElement(Field f, Residue r) : field_(f), value_(r) {}
  FieldElement(Field f, mpq_class q) : field_(f), value_(std::move(q)) {}
  void check_same(const FieldElement& o) const;
  const Residue& res() const { return std::get<Residue>(value_); }

  Field field_;
  std::variant<Residue, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);
std::ostream& operator<<(std::ostream& os, const Field& f);

}  // namespace skewnet
