#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewnet/matrix.hpp"
#include "skewnet/mod_echelon.hpp"
#include "skewnet/multipoly.hpp"
#include "skewnet/options.hpp"

namespace skewnet {

/// Homogeneous ideal given by generators. Zero generators are dropped.
class HomogeneousIdeal {
 public:
  HomogeneousIdeal(const Field& field, unsigned nvars, std::vector<MultiPoly> generators = {});

  const Field& field() const { return field_; }
  unsigned nvars() const { return nvars_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }
  void add(const MultiPoly& g);
  int max_degree() const;
  HomogeneousIdeal reduce_to(const Field& target) const;
  /// True when every generator vanishes at the point.
  bool vanishes_at(const Vector& point) const;

 private:
  Field field_;
  unsigned nvars_;
  std::vector<MultiPoly> gens_;
};

/// Rows: (generator, multiplier monomial) pairs; columns: degree-t monomials.
ExactMatrix macaulay_matrix(const HomogeneousIdeal& ideal, unsigned t);

/// Echelon basis of I_t for an ideal over a prime field.
ModEchelon macaulay_echelon(const HomogeneousIdeal& ideal, unsigned t);

/// dim I_t. Over QQ: ranks at two primes, exact elimination if they differ.
std::uint64_t macaulay_rank(const HomogeneousIdeal& ideal, unsigned t, const Options& opts = {});
std::uint64_t hilbert_function(const HomogeneousIdeal& ideal, unsigned t, const Options& opts = {});

struct HilbertData {
  unsigned window_start = 0, window_end = 0;  // inclusive
  std::vector<std::uint64_t> values;          // HF(window_start..window_end)
  unsigned expected_dim = 0;
  std::optional<std::vector<mpq_class>> polynomial;  // ascending coefficients in t
  unsigned fit_start = 0;                            // first degree of the matched segment
  mpq_class degree;                                  // leading coefficient * dim!
  mpq_class arithmetic_genus;                        // (-1)^dim (P(0) - 1)
  std::string field;                                 // field the ranks were computed over
  std::string polynomial_text() const;
};

/// Throws std::runtime_error when nothing stabilizes before the degree cap.
HilbertData fit_hilbert_polynomial(const HomogeneousIdeal& ideal, unsigned expected_dim, const Options& opts = {});

enum class Emptiness { Empty, NonEmpty, Inconclusive };
const char* to_string(Emptiness e);

struct EmptinessResult {
  Emptiness state = Emptiness::Inconclusive;
  int witness_degree = -1;
  std::vector<std::uint64_t> values;  // HF(0..last computed)
  std::string reason;
};

EmptinessResult is_empty_projective(const HomogeneousIdeal& ideal, const Options& opts = {});

/// Macaulay's upper bound h^<t> for the growth of a Hilbert function.
std::uint64_t macaulay_bound(std::uint64_t h, unsigned t);

/// Generators plus all codim x codim minors of the Jacobian matrix.
HomogeneousIdeal jacobian_ideal(const HomogeneousIdeal& ideal, unsigned codim = 1);
HomogeneousIdeal minors_ideal(const PolyMatrix& m, std::size_t r);

}  // namespace skewnet
