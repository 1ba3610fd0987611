#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "skewnet/correspondence.hpp"

namespace skewnet {

/// A point of C = {rank f_v <= 3} over some finite field.
struct CPoint {
  Field field;
  Vector c;
  std::string method;  // "enumeration" or "hyperplane-section"
};

struct CPointSearch {
  std::vector<CPoint> points;
  std::vector<std::string> log;  // one line per rung of the ladder
};

/// All v in P^{2m-1}(GF(q)) with rank f_v <= 3 (net over a finite field).
std::vector<Vector> c_points_by_enumeration(const ANet& net, std::uint64_t limit = 10'000'000);

/// C-points cut out by a random hyperplane h over a large prime field:
/// eigenvectors of multiplication maps on the dual of (I_C + h) in a degree
/// where its Hilbert function is constant. Returns the rational points found.
std::vector<Vector> c_points_by_hyperplane_section(const ANet& net, std::uint64_t seed, const Options& opts = {},
                                                   std::string* note = nullptr);

/// Enumerates P^5 over GF(3), GF(5), GF(7), GF(9) (skipping fields of bad
/// reduction) and falls back to hyperplane sections over GF(opts.prime).
CPointSearch search_c_points(const ANet& net, const Options& opts = {}, std::size_t max_points = 12);

/// Roots in GF(p) of a univariate polynomial (ascending coefficients).
std::vector<std::uint32_t> roots_mod_p(const std::vector<std::uint32_t>& coeffs, std::uint32_t p);

struct YLine {
  Vector a0, a1;
  bool is_mc = false;  // Ker f(a0) and Ker f(a1) meet
  SplittingType split;
};

struct LinesOnY {
  std::string field;
  std::uint64_t lines_checked = 0;
  std::vector<YLine> lines;
};

/// Every line of P(A)(GF(q)) on Y, classified (net over GF(q), q >= m).
LinesOnY lines_on_y(const ANet& net, std::uint64_t limit = 10'000'000);

/// Random points of Y, Q, X and W over a prime field with characteristic
/// not 2, found as roots on random lines. Requires (n, 2m) = (5, 6).
class LargeFieldSampler {
 public:
  LargeFieldSampler(const ANet& net, std::uint64_t seed);
  /// Reuses a quartic already computed for this net.
  LargeFieldSampler(const ANet& net, MultiPoly q, std::uint64_t seed);

  void reseed(std::uint64_t seed) { rng_.seed(seed); }
  const MultiPoly& quartic() const { return q_; }

  const ANet& net() const { return net_; }
  /// a with rank f(a) = 2m - 2.
  Vector y_point();
  /// v with Q(v) = 0.
  Vector q_point();
  /// Plane basis of a point of X.
  ExactMatrix x_point();
  /// (a, U) with Ker f(a) and U meeting in a line.
  std::pair<Vector, ExactMatrix> w_point();

 private:
  Vector random_vector(std::size_t len);
  Vector root_on_line(const std::function<FieldElement(const Vector&)>& g, unsigned degree, std::size_t len);

  ANet net_;
  std::uint32_t p_;
  MultiPoly q_;
  std::mt19937_64 rng_;
};

}  // namespace skewnet
