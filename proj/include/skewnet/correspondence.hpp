#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "skewnet/grassmann.hpp"
#include "skewnet/ideals.hpp"
#include "skewnet/net.hpp"
#include "skewnet/options.hpp"

namespace skewnet {

/// Element codes of a net over a finite field, for enumeration loops.
struct NetCodes {
  explicit NetCodes(const ANet& net);
  const Fq* F;
  std::size_t n, dim;
  std::vector<FqMat> mats;

  FqMat fa(const std::vector<std::uint32_t>& a) const;
  FqMat fv(const std::vector<std::uint32_t>& v) const;
  std::uint32_t form(std::size_t i, const std::uint32_t* u, const std::uint32_t* w) const;
  Vector decode(const std::vector<std::uint32_t>& x) const;
};

/// Ideal in a_1..a_n of the (2m-2)-Pfaffians of principal submatrices of f(a).
HomogeneousIdeal subpfaffian_ideal(const ANet& net);

struct RegularityResult {
  TriVerdict verdict;
  EmptinessResult emptiness;
  std::optional<Vector> bad_point;  // a with rank f(a) <= 2m-4, when found
};
RegularityResult is_regular(const ANet& net, const Options& opts = {});

/// Pf(f(a)); throws DegenerateNet when identically zero.
MultiPoly pfaffian_hypersurface(const ANet& net);
/// Plucker quadrics plus the n linear forms sum_{j<k} (F_i)_jk p_jk.
HomogeneousIdeal x_ideal(const ANet& net);
/// The n linear forms of x_ideal evaluated at a Plucker point.
bool on_x(const ANet& net, const PluckerPoint& p);

/// Plucker point of Ker f(a); throws unless rank f(a) = 2m - 2.
PluckerPoint kappa(const ANet& net, const Vector& a);

struct QuarticResult {
  MultiPoly q;
  std::vector<MultiPoly> routes;  // (-1)^i Delta_i / v_i, zero when Delta_i = 0
  bool consistent = true;
};
/// Quartic Q with Delta_i = (-1)^i Q v_i; normalized. Throws on inconsistency.
QuarticResult q_quartic_routes(const ANet& net);
MultiPoly q_quartic(const ANet& net);
/// 4 x 4 minors of the f_v matrix.
HomogeneousIdeal c_ideal(const ANet& net);
/// 3 x 3 minors of the f_v matrix (the rank <= 2 locus in P(V)).
HomogeneousIdeal rank2_ideal(const ANet& net);

std::size_t rank_fv(const ANet& net, const Vector& v);

/// P(Ker f_v) in P(A): one vector (a point) or two (the line M_v).
std::vector<Vector> psi_fiber(const ANet& net, const Vector& v);

struct PhiFiber {
  std::optional<PluckerPoint> point;
  std::optional<GrassmannLine> line;
};
/// (Im f_v)^perp as a point or a pencil of planes through v.
PhiFiber phi_fiber(const ANet& net, const Vector& v);

struct SplittingType {
  int d1 = 0, d2 = 0;
  std::vector<std::uint64_t> h0;  // h^0(K(s)) for s = 0, 1, ...
};
/// Splitting type (d1 <= d2) of K = O(-d1) + O(-d2), the kernel of the pencil
/// V (x) O_M(-1) -> V* (x) O_M given by f(s a0 + t a1).
SplittingType splitting_type_on_line(const ANet& net, const Vector& a0, const Vector& a1);
/// h^0(K(t)) for the pencil.
std::uint64_t pencil_sections(const ANet& net, const Vector& a0, const Vector& a1, unsigned t);

/// Singularity test of X at the plane with the given 2 x 2m basis.
bool tangent_test_x(const ANet& net, const ExactMatrix& U);

/// Points of P(A)(GF(q)) with rank f(a) < 2m (net over a finite field).
std::vector<Vector> y_points(const ANet& net, std::uint64_t limit = 10'000'000);
/// Planes in X(GF(q)) as reduced echelon 2 x 2m bases, sorted.
std::vector<ExactMatrix> x_points(const ANet& net, std::uint64_t limit = 10'000'000);
/// The same set by filtering the full Grassmannian enumeration.
std::vector<ExactMatrix> x_points_by_grassmannian(const ANet& net, std::uint64_t limit = 10'000'000);
/// Smallest rank of f(a) over P(A)(GF(q)) and a point attaining it.
std::pair<std::size_t, Vector> min_rank_point(const ANet& net, std::uint64_t limit = 10'000'000);

/// Reduced echelon basis of a plane (canonical representative).
ExactMatrix canonical_plane(const ExactMatrix& basis);

struct FieldConsistency {
  std::string field;
  std::string status;  // pass | fail | inconclusive
  std::string note;
  std::size_t x_points = 0, y_points = 0;
  std::vector<ExactMatrix> sing_x;        // canonical planes
  std::vector<ExactMatrix> kappa_y_on_x;  // canonical planes
  bool sets_equal = false;
};

struct NetClassification {
  RegularityResult regular;
  TriVerdict y_smooth;
  TriVerdict x_smooth;
  std::vector<FieldConsistency> consistency;
};

/// Field the net is reduced to for enumeration over a field of order q, if any.
std::optional<Field> enumeration_field(const ANet& net, std::uint64_t q);
FieldConsistency check_field_consistency(const ANet& net, const Field& field, const Options& opts = {});
NetClassification classify(const ANet& net, const Options& opts = {});

/// Whether Y is smooth: the Jacobian ideal of the Pfaffian is empty.
TriVerdict y_smooth(const ANet& net, const Options& opts = {});

struct GeneratedNet {
  ANet net;
  std::size_t attempts = 0;
};
/// Rejection sampling of integer nets over QQ, deterministic in the seed.
GeneratedNet random_regular_net(std::uint64_t seed, long bound, std::size_t n, std::size_t two_m, const Options& opts = {},
                                std::size_t max_attempts = 500);
/// Net with U0 = <e0, e1> forced into sing X: F1 = e2^e3 + e4^e5 and
/// every form vanishing on U0 x U0.
GeneratedNet degenerate_net(std::uint64_t seed, long bound = 3, std::size_t max_attempts = 500);

/// Integer upper triangles of the net's matrices (QQ nets with integer entries).
std::vector<std::vector<long>> net_upper_triangles(const ANet& net);

}  // namespace skewnet
