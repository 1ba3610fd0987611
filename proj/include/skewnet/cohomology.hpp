#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewnet/net.hpp"
#include "skewnet/options.hpp"
#include "skewnet/verdict.hpp"

namespace skewnet {

struct CohomologyCell {
  enum class Kind { None, Exact, UpperBound };
  std::optional<std::int64_t> value;  // computed dimension
  std::optional<std::int64_t> expected;
  Kind kind = Kind::None;
  std::string provenance;  // "rank", "closed-form" or "expected"
  Status verdict = Status::Pass;
};

const char* to_string(CohomologyCell::Kind k);

/// h^p(t) for p in [0, p_max] and t in [t_min, t_max].
struct CohomologyTable {
  std::string name;
  int p_max = 0, t_min = 0, t_max = 0;
  std::vector<std::vector<CohomologyCell>> cells;  // [p][t - t_min]
  std::vector<std::string> notes;

  CohomologyTable() = default;
  CohomologyTable(std::string name, int p_max, int t_min, int t_max);
  CohomologyCell& at(int p, int t);
  const CohomologyCell& at(int p, int t) const;
  /// Combined cell verdicts.
  Status verdict() const;
  /// Rows from p = p_max down to 0, as in the usual layout.
  std::string to_string() const;
};

/// chi(O(t)) on P^{n-1} as a polynomial in t, valid for all t.
std::int64_t chi_projective(unsigned n, std::int64_t t);

/// Rank of V (x) S_d A* -> V* (x) S_{d+1} A*, v (x) g -> sum_i F_i v (x) a_i g.
/// Zero for d < 0. Over QQ ranks at two primes, exact elimination when they differ.
std::uint64_t multiplication_rank(const ANet& net, std::int64_t d, const Options& opts = {});

/// h^p(P(A), alpha_* E(t)) for p = 0..n-1, E the cokernel of V (x) O(-1) -> V* (x) O.
/// Throws DegenerateNet unless the net is regular.
std::vector<std::uint64_t> theta_cohomology(const ANet& net, std::int64_t t, const Options& opts = {},
                                            bool check_regular = true);

/// theta_cohomology over [t_min, t_max], with the expected pattern on
/// -(n-1) <= t <= 0: 2m at (0, 0) and (n-2, -(n-1)), zero elsewhere.
CohomologyTable theta_table(const ANet& net, int t_min, int t_max, const Options& opts = {});

/// H^p(Y, E(t-1)) for p in [0,3], t in [-3,1]; (n, 2m) = (5, 6).
CohomologyTable charge2_instanton_table(const ANet& net, const Options& opts = {});

/// Expected grid for an instanton of charge k on an index-2 threefold of degree d.
CohomologyTable expected_instanton_table(int d, int k);

/// h^p(Y, O_Y(t)), p = 0..n-2, for a degree-d hypersurface Y in P^{n-1}, n >= 3.
std::vector<std::int64_t> hypersurface_line_bundle_cohomology(int d, int n, std::int64_t t);

/// Ext^p(O,O), Ext^p(O(1),O(1)) and Ext^p(O(1),O) on the hypersurface.
Verdict exceptional_pair_check_y(int d = 3, int n = 5);

struct LineIdealResult {
  Verdict verdict;
  std::vector<int> twists;
  std::vector<std::vector<std::int64_t>> rows;  // h^p(Y, I_M(t)) per twist
};

/// H^p(Y, I_M(t)) for t in {0, -1} on the Pfaffian hypersurface, M = <a0, a1>.
LineIdealResult line_ideal_membership(const ANet& net, const Vector& a0, const Vector& a1, const Options& opts = {});

}  // namespace skewnet
