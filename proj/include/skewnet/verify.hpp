#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skewnet/ideals.hpp"
#include "skewnet/net.hpp"
#include "skewnet/verdict.hpp"

namespace skewnet {

/// Runs fn(i) for i in [0, count) on up to `workers` threads. Rethrows the
/// exception of the smallest failing index.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn);

/// Seed of sample i, independent of scheduling.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t i);

struct SamplePlan {
  Field field = Field::prime(32003);  // random samples
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  std::optional<Field> exhaustive = Field::prime(3);  // every pair over this field
  unsigned workers = 1;
};

struct WMembership {
  std::size_t intersection_dim = 0;  // dim (Ker f(a) cap U)
  Vector witness;                    // spans the intersection when it is a line
  bool on_w() const { return intersection_dim > 0; }
};
WMembership w_membership(const ANet& net, const Vector& a, const ExactMatrix& U);

/// The fiber complex Ker f(a) -> V/U -> U* at one pair.
struct JwFiber {
  std::size_t first_rank = 0, second_rank = 0, intersection_dim = 0;
  bool composition_zero = false;
  bool ok = false;
  std::string why;
};
JwFiber jw_fiber(const ANet& net, const Vector& a, const ExactMatrix& U);

struct SampleCounts {
  std::uint64_t checked = 0, on_w = 0, off_w = 0, failures = 0;
  std::string first_failure;
};

struct JwReport {
  Verdict verdict;
  SampleCounts random, w_samples, exhaustive;
  std::string exhaustive_field;
};

/// Complex, exactness off W and corank one on W at random pairs over plan.field,
/// constructed W-pairs, and every pair of Y x X over plan.exhaustive.
JwReport jw_pointwise(const ANet& net, const SamplePlan& plan);

/// hf: V/U -> k, w -> f(a)(w, v) for v in U. Zero iff v in Ker f(a).
Vector hf_section(const ANet& net, const Vector& a, const ExactMatrix& U, const Vector& v);

/// hf vanishes exactly when v is in Ker f(a), and the pairs where some v in U
/// kills hf are the pairs on W by kernel intersection.
JwReport jw1_section_check(const ANet& net, const SamplePlan& plan);

/// Brute-force count of projective zeros of the ideal over a finite field.
std::uint64_t count_points(const HomogeneousIdeal& ideal, const Field& field, std::uint64_t limit = 10'000'000);

}  // namespace skewnet
