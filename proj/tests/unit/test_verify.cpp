#include <gtest/gtest.h>

#include <atomic>

#include "common.hpp"
#include "skewnet/point_search.hpp"
#include "skewnet/verify.hpp"

using namespace skewnet;
using skewnet::testing::degenerate;
using skewnet::testing::ints;
using skewnet::testing::smooth_net;

TEST(Verify, ParallelForCoversEveryIndex) {
  for (unsigned workers : {1u, 3u}) {
    std::vector<int> hits(100, 0);
    parallel_for(100, workers, [&](std::size_t i) { ++hits[i]; });
    for (int h : hits) EXPECT_EQ(h, 1);
  }
}

TEST(Verify, ParallelForRethrowsSmallestIndex) {
  try {
    parallel_for(50, 4, [](std::size_t i) {
      if (i == 7 || i == 31) throw std::runtime_error(std::to_string(i));
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "7");
  }
}

TEST(Verify, SampleSeeds) {
  EXPECT_EQ(sample_seed(1, 5), sample_seed(1, 5));
  EXPECT_NE(sample_seed(1, 5), sample_seed(1, 6));
  EXPECT_NE(sample_seed(1, 5), sample_seed(2, 5));
}

TEST(Verify, FiberComplexAtSampledPairs) {
  const ANet big = smooth_net().reduce_to(Field::prime(32003));
  LargeFieldSampler s(big, 2);
  for (int i = 0; i < 5; ++i) {
    const auto a = s.y_point();
    const auto U = s.x_point();
    const auto f = jw_fiber(big, a, U);
    EXPECT_TRUE(f.ok) << f.why;
    EXPECT_TRUE(f.composition_zero);
    EXPECT_EQ(w_membership(big, a, U).on_w(), f.intersection_dim > 0);
    const auto [wa, wU] = s.w_point();
    const auto g = jw_fiber(big, wa, wU);
    EXPECT_TRUE(g.ok) << g.why;
    EXPECT_EQ(g.intersection_dim, 1u);
    EXPECT_EQ(g.first_rank, 1u);
    EXPECT_EQ(g.second_rank, 1u);
  }
}

TEST(Verify, HfSectionVanishesOnKernel) {
  const ANet big = smooth_net().reduce_to(Field::prime(32003));
  LargeFieldSampler s(big, 4);
  const auto [a, U] = s.w_point();
  const auto w = w_membership(big, a, U);
  ASSERT_TRUE(w.on_w());
  EXPECT_TRUE(is_zero_vector(hf_section(big, a, U, w.witness)));
  EXPECT_FALSE(is_zero_vector(hf_section(big, a, U, U.row(0))) && is_zero_vector(hf_section(big, a, U, U.row(1))));
}

TEST(Verify, JwPasses) {
  SamplePlan plan;
  plan.samples = 100;
  const auto r = jw_pointwise(smooth_net(), plan);
  EXPECT_EQ(r.verdict.status, Status::Pass) << r.verdict.witness;
  EXPECT_EQ(r.random.checked, 100u);
  EXPECT_GT(r.exhaustive.on_w, 0u);
  EXPECT_EQ(r.exhaustive.failures, 0u);
  const auto r1 = jw1_section_check(smooth_net(), plan);
  EXPECT_EQ(r1.verdict.status, Status::Pass) << r1.verdict.witness;
}

TEST(Verify, JwIsIndependentOfWorkers) {
  SamplePlan plan;
  plan.samples = 60;
  plan.exhaustive.reset();
  const auto a = jw_pointwise(smooth_net(), plan);
  plan.workers = 3;
  const auto b = jw_pointwise(smooth_net(), plan);
  EXPECT_EQ(a.random.on_w, b.random.on_w);
  EXPECT_EQ(a.verdict.witness, b.verdict.witness);
}

TEST(Verify, DegenerateNetFailsAtU0) {
  const ANet net = degenerate().reduce_to(Field::prime(32003));
  const Field f = net.field();
  const auto U0 = ExactMatrix::from_ints(f, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}});
  const auto r = jw_fiber(net, ints(f, {1, 0, 0, 0, 0}), U0);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.intersection_dim, 2u);
}

TEST(Verify, CountPoints) {
  const Field Q = Field::rationals();
  const HomogeneousIdeal conic(Q, 3, {MultiPoly::parse("x0^2 + x1^2 + x2^2", Q, 3)});
  EXPECT_EQ(count_points(conic, Field::prime(3)), 4u);
  EXPECT_EQ(count_points(conic, Field::prime(7)), 8u);
  const HomogeneousIdeal none(Q, 3, {});
  EXPECT_EQ(count_points(none, Field::prime(2)), 7u);
}
