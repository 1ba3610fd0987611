#include <gtest/gtest.h>

#include "common.hpp"
#include "skewnet/point_search.hpp"

using namespace skewnet;
using skewnet::testing::smooth_net;

TEST(PointSearch, RootsModP) {
  // (x - 2)(x - 3) = x^2 - 5x + 6 over GF(7)
  auto r = roots_mod_p({6, 2, 1}, 7);
  std::sort(r.begin(), r.end());
  EXPECT_EQ(r, (std::vector<std::uint32_t>{2, 3}));
  EXPECT_TRUE(roots_mod_p({1, 0, 1}, 7).empty());
}

TEST(PointSearch, EnumerationFindsRankThreePoints) {
  const ANet n3 = smooth_net().reduce_to(Field::prime(3));
  for (const auto& c : c_points_by_enumeration(n3)) EXPECT_LE(rank_fv(n3, c), 3u);
}

TEST(PointSearch, LadderLogsEachRung) {
  const auto s = search_c_points(smooth_net());
  EXPECT_FALSE(s.log.empty());
  ASSERT_FALSE(s.points.empty());
  EXPECT_LE(s.points.size(), 12u);
  EXPECT_EQ(s.points.front().method, "enumeration");
}

TEST(PointSearch, HyperplaneSectionPointsLieOnC) {
  const ANet big = smooth_net().reduce_to(Field::prime(32003));
  std::size_t total = 0;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    std::string note;
    const auto pts = c_points_by_hyperplane_section(big, seed, {}, &note);
    for (const auto& c : pts) EXPECT_EQ(rank_fv(big, c), 3u) << note;
    total += pts.size();
  }
  EXPECT_GT(total, 0u);
}

TEST(PointSearch, LargeFieldSampler) {
  const ANet big = smooth_net().reduce_to(Field::prime(32003));
  LargeFieldSampler s(big, 5);
  const auto pf = pfaffian_hypersurface(big);
  const auto xi = x_ideal(big);
  for (int i = 0; i < 5; ++i) {
    const auto a = s.y_point();
    EXPECT_TRUE(pf.evaluate(a).is_zero());
    EXPECT_EQ(rank(big.at(a)), 4u);
    EXPECT_TRUE(s.quartic().evaluate(s.q_point()).is_zero());
    EXPECT_TRUE(xi.vanishes_at(plucker_from_basis(s.x_point()).coords));
    const auto [wa, U] = s.w_point();
    const auto ker = rank_kernel(big.at(wa)).kernel;
    EXPECT_LT(rank(ExactMatrix::from_rows(big.field(), {ker[0], ker[1], U.row(0), U.row(1)})), 4u);
  }
}

TEST(PointSearch, SamplerIsDeterministic) {
  const ANet big = smooth_net().reduce_to(Field::prime(32003));
  LargeFieldSampler a(big, 9), b(big, 9);
  EXPECT_EQ(a.y_point(), b.y_point());
  a.reseed(3);
  b.reseed(3);
  EXPECT_EQ(a.q_point(), b.q_point());
}
