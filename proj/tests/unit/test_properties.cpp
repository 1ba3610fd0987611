// Randomized properties over many seeds.
#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "skewnet/cohomology.hpp"
#include "skewnet/fixture.hpp"

using namespace skewnet;

class FieldAxioms : public ::testing::TestWithParam<std::string> {};

TEST_P(FieldAxioms, RingLawsAndInverses) {
  const Field f = Field::parse(GetParam());
  std::mt19937_64 rng(11);
  auto draw = [&] { return f.is_rational() ? f.from_rational(mpq_class(static_cast<long>(rng() % 201) - 100, 1 + rng() % 50)) : f.random(rng); };
  for (int i = 0; i < 300; ++i) {
    const auto a = draw(), b = draw(), c = draw();
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a - a, f.zero());
    if (!a.is_zero()) ASSERT_EQ(a * a.inverse(), f.one());
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms, ::testing::Values("QQ", "GF(2)", "GF(32003)", "GF(3,2)", "GF(2,5)", "GF(5,3)"));

class PolyProps : public ::testing::TestWithParam<int> {};

TEST_P(PolyProps, MultiplicationAndDivisionAgree) {
  const Field f = Field::prime(101);
  std::mt19937_64 rng(GetParam());
  auto random_poly = [&](unsigned deg) {
    MultiPoly p(f, 3);
    const MonomialBasis b(3, deg);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (rng() % 2) p.add_term(b[i], f.random(rng));
    if (p.is_zero()) p.add_term(b[0], f.one());
    return p;
  };
  const auto a = random_poly(2), b = random_poly(3);
  const auto ab = a * b;
  EXPECT_EQ(ab.degree(), 5);
  EXPECT_EQ(exact_divide(ab, a), b);
  const Vector pt{f.random(rng), f.random(rng), f.random(rng)};
  EXPECT_EQ(ab.evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
  EXPECT_EQ(MultiPoly::parse(ab.to_string(), f, 3), ab);
}

INSTANTIATE_TEST_SUITE_P(Seeds, PolyProps, ::testing::Range(1, 21));

class NetProps : public ::testing::TestWithParam<int> {};

// Every generated fixture is regular and smooth, Pf has degree 3 and matches
// scalar Pfaffians, and the fixture text round-trips.
TEST_P(NetProps, GeneratedFixtures) {
  const std::uint64_t seed = static_cast<std::uint64_t>(GetParam());
  const ANet& net = skewnet::testing::smooth_net(seed);
  EXPECT_EQ(is_regular(net).verdict.value, Tri::Yes);
  EXPECT_EQ(y_smooth(net).value, Tri::Yes);
  const auto pf = pfaffian_hypersurface(net);
  EXPECT_EQ(pf.degree(), 3);
  std::mt19937_64 rng(seed);
  const Field Q = Field::rationals();
  for (int i = 0; i < 5; ++i) {
    Vector a;
    for (int k = 0; k < 5; ++k) a.push_back(Q.from_int(static_cast<long>(rng() % 7) - 3));
    EXPECT_EQ(pf.evaluate(a), pfaffian_scalar(net.at(a)));
  }
  EXPECT_EQ(fixture_text(net_from_json(nlohmann::json::parse(fixture_text(net)))), fixture_text(net));
  const auto q = q_quartic_routes(net);
  EXPECT_EQ(q.q.degree(), 4);
  EXPECT_TRUE(q.consistent);
}

TEST_P(NetProps, ThetaEulerCharacteristic) {
  const ANet& net = skewnet::testing::smooth_net(static_cast<std::uint64_t>(GetParam()));
  for (std::int64_t t = -6; t <= 2; ++t) {
    const auto h = theta_cohomology(net, t);
    std::int64_t chi = 0;
    for (std::size_t p = 0; p < h.size(); ++p) chi += (p % 2 ? -1 : 1) * static_cast<std::int64_t>(h[p]);
    EXPECT_EQ(chi, 6 * chi_projective(5, t) - 6 * chi_projective(5, t - 1)) << "t = " << t;
  }
}

// For smooth nets X and kappa(Y) are disjoint, while kappa(a) stays isotropic for f(a).
TEST_P(NetProps, KappaAvoidsXOverGF7) {
  const ANet n7 = skewnet::testing::smooth_net(static_cast<std::uint64_t>(GetParam())).reduce_to(Field::prime(7));
  if (min_rank_point(n7).first < 4) GTEST_SKIP() << "bad reduction mod 7";
  const auto ys = y_points(n7);
  for (std::size_t i = 0; i < ys.size(); i += 17) {
    const auto k = kappa(n7, ys[i]);
    EXPECT_FALSE(on_x(n7, k));
    const auto U = plane_from_plucker(k);
    EXPECT_TRUE(dot(U.row(0), n7.at(ys[i]) * U.row(1)).is_zero());
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, NetProps, ::testing::Range(1, 9));
