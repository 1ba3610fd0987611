#include <gtest/gtest.h>

#include <set>

#include "common.hpp"
#include "skewnet/point_search.hpp"

using namespace skewnet;
using skewnet::testing::degenerate;
using skewnet::testing::ints;
using skewnet::testing::smooth_net;

namespace {
const Field Q = Field::rationals();
}

TEST(Net, BasicsAndValidation) {
  const ANet& net = smooth_net();
  EXPECT_EQ(net.n(), 5u);
  EXPECT_EQ(net.two_m(), 6u);
  EXPECT_TRUE(net.independent());
  for (const auto& m : net.matrices()) EXPECT_TRUE(m.is_skew());
  const auto a = ints(Q, {1, -1, 2, 0, 3});
  ExactMatrix sum(Q, 6, 6);
  for (std::size_t i = 0; i < 5; ++i) sum = sum + net.matrix(i).scaled(a[i]);
  EXPECT_EQ(net.at(a), sum);
  EXPECT_THROW(ANet(Q, {ExactMatrix::from_ints(Q, {{0, 1}, {1, 0}})}), std::invalid_argument);
}

TEST(Net, FvRowsAnnihilateV) {
  const ANet& net = smooth_net();
  const auto v = ints(Q, {1, 2, -1, 0, 3, 1});
  EXPECT_TRUE(is_zero_vector(net.fv_at(v) * v));
  EXPECT_EQ(net.fv_matrix().evaluate(v), net.fv_at(v));
}

TEST(Correspondence, BlockNetIsIrregular) {
  const ANet net = ANet::block_net(Q);
  const auto r = is_regular(net);
  EXPECT_EQ(r.verdict.value, Tri::No);
  ASSERT_TRUE(r.bad_point);
  EXPECT_LE(rank(net.at(*r.bad_point)), 2u);
  // Pf contains a1 a2 a3 from the block part
  const auto pf = pfaffian_hypersurface(net);
  EXPECT_EQ(pf.degree(), 3);
}

TEST(Correspondence, BlockNetKappaAndIsotropicPlane) {
  const ANet net = ANet::block_net(Q);
  const auto p = kappa(net, ints(Q, {1, 1, 0, 0, 0}));
  // Ker of e12 + e34 in the block part is <e5, e6>; the padding may tilt it, so test decomposability
  EXPECT_TRUE(p.satisfies_quadrics());
  const auto e13 = plucker_from_basis(ExactMatrix::from_ints(Q, {{1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}}));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(net.form(i, ints(Q, {1, 0, 0, 0, 0, 0}), ints(Q, {0, 0, 1, 0, 0, 0})).is_zero());
  EXPECT_TRUE(e13.satisfies_quadrics());
}

TEST(Correspondence, RandomNetIsRegularAndSmooth) {
  const ANet& net = smooth_net();
  EXPECT_EQ(is_regular(net).verdict.value, Tri::Yes);
  EXPECT_EQ(y_smooth(net).value, Tri::Yes);
  const auto cls = classify(net);
  EXPECT_EQ(cls.x_smooth.value, Tri::Yes);
  for (const auto& fc : cls.consistency) {
    EXPECT_EQ(fc.status, "pass") << fc.field << " " << fc.note;
    EXPECT_TRUE(fc.sing_x.empty());
    EXPECT_TRUE(fc.kappa_y_on_x.empty());
  }
  // regular over GF(7) by full enumeration
  EXPECT_GE(min_rank_point(net.reduce_to(Field::prime(7))).first, 4u);
}

TEST(Correspondence, PfaffianCubic) {
  const auto pf = pfaffian_hypersurface(smooth_net());
  EXPECT_TRUE(pf.is_homogeneous());
  EXPECT_EQ(pf.degree(), 3);
  const auto a = ints(Q, {2, 0, -1, 1, 1});
  const auto v = pf.evaluate(a);
  EXPECT_EQ(v, pfaffian_scalar(smooth_net().at(a)));
}

TEST(Correspondence, XIdeal) {
  const auto ideal = x_ideal(smooth_net());
  EXPECT_EQ(ideal.generators().size(), 20u);
  const ANet n2 = smooth_net().reduce_to(Field::prime(2));
  const auto fiber = x_points(n2), grass = x_points_by_grassmannian(n2);
  EXPECT_EQ(fiber, grass);
  std::uint64_t zeros = 0;
  const auto red = x_ideal(n2);
  enumerate_grassmannian(6, n2.field(), [&](const PluckerPoint& p) { zeros += red.vanishes_at(p.coords); });
  EXPECT_EQ(zeros, fiber.size());
}

TEST(Correspondence, KappaIsInjectiveOnY) {
  const ANet n3 = smooth_net().reduce_to(Field::prime(3));
  const auto ys = y_points(n3);
  ASSERT_FALSE(ys.empty());
  std::set<std::string> seen;
  for (const auto& a : ys) {
    const auto k = kappa(n3, a);
    EXPECT_TRUE(k.satisfies_quadrics());
    seen.insert(k.normalized().to_string());
  }
  EXPECT_EQ(seen.size(), ys.size());
  const auto pf = pfaffian_hypersurface(n3);
  Vector off;
  for_each_projective_point(5, Fq::of(n3.field()), [&](const std::vector<std::uint32_t>& c) {
    const Vector a = NetCodes(n3).decode(c);
    if (off.empty() && !pf.evaluate(a).is_zero()) off = a;
  });
  EXPECT_THROW(kappa(n3, off), std::invalid_argument);
}

TEST(Correspondence, QuarticRoutes) {
  const auto q = q_quartic_routes(smooth_net());
  EXPECT_EQ(q.q.degree(), 4);
  EXPECT_TRUE(q.q.is_homogeneous());
  EXPECT_TRUE(q.consistent);
  ASSERT_EQ(q.routes.size(), 6u);
  for (const auto& r : q.routes) EXPECT_EQ(r.normalized(), q.q);
}

TEST(Correspondence, QuarticMatchesRankOverGF7) {
  const ANet n7 = smooth_net().reduce_to(Field::prime(7));
  const auto q = q_quartic(n7);
  std::mt19937_64 rng(3);
  int vanishing = 0;
  for_each_projective_point(6, Fq::of(n7.field()), [&](const std::vector<std::uint32_t>& codes) {
    if (rng() % 20) return;
    const Vector v = NetCodes(n7).decode(codes);
    const bool zero = q.evaluate(v).is_zero();
    vanishing += zero;
    ASSERT_EQ(zero, rank_fv(n7, v) <= 4);
  });
  EXPECT_GT(vanishing, 0);
}

TEST(Correspondence, CurveAndRankTwoIdeals) {
  EXPECT_EQ(c_ideal(smooth_net()).generators().size(), 75u);
  EXPECT_EQ(is_empty_projective(rank2_ideal(smooth_net())).state, Emptiness::Empty);
}

TEST(Correspondence, FibersAtCPoints) {
  const auto found = search_c_points(smooth_net());
  ASSERT_FALSE(found.points.empty());
  for (const auto& c : found.points) {
    const ANet net = smooth_net().reduce_to(c.field);
    EXPECT_EQ(rank_fv(net, c.c), 3u);
    const auto ker = psi_fiber(net, c.c);
    ASSERT_EQ(ker.size(), 2u);
    const auto phi = phi_fiber(net, c.c);
    ASSERT_TRUE(phi.line);
    EXPECT_FALSE(phi.point);
    const auto xi = x_ideal(net);
    for (const auto& [s, t] : p1_points(c.field, 3)) EXPECT_TRUE(xi.vanishes_at(phi.line->point_at(s, t).coords));
    const auto sp = splitting_type_on_line(net, ker[0], ker[1]);
    EXPECT_EQ(sp.d1, 1);
    EXPECT_EQ(sp.d2, 3);
  }
}

TEST(Correspondence, GenericLineSplitsEvenly) {
  const ANet n3 = smooth_net().reduce_to(Field::prime(3));
  const auto lines = lines_on_y(n3);
  for (const auto& l : lines.lines) {
    if (l.is_mc) continue;
    EXPECT_EQ(l.split.d1, 2);
    EXPECT_EQ(l.split.d2, 2);
  }
  EXPECT_EQ(pencil_sections(n3, ints(n3.field(), {1, 0, 0, 0, 0}), ints(n3.field(), {0, 1, 0, 0, 0}), 0), 0u);
}

TEST(Correspondence, DegenerateNetConsistency) {
  const ANet& net = degenerate();
  EXPECT_EQ(is_regular(net).verdict.value, Tri::Yes);
  EXPECT_EQ(y_smooth(net).value, Tri::No);
  // U0 = <e0, e1> is a singular point of X
  const auto U0 = ExactMatrix::from_ints(Q, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}});
  EXPECT_TRUE(tangent_test_x(net, U0));
  for (std::uint64_t q : {2u, 3u}) {
    const Field f = Field::prime(static_cast<std::uint32_t>(q));
    const auto fc = check_field_consistency(net.reduce_to(f), f);
    EXPECT_TRUE(fc.sets_equal) << fc.note;
    EXPECT_FALSE(fc.sing_x.empty()) << fc.note;
  }
}

TEST(Correspondence, GeneratorIsDeterministic) {
  const auto a = random_regular_net(7, 3, 5, 6), b = random_regular_net(7, 3, 5, 6);
  EXPECT_EQ(a.attempts, b.attempts);
  EXPECT_EQ(net_upper_triangles(a.net), net_upper_triangles(b.net));
  EXPECT_THROW(random_regular_net(1, 0, 5, 6), std::invalid_argument);
}

TEST(Correspondence, OtherShapes) {
  for (std::size_t n : {4u, 6u}) {
    const auto g = random_regular_net(1, 3, n, 6);
    EXPECT_EQ(is_regular(g.net).verdict.value, Tri::Yes);
    EXPECT_EQ(pfaffian_hypersurface(g.net).degree(), 3);
  }
}
