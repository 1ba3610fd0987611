#include <gtest/gtest.h>

#include "skewnet/ideals.hpp"

using namespace skewnet;

namespace {
const Field Q = Field::rationals();
MultiPoly P(const std::string& s, unsigned n = 3, const Field& f = Q) { return MultiPoly::parse(s, f, n); }
HomogeneousIdeal I(std::initializer_list<const char*> gens, unsigned n = 3, const Field& f = Q) {
  std::vector<MultiPoly> g;
  for (auto s : gens) g.push_back(P(s, n, f));
  return HomogeneousIdeal(f, n, g);
}
}  // namespace

TEST(Ideals, MacaulayMatrixShape) {
  const auto ideal = I({"x0^2", "x0*x1"});
  const auto m = macaulay_matrix(ideal, 3);
  EXPECT_EQ(m.cols(), 10u);
  EXPECT_EQ(m.rows(), 6u);
  EXPECT_EQ(macaulay_rank(ideal, 3), 5u);  // x0^2*{x0,x1,x2} and x0*x1*{x0,x1,x2} share x0^2*x1
}

TEST(Ideals, HilbertFunctionOfLinearSpaces) {
  EXPECT_EQ(hilbert_function(I({"x0"}), 4), 5u);
  EXPECT_EQ(hilbert_function(I({"x1", "x2"}), 7), 1u);
  EXPECT_EQ(hilbert_function(I({}), 2), 6u);
  EXPECT_EQ(hilbert_function(I({"x0", "x1", "x2"}), 1), 0u);
}

TEST(Ideals, FitConic) {
  const auto h = fit_hilbert_polynomial(I({"x0^2 + x1^2 - x2^2"}), 1);
  ASSERT_TRUE(h.polynomial);
  EXPECT_EQ(h.polynomial_text(), "2*t + 1");
  EXPECT_EQ(h.degree, 2);
  EXPECT_EQ(h.arithmetic_genus, 0);
}

TEST(Ideals, FitPlaneCubic) {
  // plane cubic: 3t, genus 1
  const auto h = fit_hilbert_polynomial(I({"x0^3 + x1^3 + x2^3"}), 1);
  EXPECT_EQ(h.degree, 3);
  EXPECT_EQ(h.arithmetic_genus, 1);
}

TEST(Ideals, FitTwistedCubic) {
  const auto ideal = I({"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"}, 4);
  const auto h = fit_hilbert_polynomial(ideal, 1);
  EXPECT_EQ(h.polynomial_text(), "3*t + 1");
  EXPECT_EQ(h.arithmetic_genus, 0);
}

TEST(Ideals, Emptiness) {
  EXPECT_EQ(is_empty_projective(I({"x0", "x1", "x2"})).state, Emptiness::Empty);
  EXPECT_EQ(is_empty_projective(I({"x0^2", "x1^2", "x2^2"})).state, Emptiness::Empty);
  EXPECT_EQ(is_empty_projective(I({"x0", "x1"})).state, Emptiness::NonEmpty);
  EXPECT_EQ(is_empty_projective(I({"x0*x1 - x2^2"})).state, Emptiness::NonEmpty);
  const auto r = is_empty_projective(I({"x0^2", "x1^2", "x2^2"}));
  EXPECT_EQ(r.witness_degree, 4);
}

TEST(Ideals, MacaulayBound) {
  // 3 = C(3,2) in degree 2 grows to at most C(4,3) = 4
  EXPECT_EQ(macaulay_bound(3, 2), 4u);
  EXPECT_EQ(macaulay_bound(1, 5), 1u);
  EXPECT_EQ(macaulay_bound(0, 3), 0u);
}

TEST(Ideals, JacobianOfSmoothAndSingularConics) {
  EXPECT_EQ(is_empty_projective(jacobian_ideal(I({"x0^2 + x1^2 + x2^2"}))).state, Emptiness::Empty);
  EXPECT_EQ(is_empty_projective(jacobian_ideal(I({"x0*x1"}))).state, Emptiness::NonEmpty);
}

TEST(Ideals, RationalRanksMatchPrimeRanks) {
  const auto ideal = I({"x0^2 - 3*x1*x2", "1/2*x0*x1 + x2^2"});
  const auto reduced = ideal.reduce_to(Field::prime(32003));
  for (unsigned t = 0; t < 6; ++t) EXPECT_EQ(macaulay_rank(ideal, t), macaulay_rank(reduced, t));
}

TEST(Ideals, MinorsIdeal) {
  PolyMatrix m(Q, 3, 2, 3);
  for (unsigned j = 0; j < 3; ++j) {
    m(0, j) = MultiPoly::variable(Q, 3, j);
    m(1, j) = MultiPoly::variable(Q, 3, (j + 1) % 3);
  }
  EXPECT_EQ(minors_ideal(m, 2).generators().size(), 3u);
  EXPECT_TRUE(I({"x0"}).vanishes_at({Q.zero(), Q.one(), Q.one()}));
}
