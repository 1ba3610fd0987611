#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "skewnet/multipoly.hpp"

using namespace skewnet;

namespace {
const Field Q = Field::rationals();
MultiPoly P(const std::string& s, unsigned n = 3, const Field& f = Q) { return MultiPoly::parse(s, f, n); }
}  // namespace

TEST(MultiPoly, ParsePrintRoundTrip) {
  for (const std::string s : {"2*x0^2*x1 - 1/3*x2 + 5", "x0*x1*x2", "-x2^3", "0"}) EXPECT_EQ(P(s).to_string(), s);
  EXPECT_EQ(P("x1 + x0").to_string(), "x0 + x1");
  EXPECT_THROW(P("x7"), std::invalid_argument);
  EXPECT_THROW(P("x0 +* x1"), std::invalid_argument);
}

TEST(MultiPoly, Arithmetic) {
  EXPECT_EQ((P("x0 + x1")).pow(2), P("x0^2 + 2*x0*x1 + x1^2"));
  EXPECT_EQ(P("x0 - x1") * P("x0 + x1"), P("x0^2 - x1^2"));
  EXPECT_TRUE((P("x0") - P("x0")).is_zero());
  EXPECT_EQ(P("x0^2*x1 + x2").degree(), 3);
  EXPECT_FALSE(P("x0^2*x1 + x2").is_homogeneous());
  EXPECT_EQ(MultiPoly(Q, 3).degree(), -1);
  EXPECT_THROW(P("x0") + P("x0", 4), std::invalid_argument);
}

TEST(MultiPoly, ExactDivision) {
  EXPECT_EQ(exact_divide(P("x0^2 - x1^2"), P("x0 - x1")), P("x0 + x1"));
  EXPECT_THROW(exact_divide(P("x0^2 + x1^2"), P("x0 - x1")), InexactDivision);
  const Field F = Field::prime(7);
  const auto a = P("x0^3 + 2*x1*x2 + x2^2", 3, F), b = P("x1 + 3*x2", 3, F);
  EXPECT_EQ(exact_divide(a * b, b), a);
}

TEST(MultiPoly, DerivativesEvaluationSubstitution) {
  const auto f = P("x0^2*x1 + 3*x2");
  EXPECT_EQ(f.partial_derivative(0), P("2*x0*x1"));
  EXPECT_EQ(f.partial_derivative(2), P("3"));
  EXPECT_EQ(f.evaluate(skewnet::testing::ints(Q, {2, 3, 1})).to_string(), "15");
  // x0 -> x0 + x1, x1 -> x1, x2 -> 0
  const auto g = f.substitute({P("x0 + x1"), P("x1"), MultiPoly(Q, 3)});
  EXPECT_EQ(g, P("x0^2*x1 + 2*x0*x1^2 + x1^3"));
}

TEST(MultiPoly, ReductionAndNormalization) {
  const auto f = P("2*x0 + 4*x1");
  EXPECT_EQ(f.normalized(), P("x0 + 2*x1"));
  EXPECT_EQ(P("1/3*x0").reduce_to(Field::prime(7)), P("5*x0", 3, Field::prime(7)));
  EXPECT_EQ(P("3*x0 + x1", 3, Field::prime(7)).normalized(), P("x0 + 5*x1", 3, Field::prime(7)));
}

TEST(MultiPoly, MonomialBasis) {
  const MonomialBasis b(5, 3);
  EXPECT_EQ(b.size(), num_monomials(5, 3));
  EXPECT_EQ(b.size(), 35u);
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b.index_of(b[i]), static_cast<std::int64_t>(i));
  EXPECT_EQ(num_monomials(4, -1), 0u);
  EXPECT_EQ(binomial(6, 2), 15u);
  EXPECT_EQ(subsets(6, 4).size(), 15u);
  EXPECT_EQ(subsets(4, 2).front(), (std::vector<std::size_t>{0, 1}));
}

TEST(PolyMatrix, DeterminantCommutesWithEvaluation) {
  std::mt19937_64 rng(3);
  const Field F = Field::prime(101);
  PolyMatrix m(F, 2, 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      m(i, j) = MultiPoly::linear(F, {F.random(rng), F.random(rng)});
  const auto det = m.determinant();
  EXPECT_EQ(det.degree(), 3);
  for (int k = 0; k < 10; ++k) {
    const Vector pt{F.random(rng), F.random(rng)};
    EXPECT_EQ(det.evaluate(pt), determinant(m.evaluate(pt)));
  }
  EXPECT_EQ(m.minors(2).size(), 9u);
}

TEST(PolyMatrix, PfaffianOfGenericSkew4) {
  // Pf of the generic 4x4 skew matrix is p12 p34 - p13 p24 + p14 p23
  PolyMatrix m(Q, 6, 4, 4);
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j, ++k) {
      m(i, j) = MultiPoly::variable(Q, 6, static_cast<unsigned>(k));
      m(j, i) = -m(i, j);
    }
  EXPECT_EQ(pfaffian_poly(SkewPolyMatrix(m)), P("x0*x5 - x1*x4 + x2*x3", 6));
  EXPECT_THROW(SkewPolyMatrix(PolyMatrix(Q, 6, 3, 3)).size(), std::invalid_argument);
}
