#include <gtest/gtest.h>

#include "skewnet/field.hpp"

using namespace skewnet;

TEST(Field, RationalArithmetic) {
  const Field Q = Field::rationals();
  const auto half = Q.from_rational(mpq_class(1, 2));
  const auto third = Q.from_rational(mpq_class(1, 3));
  EXPECT_EQ((half + third).to_string(), "5/6");
  EXPECT_EQ((half / third).to_string(), "3/2");
  EXPECT_EQ((-half).to_string(), "-1/2");
  EXPECT_EQ(Q.order(), 0u);
  EXPECT_THROW(Q.zero().inverse(), std::domain_error);
}

TEST(Field, PrimeArithmetic) {
  const Field F = Field::prime(7);
  EXPECT_EQ((F.from_int(3) * F.from_int(5)).residue(), 1u);
  EXPECT_EQ(F.from_int(3).inverse(), F.from_int(5));
  EXPECT_EQ(F.from_int(-1).residue(), 6u);
  EXPECT_EQ(F.from_int(3).pow(6), F.one());
  EXPECT_EQ(F.name(), "GF(7)");
  EXPECT_THROW(Field::prime(8), std::invalid_argument);
}

TEST(Field, ExtensionFieldGF9) {
  const Field F = Field::of_order(9);
  EXPECT_EQ(F.order(), 9u);
  EXPECT_EQ(F.characteristic(), 3u);
  EXPECT_EQ(F.degree(), 2u);
  for (std::uint64_t i = 1; i < 9; ++i) {
    const auto x = F.element_at(i);
    EXPECT_EQ(x.pow(8), F.one());
    EXPECT_EQ(x * x.inverse(), F.one());
    EXPECT_EQ(F.index_of(x), i);
  }
  // the multiplicative group is cyclic of order 8: some element has order 8
  bool generator = false;
  for (std::uint64_t i = 1; i < 9; ++i) generator |= F.element_at(i).pow(4) != F.one();
  EXPECT_TRUE(generator);
}

TEST(Field, ExtensionIsDeterministic) {
  EXPECT_EQ(Field::extension(3, 2).modulus(), Field::extension(3, 2).modulus());
  EXPECT_EQ(Field::extension(2, 3), Field::extension(2, 3));
}

TEST(Field, ParseAndNames) {
  EXPECT_EQ(Field::parse("QQ"), Field::rationals());
  EXPECT_EQ(Field::parse("GF(32003)"), Field::prime(32003));
  EXPECT_EQ(Field::parse("GF(3,2)").order(), 9u);
  EXPECT_EQ(Field::parse(Field::parse("GF(5,3)").name()), Field::parse("GF(5,3)"));
  EXPECT_THROW(Field::parse("GF(6)"), std::invalid_argument);
  EXPECT_THROW(Field::parse("RR"), std::invalid_argument);
}

TEST(Field, ElementTextRoundTrip) {
  const Field Q = Field::rationals();
  EXPECT_EQ(FieldElement::parse("-3/4", Q).to_string(), "-3/4");
  const Field F = Field::of_order(25);
  for (std::uint64_t i = 0; i < 25; ++i) {
    const auto x = F.element_at(i);
    EXPECT_EQ(FieldElement::parse(x.to_string(), F), x);
  }
}

TEST(Field, Reduction) {
  const Field Q = Field::rationals();
  EXPECT_EQ(Q.from_rational(mpq_class(1, 3)).reduce_to(Field::prime(7)).residue(), 5u);
  EXPECT_THROW(Q.from_rational(mpq_class(1, 3)).reduce_to(Field::prime(3)), std::domain_error);
  EXPECT_EQ(mod_reduce(-10, 7), 4u);
  EXPECT_EQ(mod_reduce(mpq_class(-1, 2), 5), 2u);
  // prime field embeds into its extension
  const Field F9 = Field::of_order(9);
  EXPECT_EQ(Field::prime(3).from_int(2).reduce_to(F9), F9.from_int(2));
}

TEST(Field, MismatchThrows) {
  EXPECT_THROW(Field::prime(5).one() + Field::prime(7).one(), FieldMismatch);
  EXPECT_THROW(Field::rationals().one() * Field::prime(7).one(), FieldMismatch);
}

TEST(Field, Primes) {
  EXPECT_TRUE(is_prime(32003));
  EXPECT_FALSE(is_prime(32001));
  EXPECT_EQ(next_prime(32003), 32009u);
  EXPECT_EQ(mod_inverse(3, 7), 5u);
  EXPECT_EQ(mod_pow(2, 10, 1000003), 1024u);
}

TEST(Field, RandomElementsStayInField) {
  std::mt19937_64 rng(4);
  const Field F = Field::of_order(125);
  for (int i = 0; i < 50; ++i) EXPECT_LT(F.index_of(F.random(rng)), 125u);
}
