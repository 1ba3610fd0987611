#include <gtest/gtest.h>

#include <random>

#include "skewnet/fq.hpp"
#include "skewnet/matrix.hpp"
#include "skewnet/mod_echelon.hpp"

using namespace skewnet;

TEST(Fq, CodesAgreeWithElements) {
  for (std::uint64_t q : {7u, 9u, 16u, 27u}) {
    const Field f = Field::of_order(q);
    const Fq& F = Fq::of(f);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto x = f.element_at(a), y = f.element_at(b);
        ASSERT_EQ(F.decode(F.add(a, b)), x + y);
        ASSERT_EQ(F.decode(F.mul(a, b)), x * y);
        ASSERT_EQ(F.decode(F.sub(a, b)), x - y);
        if (b) ASSERT_EQ(F.decode(F.div(a, b)), x / y);
      }
  }
}

TEST(Fq, LargePrimeField) {
  const Fq& F = Fq::of(Field::prime(32003));
  EXPECT_EQ(F.mul(F.inv(12345), 12345), 1u);
  EXPECT_EQ(F.from_int(-1), 32002u);
}

TEST(Fq, RankKernelInverse) {
  const Fq& F = Fq::of(Field::prime(101));
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    FqMat m(4, 6);
    for (auto& x : m.a) x = rng() % 101;
    const std::size_t r = fq_rank(F, m);
    const FqMat k = fq_kernel(F, m);
    EXPECT_EQ(k.rows, 6 - r);
    for (std::size_t i = 0; i < k.rows; ++i)
      for (std::size_t row = 0; row < 4; ++row) {
        std::uint32_t s = 0;
        for (std::size_t j = 0; j < 6; ++j) s = F.add(s, F.mul(m(row, j), k(i, j)));
        EXPECT_EQ(s, 0u);
      }
    FqMat sq(3, 3);
    for (auto& x : sq.a) x = rng() % 101;
    if (fq_rank(F, sq) == 3) {
      const FqMat id = fq_multiply(F, sq, fq_inverse(F, sq));
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(id(i, j), i == j ? 1u : 0u);
    }
  }
  FqMat z(2, 2);
  EXPECT_THROW(fq_inverse(F, z), std::domain_error);
}

TEST(Fq, CharpolyOfCompanion) {
  // companion matrix of x^3 - 2x - 5 over GF(7)
  const Fq& F = Fq::of(Field::prime(7));
  FqMat m(3, 3);
  m(1, 0) = 1;
  m(2, 1) = 1;
  m(0, 2) = 5;
  m(1, 2) = 2;
  const auto cp = fq_charpoly(F, m);
  ASSERT_EQ(cp.size(), 4u);
  EXPECT_EQ(cp[0], F.from_int(-5));
  EXPECT_EQ(cp[1], F.from_int(-2));
  EXPECT_EQ(cp[2], 0u);
  EXPECT_EQ(cp[3], 1u);
}

TEST(ModEchelon, RankMatchesExactElimination) {
  const std::uint32_t p = 32003;
  const Field f = Field::prime(p);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = 3 + trial % 5, cols = 6;
    ModEchelon e(p, cols);
    ExactMatrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      std::vector<std::uint32_t> row(cols);
      // low-rank rows now and then
      for (std::size_t j = 0; j < cols; ++j) row[j] = (trial % 3 == 0 && i > 1) ? (i * e.prime() + j) % 3 : rng() % p;
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.from_int(row[j]);
      e.insert(row);
    }
    EXPECT_EQ(e.rank(), rank(m));
    for (const auto& k : e.kernel()) {
      Vector kv;
      for (auto x : k) kv.push_back(f.from_int(x));
      EXPECT_TRUE(is_zero_vector(m * kv));
    }
  }
}

TEST(ModEchelon, SparseInsertAndReduce) {
  ModEchelon e(7, 4);
  EXPECT_TRUE(e.insert_sparse({{0, 1}, {2, 3}}));
  EXPECT_FALSE(e.insert({2, 0, 6, 0}));
  EXPECT_TRUE(e.insert({0, 1, 0, 0}));
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_EQ(e.pivots(), (std::vector<std::size_t>{0, 1}));
  const auto r = e.reduce({1, 1, 1, 1});
  EXPECT_EQ(r[0], 0u);
  EXPECT_EQ(r[1], 0u);
  EXPECT_FALSE(e.full());
}
