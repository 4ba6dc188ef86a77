#include <gtest/gtest.h>

#include <random>

#include "catfrob/linalg.hpp"
#include "oracle.hpp"

using catfrob::Rational;
using catfrob::RationalMatrix;

TEST(KernelRational, CanonicalForm) {
  Rational a(6, -4);
  EXPECT_EQ(a.str(), "-3/2");
  EXPECT_EQ(Rational(4).str(), "4/1");
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("-7").str(), "-7/1");
  EXPECT_THROW(Rational(1, 0), catfrob::ContractViolation);
  EXPECT_THROW(Rational::parse("1/0"), catfrob::ContractViolation);
  EXPECT_THROW(Rational::parse("x"), catfrob::ContractViolation);
  EXPECT_THROW(Rational(1) / Rational(0), catfrob::ContractViolation);
}

TEST(KernelRational, NoOverflow) {
  Rational x(1);
  for (int i = 0; i < 100; ++i) x *= Rational(1000000007);
  for (int i = 0; i < 100; ++i) x /= Rational(1000000007);
  EXPECT_TRUE(x.is_one());
}

TEST(KernelKron, Examples) {
  EXPECT_EQ(catfrob::kron(RationalMatrix::identity(2), RationalMatrix{{3}}), (RationalMatrix{{3, 0}, {0, 3}}));
  RationalMatrix swap{{0, 1}, {1, 0}};
  RationalMatrix b{{1, 2}, {3, 4}};
  EXPECT_EQ(catfrob::kron(swap, b), (RationalMatrix{{0, 0, 1, 2}, {0, 0, 3, 4}, {1, 2, 0, 0}, {3, 4, 0, 0}}));
  EXPECT_EQ(catfrob::kron(b, RationalMatrix::identity(1)), b);
}

TEST(KernelKron, MatchesDenseOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = oracle::random_matrix(rng, rng() % 4, rng() % 4);
    auto b = oracle::random_matrix(rng, rng() % 4, rng() % 4);
    EXPECT_EQ(catfrob::kron(a, b), oracle::kron(a, b));
  }
}

TEST(KernelKron, AssociativeAndInterchange) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n1 = 1 + rng() % 3, n2 = 1 + rng() % 3, n3 = 1 + rng() % 3, m1 = 1 + rng() % 3, m2 = 1 + rng() % 3;
    auto a = oracle::random_matrix(rng, n1, m1);
    auto b = oracle::random_matrix(rng, n2, m2);
    auto c = oracle::random_matrix(rng, m1, n3);
    auto d = oracle::random_matrix(rng, m2, n1);
    EXPECT_EQ(catfrob::kron(catfrob::kron(a, b), c), catfrob::kron(a, catfrob::kron(b, c)));
    EXPECT_EQ(catfrob::kron(a, b) * catfrob::kron(c, d), catfrob::kron(a * c, b * d));
  }
}

TEST(KernelMatrix, MultiplyMatchesOracleAndChecksShapes) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = rng() % 5, k = rng() % 5, m = rng() % 5;
    auto a = oracle::random_matrix(rng, n, k);
    auto b = oracle::random_matrix(rng, k, m);
    EXPECT_EQ(a * b, oracle::multiply(a, b));
  }
  EXPECT_THROW(RationalMatrix(2, 3) * RationalMatrix(2, 3), catfrob::ContractViolation);
  EXPECT_THROW(RationalMatrix(2, 3) + RationalMatrix(3, 2), catfrob::ContractViolation);
}

TEST(KernelKernelBasis, Examples) {
  EXPECT_EQ(catfrob::kernel_basis(RationalMatrix{{1, 1}}), (RationalMatrix{{-1}, {1}}));
  auto k3 = catfrob::kernel_basis(RationalMatrix::identity(3));
  EXPECT_EQ(k3.rows(), 3u);
  EXPECT_EQ(k3.cols(), 0u);
  EXPECT_EQ(catfrob::kernel_basis(RationalMatrix::zero(2, 2)), RationalMatrix::identity(2));
}

TEST(KernelKernelBasis, RankNullity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto f = oracle::random_matrix(rng, rng() % 5, rng() % 6, 35);
    auto k = catfrob::kernel_basis(f);
    EXPECT_TRUE((f * k).is_zero());
    EXPECT_EQ(oracle::rank(k), k.cols());
    EXPECT_EQ(catfrob::rank(f), oracle::rank(f));
    EXPECT_EQ(catfrob::rank(f) + k.cols(), f.cols());
    EXPECT_EQ(catfrob::kernel_basis(f), k);
  }
}

TEST(KernelInverse, Examples) {
  EXPECT_EQ(*catfrob::try_inverse(RationalMatrix{{2}}), (RationalMatrix{{Rational(1, 2)}}));
  EXPECT_FALSE(catfrob::try_inverse(RationalMatrix{{1, 1}, {1, 1}}));
  EXPECT_EQ(*catfrob::try_inverse(RationalMatrix{{1, 1}, {0, 1}}), (RationalMatrix{{1, -1}, {0, 1}}));
  EXPECT_FALSE(catfrob::try_inverse(RationalMatrix(2, 3)));
  auto empty = catfrob::try_inverse(RationalMatrix(0, 0));
  ASSERT_TRUE(empty);
  EXPECT_EQ(empty->rows(), 0u);
}

TEST(KernelInverse, Involutive) {
  std::mt19937_64 rng(13);
  int invertible = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + rng() % 4;
    auto f = oracle::random_matrix(rng, n, n, 70);
    auto g = catfrob::try_inverse(f);
    EXPECT_EQ(g.has_value(), oracle::rank(f) == n);
    if (!g) continue;
    ++invertible;
    EXPECT_EQ(f * *g, RationalMatrix::identity(n));
    EXPECT_EQ(*g * f, RationalMatrix::identity(n));
    EXPECT_EQ(*catfrob::try_inverse(*g), f);
  }
  EXPECT_GT(invertible, 10);
}

TEST(KernelSolve, Examples) {
  RationalMatrix b{{5, 1}, {-2, 0}};
  EXPECT_EQ(*catfrob::solve_linear(RationalMatrix::identity(2), b), b);
  EXPECT_EQ(*catfrob::solve_linear(RationalMatrix{{1, 1}}, RationalMatrix{{3}}), (RationalMatrix{{3}, {0}}));
  EXPECT_FALSE(catfrob::solve_linear(RationalMatrix{{0}}, RationalMatrix{{1}}));
  EXPECT_THROW(catfrob::solve_linear(RationalMatrix(2, 2), RationalMatrix(3, 1)), catfrob::ContractViolation);
}

TEST(KernelSolve, ConsistencyMatchesRank) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + rng() % 4, m = 1 + rng() % 4;
    auto a = oracle::random_matrix(rng, n, m, 40);
    auto b = oracle::random_matrix(rng, n, 1);
    RationalMatrix aug(n, m + 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) aug.set(i, j, a.at(i, j));
      aug.set(i, m, b.at(i, 0));
    }
    auto x = catfrob::solve_linear(a, b);
    EXPECT_EQ(x.has_value(), oracle::rank(aug) == oracle::rank(a));
    if (x) {
      EXPECT_EQ(a * *x, b);
    }
  }
}
