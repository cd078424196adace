#include <gtest/gtest.h>

#include "oracles.hpp"
#include "univjac/arith.hpp"
#include "univjac/errors.hpp"

using namespace univjac;

TEST(Arith, InvariantsMatchGcdOracle) {
  for (std::int64_t g = 3; g <= 12; ++g) {
    for (std::int64_t d = -10; d <= 4 * g; ++d) {
      const Invariants inv = invariants({g, d});
      const std::int64_t twog2 = 2 * g - 2;
      const std::int64_t g1 = oracle::gcd(twog2, d + g - 1);
      EXPECT_EQ(inv.twog2, twog2);
      EXPECT_EQ(inv.G1, g1);
      EXPECT_EQ(inv.k, twog2 / g1);
      EXPECT_EQ(inv.e, (d - g + 1) / oracle::gcd(d - g + 1, twog2));
      EXPECT_EQ(inv.gerbe_order, oracle::gcd(d + 1 - g, twog2));
    }
  }
}

TEST(Arith, GcdIdentities) {
  for (std::int64_t g = 3; g <= 12; ++g) {
    for (std::int64_t d = -10; d <= 4 * g; ++d) {
      const std::int64_t a = oracle::gcd(2 * g - 2, d + 1 - g);
      EXPECT_EQ(a, oracle::gcd(2 * g - 2, d + g - 1));
      EXPECT_EQ(a, oracle::gcd(d + 1 - g, d + g - 1));
      const Invariants inv = invariants({g, d});
      EXPECT_EQ(inv.k * inv.G1, 2 * g - 2);
      EXPECT_EQ(inv.gerbe_order, inv.G1);
      EXPECT_EQ(k_dg({g, d}), k_dg({g, d + 2 * g - 2}));
      EXPECT_EQ((inv.k * inv.e * (inv.k + inv.e)) % 2, 0);
    }
  }
}

TEST(Arith, Goldens) {
  EXPECT_EQ(invariants({3, 2}), (Invariants{4, 4, 1, 0, 4}));
  for (std::int64_t g = 3; g <= 20; ++g) EXPECT_EQ(k_dg({g, g - 1}), 1);
  // k = 6/gcd(6,4), e = -2/gcd(-2,6), gerbe order gcd(-2,6).
  const Invariants g4d1 = invariants({4, 1});
  EXPECT_EQ(g4d1.k, 3);
  EXPECT_EQ(g4d1.e, -1);
  EXPECT_EQ(g4d1.gerbe_order, 2);
  EXPECT_EQ(k_dg({5, 0}), 2);
}

TEST(Arith, PoincareExistence) {
  EXPECT_TRUE(poincare_exists({3, 3}, 1));
  EXPECT_FALSE(poincare_exists({3, 2}, 1));
  EXPECT_TRUE(poincare_exists({3, 2}, 4));
  for (std::int64_t g = 3; g <= 15; ++g) EXPECT_TRUE(poincare_exists({g, g}, 1));
  EXPECT_THROW(poincare_exists({3, 2}, 0), DomainError);
}

TEST(Arith, NormalizeDegree) {
  EXPECT_EQ(normalize_degree({3, 9}), (NormalizedDegree{1, 2}));
  EXPECT_EQ(normalize_degree({3, -1}), (NormalizedDegree{3, -1}));
  EXPECT_EQ(normalize_degree({5, 7}), (NormalizedDegree{7, 0}));
  for (std::int64_t g = 3; g <= 9; ++g) {
    for (std::int64_t d = -50; d <= 50; ++d) {
      const NormalizedDegree nd = normalize_degree({g, d});
      EXPECT_GE(nd.d0, 0);
      EXPECT_LT(nd.d0, 2 * g - 2);
      EXPECT_EQ(nd.d0 + nd.n * (2 * g - 2), d);
    }
  }
}

TEST(Arith, RejectsOutOfRange) {
  EXPECT_THROW(GenusDegree(2, 0), DomainError);
  EXPECT_THROW(GenusDegree(-1, 0), DomainError);
  EXPECT_THROW(GenusDegree(kMaxGenus + 1, 0), DomainError);
  EXPECT_THROW(GenusDegree(3, kMaxAbsDegree + 1), DomainError);
}
