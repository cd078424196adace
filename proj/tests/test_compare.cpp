#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "univjac/compare.hpp"
#include "univjac/errors.hpp"

using namespace univjac;

TEST(Smith, KnownMatrices) {
  EXPECT_EQ(smith_invariants({{2, 0}, {0, 3}}), (std::vector<std::int64_t>{1, 6}));
  EXPECT_EQ(smith_invariants({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), (std::vector<std::int64_t>{2, 6, 12}));
  EXPECT_EQ(smith_invariants({{0, 0}, {0, 0}}), (std::vector<std::int64_t>{}));
  EXPECT_EQ(smith_invariants({{1}, {1}}), (std::vector<std::int64_t>{1}));
}

TEST(Smith, DeterminantAndChain) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> u(-6, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 4;
    IntMatrix a(n, std::vector<std::int64_t>(n));
    for (auto& row : a) for (auto& x : row) x = u(rng);
    const auto inv = smith_invariants(a);
    const std::int64_t det = oracle::bareiss_det(a);
    if (det == 0) {
      EXPECT_LT(inv.size(), n);
    } else {
      ASSERT_EQ(inv.size(), n);
      std::int64_t prod = 1;
      for (std::size_t j = 0; j < n; ++j) {
        prod *= inv[j];
        if (j) EXPECT_EQ(inv[j] % inv[j - 1], 0);
      }
      EXPECT_EQ(prod, std::llabs(det));
    }
  }
}

TEST(Compare, AlphaGoldens) {
  EXPECT_EQ(alpha_d({3, 1}, 1), BarJElement({3, 1}, {{"d1", 1}}));
  EXPECT_EQ(alpha_d({3, 2}, 1), BarJElement({3, 2}, {{"d1_1", 1}, {"d1_2", 1}}));
  EXPECT_EQ(alpha_d({4, 3}, 2), BarJElement({4, 3}, {{"dg2", 2}}));
  EXPECT_THROW(alpha_d({4, 3}, 3), RangeError);
}

TEST(Compare, Reports) {
  const CompareReport a = compare_report({3, 2});
  EXPECT_EQ(a.rank_cl_barj, 4);
  EXPECT_EQ(a.rank_pic_barj, 5);
  EXPECT_EQ(a.columns[1].cokernel, "Z");
  EXPECT_EQ(a.cokernel_free_rank, 1);
  const CompareReport b = compare_report({3, 1});
  EXPECT_EQ(b.cokernel_free_rank, 0);
  EXPECT_TRUE(b.cokernel_torsion.empty());
  const CompareReport c = compare_report({4, 3});
  EXPECT_EQ(c.columns[2].cokernel, "Z/2");
  EXPECT_EQ(c.cokernel_torsion, (std::vector<std::int64_t>{2}));

  for (std::int64_t g = 3; g <= 10; ++g) {
    for (std::int64_t d = 0; d <= 2 * g - 3; ++d) {
      const CompareReport r = compare_report({g, d});
      EXPECT_TRUE(r.alpha_matches_pullback);
      EXPECT_EQ(r.rank_cl_barj - r.rank_cl_j, g / 2 + 1);
      EXPECT_EQ(r.rank_pic_barj - r.rank_pic_j, static_cast<std::int64_t>(r.boundary_count));
      EXPECT_GE(r.boundary_count, static_cast<std::size_t>(g / 2 + 1));
      std::int64_t split = 0, halfgenus = 0;
      for (const auto& col : r.columns) {
        split += col.cokernel == "Z";
        halfgenus += col.cokernel == "Z/2";
      }
      EXPECT_EQ(r.boundary_count == static_cast<std::size_t>(g / 2 + 1), split == 0);
      EXPECT_EQ(r.cokernel_free_rank, split);
      EXPECT_EQ(r.cokernel_torsion, std::vector<std::int64_t>(halfgenus, 2));
    }
  }
}

TEST(Compare, PicJ0) {
  EXPECT_EQ(to_string(pic_J0({3, 2})), "Z/9*L10 + Z*Xi");
  EXPECT_EQ(to_string(pic_J0({3, 1})), "Z/9*L10 + Z*Xi");
  EXPECT_EQ(to_string(pic_J0({5, 2})), "Z*L10 + Z*Xi");
}
