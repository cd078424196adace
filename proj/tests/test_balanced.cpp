#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "univjac/balanced.hpp"
#include "univjac/errors.hpp"
#include "univjac/random_graph.hpp"

using namespace univjac;

namespace {

// Direct rational evaluation over every subcurve, for comparison with the
// library's scaled-integer checks.
struct Brute {
  bool proper = false;
  bool strict = false;
};

Brute brute_force(const DualGraph& g, const std::vector<std::int64_t>& deg) {
  const std::size_t n = g.num_vertices();
  const std::int64_t d = std::accumulate(deg.begin(), deg.end(), std::int64_t{0});
  const std::int64_t twog2 = 2 * g.total_genus() - 2;
  Brute out{true, true};
  for (std::size_t v = 0; v < n; ++v) {
    if (g.vertex(v).genus == 0 && g.valence(v) == 2 && !g.has_loop(v) && deg[v] != 1) out.proper = false;
  }
  for (std::uint64_t mask = 1; mask + 1 < (1ULL << n); ++mask) {
    std::int64_t w = 0, k = 0, dz = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (!((mask >> v) & 1U)) continue;
      w += 2 * g.vertex(v).genus - 2 + g.valence(v);
      dz += deg[v];
    }
    bool cut_exceptional = true;
    for (const auto& [a, b] : g.edges()) {
      if (((mask >> a) & 1U) == ((mask >> b) & 1U)) continue;
      ++k;
      if (!g.is_exceptional(a) && !g.is_exceptional(b)) cut_exceptional = false;
    }
    const Rational m = Rational(d * w, twog2) - Rational(k, 2);
    const Rational big_m = m + k;
    if (Rational(dz) < m || Rational(dz) > big_m) out.proper = false;
    if (Rational(dz) == m && !cut_exceptional) out.strict = false;
  }
  out.strict = out.strict && out.proper;
  return out;
}

std::vector<Multidegree> brute_enumerate(const DualGraph& g, std::int64_t d, bool strict) {
  const std::size_t n = g.num_vertices();
  const std::int64_t bound = std::abs(d) + 2 * static_cast<std::int64_t>(g.num_edges()) + 3;
  std::vector<Multidegree> out;
  std::vector<std::int64_t> deg(n, -bound);
  for (;;) {
    std::int64_t sum = 0;
    for (std::size_t v = 0; v + 1 < n; ++v) sum += deg[v];
    deg[n - 1] = d - sum;
    const Brute b = brute_force(g, deg);
    if (strict ? b.strict : b.proper) out.push_back({deg});
    std::size_t v = 0;
    while (v + 1 < n && deg[v] == bound) deg[v++] = -bound;
    if (v + 1 >= n) break;
    ++deg[v];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Balanced, BasicBounds) {
  const DualGraph v11 = vine(1, 1, 2);
  EXPECT_EQ(basic_bounds(v11, make_subcurve(v11, {"C1"}), 2), (BalanceBounds{0, 2}));
  const DualGraph v12 = vine(1, 2, 1);
  EXPECT_EQ(basic_bounds(v12, make_subcurve(v12, {"C1"}), 3),
            (BalanceBounds{Rational(1, 4), Rational(5, 4)}));
  EXPECT_THROW(basic_bounds(vine(0, 1, 1), Subcurve(vine(0, 1, 1), 1), 0), DomainError);
}

TEST(Balanced, Predicates) {
  const DualGraph v11 = vine(1, 1, 2);
  EXPECT_TRUE(is_properly_balanced(v11, {{0, 2}}));
  EXPECT_FALSE(is_properly_balanced(v11, {{3, -1}}));
  const BalanceVerdict bad = check_properly_balanced(v11, {{3, -1}});
  ASSERT_TRUE(bad.failing_subcurve.has_value());
  EXPECT_TRUE(is_strictly_balanced(v11, {{1, 1}}));
  EXPECT_FALSE(is_strictly_balanced(v11, {{0, 2}}));
  EXPECT_THROW(is_strictly_balanced(v11, {{3, -1}}), DomainError);
  EXPECT_TRUE(is_strictly_balanced(vine(1, 2, 1), {{1, 2}}));
  EXPECT_TRUE(is_properly_balanced(single_vertex(4), {{7}}));
  EXPECT_THROW(is_properly_balanced(v11, {{1}}), DomainError);

  const DualGraph e({{"C1", 1}, {"E", 0}, {"C2", 2}}, {{"C1", "E"}, {"E", "C2"}});
  const BalanceVerdict ex = check_properly_balanced(e, {{2, 0, 1}});
  EXPECT_FALSE(ex.ok);
  EXPECT_EQ(ex.failing_exceptional, std::optional<std::size_t>(1));
}

TEST(Balanced, ThreeComponentFiberIsBalanced) {
  for (int g = 3; g <= 10; ++g) {
    const DualGraph f({{"C", g - 3}, {"R1", 0}, {"R2", 0}},
                      {{"R1", "R2"}, {"C", "R1"}, {"C", "R1"}, {"C", "R2"}, {"C", "R2"}});
    for (int d = 0; d < 2 * g - 2; ++d) EXPECT_TRUE(is_properly_balanced(f, {{d, 0, 0}})) << g << " " << d;
  }
}

TEST(Balanced, EnumerationGoldens) {
  const DualGraph v11 = vine(1, 1, 2);
  EXPECT_EQ(enumerate_balanced(v11, 2, false),
            (std::vector<Multidegree>{{{0, 2}}, {{1, 1}}, {{2, 0}}}));
  EXPECT_EQ(enumerate_balanced(v11, 2, true), (std::vector<Multidegree>{{{1, 1}}}));
  EXPECT_EQ(enumerate_balanced(vine(1, 2, 1), 3, false), (std::vector<Multidegree>{{{1, 2}}}));
}

TEST(Balanced, RandomGraphsAgainstBruteForce) {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 120) {
    const DualGraph g = random_quasistable(rng, 4);
    const std::int64_t d = std::uniform_int_distribution<std::int64_t>(-6, 10)(rng);
    for (bool strict : {false, true}) {
      const auto expected = brute_enumerate(g, d, strict);
      EXPECT_EQ(enumerate_balanced(g, d, strict), expected);
      EXPECT_EQ(enumerate_balanced_serial(g, d, strict), expected);
      EXPECT_EQ(enumerate_balanced(g, d, strict, SubcurveMode::all), expected);
    }
    ++checked;
  }
}

TEST(Balanced, ModesAgreeAndStrictContained) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const DualGraph g = random_quasistable(rng, 6);
    const std::int64_t d = std::uniform_int_distribution<std::int64_t>(-10, 10)(rng);
    const auto proper = enumerate_balanced(g, d, false);
    EXPECT_EQ(proper, enumerate_balanced(g, d, false, SubcurveMode::all));
    const auto strict = enumerate_balanced(g, d, true);
    EXPECT_EQ(strict, enumerate_balanced(g, d, true, SubcurveMode::all));
    for (const auto& md : strict) {
      EXPECT_TRUE(std::binary_search(proper.begin(), proper.end(), md));
    }
    if (g.num_vertices() > 1) {
      for (const Subcurve& z : subcurves(g, SubcurveMode::all)) {
        const BalanceBounds b = basic_bounds(g, z, d);
        const BalanceBounds c = basic_bounds(g, z.complement(g), d);
        EXPECT_EQ(c.lower, Rational(d) - b.upper);
        EXPECT_EQ(c.upper, Rational(d) - b.lower);
        EXPECT_EQ(b.upper - b.lower, Rational(subcurve_stats(g, z).k));
      }
    }
  }
}

TEST(Balanced, VineCriterion) {
  EXPECT_TRUE(is_d_special_vine(vine(1, 1, 2), 2));
  EXPECT_FALSE(is_d_special_vine(vine(1, 2, 1), 1));
  EXPECT_FALSE(has_properly_not_strictly_balanced(single_vertex(4), 3));
  EXPECT_THROW(is_d_special_vine(single_vertex(4), 3), DomainError);
  EXPECT_THROW(is_d_special_vine(GenusDegree(3, 0), 1, 4), DomainError);
  EXPECT_THROW(is_d_special_vine(GenusDegree(3, 0), 0, 2), DomainError);
}

TEST(Balanced, VineCriterionMatchesBruteForce) {
  for (int g = 3; g <= 8; ++g) {
    for (int edges = 1; edges <= g + 1; ++edges) {
      for (int i = 0; g - i - edges + 1 >= 0; ++i) {
        const int other = g - i - edges + 1;
        if ((i == 0 || other == 0) && edges < 3) continue;
        const DualGraph v = vine(i, other, edges);
        for (int d = 0; d <= 2 * g - 3; ++d) {
          EXPECT_EQ(is_d_special_vine(GenusDegree(g, d), i, edges),
                    has_properly_not_strictly_balanced(v, d))
              << "g=" << g << " i=" << i << " edges=" << edges << " d=" << d;
          EXPECT_EQ(is_d_special_vine(v, d), is_d_special_vine(GenusDegree(g, d), i, edges));
        }
      }
    }
  }
}
