#include "univjac/acceptance.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <regex>
#include <sstream>

#include "univjac/balanced.hpp"
#include "univjac/compare.hpp"
#include "univjac/errors.hpp"
#include "univjac/families.hpp"
#include "univjac/picard.hpp"
#include "univjac/random_graph.hpp"

namespace univjac {

void parse_grid_term(const std::string& term, GridSpec& spec) {
  static const std::regex re(R"(^([gd])=(-?\d+)\.\.(-?\d+|max)$)");
  std::smatch m;
  if (!std::regex_match(term, m, re)) {
    throw DomainError("bad grid term '" + term + "' (expected g=A..B or d=A..B|max)");
  }
  const std::int64_t lo = std::stoll(m[2]);
  const std::optional<std::int64_t> hi =
      m[3] == "max" ? std::nullopt : std::optional<std::int64_t>(std::stoll(m[3]));
  if (m[1] == "g") {
    if (!hi) throw DomainError("the genus range needs an explicit upper bound");
    if (lo < 3 || *hi < lo || *hi > kMaxGenus) throw DomainError("genus range must satisfy 3 <= A <= B");
    spec.g_min = lo;
    spec.g_max = *hi;
  } else {
    if (hi && *hi < lo) throw DomainError("empty degree range");
    spec.d_min = lo;
    spec.d_max = hi;
  }
}

namespace {

// Collects the first failure and counts checks.
class Check {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++count_;
    if (!ok && failure_.empty()) failure_ = what();
  }
  bool pass() const { return failure_.empty(); }
  std::string detail() const {
    return pass() ? std::to_string(count_) + " checks" : failure_;
  }

 private:
  std::size_t count_ = 0;
  std::string failure_;
};

std::string at(const GenusDegree& gd) {
  return "g=" + std::to_string(gd.genus()) + " d=" + std::to_string(gd.degree());
}

template <typename F>
void for_grid(const GridSpec& grid, F f) {
  for (std::int64_t g = grid.g_min; g <= grid.g_max; ++g) {
    for (std::int64_t d = grid.d_lo(g); d <= grid.d_hi(g); ++d) f(GenusDegree(g, d));
  }
}

void boundary_structure(const GridSpec& grid, Check& c) {
  const std::pair<GenusDegree, std::size_t> goldens[] = {
      {{3, 2}, 3}, {{3, 1}, 2}, {{4, 3}, 4}, {{4, 0}, 3}};
  for (const auto& [gd, n] : goldens) {
    c.expect(boundary_count(gd) == n, [&] { return "divisor count at " + at(gd); });
  }
  for_grid(grid, [&](const GenusDegree& gd) {
    const std::int64_t g = gd.genus(), k = k_dg(gd);
    std::vector<std::string> expected{"d0"};
    for (std::int64_t i = 1; i <= g / 2; ++i) {
      const std::string s = std::to_string(i);
      if ((2 * i - 1) % k != 0) expected.push_back("d" + s);
      else if (2 * i < g) { expected.push_back("d" + s + "_1"); expected.push_back("d" + s + "_2"); }
      else expected.push_back("dg2");
    }
    const BoundaryTable t = boundary_table(gd);
    c.expect(t.labels() == expected, [&] { return "labels at " + at(gd); });
    for (const BoundaryEntry& e : t.entries) {
      c.expect(e.multidegree.total() == gd.degree() && is_properly_balanced(e.fiber, e.multidegree),
               [&] { return e.label.name() + " multidegree at " + at(gd); });
    }
  });
}

void enumeration_oracle(std::uint64_t seed, Check& c) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> deg(-10, 10);
  for (int trial = 0; trial < 200; ++trial) {
    const DualGraph g = random_quasistable(rng, 6);
    const std::int64_t d = deg(rng);
    const auto proper = enumerate_balanced(g, d, false, SubcurveMode::connected_both_sides);
    const auto strict = enumerate_balanced(g, d, true, SubcurveMode::connected_both_sides);
    const auto what = [&] { return "graph #" + std::to_string(trial) + " d=" + std::to_string(d); };
    c.expect(proper == enumerate_balanced_serial(g, d, false, SubcurveMode::all), what);
    c.expect(strict == enumerate_balanced_serial(g, d, true, SubcurveMode::all), what);
    c.expect(std::includes(proper.begin(), proper.end(), strict.begin(), strict.end()), what);
  }
}

void vine_criterion(Check& c) {
  for (int g = 3; g <= 8; ++g) {
    for (int edges = 1; edges <= g + 1; ++edges) {
      for (int i = 0; g - i - edges + 1 >= 0; ++i) {
        const int other = g - i - edges + 1;
        if ((i == 0 || other == 0) && edges < 3) continue;
        const DualGraph v = vine(i, other, edges);
        for (int d = 0; d <= 2 * g - 3; ++d) {
          c.expect(is_d_special_vine(GenusDegree(g, d), i, edges) == has_properly_not_strictly_balanced(v, d),
                   [&] {
                     return "vine (" + std::to_string(i) + "," + std::to_string(other) + ") x" +
                            std::to_string(edges) + " d=" + std::to_string(d);
                   });
        }
      }
    }
  }
}

void tautological_reduction(const GridSpec& grid, Check& c) {
  for_grid(grid, [&](const GenusDegree& gd) {
    const BarJacElement delta = total_boundary(gd);
    for (std::int64_t n = -3; n <= 5; ++n) {
      c.expect(reduce_lambda(gd, n, 0) == BarJacElement(gd, {{"L10", 6 * n * n - 6 * n + 1}}) - delta * choose2(n),
               [&] { return "Mumford relation n=" + std::to_string(n) + " at " + at(gd); });
    }
    c.expect(reduce_lambda(gd, 1, 0) == BarJacElement::unit(gd, "L10") &&
                 reduce_lambda(gd, 0, 1) == BarJacElement::unit(gd, "L01") &&
                 reduce_lambda(gd, 1, 1) == BarJacElement::unit(gd, "L11"),
             [&] { return "basis identities at " + at(gd); });
    for (std::int64_t n = -5; n <= 5; ++n) {
      for (std::int64_t m = -5; m <= 5; ++m) {
        const LambdaCombination lc = substitute_kappa(grr_degree_one(n, m));
        const BarJacElement r = reduce_lambda(gd, n, m);
        c.expect(lc.L10 == Rational(r["L10"]) && lc.L01 == Rational(r["L01"]) && lc.L11 == Rational(r["L11"]) && is_integer(lc.delta) &&
                     r == BarJacElement(gd, {{"L10", r["L10"]}, {"L01", r["L01"]}, {"L11", r["L11"]}}) +
                              delta * lc.delta.numerator(),
                 [&] { return "GRR substitution n=" + std::to_string(n) + " m=" + std::to_string(m) + " at " + at(gd); });
      }
    }
  });
}

void weight_consistency(const GridSpec& grid, Check& c) {
  for_grid(grid, [&](const GenusDegree& gd) {
    const std::int64_t g = gd.genus(), d = gd.degree();
    for (std::int64_t n = -5; n <= 5; ++n) {
      for (std::int64_t m = -5; m <= 5; ++m) {
        c.expect(res_weight(reduce_lambda(gd, n, m)) == m * (n * (2 * g - 2) + m * d + 1 - g),
                 [&] { return "res n=" + std::to_string(n) + " m=" + std::to_string(m) + " at " + at(gd); });
      }
    }
    const std::int64_t r = std::gcd(res_weight(JacElement::unit(gd, "L01")), res_weight(JacElement::unit(gd, "L11")));
    c.expect(r == std::gcd(d + 1 - g, 2 * g - 2) && r == invariants(gd).gerbe_order,
             [&] { return "gerbe order at " + at(gd); });
  });
}

void xi_and_chi(const GridSpec& grid, Check& c) {
  for_grid(grid, [&](const GenusDegree& gd) {
    const JacElement xi = xi_element(gd);
    c.expect(res_weight(xi) == 0, [&] { return "res(Xi) at " + at(gd); });
    c.expect(chi_d(JElement::unit(gd, "Xi")) == k_dg(gd), [&] { return "chi(Xi) at " + at(gd); });
    c.expect(chi_d(JElement::unit(gd, "L10")) == 0, [&] { return "chi(L10) at " + at(gd); });
    c.expect(membership_J(xi) == JCoordinates{0, 1}, [&] { return "membership of Xi at " + at(gd); });
    if (gd.degree() == gd.genus() - 1) {
      c.expect(xi == JacElement::unit(gd, "L01"), [&] { return "Xi = L01 at " + at(gd); });
    }
  });
}

void theta(const GridSpec& grid, Check& c) {
  c.expect(theta_relation({3, 0}).exponent == 1, [] { return "golden g=3 d=0"; });
  c.expect(theta_relation({4, 1}).exponent == 3, [] { return "golden g=4 d=1"; });
  for_grid(grid, [&](const GenusDegree& gd) {
    const ThetaRelation t = theta_relation(gd);
    c.expect(t.verified && (t.k * (t.k + t.e) * t.e) % 2 == 0 &&
                 t.combination == PairingClass{Rational(-t.k * (t.k + t.e) * t.e / 2), 0, 0},
             [&] { return "theta relation at " + at(gd); });
  });
}

void families_and_independence(const GridSpec& grid, Check& c) {
  for_grid(grid, [&](const GenusDegree& input) {
    const GenusDegree gd = normalized(input);
    const std::int64_t g = gd.genus(), d = gd.degree();
    c.expect(verify_family(gd, family_F(gd)), [&] { return "F at " + at(gd); });
    if (d <= g - 1) c.expect(verify_family(gd, family_Fprime(gd, 1)), [&] { return "F'1 at " + at(gd); });
    if (d >= g - 1) c.expect(verify_family(gd, family_Fprime(gd, 2)), [&] { return "F'2 at " + at(gd); });
    for (int h = 1; 2 * h <= g - 2; ++h) {
      for (int v : {1, 2}) {
        c.expect(verify_family(gd, family_Fh(gd, h, v)),
                 [&] { return "Fh h=" + std::to_string(h) + " variant " + std::to_string(v) + " at " + at(gd); });
      }
    }
    std::string verdict;
    try {
      verdict = independence_matrix(gd).verdict;
    } catch (const VerificationError& e) {
      verdict = e.what();
    }
    c.expect(verdict == "independent", [&] { return "independence at " + at(gd) + ": " + verdict; });
  });
}

void presentations(const GridSpec& grid, Check& c) {
  for_grid(grid, [&](const GenusDegree& gd) {
    const std::size_t b = boundary_count(gd);
    c.expect(presentation(gd, Space::jac).rank == 3 && presentation(gd, Space::j).rank == 2 &&
                 presentation(gd, Space::barjac).rank == 3 + b && presentation(gd, Space::barj).rank == 2 + b,
             [&] { return "ranks at " + at(gd); });
    const CompareReport r = compare_report(gd);
    std::int64_t split = 0;
    std::vector<std::int64_t> torsion;
    for (const AlphaColumn& col : r.columns) {
      if (col.targets.size() == 2) ++split;
      if (col.coefficient == 2) torsion.push_back(2);
    }
    c.expect(r.alpha_matches_pullback && r.cokernel_free_rank == split && r.cokernel_torsion == torsion,
             [&] { return "alpha elementary divisors at " + at(gd); });
    const PicJ0 p = pic_J0(gd);
    const bool ok = gd.genus() == 3
                        ? p.free == std::vector<std::string>{"Xi"} && p.torsion.size() == 1 &&
                              p.torsion[0] == std::pair<std::string, std::int64_t>{"L10", 9}
                        : p.free.size() == 2 && p.torsion.empty();
    c.expect(ok, [&] { return "Pic(J0) at " + at(gd); });
  });
}

void topology(const GridSpec& grid, Check& c) {
  for_grid(grid, [&](const GenusDegree& gd) {
    c.expect(topo_class(JacElement::unit(gd, "L10")) == TopoClass{1, 0, 0} &&
                 topo_class(JacElement::unit(gd, "L11")) == TopoClass{0, -1, 0} &&
                 topo_class(JacElement::unit(gd, "L01")) == TopoClass{1, 1, 1},
             [&] { return "generator classes at " + at(gd); });
    const auto eta = eta_decomposition(xi_element(gd));
    const std::int64_t g = gd.genus(), d = gd.degree();
    const std::int64_t expected = (d + g - 1) / std::gcd(d + g - 1, d - g + 1);
    c.expect(eta && eta->lambda == expected && eta->eta == 1, [&] { return "eta decomposition at " + at(gd); });
  });
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const GridSpec& grid, std::uint64_t seed) {
  struct Spec {
    const char* name;
    std::function<void(Check&)> body;
  };
  const std::vector<Spec> specs{
      {"boundary structure", [&](Check& c) { boundary_structure(grid, c); }},
      {"balanced enumeration oracle", [&](Check& c) { enumeration_oracle(seed, c); }},
      {"d-special vine criterion", [&](Check& c) { vine_criterion(c); }},
      {"tautological reduction", [&](Check& c) { tautological_reduction(grid, c); }},
      {"weight consistency", [&](Check& c) { weight_consistency(grid, c); }},
      {"Xi and chi", [&](Check& c) { xi_and_chi(grid, c); }},
      {"theta relation", [&](Check& c) { theta(grid, c); }},
      {"families and independence", [&](Check& c) { families_and_independence(grid, c); }},
      {"presentations", [&](Check& c) { presentations(grid, c); }},
      {"topological basis", [&](Check& c) { topology(grid, c); }},
  };
  std::vector<CriterionResult> out;
  int id = 1;
  for (const Spec& s : specs) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      s.body(c);
    } catch (const std::exception& e) {
      c.expect(false, [&] { return std::string("exception: ") + e.what(); });
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back({id++, s.name, c.pass(), c.detail(), secs});
  }
  return out;
}

}  // namespace univjac
