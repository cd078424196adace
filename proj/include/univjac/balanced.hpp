#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "univjac/arith.hpp"
#include "univjac/dual_graph.hpp"
#include "univjac/rational.hpp"

namespace univjac {

/// Integer degree per vertex, in the vertex order of the associated graph.
struct Multidegree {
  std::vector<std::int64_t> degrees;

  std::int64_t total() const;
  std::size_t size() const { return degrees.size(); }
  std::int64_t operator[](std::size_t v) const { return degrees[v]; }
  std::int64_t on(const Subcurve& z) const;

  friend auto operator<=>(const Multidegree&, const Multidegree&) = default;
};

std::string to_string(const Multidegree& md);

/// Basic-inequality bounds m_Z(d) <= deg_Z <= M_Z(d); M - m = k_Z exactly.
struct BalanceBounds {
  Rational lower;
  Rational upper;

  friend bool operator==(const BalanceBounds&, const BalanceBounds&) = default;
};

BalanceBounds basic_bounds(const DualGraph& graph, const Subcurve& z, std::int64_t d);

struct BalanceVerdict {
  bool ok = true;
  std::optional<Subcurve> failing_subcurve;      // basic inequality violated here
  std::optional<std::size_t> failing_exceptional;  // exceptional vertex with degree != 1
};

/// Properly balanced: the basic inequality on every subcurve of the chosen
/// mode, and degree 1 on every exceptional vertex. Requires a quasistable
/// graph of total genus >= 2.
BalanceVerdict check_properly_balanced(
    const DualGraph& graph, const Multidegree& md,
    SubcurveMode mode = SubcurveMode::connected_both_sides);

bool is_properly_balanced(const DualGraph& graph, const Multidegree& md,
                          SubcurveMode mode = SubcurveMode::connected_both_sides);

/// Throws DomainError if md is not properly balanced.
bool is_strictly_balanced(const DualGraph& graph, const Multidegree& md,
                          SubcurveMode mode = SubcurveMode::connected_both_sides);

/// All properly (or strictly) balanced multidegrees of total degree d,
/// sorted lexicographically. The candidate box is evaluated in parallel.
std::vector<Multidegree> enumerate_balanced(
    const DualGraph& graph, std::int64_t d, bool strict,
    SubcurveMode mode = SubcurveMode::connected_both_sides);

/// Single-threaded reference for enumerate_balanced.
std::vector<Multidegree> enumerate_balanced_serial(
    const DualGraph& graph, std::int64_t d, bool strict,
    SubcurveMode mode = SubcurveMode::connected_both_sides);

/// The graph carries a properly balanced multidegree of degree d that is not
/// strictly balanced. Only the given graph is inspected, not its other
/// quasistable models.
bool has_properly_not_strictly_balanced(const DualGraph& graph, std::int64_t d);

/// Vine criterion for a stable vine of type (i, g-i-edges+1): k_{d,g} divides
/// 2i - 2 + edges. DomainError if the type is not a stable vine of genus g.
bool is_d_special_vine(const GenusDegree& gd, int i, int edges);

/// Same criterion, reading the type off a graph; DomainError if the graph is
/// not a stable two-component vine.
bool is_d_special_vine(const DualGraph& graph, std::int64_t d);

}  // namespace univjac
