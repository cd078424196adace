#include "univjac/balanced.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "univjac/errors.hpp"

namespace univjac {

std::int64_t Multidegree::total() const {
  return std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});
}

std::int64_t Multidegree::on(const Subcurve& z) const {
  std::int64_t s = 0;
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    if (z.contains(v)) s += degrees[v];
  }
  return s;
}

std::string to_string(const Multidegree& md) {
  std::ostringstream os;
  os << '(';
  for (std::size_t v = 0; v < md.size(); ++v) os << (v ? "," : "") << md[v];
  os << ')';
  return os.str();
}

namespace {

void require_genus_at_least_two(const DualGraph& graph) {
  if (graph.total_genus() < 2) {
    throw DomainError("balanced multidegrees need total genus >= 2 (got " +
                      std::to_string(graph.total_genus()) + ")");
  }
}

void require_quasistable(const DualGraph& graph) {
  if (!is_quasistable(graph)) {
    throw DomainError("graph is not quasistable (" + std::string(to_string(classify(graph))) + ")");
  }
}

// Subcurve data with the basic inequality scaled by 2(2g-2) so all checks
// are integer comparisons:  lo <= 2(2g-2) deg_Z <= hi.
struct ScaledCut {
  std::uint64_t mask;
  std::int64_t lo;
  std::int64_t hi;
  bool cut_in_exceptional;  // every Z-Z^c edge has an exceptional endpoint
};

class BalanceContext {
 public:
  BalanceContext(const DualGraph& graph, std::int64_t d, SubcurveMode mode)
      : graph_(graph), d_(d) {
    require_quasistable(graph);
    require_genus_at_least_two(graph);
    const std::int64_t twog2 = 2 * graph.total_genus() - 2;
    scale_ = 2 * twog2;
    for (const Subcurve& z : subcurves(graph, mode)) {
      const SubcurveStats st = subcurve_stats(graph, z);
      ScaledCut c{z.mask(), 2 * d * st.w - st.k * twog2, 2 * d * st.w + st.k * twog2, true};
      for (const auto& [u, v] : graph.edges()) {
        if (z.contains(u) == z.contains(v)) continue;
        if (!graph.is_exceptional(u) && !graph.is_exceptional(v)) {
          c.cut_in_exceptional = false;
          break;
        }
      }
      cuts_.push_back(c);
    }
    for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
      if (graph.is_exceptional(v)) exceptional_.push_back(v);
    }
  }

  std::int64_t degree() const { return d_; }

  BalanceVerdict proper(const std::vector<std::int64_t>& deg) const {
    BalanceVerdict out;
    for (std::size_t v : exceptional_) {
      if (deg[v] != 1) {
        out.ok = false;
        out.failing_exceptional = v;
        return out;
      }
    }
    for (const ScaledCut& c : cuts_) {
      const std::int64_t s = scale_ * on(c.mask, deg);
      if (s < c.lo || s > c.hi) {
        out.ok = false;
        out.failing_subcurve = Subcurve(graph_, c.mask);
        return out;
      }
    }
    return out;
  }

  // Assumes deg is properly balanced.
  bool strict(const std::vector<std::int64_t>& deg) const {
    for (const ScaledCut& c : cuts_) {
      if (!c.cut_in_exceptional && scale_ * on(c.mask, deg) == c.lo) return false;
    }
    return true;
  }

 private:
  static std::int64_t on(std::uint64_t mask, const std::vector<std::int64_t>& deg) {
    std::int64_t s = 0;
    for (std::size_t v = 0; v < deg.size(); ++v) {
      if ((mask >> v) & 1U) s += deg[v];
    }
    return s;
  }

  const DualGraph& graph_;
  std::int64_t d_;
  std::int64_t scale_ = 1;
  std::vector<ScaledCut> cuts_;
  std::vector<std::size_t> exceptional_;
};

void require_matching_size(const DualGraph& graph, const Multidegree& md) {
  if (md.size() != graph.num_vertices()) {
    throw DomainError("multidegree has " + std::to_string(md.size()) + " entries, graph has " +
                      std::to_string(graph.num_vertices()) + " vertices");
  }
}

struct SearchBox {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;
  std::int64_t cells = 1;  // product of the widths of all but the last vertex
};

// Singleton basic inequalities are necessary, so they bound the search.
SearchBox search_box(const DualGraph& graph, std::int64_t d) {
  const std::size_t n = graph.num_vertices();
  SearchBox box;
  box.lo.resize(n);
  box.hi.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (n == 1) {
      box.lo[v] = box.hi[v] = d;
    } else if (graph.is_exceptional(v)) {
      box.lo[v] = box.hi[v] = 1;
    } else {
      const BalanceBounds b = basic_bounds(graph, Subcurve(graph, 1ULL << v), d);
      box.lo[v] = ceil(b.lower);
      box.hi[v] = floor(b.upper);
    }
  }
  constexpr std::int64_t kMaxCells = 200'000'000;
  for (std::size_t v = 0; v + 1 < n; ++v) {
    const std::int64_t width = std::max<std::int64_t>(0, box.hi[v] - box.lo[v] + 1);
    if (width != 0 && box.cells > kMaxCells / width) {
      throw DomainError("balanced enumeration search box is too large");
    }
    box.cells *= width;
  }
  return box;
}

// Decode cell index `idx` into the first n-1 degrees; the last is forced by
// the total. Returns false if the forced value leaves its box.
bool decode(const SearchBox& box, std::int64_t d, std::int64_t idx,
            std::vector<std::int64_t>& deg) {
  const std::size_t n = deg.size();
  std::int64_t sum = 0;
  for (std::size_t v = 0; v + 1 < n; ++v) {
    const std::int64_t width = box.hi[v] - box.lo[v] + 1;
    deg[v] = box.lo[v] + idx % width;
    idx /= width;
    sum += deg[v];
  }
  deg[n - 1] = d - sum;
  return deg[n - 1] >= box.lo[n - 1] && deg[n - 1] <= box.hi[n - 1];
}

}  // namespace

BalanceBounds basic_bounds(const DualGraph& graph, const Subcurve& z, std::int64_t d) {
  require_genus_at_least_two(graph);
  const SubcurveStats st = subcurve_stats(graph, z);
  const Rational centre(d * st.w, 2 * graph.total_genus() - 2);
  const Rational half(st.k, 2);
  return {centre - half, centre + half};
}

BalanceVerdict check_properly_balanced(const DualGraph& graph, const Multidegree& md,
                                       SubcurveMode mode) {
  require_matching_size(graph, md);
  const BalanceContext ctx(graph, md.total(), mode);
  return ctx.proper(md.degrees);
}

bool is_properly_balanced(const DualGraph& graph, const Multidegree& md, SubcurveMode mode) {
  return check_properly_balanced(graph, md, mode).ok;
}

bool is_strictly_balanced(const DualGraph& graph, const Multidegree& md, SubcurveMode mode) {
  require_matching_size(graph, md);
  const BalanceContext ctx(graph, md.total(), mode);
  if (!ctx.proper(md.degrees).ok) {
    throw DomainError("multidegree " + to_string(md) + " is not properly balanced");
  }
  return ctx.strict(md.degrees);
}

std::vector<Multidegree> enumerate_balanced_serial(const DualGraph& graph, std::int64_t d,
                                                   bool strict, SubcurveMode mode) {
  const BalanceContext ctx(graph, d, mode);
  const SearchBox box = search_box(graph, d);
  std::vector<Multidegree> out;
  std::vector<std::int64_t> deg(graph.num_vertices());
  for (std::int64_t idx = 0; idx < box.cells; ++idx) {
    if (!decode(box, d, idx, deg)) continue;
    if (!ctx.proper(deg).ok) continue;
    if (strict && !ctx.strict(deg)) continue;
    out.push_back({deg});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Multidegree> enumerate_balanced(const DualGraph& graph, std::int64_t d, bool strict,
                                            SubcurveMode mode) {
  const BalanceContext ctx(graph, d, mode);
  const SearchBox box = search_box(graph, d);
  const std::size_t n = graph.num_vertices();
  std::vector<Multidegree> out;

#pragma omp parallel if (box.cells > 4096)
  {
    std::vector<Multidegree> local;
    std::vector<std::int64_t> deg(n);
#pragma omp for schedule(static) nowait
    for (std::int64_t idx = 0; idx < box.cells; ++idx) {
      if (!decode(box, d, idx, deg)) continue;
      if (!ctx.proper(deg).ok) continue;
      if (strict && !ctx.strict(deg)) continue;
      local.push_back({deg});
    }
#pragma omp critical(univjac_enumerate_merge)
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_properly_not_strictly_balanced(const DualGraph& graph, std::int64_t d) {
  const BalanceContext ctx(graph, d, SubcurveMode::all);
  const SearchBox box = search_box(graph, d);
  std::vector<std::int64_t> deg(graph.num_vertices());
  for (std::int64_t idx = 0; idx < box.cells; ++idx) {
    if (!decode(box, d, idx, deg)) continue;
    if (ctx.proper(deg).ok && !ctx.strict(deg)) return true;
  }
  return false;
}

bool is_d_special_vine(const GenusDegree& gd, int i, int edges) {
  const std::int64_t other = gd.genus() - i - edges + 1;
  if (i < 0 || edges < 1 || other < 0) {
    throw DomainError("no vine of type (" + std::to_string(i) + "," + std::to_string(other) +
                      ") with " + std::to_string(edges) + " edges in genus " +
                      std::to_string(gd.genus()));
  }
  if ((i == 0 || other == 0) && edges < 3) {
    throw DomainError("vine with a rational component needs at least 3 edges to be stable");
  }
  return divides(k_dg(gd), 2 * i - 2 + edges);
}

bool is_d_special_vine(const DualGraph& graph, std::int64_t d) {
  const bool two_sided = graph.num_vertices() == 2 && !graph.has_loop(0) && !graph.has_loop(1);
  if (!two_sided || classify(graph) != Stability::stable) {
    throw DomainError("vine criterion requires a stable two-component vine curve");
  }
  const GenusDegree gd(graph.total_genus(), d);
  return is_d_special_vine(gd, graph.vertex(0).genus, static_cast<int>(graph.num_edges()));
}

}  // namespace univjac
