#include "univjac/dual_graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "univjac/errors.hpp"

namespace univjac {

DualGraph::DualGraph(std::vector<Vertex> vertices,
                     const std::vector<std::pair<std::string, std::string>>& edges)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw DomainError("graph has no vertices");
  if (vertices_.size() > kMaxVertices) {
    throw DomainError("graph has more than " + std::to_string(kMaxVertices) + " vertices");
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const Vertex& vx = vertices_[v];
    if (vx.id.empty()) throw DomainError("vertex id must be nonempty");
    if (vx.genus < 0) throw DomainError("vertex '" + vx.id + "' has negative genus");
    if (!index_.emplace(vx.id, v).second) {
      throw DomainError("duplicate vertex id '" + vx.id + "'");
    }
  }
  valence_.assign(vertices_.size(), 0);
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    const auto ia = index_.find(a);
    const auto ib = index_.find(b);
    if (ia == index_.end() || ib == index_.end()) {
      throw DomainError("edge [" + a + "," + b + "] references an unknown vertex");
    }
    const auto [u, v] = std::minmax(ia->second, ib->second);
    edges_.emplace_back(u, v);
    ++valence_[u];
    ++valence_[v];
  }
  std::sort(edges_.begin(), edges_.end());

  const std::uint64_t all = vertices_.size() == 64 ? ~0ULL : (1ULL << vertices_.size()) - 1;
  if (!induces_connected(*this, all)) throw DomainError("graph is disconnected");
}

std::size_t DualGraph::index_of(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  if (it == index_.end()) throw DomainError("unknown vertex id '" + std::string(id) + "'");
  return it->second;
}

bool DualGraph::contains(std::string_view id) const {
  return index_.count(std::string(id)) != 0;
}

bool DualGraph::has_loop(std::size_t v) const { return multiplicity(v, v) > 0; }

int DualGraph::multiplicity(std::size_t u, std::size_t v) const {
  const Edge key = std::minmax(u, v);
  const auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), key);
  return static_cast<int>(hi - lo);
}

std::int64_t DualGraph::total_genus() const {
  std::int64_t g = 0;
  for (const Vertex& v : vertices_) g += v.genus;
  return g + static_cast<std::int64_t>(edges_.size()) -
         static_cast<std::int64_t>(vertices_.size()) + 1;
}

bool DualGraph::is_exceptional(std::size_t v) const {
  return vertices_.at(v).genus == 0 && valence_[v] == 2 && !has_loop(v);
}

std::vector<std::pair<std::string, std::string>> DualGraph::edge_ids() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(edges_.size());
  for (const auto& [u, v] : edges_) out.emplace_back(vertices_[u].id, vertices_[v].id);
  return out;
}

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::stable: return "stable";
    case Stability::semistable_only: return "semistable-only";
    case Stability::quasistable: return "quasistable";
    case Stability::semistable_not_quasistable: return "semistable-not-quasistable";
    case Stability::unstable: return "unstable";
  }
  return "?";
}

Stability classify(const DualGraph& graph) {
  const std::size_t n = graph.num_vertices();
  bool stable = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (graph.vertex(v).genus != 0) continue;
    const int val = graph.valence(v);
    if (val < 2) return Stability::unstable;
    if (val < 3) stable = false;
  }
  // A lone genus-0 vertex carrying one loop has valence 2 but no other
  // component to meet.
  if (n == 1 && !stable) return Stability::unstable;
  if (stable) return Stability::stable;
  for (const auto& [u, v] : graph.edges()) {
    if (u != v && graph.is_exceptional(u) && graph.is_exceptional(v)) {
      return Stability::semistable_not_quasistable;
    }
  }
  return Stability::quasistable;
}

bool is_quasistable(const DualGraph& graph) {
  const Stability s = classify(graph);
  return s == Stability::stable || s == Stability::quasistable;
}

Subcurve::Subcurve(const DualGraph& graph, std::uint64_t mask) : mask_(mask) {
  const std::size_t n = graph.num_vertices();
  const std::uint64_t all = (n == 64) ? ~0ULL : (1ULL << n) - 1;
  if (mask == 0) throw DomainError("subcurve must be nonempty");
  if ((mask & ~all) != 0) throw DomainError("subcurve references vertices outside the graph");
  if (mask == all) throw DomainError("subcurve must be a proper subset of the vertices");
}

Subcurve Subcurve::complement(const DualGraph& graph) const {
  const std::uint64_t all = (1ULL << graph.num_vertices()) - 1;
  return Subcurve(graph, all & ~mask_);
}

std::vector<std::string> Subcurve::ids(const DualGraph& graph) const {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    if (contains(v)) out.push_back(graph.vertex(v).id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subcurve make_subcurve(const DualGraph& graph, const std::vector<std::string>& ids) {
  std::uint64_t mask = 0;
  for (const std::string& id : ids) mask |= 1ULL << graph.index_of(id);
  return Subcurve(graph, mask);
}

SubcurveStats subcurve_stats(const DualGraph& graph, const Subcurve& z) {
  SubcurveStats s{0, 0};
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    if (z.contains(v)) s.w += 2 * graph.vertex(v).genus - 2 + graph.valence(v);
  }
  for (const auto& [u, v] : graph.edges()) {
    if (z.contains(u) != z.contains(v)) ++s.k;
  }
  return s;
}

bool induces_connected(const DualGraph& graph, std::uint64_t mask) {
  if (mask == 0) return false;
  std::uint64_t seen = mask & (~mask + 1);  // lowest vertex
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& [u, v] : graph.edges()) {
      const std::uint64_t bu = 1ULL << u;
      const std::uint64_t bv = 1ULL << v;
      if (!(mask & bu) || !(mask & bv)) continue;
      if ((seen & bu) && !(seen & bv)) {
        seen |= bv;
        grew = true;
      } else if ((seen & bv) && !(seen & bu)) {
        seen |= bu;
        grew = true;
      }
    }
  }
  return seen == mask;
}

std::vector<Subcurve> subcurves(const DualGraph& graph, SubcurveMode mode) {
  const std::size_t n = graph.num_vertices();
  if (n > kMaxEnumerableVertices) {
    throw DomainError("subcurve enumeration supports at most " +
                      std::to_string(kMaxEnumerableVertices) + " vertices");
  }
  // Position of each vertex in id order; the enumeration order compares
  // subsets as sorted id lists.
  std::vector<std::size_t> by_id(n);
  std::iota(by_id.begin(), by_id.end(), 0);
  std::sort(by_id.begin(), by_id.end(), [&](std::size_t a, std::size_t b) {
    return graph.vertex(a).id < graph.vertex(b).id;
  });

  const std::uint64_t all = (1ULL << n) - 1;
  std::vector<std::pair<std::vector<std::size_t>, std::uint64_t>> keyed;
  for (std::uint64_t mask = 1; mask < all; ++mask) {
    if (mode == SubcurveMode::connected_both_sides &&
        !(induces_connected(graph, mask) && induces_connected(graph, all & ~mask))) {
      continue;
    }
    std::vector<std::size_t> key;
    for (std::size_t r = 0; r < n; ++r) {
      if ((mask >> by_id[r]) & 1U) key.push_back(r);
    }
    keyed.emplace_back(std::move(key), mask);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<Subcurve> out;
  out.reserve(keyed.size());
  for (const auto& [key, mask] : keyed) out.emplace_back(graph, mask);
  return out;
}

DualGraph stabilize(const DualGraph& graph) {
  if (!is_quasistable(graph)) {
    throw DomainError("stabilize requires a quasistable graph (got " +
                      std::string(to_string(classify(graph))) + ")");
  }
  const std::size_t n = graph.num_vertices();
  std::vector<bool> drop(n, false);
  for (std::size_t v = 0; v < n; ++v) drop[v] = graph.is_exceptional(v);

  std::vector<Vertex> kept;
  for (std::size_t v = 0; v < n; ++v) {
    if (!drop[v]) kept.push_back(graph.vertex(v));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::vector<std::size_t>> ends(n);
  for (const auto& [u, v] : graph.edges()) {
    if (drop[u]) ends[u].push_back(v);
    if (drop[v]) ends[v].push_back(u);
    if (!drop[u] && !drop[v]) edges.emplace_back(graph.vertex(u).id, graph.vertex(v).id);
  }
  // Exceptional vertices are pairwise non-adjacent, so both ends survive.
  for (std::size_t v = 0; v < n; ++v) {
    if (!drop[v]) continue;
    edges.emplace_back(graph.vertex(ends[v][0]).id, graph.vertex(ends[v][1]).id);
  }
  return DualGraph(std::move(kept), edges);
}

DualGraph single_vertex(int genus, int loops) {
  std::vector<std::pair<std::string, std::string>> edges(loops, {"C", "C"});
  return DualGraph({{"C", genus}}, edges);
}

DualGraph vine(int genus1, int genus2, int edges) {
  std::vector<std::pair<std::string, std::string>> e(edges, {"C1", "C2"});
  return DualGraph({{"C1", genus1}, {"C2", genus2}}, e);
}

}  // namespace univjac
