#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace univjac {

struct Vertex {
  std::string id;
  int genus = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Dual graph of a nodal curve: vertices are components weighted by their
/// geometric genus, edges are nodes. Parallel edges and loops are allowed.
/// Construction rejects disconnected or malformed input with DomainError.
class DualGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;  // first <= second

  static constexpr std::size_t kMaxVertices = 62;

  DualGraph(std::vector<Vertex> vertices,
            const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(std::size_t v) const { return vertices_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t index_of(std::string_view id) const;
  bool contains(std::string_view id) const;

  /// Number of half-edges at v; a loop counts twice.
  int valence(std::size_t v) const { return valence_.at(v); }
  bool has_loop(std::size_t v) const;
  /// Edges joining u and v (loops at u when u == v).
  int multiplicity(std::size_t u, std::size_t v) const;

  /// sum of vertex genera + b1 of the underlying graph.
  std::int64_t total_genus() const;

  /// Genus-0, valence-2, loop-free vertex.
  bool is_exceptional(std::size_t v) const;

  /// Edge list in id form, as read from or written to JSON.
  std::vector<std::pair<std::string, std::string>> edge_ids() const;

  friend bool operator==(const DualGraph& a, const DualGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;  // sorted
  std::vector<int> valence_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class Stability {
  stable,
  semistable_only,
  quasistable,
  semistable_not_quasistable,
  unstable,
};

std::string_view to_string(Stability s);

Stability classify(const DualGraph& graph);

/// Stable or quasistable (a stable graph is quasistable with no exceptional
/// vertices).
bool is_quasistable(const DualGraph& graph);

/// A nonempty proper subset of the vertices, stored as a bit mask over
/// vertex indices.
class Subcurve {
 public:
  Subcurve(const DualGraph& graph, std::uint64_t mask);

  std::uint64_t mask() const { return mask_; }
  bool contains(std::size_t v) const { return (mask_ >> v) & 1U; }
  Subcurve complement(const DualGraph& graph) const;
  std::vector<std::string> ids(const DualGraph& graph) const;

  friend bool operator==(const Subcurve&, const Subcurve&) = default;

 private:
  std::uint64_t mask_;
};

Subcurve make_subcurve(const DualGraph& graph, const std::vector<std::string>& ids);

struct SubcurveStats {
  std::int64_t w;  // degree of the dualizing sheaf on Z
  std::int64_t k;  // edges between Z and its complement

  friend bool operator==(const SubcurveStats&, const SubcurveStats&) = default;
};

SubcurveStats subcurve_stats(const DualGraph& graph, const Subcurve& z);

enum class SubcurveMode { all, connected_both_sides };

/// Subcurves in lexicographic order of their sorted vertex-id lists.
/// Graphs above kMaxEnumerableVertices are rejected with DomainError.
inline constexpr std::size_t kMaxEnumerableVertices = 20;
std::vector<Subcurve> subcurves(const DualGraph& graph, SubcurveMode mode);

/// Induced subgraph on the vertices of `mask` is connected (mask nonempty).
bool induces_connected(const DualGraph& graph, std::uint64_t mask);

/// Contract every exceptional vertex, fusing its two edges into one.
DualGraph stabilize(const DualGraph& graph);

// Small constructors used throughout the tests and the families module.
DualGraph single_vertex(int genus, int loops = 0);
/// Two vertices "C1", "C2" of the given genera joined by `edges` edges.
DualGraph vine(int genus1, int genus2, int edges);

}  // namespace univjac
