#include "univjac/random_graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace univjac {

namespace {

using EdgeList = std::vector<std::pair<std::string, std::string>>;

std::string vid(std::size_t v) { return "V" + std::to_string(v); }

}  // namespace

DualGraph random_quasistable(std::mt19937_64& rng, std::size_t max_vertices) {
  auto uniform = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  for (;;) {
    const std::size_t n = uniform(1, max_vertices);
    std::vector<Vertex> vs;
    for (std::size_t v = 0; v < n; ++v) vs.push_back({vid(v), static_cast<int>(uniform(0, 2))});
    EdgeList es;
    for (std::size_t v = 1; v < n; ++v) es.emplace_back(vid(uniform(0, v - 1)), vid(v));
    const std::size_t extra = uniform(0, 3);
    for (std::size_t j = 0; j < extra; ++j) es.emplace_back(vid(uniform(0, n - 1)), vid(uniform(0, n - 1)));

    // Subdivide one edge with a fresh genus-0 vertex.
    if (n < max_vertices && !es.empty() && uniform(0, 2) == 0) {
      const std::size_t j = uniform(0, es.size() - 1);
      const std::string mid = vid(n);
      vs.push_back({mid, 0});
      auto [a, b] = es[j];
      es[j] = {a, mid};
      es.emplace_back(mid, b);
    }

    const DualGraph g(vs, es);
    if (g.total_genus() >= 2 && is_quasistable(g)) return g;
  }
}

}  // namespace univjac
