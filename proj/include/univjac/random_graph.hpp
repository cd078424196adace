#pragma once

#include <cstddef>
#include <random>

#include "univjac/dual_graph.hpp"

namespace univjac {

/// Random connected quasistable graph with 1..max_vertices vertices and total
/// genus >= 2, by rejection sampling. Some draws subdivide an edge with an
/// exceptional vertex so that those are well represented.
DualGraph random_quasistable(std::mt19937_64& rng, std::size_t max_vertices);

}  // namespace univjac
