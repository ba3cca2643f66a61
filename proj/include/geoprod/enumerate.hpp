#pragma once

#include <cstddef>
#include <vector>

#include "geoprod/graph.hpp"

namespace geoprod {

/// Every connected graph on n vertices, one per isomorphism class, in a
/// fixed order (by canonical edge mask). Brute force over vertex
/// permutations, so n <= 7.
std::vector<Graph> connected_graphs(std::size_t n);

}  // namespace geoprod
