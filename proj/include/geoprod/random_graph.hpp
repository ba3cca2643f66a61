#pragma once

#include <cstdint>
#include <random>

#include "geoprod/graph.hpp"

namespace geoprod {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]. Avoids std::uniform_int_distribution so that
/// sequences are identical across standard library implementations.
std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi);
double uniform_unit(Rng& rng);

/// Erdos-Renyi G(n, p) conditioned on connectivity by rejection.
Graph random_connected_graph(Rng& rng, std::size_t n, double p);

/// Random connected graph with order drawn from [min_order, max_order] and
/// edge probability from [0.25, 0.75].
Graph random_connected_graph(Rng& rng, std::size_t min_order, std::size_t max_order);

VertexSet random_subset(Rng& rng, std::size_t universe, double density);

}  // namespace geoprod
