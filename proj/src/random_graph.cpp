#include "geoprod/random_graph.hpp"

#include <vector>

#include "geoprod/error.hpp"

namespace geoprod {

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::size_t>(rng() % span);
}

double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

namespace {

bool connected(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (auto [u, v] : edges) {
    const auto a = find(u);
    const auto b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

Graph random_connected_graph(Rng& rng, std::size_t n, double p) {
  if (n == 0) throw Error(ErrorCode::BadParams, "random graph needs n >= 1");
  if (n > 1 && p <= 0.0) throw Error(ErrorCode::BadParams, "edge probability must be positive");
  for (;;) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (uniform_unit(rng) < p) edges.emplace_back(u, v);
    if (connected(n, edges)) return Graph::build(n, edges);
  }
}

Graph random_connected_graph(Rng& rng, std::size_t min_order, std::size_t max_order) {
  const std::size_t n = uniform_index(rng, min_order, max_order);
  const double p = 0.25 + 0.5 * uniform_unit(rng);
  return random_connected_graph(rng, n, p);
}

VertexSet random_subset(Rng& rng, std::size_t universe, double density) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe; ++v)
    if (uniform_unit(rng) < density) s.insert(v);
  if (s.empty() && universe > 0) s.insert(static_cast<Vertex>(uniform_index(rng, 0, universe - 1)));
  return s;
}

}  // namespace geoprod
