#include "geoprod/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "geoprod/error.hpp"

namespace geoprod {

namespace {

bool connected_mask(std::size_t n, const std::vector<Edge>& pairs, std::uint32_t mask) {
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    if (mask >> e & 1U) {
      adj[pairs[e].first] |= 1U << pairs[e].second;
      adj[pairs[e].second] |= 1U << pairs[e].first;
    }
  }
  std::uint32_t seen = 1, frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (frontier >> v & 1U) next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1U << n) - 1;
}

}  // namespace

std::vector<Graph> connected_graphs(std::size_t n) {
  if (n == 0 || n > 7) throw Error(ErrorCode::BadParams, "connected_graphs supports 1 <= n <= 7");
  std::vector<Edge> pairs;
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      index[u][v] = index[v][u] = pairs.size();
      pairs.emplace_back(u, v);
    }
  }
  // Edge-index image of every vertex permutation.
  std::vector<std::vector<std::size_t>> images;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::size_t> img(pairs.size());
    for (std::size_t e = 0; e < pairs.size(); ++e) img[e] = index[perm[pairs[e].first]][perm[pairs[e].second]];
    images.push_back(std::move(img));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> out;
  const std::uint32_t limit = 1U << pairs.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (!connected_mask(n, pairs, mask)) continue;
    // Keep the mask only if it is the smallest in its orbit.
    bool canonical = true;
    for (const auto& img : images) {
      std::uint32_t mapped = 0;
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if (mask >> e & 1U) mapped |= 1U << img[e];
      if (mapped < mask) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (mask >> e & 1U) edges.push_back(pairs[e]);
    out.push_back(Graph::build(n, edges));
  }
  return out;
}

}  // namespace geoprod
