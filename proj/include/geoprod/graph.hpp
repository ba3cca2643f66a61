#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geoprod/vertex_set.hpp"

namespace geoprod {

using Edge = std::pair<Vertex, Vertex>;
using Distance = std::uint16_t;

/// Hop counts between every pair of vertices of a connected graph, plus the
/// eccentricity profile derived from them.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<Distance> dist);

  std::size_t order() const noexcept { return n_; }
  Distance at(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  std::span<const Distance> row(Vertex u) const {
    return {dist_.data() + static_cast<std::size_t>(u) * n_, n_};
  }
  Distance ecc(Vertex v) const { return ecc_[v]; }
  std::span<const Distance> eccentricities() const noexcept { return ecc_; }
  Distance diameter() const noexcept { return diameter_; }
  Distance radius() const noexcept { return radius_; }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> dist_;
  std::vector<Distance> ecc_;
  Distance diameter_ = 0;
  Distance radius_ = 0;
};

/// Immutable, simple, connected, undirected graph on vertices 0..n-1.
///
/// Copies share the underlying storage. All-pairs distances are computed once
/// at construction.
class Graph {
 public:
  /// Builds a graph from an edge list. Duplicate edges (in either orientation)
  /// are collapsed. Throws `Error` with OutOfRange, SelfLoop or Disconnected.
  static Graph build(std::size_t n, std::span<const Edge> edges,
                     std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return impl_->n; }
  std::size_t size() const noexcept { return impl_->edges.size(); }
  const std::vector<Edge>& edges() const noexcept { return impl_->edges; }

  const VertexSet& neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).count(); }

  const DistanceMatrix& distances() const noexcept { return impl_->dist; }
  Distance distance(Vertex u, Vertex v) const;

  /// Display name of a vertex; defaults to its index.
  std::string label(Vertex v) const;
  bool has_labels() const noexcept { return !impl_->labels.empty(); }

  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet all_vertices() const { return VertexSet::full(order()); }

 private:
  struct Impl {
    std::size_t n = 0;
    std::vector<Edge> edges;
    std::vector<VertexSet> adj;
    std::vector<std::string> labels;
    DistanceMatrix dist;
  };
  explicit Graph(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  void check(Vertex v) const;

  std::shared_ptr<const Impl> impl_;
};

Graph build_graph(std::size_t n, std::span<const Edge> edges);

/// Breadth-first hop counts from every source. Recomputes from the adjacency
/// relation rather than returning the cached matrix.
DistanceMatrix all_pairs_distances(const Graph& g);

VertexSet neighbors(const Graph& g, Vertex v);

/// Edge-list text format: "n m" on the first line, then m lines "u v".
/// Anything after the m-th edge other than whitespace is rejected.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace geoprod
