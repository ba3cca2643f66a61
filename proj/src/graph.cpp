#include "geoprod/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "geoprod/error.hpp"

namespace geoprod {

namespace {

constexpr Distance kUnreached = std::numeric_limits<Distance>::max();

std::vector<Distance> bfs_rows(std::size_t n, const std::vector<VertexSet>& adj) {
  std::vector<Distance> dist(n * n, kUnreached);
  std::vector<Vertex> queue(n);
  for (std::size_t s = 0; s < n; ++s) {
    Distance* row = dist.data() + s * n;
    std::size_t head = 0;
    std::size_t tail = 0;
    row[s] = 0;
    queue[tail++] = static_cast<Vertex>(s);
    while (head < tail) {
      const Vertex u = queue[head++];
      adj[u].for_each([&](Vertex w) {
        if (row[w] == kUnreached) {
          row[w] = static_cast<Distance>(row[u] + 1);
          queue[tail++] = w;
        }
      });
    }
  }
  return dist;
}

}  // namespace

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<Distance> dist)
    : n_(n), dist_(std::move(dist)), ecc_(n, 0) {
  for (std::size_t u = 0; u < n_; ++u) {
    const auto r = row(static_cast<Vertex>(u));
    ecc_[u] = *std::max_element(r.begin(), r.end());
  }
  if (n_ > 0) {
    diameter_ = *std::max_element(ecc_.begin(), ecc_.end());
    radius_ = *std::min_element(ecc_.begin(), ecc_.end());
  }
}

Graph Graph::build(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels) {
  if (n == 0) throw Error(ErrorCode::BadParams, "graph must have at least one vertex");
  if (n >= kUnreached) throw Error(ErrorCode::Overflow, "too many vertices for 16-bit distances");
  if (!labels.empty() && labels.size() != n) {
    throw Error(ErrorCode::BadParams, "label count does not match vertex count");
  }
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->adj.assign(n, VertexSet(n));
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::OutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
    if (impl->adj[u].contains(v)) continue;
    impl->adj[u].insert(v);
    impl->adj[v].insert(u);
    impl->edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(impl->edges.begin(), impl->edges.end());
  auto dist = bfs_rows(n, impl->adj);
  if (std::find(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(n), kUnreached) !=
      dist.begin() + static_cast<std::ptrdiff_t>(n)) {
    throw Error(ErrorCode::Disconnected, "graph on " + std::to_string(n) + " vertices is not connected");
  }
  impl->dist = DistanceMatrix(n, std::move(dist));
  impl->labels = std::move(labels);
  return Graph(std::move(impl));
}

void Graph::check(Vertex v) const {
  if (v >= impl_->n) {
    throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " with n=" + std::to_string(impl_->n));
  }
}

const VertexSet& Graph::neighbors(Vertex v) const {
  check(v);
  return impl_->adj[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check(u);
  return impl_->adj[u].contains(v);
}

Distance Graph::distance(Vertex u, Vertex v) const {
  check(u);
  check(v);
  return impl_->dist.at(u, v);
}

std::string Graph::label(Vertex v) const {
  check(v);
  return impl_->labels.empty() ? std::to_string(v) : impl_->labels[v];
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph::build(n, edges); }

DistanceMatrix all_pairs_distances(const Graph& g) {
  std::vector<VertexSet> adj;
  adj.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj.push_back(g.neighbors(v));
  return DistanceMatrix(g.order(), bfs_rows(g.order(), adj));
}

VertexSet neighbors(const Graph& g, Vertex v) { return g.neighbors(v); }

namespace {

// Reads one non-negative integer token; rejects signs, fractions and junk.
bool read_count(std::istream& in, std::size_t& out) {
  std::string token;
  if (!(in >> token)) return false;
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorCode::ParseError, "expected a non-negative integer, got '" + token + "'");
  }
  try {
    out = std::stoull(token);
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::ParseError, "integer out of range: " + token);
  }
  return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::size_t n = 0;
  std::size_t m = 0;
  if (!read_count(in, n) || !read_count(in, m)) {
    throw Error(ErrorCode::ParseError, "missing header line 'n m'");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t u = 0;
    std::size_t v = 0;
    if (!read_count(in, u) || !read_count(in, v)) {
      throw Error(ErrorCode::ParseError, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    }
    if (u >= n || v >= n) {
      throw Error(ErrorCode::OutOfRange, "edge " + std::to_string(i) + " references a vertex >= " + std::to_string(n));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string junk;
  if (in >> junk) throw Error(ErrorCode::ParseError, "trailing content after edge list: '" + junk + "'");
  return Graph::build(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open edge list file '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace geoprod
