#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "geoprod/graph.hpp"

namespace geoprod {

/// Closed intervals I[u,v] = {w : d(u,w) + d(w,v) = d(u,v)} for every vertex
/// pair. Graphs of order <= kEagerLimit get a precomputed flat table; larger
/// ones derive intervals from the distance matrix on demand.
class IntervalTable {
 public:
  using Word = VertexSet::Word;
  static constexpr std::size_t kEagerLimit = 512;

  explicit IntervalTable(Graph g);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t order() const noexcept { return n_; }
  std::size_t words_per_set() const noexcept { return words_; }
  bool eager() const noexcept { return !table_.empty() || n_ == 0; }

  VertexSet interval(Vertex u, Vertex v) const;
  bool in_interval(Vertex u, Vertex w, Vertex v) const;

  /// ORs I[u,v] into `acc` (words_per_set() words).
  void accumulate(Vertex u, Vertex v, std::span<Word> acc) const;

  /// Raw words of I[u,v]; only valid for eager tables.
  std::span<const Word> interval_words(Vertex u, Vertex v) const {
    return {table_.data() + (static_cast<std::size_t>(u) * n_ + v) * words_, words_};
  }

 private:
  void check(Vertex v) const;

  Graph graph_;
  std::size_t n_;
  std::size_t words_;
  std::vector<Word> table_;
};

VertexSet interval(const IntervalTable& t, Vertex u, Vertex v);

/// I[S]: union of I[u,v] over all u, v in S. Throws Error(EmptySet) on S = {}.
VertexSet closure(const IntervalTable& t, const VertexSet& s);

/// I^r[S], with I^0[S] = S.
VertexSet closure_power(const IntervalTable& t, const VertexSet& s, std::size_t r);

/// Successive closures S = I^0[S] c I^1[S] c ... c I^r[S] = CH(S); the
/// repeated fixpoint is not stored, so `iterations == stages.size() - 1`.
struct HullTrace {
  std::vector<VertexSet> stages;
  std::size_t iterations = 0;

  const VertexSet& hull() const { return stages.back(); }
};

HullTrace convex_hull(const IntervalTable& t, const VertexSet& s);

/// CH(S) without recording stages. Each vertex pair of the hull is expanded
/// at most once, and the scan stops as soon as the hull is the whole graph.
VertexSet hull_of(const IntervalTable& t, const VertexSet& s);

bool is_geodetic(const IntervalTable& t, const VertexSet& s);
bool is_hull(const IntervalTable& t, const VertexSet& s);
bool is_convex(const IntervalTable& t, const VertexSet& s);

/// Ext(G): vertices whose neighbourhood induces a complete graph.
VertexSet simplicial_vertices(const Graph& g);

/// Ext(G) is nonempty and geodetic.
bool is_extreme_geodesic(const IntervalTable& t);
bool is_extreme_geodesic(const Graph& g);

/// Every x in S lies in I[y,z] for some y, z in S - x.
/// Throws Error(EmptySet) on S = {}.
bool condition_A(const IntervalTable& t, const VertexSet& s);

/// At least two x in S satisfy x not in I[S - x].
/// Throws Error(TooSmall) when |S| < 2.
bool condition_B(const IntervalTable& t, const VertexSet& s);

}  // namespace geoprod
