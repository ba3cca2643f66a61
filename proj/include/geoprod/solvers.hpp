#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geoprod/convexity.hpp"
#include "geoprod/graph.hpp"

namespace geoprod {

enum class Mode { Geodetic, Hull };

std::string_view to_string(Mode mode);

struct SolveOptions {
  Mode mode = Mode::Geodetic;
  double time_limit_seconds = 300.0;
  /// Vertices forced into every candidate; defaults to Ext(G).
  std::optional<VertexSet> must_include;
  unsigned parallel_width = 1;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double wall_ms = 0.0;
};

/// `vertex` lies in I[u, v] with u, v in the witness.
struct CoveringPair {
  Vertex vertex = 0;
  Vertex u = 0;
  Vertex v = 0;
};

struct SolveResult {
  Mode mode = Mode::Geodetic;
  std::size_t value = 0;
  /// Lexicographically smallest optimal set (when `optimal`), otherwise the
  /// best set known when the time limit hit.
  VertexSet witness;
  /// False when the time limit interrupted the search; `value` is then only
  /// an upper bound.
  bool optimal = false;
  /// Geodetic mode: one covering pair per vertex.
  std::vector<CoveringPair> covering;
  /// Hull mode: closure stages of the witness.
  HullTrace hull_trace;
  SearchStats stats;
};

/// A valid geodetic (or hull) set grown from Ext(G) by repeatedly adding the
/// vertex with the largest closure (or hull), lowest index on ties.
VertexSet greedy_upper_bound(const IntervalTable& t, Mode mode);

/// Exact minimum by iterative deepening on the cardinality. Each level
/// enumerates the free vertices in lexicographic order, so the first set
/// found at the optimal level is the canonical witness. Requires an eager
/// interval table.
SolveResult geodetic_number(const IntervalTable& t, SolveOptions opts = {});
SolveResult hull_number(const IntervalTable& t, SolveOptions opts = {});
SolveResult solve(const IntervalTable& t, const SolveOptions& opts);

/// All sets of cardinality k containing `must_include` that are geodetic
/// (resp. hull) sets, in lexicographic order. Exhaustive; small graphs only.
std::vector<VertexSet> enumerate_sets(const IntervalTable& t, Mode mode, std::size_t k,
                                      const VertexSet& must_include);

struct BoundCheck {
  std::string name;
  bool applicable = false;
  bool holds = true;
  /// Distance from the bound (upper minus lower side); >= 0 when it holds.
  long long slack = 0;
};

struct BoundsReport {
  std::size_t g_left = 0, g_right = 0, g_product = 0;
  std::size_t h_left = 0, h_right = 0, h_product = 0;
  bool complete = true;  // every value solved to optimality
  std::vector<BoundCheck> checks;

  bool all_hold() const;
  const BoundCheck* find(std::string_view name) const;
};

/// Solves g and h for both factors and their strong product, then evaluates
/// every applicable product bound.
BoundsReport bounds_report(const Graph& g, const Graph& h, const SolveOptions& opts = {});

struct CollapseReport {
  std::size_t g_factor = 0;
  std::size_t g_product = 0;
  std::size_t n = 0;
  /// Some minimum geodetic set of G satisfies condition (A).
  bool hypothesis_holds = false;
  std::optional<VertexSet> minimum_A_witness;
  /// Smallest geodetic set of G satisfying (A), of any size.
  std::optional<VertexSet> smallest_A_set;
  /// smallest_A_set x {k} is geodetic in G x K_n for every k.
  bool lifted_sets_geodetic = true;
  bool complete = true;
  /// g(G x K_n) = g(G) when the hypothesis holds; vacuous otherwise.
  bool holds = true;
};

CollapseReport verify_condition_A_collapse(const Graph& g, std::size_t n, const SolveOptions& opts = {});

}  // namespace geoprod
