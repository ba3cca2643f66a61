#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "geoprod/graph.hpp"

namespace geoprod {

enum class Family { Path, Cycle, Complete, CompleteBipartite, Star, Wheel, Tree };

/// A named graph family instance. `params` holds the order n for every kind
/// except CompleteBipartite, which holds {p, q}. Trees carry explicit edges
/// on vertices 0..|edges|.
struct FamilySpec {
  Family kind = Family::Path;
  std::vector<std::size_t> params;
  std::vector<Edge> tree_edges;

  static FamilySpec path(std::size_t n) { return {Family::Path, {n}, {}}; }
  static FamilySpec cycle(std::size_t n) { return {Family::Cycle, {n}, {}}; }
  static FamilySpec complete(std::size_t n) { return {Family::Complete, {n}, {}}; }
  static FamilySpec complete_bipartite(std::size_t p, std::size_t q) {
    return {Family::CompleteBipartite, {p, q}, {}};
  }
  static FamilySpec star(std::size_t n) { return {Family::Star, {n}, {}}; }
  static FamilySpec wheel(std::size_t n) { return {Family::Wheel, {n}, {}}; }
  static FamilySpec tree(std::vector<Edge> edges) { return {Family::Tree, {}, std::move(edges)}; }

  std::size_t order() const;
  /// Canonical family DSL string, e.g. "P5", "K2,3", "T:(0-1,1-2)".
  std::string name() const;
};

/// Throws Error(BadParams) when the spec violates its family's constraints.
void validate(const FamilySpec& spec);

/// Canonical numbering: paths and cycles in order, K_{p,q} parts {0..p-1}
/// and {p..p+q-1}, star and wheel hub 0 with the wheel rim cycle 1..n-1.
Graph make_family(const FamilySpec& spec);

struct GeodeticHull {
  std::size_t g = 0;
  std::size_t h = 0;
  friend bool operator==(const GeodeticHull&, const GeodeticHull&) = default;
};

/// Closed-form geodetic and hull numbers for the tabulated families.
/// K_2-shaped stars and K_4-shaped wheels use the complete-graph values.
GeodeticHull reference_g_h(const FamilySpec& spec);

/// Two fixed trees used by the tables and acceptance runs: a claw with
/// three leaves and a six-vertex caterpillar with three leaves.
FamilySpec fixed_tree_a();
FamilySpec fixed_tree_b();

/// Every family instance of order <= max_order (small parameters only).
std::vector<FamilySpec> family_catalogue(std::size_t max_order);

}  // namespace geoprod
