#pragma once

#include <cstddef>
#include <string>

#include "geoprod/graph.hpp"

namespace geoprod {

inline constexpr std::size_t kDefaultVertexCap = 4096;

/// Vertex cap for product construction: GEOPROD_VERTEX_CAP when set to a
/// positive integer, kDefaultVertexCap otherwise.
std::size_t default_vertex_cap();

struct ProductVertex {
  Vertex left = 0;
  Vertex right = 0;
  friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
};

/// Strong product G x H together with its factors. Vertex (g, h) is stored at
/// flat index g * |V(H)| + h, so each G-layer {g} x V(H) is contiguous.
class ProductGraph {
 public:
  ProductGraph(Graph product, Graph left, Graph right)
      : graph_(std::move(product)), left_(std::move(left)), right_(std::move(right)) {}

  const Graph& graph() const noexcept { return graph_; }
  const Graph& left() const noexcept { return left_; }
  const Graph& right() const noexcept { return right_; }

  Vertex encode(Vertex g, Vertex h) const;
  Vertex encode(ProductVertex v) const { return encode(v.left, v.right); }
  ProductVertex decode(Vertex v) const;

 private:
  Graph graph_;
  Graph left_;
  Graph right_;
};

/// Throws Error(Overflow) when |V(G)|*|V(H)| exceeds `vertex_cap`.
ProductGraph strong_product(const Graph& g, const Graph& h, std::size_t vertex_cap = default_vertex_cap());

enum class Side { Left, Right };

VertexSet project(const ProductGraph& p, const VertexSet& s, Side side);

/// S1 x S2 as a vertex set of the product.
VertexSet cartesian(const ProductGraph& p, const VertexSet& left, const VertexSet& right);

struct DistanceFormulaReport {
  std::size_t pairs_checked = 0;
  Distance diameter = 0;
};

/// Checks d((g,h),(g',h')) = max{d(g,g'), d(h,h')} over all pairs and
/// diam = max of the factor diameters. Throws Error(FormulaViolation) on the
/// first mismatch.
DistanceFormulaReport verify_distance_formula(const ProductGraph& p);

}  // namespace geoprod
