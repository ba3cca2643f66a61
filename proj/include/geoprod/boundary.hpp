#pragma once

#include <array>
#include <map>
#include <string>

#include "geoprod/graph.hpp"
#include "geoprod/product.hpp"

namespace geoprod {

/// {v : some u has no neighbour of v farther from u than v}.
VertexSet boundary_set(const Graph& g);
/// {v : d(u,v) = ecc(u) for some u}.
VertexSet eccentric_set(const Graph& g);
/// {v : some u has r <= ecc(u) = d(u,v)}.
VertexSet eccentric_set_r(const Graph& g, Distance r);
/// {v : no neighbour has eccentricity greater than ecc(v)}.
VertexSet contour_set(const Graph& g);
/// {v : ecc(v) = diam(G)}.
VertexSet periphery_set(const Graph& g);

struct BoundaryReport {
  VertexSet boundary;
  VertexSet eccentric;
  VertexSet contour;
  VertexSet periphery;
  /// Ecc_r for every threshold 0..diam(G).
  std::map<Distance, VertexSet> ecc_r;

  /// Per c Ct n Ecc, Ecc u Ct c boundary, Ext c Ct.
  bool containments_hold(const VertexSet& ext) const;
};

BoundaryReport boundary_report(const Graph& g);

enum class OrientationPolicy {
  /// Throw Error(OrientationError) unless one factor order has both
  /// D_G <= D_H and r_G <= r_H.
  Strict,
  /// Check each identity under the factor order its own hypothesis needs:
  /// the periphery identity by diameter, the eccentric identity by radius.
  PerItem,
};

struct ProductBoundaryItem {
  std::string name;
  bool holds = false;
  /// True when the factors were swapped (H plays the role of G) for this item.
  bool swapped = false;
  VertexSet formula;
  VertexSet direct;
};

struct ProductBoundaryReport {
  /// Some factor order satisfies D_G <= D_H and r_G <= r_H simultaneously.
  bool orientable = false;
  std::array<ProductBoundaryItem, 4> items;

  bool all_hold() const;
};

/// Compares each boundary-type set of G x H, computed directly on the
/// product, against its expression in terms of the factors.
ProductBoundaryReport verify_product_boundary(const Graph& g, const Graph& h,
                                              OrientationPolicy policy = OrientationPolicy::Strict);

}  // namespace geoprod
