#include "geoprod/boundary.hpp"

#include "geoprod/error.hpp"

namespace geoprod {

VertexSet boundary_set(const Graph& g) {
  const auto& d = g.distances();
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& nbrs = g.neighbors(v);
    for (Vertex u = 0; u < g.order(); ++u) {
      bool farther = false;
      nbrs.for_each([&](Vertex w) { farther = farther || d.at(u, w) > d.at(u, v); });
      if (!farther) {
        out.insert(v);
        break;
      }
    }
  }
  return out;
}

VertexSet eccentric_set(const Graph& g) { return eccentric_set_r(g, 0); }

VertexSet eccentric_set_r(const Graph& g, Distance r) {
  const auto& d = g.distances();
  VertexSet out(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    if (d.ecc(u) < r) continue;
    for (Vertex v = 0; v < g.order(); ++v)
      if (d.at(u, v) == d.ecc(u)) out.insert(v);
  }
  return out;
}

VertexSet contour_set(const Graph& g) {
  const auto& d = g.distances();
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    bool dominated = false;
    g.neighbors(v).for_each([&](Vertex w) { dominated = dominated || d.ecc(w) > d.ecc(v); });
    if (!dominated) out.insert(v);
  }
  return out;
}

VertexSet periphery_set(const Graph& g) {
  const auto& d = g.distances();
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (d.ecc(v) == d.diameter()) out.insert(v);
  return out;
}

bool BoundaryReport::containments_hold(const VertexSet& ext) const {
  return periphery.is_subset_of(contour & eccentric) && (eccentric | contour).is_subset_of(boundary) &&
         ext.is_subset_of(contour);
}

BoundaryReport boundary_report(const Graph& g) {
  BoundaryReport r{boundary_set(g), eccentric_set(g), contour_set(g), periphery_set(g), {}};
  for (Distance t = 0; t <= g.distances().diameter(); ++t) r.ecc_r.emplace(t, eccentric_set_r(g, t));
  return r;
}

bool ProductBoundaryReport::all_hold() const {
  for (const auto& item : items)
    if (!item.holds) return false;
  return true;
}

namespace {

struct Oriented {
  const Graph* g;
  const Graph* h;
  bool swapped;
};

// Maps (a, b) in first x second to the flat index of the product built as
// left x right, where `swapped` means first = right.
Vertex flat(const ProductGraph& p, bool swapped, Vertex a, Vertex b) {
  return swapped ? p.encode(b, a) : p.encode(a, b);
}

ProductBoundaryItem make_item(std::string name, bool swapped, VertexSet formula, VertexSet direct) {
  ProductBoundaryItem item{std::move(name), formula == direct, swapped, std::move(formula), std::move(direct)};
  return item;
}

}  // namespace

ProductBoundaryReport verify_product_boundary(const Graph& g, const Graph& h, OrientationPolicy policy) {
  const auto& dg = g.distances();
  const auto& dh = h.distances();
  const bool forward_ok = dg.diameter() <= dh.diameter() && dg.radius() <= dh.radius();
  const bool backward_ok = dh.diameter() <= dg.diameter() && dh.radius() <= dg.radius();
  ProductBoundaryReport report;
  report.orientable = forward_ok || backward_ok;
  if (!report.orientable && policy == OrientationPolicy::Strict) {
    throw Error(ErrorCode::OrientationError,
                "diameters and radii of the factors are ordered oppositely (D: " + std::to_string(dg.diameter()) +
                    " vs " + std::to_string(dh.diameter()) + ", r: " + std::to_string(dg.radius()) + " vs " +
                    std::to_string(dh.radius()) + ")");
  }

  const ProductGraph p = strong_product(g, h);
  const Graph& pg = p.graph();
  const std::size_t n = pg.order();

  auto orient = [&](bool swap) { return swap ? Oriented{&h, &g, true} : Oriented{&g, &h, false}; };
  const bool global_swap = !forward_ok && backward_ok;
  const bool diam_swap = report.orientable ? global_swap : dh.diameter() < dg.diameter();
  const bool rad_swap = report.orientable ? global_swap : dh.radius() < dg.radius();

  // (1) boundary: symmetric in the factors.
  {
    const Oriented o = orient(global_swap);
    const VertexSet bg = boundary_set(*o.g);
    const VertexSet bh = boundary_set(*o.h);
    VertexSet formula(n);
    for (Vertex a = 0; a < o.g->order(); ++a)
      for (Vertex b = 0; b < o.h->order(); ++b)
        if (bg.contains(a) || bh.contains(b)) formula.insert(flat(p, o.swapped, a, b));
    report.items[0] = make_item("boundary", o.swapped, std::move(formula), boundary_set(pg));
  }
  // (2) periphery, keyed by D_G < D_H or D_G = D_H.
  {
    const Oriented o = orient(diam_swap);
    const VertexSet per_g = periphery_set(*o.g);
    const VertexSet per_h = periphery_set(*o.h);
    const bool equal = o.g->distances().diameter() == o.h->distances().diameter();
    VertexSet formula(n);
    for (Vertex a = 0; a < o.g->order(); ++a)
      for (Vertex b = 0; b < o.h->order(); ++b)
        if (per_h.contains(b) || (equal && per_g.contains(a))) formula.insert(flat(p, o.swapped, a, b));
    report.items[1] = make_item("periphery", o.swapped, std::move(formula), periphery_set(pg));
  }
  // (3) eccentric: Ecc_{r_H}(G) x V(H) u V(G) x Ecc(H).
  {
    const Oriented o = orient(rad_swap);
    const VertexSet ecc_g = eccentric_set_r(*o.g, o.h->distances().radius());
    const VertexSet ecc_h = eccentric_set(*o.h);
    VertexSet formula(n);
    for (Vertex a = 0; a < o.g->order(); ++a)
      for (Vertex b = 0; b < o.h->order(); ++b)
        if (ecc_g.contains(a) || ecc_h.contains(b)) formula.insert(flat(p, o.swapped, a, b));
    report.items[2] = make_item("eccentric", o.swapped, std::move(formula), eccentric_set(pg));
  }
  // (4) contour: three-part union keyed by eccentricity comparisons.
  {
    const Oriented o = orient(global_swap);
    const auto& eg = o.g->distances();
    const auto& eh = o.h->distances();
    const VertexSet ct_g = contour_set(*o.g);
    const VertexSet ct_h = contour_set(*o.h);
    VertexSet formula(n);
    for (Vertex a = 0; a < o.g->order(); ++a) {
      for (Vertex b = 0; b < o.h->order(); ++b) {
        const bool in = (ct_g.contains(a) && eh.ecc(b) < eg.ecc(a)) || (ct_h.contains(b) && eg.ecc(a) < eh.ecc(b)) ||
                        (ct_g.contains(a) && ct_h.contains(b));
        if (in) formula.insert(flat(p, o.swapped, a, b));
      }
    }
    report.items[3] = make_item("contour", o.swapped, std::move(formula), contour_set(pg));
  }
  return report;
}

}  // namespace geoprod
