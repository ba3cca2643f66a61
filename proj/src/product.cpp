#include "geoprod/product.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "geoprod/error.hpp"

namespace geoprod {

std::size_t default_vertex_cap() {
  if (const char* env = std::getenv("GEOPROD_VERTEX_CAP"); env != nullptr) {
    try {
      const long long cap = std::stoll(env);
      if (cap > 0) return static_cast<std::size_t>(cap);
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return kDefaultVertexCap;
}

Vertex ProductGraph::encode(Vertex g, Vertex h) const {
  if (g >= left_.order() || h >= right_.order()) {
    throw Error(ErrorCode::OutOfRange, "product coordinate (" + std::to_string(g) + "," + std::to_string(h) + ")");
  }
  return static_cast<Vertex>(g * right_.order() + h);
}

ProductVertex ProductGraph::decode(Vertex v) const {
  if (v >= graph_.order()) throw Error(ErrorCode::OutOfRange, "product vertex " + std::to_string(v));
  const auto m = static_cast<Vertex>(right_.order());
  return {v / m, v % m};
}

ProductGraph strong_product(const Graph& g, const Graph& h, std::size_t vertex_cap) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  if (ng * nh > vertex_cap) {
    throw Error(ErrorCode::Overflow, std::to_string(ng) + "*" + std::to_string(nh) + " vertices exceeds cap " +
                                         std::to_string(vertex_cap));
  }
  auto at = [nh](std::size_t a, std::size_t b) { return static_cast<Vertex>(a * nh + b); };
  std::vector<Edge> edges;
  edges.reserve(g.size() * nh + ng * h.size() + 2 * g.size() * h.size());
  for (std::size_t a = 0; a < ng; ++a)
    for (const auto& [u, v] : h.edges()) edges.emplace_back(at(a, u), at(a, v));
  for (const auto& [u, v] : g.edges())
    for (std::size_t b = 0; b < nh; ++b) edges.emplace_back(at(u, b), at(v, b));
  for (const auto& [gu, gv] : g.edges()) {
    for (const auto& [hu, hv] : h.edges()) {
      edges.emplace_back(at(gu, hu), at(gv, hv));
      edges.emplace_back(at(gu, hv), at(gv, hu));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(ng * nh);
  for (std::size_t a = 0; a < ng; ++a)
    for (std::size_t b = 0; b < nh; ++b) labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
  // Graph::build rejects disconnected input; the product of connected factors
  // is connected, so a throw here is an implementation bug.
  return ProductGraph(Graph::build(ng * nh, edges, std::move(labels)), g, h);
}

VertexSet project(const ProductGraph& p, const VertexSet& s, Side side) {
  VertexSet out(side == Side::Left ? p.left().order() : p.right().order());
  s.for_each([&](Vertex v) {
    const auto pv = p.decode(v);
    out.insert(side == Side::Left ? pv.left : pv.right);
  });
  return out;
}

VertexSet cartesian(const ProductGraph& p, const VertexSet& left, const VertexSet& right) {
  VertexSet out(p.graph().order());
  left.for_each([&](Vertex a) { right.for_each([&](Vertex b) { out.insert(p.encode(a, b)); }); });
  return out;
}

DistanceFormulaReport verify_distance_formula(const ProductGraph& p) {
  const auto& d = p.graph().distances();
  const auto& dg = p.left().distances();
  const auto& dh = p.right().distances();
  const std::size_t n = p.graph().order();
  DistanceFormulaReport report;
  for (Vertex u = 0; u < n; ++u) {
    const auto pu = p.decode(u);
    for (Vertex v = 0; v < n; ++v) {
      const auto pv = p.decode(v);
      const Distance expected = std::max(dg.at(pu.left, pv.left), dh.at(pu.right, pv.right));
      if (d.at(u, v) != expected) {
        throw Error(ErrorCode::FormulaViolation, "distance between " + p.graph().label(u) + " and " +
                                                     p.graph().label(v) + " is " + std::to_string(d.at(u, v)) +
                                                     ", expected " + std::to_string(expected));
      }
      ++report.pairs_checked;
    }
  }
  if (d.diameter() != std::max(dg.diameter(), dh.diameter())) {
    throw Error(ErrorCode::FormulaViolation, "product diameter differs from the larger factor diameter");
  }
  report.diameter = d.diameter();
  return report;
}

}  // namespace geoprod
