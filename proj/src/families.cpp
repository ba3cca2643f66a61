#include "geoprod/families.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "geoprod/error.hpp"

namespace geoprod {

namespace {

std::size_t param(const FamilySpec& spec, std::size_t i) {
  if (spec.params.size() <= i) throw Error(ErrorCode::BadParams, "missing family parameter");
  return spec.params[i];
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParams, what);
}

}  // namespace

std::size_t FamilySpec::order() const {
  switch (kind) {
    case Family::CompleteBipartite: return param(*this, 0) + param(*this, 1);
    case Family::Tree: return tree_edges.size() + 1;
    default: return param(*this, 0);
  }
}

std::string FamilySpec::name() const {
  std::ostringstream os;
  switch (kind) {
    case Family::Path: os << 'P' << param(*this, 0); break;
    case Family::Cycle: os << 'C' << param(*this, 0); break;
    case Family::Complete: os << 'K' << param(*this, 0); break;
    case Family::CompleteBipartite: os << 'K' << param(*this, 0) << ',' << param(*this, 1); break;
    case Family::Star: os << 'S' << param(*this, 0); break;
    case Family::Wheel: os << 'W' << param(*this, 0); break;
    case Family::Tree: {
      os << "T:(";
      for (std::size_t i = 0; i < tree_edges.size(); ++i) {
        if (i > 0) os << ',';
        os << tree_edges[i].first << '-' << tree_edges[i].second;
      }
      os << ')';
      break;
    }
  }
  return os.str();
}

void validate(const FamilySpec& spec) {
  switch (spec.kind) {
    case Family::Path:
    case Family::Complete:
      require(spec.params.size() == 1 && param(spec, 0) >= 1, spec.name() + ": order must be >= 1");
      break;
    case Family::Cycle:
      require(spec.params.size() == 1 && param(spec, 0) >= 3, "cycle order must be >= 3");
      break;
    case Family::CompleteBipartite:
      require(spec.params.size() == 2, "complete bipartite graph needs two part sizes");
      require(param(spec, 0) >= 2 && param(spec, 0) <= param(spec, 1),
              "complete bipartite graph K_{p,q} requires 2 <= p <= q");
      break;
    case Family::Star:
      require(spec.params.size() == 1 && param(spec, 0) >= 2, "star order must be >= 2");
      break;
    case Family::Wheel:
      require(spec.params.size() == 1 && param(spec, 0) >= 4, "wheel order must be >= 4");
      break;
    case Family::Tree: {
      const std::size_t n = spec.tree_edges.size() + 1;
      std::set<Edge> seen;
      for (auto [u, v] : spec.tree_edges) {
        require(u < n && v < n, "tree edge references a vertex outside 0.." + std::to_string(n - 1));
        require(u != v, "tree edge is a self-loop");
        require(seen.insert({std::min(u, v), std::max(u, v)}).second, "tree has a repeated edge");
      }
      break;
    }
  }
}

Graph make_family(const FamilySpec& spec) {
  validate(spec);
  const std::size_t n = spec.order();
  std::vector<Edge> edges;
  auto add = [&](std::size_t u, std::size_t v) { edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v)); };
  switch (spec.kind) {
    case Family::Path:
      for (std::size_t i = 0; i + 1 < n; ++i) add(i, i + 1);
      break;
    case Family::Cycle:
      for (std::size_t i = 0; i < n; ++i) add(i, (i + 1) % n);
      break;
    case Family::Complete:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) add(i, j);
      break;
    case Family::CompleteBipartite: {
      const std::size_t p = param(spec, 0);
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = p; j < n; ++j) add(i, j);
      break;
    }
    case Family::Star:
      for (std::size_t i = 1; i < n; ++i) add(0, i);
      break;
    case Family::Wheel:
      for (std::size_t i = 1; i < n; ++i) {
        add(0, i);
        add(i, i + 1 < n ? i + 1 : 1);
      }
      break;
    case Family::Tree:
      edges = spec.tree_edges;
      break;
  }
  Graph g = Graph::build(n, edges);
  // A tree's edge list may still describe a forest plus a cycle; connectivity
  // with exactly n-1 distinct edges rules that out.
  if (spec.kind == Family::Tree && g.size() != n - 1) {
    throw Error(ErrorCode::BadParams, "tree edge list is not a tree");
  }
  return g;
}

GeodeticHull reference_g_h(const FamilySpec& spec) {
  validate(spec);
  const std::size_t n = spec.order();
  auto same = [](std::size_t v) { return GeodeticHull{v, v}; };
  switch (spec.kind) {
    case Family::Path:
      if (n == 1) return same(1);
      return same(2);
    case Family::Cycle:
      if (n == 3) return same(3);
      return same(n % 2 == 0 ? 2 : 3);
    case Family::Complete:
      return same(n);
    case Family::CompleteBipartite:
      return {std::min<std::size_t>(4, param(spec, 0)), 2};
    case Family::Star:
      if (n == 2) return same(2);
      return same(n - 1);
    case Family::Wheel:
      if (n == 4) return same(4);
      return same(n / 2);  // ceil((n-1)/2) for a rim of n-1 vertices
    case Family::Tree: {
      if (n == 1) return same(1);
      const Graph g = make_family(spec);
      std::size_t leaves = 0;
      for (Vertex v = 0; v < n; ++v) leaves += g.degree(v) == 1 ? 1 : 0;
      return same(leaves);
    }
  }
  throw Error(ErrorCode::Unsupported, spec.name());
}

FamilySpec fixed_tree_a() { return FamilySpec::tree({{0, 1}, {1, 2}, {1, 3}}); }

FamilySpec fixed_tree_b() { return FamilySpec::tree({{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}}); }

std::vector<FamilySpec> family_catalogue(std::size_t max_order) {
  std::vector<FamilySpec> out;
  for (std::size_t n = 1; n <= max_order; ++n) out.push_back(FamilySpec::complete(n));
  for (std::size_t n = 3; n <= max_order; ++n) out.push_back(FamilySpec::path(n));
  for (std::size_t n = 4; n <= max_order; ++n) out.push_back(FamilySpec::cycle(n));
  for (std::size_t p = 2; 2 * p <= max_order; ++p)
    for (std::size_t q = p; p + q <= max_order; ++q) out.push_back(FamilySpec::complete_bipartite(p, q));
  for (std::size_t n = 4; n <= max_order; ++n) out.push_back(FamilySpec::star(n));
  for (std::size_t n = 5; n <= max_order; ++n) out.push_back(FamilySpec::wheel(n));
  for (const auto& t : {fixed_tree_a(), fixed_tree_b()})
    if (t.order() <= max_order) out.push_back(t);
  return out;
}

}  // namespace geoprod
