#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "geoprod/error.hpp"
#include "geoprod/families.hpp"
#include "geoprod/product.hpp"
#include "oracles.hpp"

using namespace geoprod;

namespace {

Graph fam(const FamilySpec& s) { return make_family(s); }

}  // namespace

TEST_CASE("K2 x K2 is K4") {
  const auto p = strong_product(fam(FamilySpec::complete(2)), fam(FamilySpec::complete(2)));
  CHECK(p.graph().order() == 4);
  CHECK(p.graph().size() == 6);
}

TEST_CASE("edge count identity") {
  const auto p = strong_product(fam(FamilySpec::path(2)), fam(FamilySpec::path(3)));
  CHECK(p.graph().size() == 11);
  for (const auto& [a, b] : {std::pair{FamilySpec::cycle(5), FamilySpec::path(4)},
                             std::pair{FamilySpec::complete_bipartite(2, 3), FamilySpec::wheel(6)}}) {
    const Graph g = fam(a), h = fam(b);
    const auto q = strong_product(g, h);
    CHECK(q.graph().size() == g.size() * h.order() + g.order() * h.size() + 2 * g.size() * h.size());
  }
}

TEST_CASE("adjacency matches the definition") {
  const Graph g = fam(FamilySpec::cycle(5)), h = fam(FamilySpec::complete_bipartite(2, 3));
  const auto p = strong_product(g, h);
  const auto expected = oracle::strong_product(oracle::adjacency(g), oracle::adjacency(h));
  const auto actual = oracle::adjacency(p.graph());
  CHECK(actual == expected);
}

TEST_CASE("encoding is row-major") {
  const auto p = strong_product(fam(FamilySpec::path(3)), fam(FamilySpec::cycle(4)));
  CHECK(p.encode(2, 1) == 9);
  CHECK(p.decode(9) == ProductVertex{2, 1});
  CHECK(p.graph().label(9) == "(2,1)");
  for (Vertex v = 0; v < 12; ++v) CHECK(p.encode(p.decode(v)) == v);
}

TEST_CASE("distance formula") {
  const auto p = strong_product(fam(FamilySpec::path(2)), fam(FamilySpec::cycle(8)));
  CHECK(p.graph().distance(p.encode(0, 0), p.encode(1, 3)) == 3);
  const auto r = verify_distance_formula(strong_product(fam(FamilySpec::path(3)), fam(FamilySpec::cycle(5))));
  CHECK(r.pairs_checked == 225);
  CHECK(r.diameter == 2);
  CHECK(verify_distance_formula(strong_product(fam(FamilySpec::cycle(4)), fam(FamilySpec::cycle(6)))).diameter == 3);
}

TEST_CASE("trivial factor gives the other factor's distances") {
  const Graph h = fam(FamilySpec::cycle(7));
  const auto p = strong_product(fam(FamilySpec::complete(1)), h);
  for (Vertex u = 0; u < 7; ++u)
    for (Vertex v = 0; v < 7; ++v) CHECK(p.graph().distance(u, v) == h.distance(u, v));
}

TEST_CASE("projections and cartesian sets") {
  const auto p = strong_product(fam(FamilySpec::path(3)), fam(FamilySpec::path(3)));
  const VertexSet s(9, {p.encode(0, 1), p.encode(2, 1)});
  CHECK(project(p, s, Side::Left) == VertexSet(3, {0, 2}));
  CHECK(project(p, s, Side::Right) == VertexSet(3, {1}));
  CHECK(project(p, VertexSet(9), Side::Left).empty());
  const VertexSet c = cartesian(p, VertexSet(3, {0, 2}), VertexSet(3, {1}));
  CHECK(c == s);
}

TEST_CASE("vertex cap") {
  const Graph big = fam(FamilySpec::path(70));
  CHECK_THROWS_AS(strong_product(big, big), Error);
  CHECK_NOTHROW(strong_product(big, big, 4900));
  try {
    strong_product(big, big, 100);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Overflow);
  }
}

TEST_CASE("vertex cap from the environment") {
  ::setenv("GEOPROD_VERTEX_CAP", "20", 1);
  CHECK(default_vertex_cap() == 20);
  ::setenv("GEOPROD_VERTEX_CAP", "junk", 1);
  CHECK(default_vertex_cap() == kDefaultVertexCap);
  ::unsetenv("GEOPROD_VERTEX_CAP");
  CHECK(default_vertex_cap() == kDefaultVertexCap);
}
