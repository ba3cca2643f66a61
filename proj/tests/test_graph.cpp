#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "geoprod/error.hpp"
#include "geoprod/graph.hpp"
#include "geoprod/vertex_set.hpp"
#include "oracles.hpp"

using namespace geoprod;

namespace {

Graph make(std::size_t n, std::vector<Edge> edges) { return Graph::build(n, edges); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::BadParams;
}

}  // namespace

TEST_CASE("vertex sets across word boundaries") {
  VertexSet s(130, {0, 63, 64, 129});
  CHECK(s.count() == 4);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(65));
  CHECK(s.to_string() == "{0,63,64,129}");
  CHECK(s.complement().count() == 126);
  CHECK(VertexSet::full(130).is_full());
  s.erase(63);
  CHECK(s.to_vector() == std::vector<Vertex>{0, 64, 129});
}

TEST_CASE("vertex set algebra") {
  const VertexSet a(10, {1, 2, 3}), b(10, {3, 4});
  CHECK((a | b) == VertexSet(10, {1, 2, 3, 4}));
  CHECK((a & b) == VertexSet(10, {3}));
  CHECK((a - b) == VertexSet(10, {1, 2}));
  CHECK(VertexSet(10, {1, 2}).is_subset_of(a));
  CHECK_FALSE(b.is_subset_of(a));
  CHECK(a.intersects(b));
  CHECK(VertexSet(10).empty());
}

TEST_CASE("lexicographic order compares sorted member lists") {
  CHECK(VertexSet(8, {0, 5}).lex_less(VertexSet(8, {1, 2})));
  CHECK(VertexSet(8, {0, 1, 7}).lex_less(VertexSet(8, {0, 2, 3})));
  CHECK(VertexSet(8, {0, 1}).lex_less(VertexSet(8, {0, 1, 2})));
  CHECK_FALSE(VertexSet(8, {2}).lex_less(VertexSet(8, {2})));
}

TEST_CASE("vertex set errors") {
  VertexSet s(4);
  CHECK(code_of([&] { s.insert(4); }) == ErrorCode::OutOfRange);
  CHECK(code_of([&] { (void)s.contains(9); }) == ErrorCode::OutOfRange);
  CHECK(code_of([&] { s |= VertexSet(5); }) == ErrorCode::OutOfRange);
}

TEST_CASE("build normalizes and validates edges") {
  const Graph g = make(4, {{1, 0}, {0, 1}, {2, 1}, {3, 2}});
  CHECK(g.size() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.adjacent(2, 1));
  CHECK(g.degree(1) == 2);
  CHECK(code_of([] { make(0, {}); }) == ErrorCode::BadParams);
  CHECK(code_of([] { make(3, {{0, 3}}); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { make(3, {{1, 1}, {0, 1}, {1, 2}}); }) == ErrorCode::SelfLoop);
  CHECK(code_of([] { make(4, {{0, 1}, {2, 3}}); }) == ErrorCode::Disconnected);
}

TEST_CASE("single vertex graph") {
  const Graph g = make(1, {});
  CHECK(g.distances().diameter() == 0);
  CHECK(g.distances().radius() == 0);
}

TEST_CASE("distances and eccentricities match Floyd-Warshall") {
  // A 5-cycle with a pendant path: 0-1-2-3-4-0, 2-5-6.
  const Graph g = make(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {2, 5}, {5, 6}});
  const auto d = oracle::distances(g);
  const auto e = oracle::eccentricities(d);
  for (Vertex u = 0; u < 7; ++u) {
    CHECK(g.distances().ecc(u) == e[u]);
    for (Vertex v = 0; v < 7; ++v) CHECK(g.distance(u, v) == d[u][v]);
  }
  CHECK(g.distances().diameter() == 4);  // 0 or 4 to 6
  CHECK(g.distances().radius() == 2);
  CHECK(all_pairs_distances(g).at(0, 6) == 4);
}

TEST_CASE("edge list round trip") {
  const Graph g = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  std::stringstream ss;
  write_edge_list(ss, g);
  const Graph back = read_edge_list(ss);
  CHECK(back.order() == 5);
  CHECK(back.edges() == g.edges());
}

TEST_CASE("edge list parsing errors") {
  std::stringstream bad1("3 2\n0 1\n1 x\n");
  CHECK(code_of([&] { read_edge_list(bad1); }) == ErrorCode::ParseError);
  std::stringstream bad2("3 1\n0 1 7\n");
  CHECK(code_of([&] { read_edge_list(bad2); }) == ErrorCode::ParseError);
  std::stringstream bad4("");
  CHECK(code_of([&] { read_edge_list(bad4); }) == ErrorCode::ParseError);
  std::stringstream bad3("3 2\n0 5\n1 2\n");
  CHECK(code_of([&] { read_edge_list(bad3); }) == ErrorCode::OutOfRange);
}

TEST_CASE("error codes have stable names") {
  CHECK(to_string(ErrorCode::ParseError) == "ParseError");
  CHECK(to_string(ErrorCode::Overflow) == "Overflow");
}
