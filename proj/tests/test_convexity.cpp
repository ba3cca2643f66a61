#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geoprod/convexity.hpp"
#include "geoprod/error.hpp"
#include "geoprod/families.hpp"
#include "geoprod/product.hpp"
#include "geoprod/random_graph.hpp"
#include "oracles.hpp"

using namespace geoprod;

namespace {

IntervalTable table(const FamilySpec& s) { return IntervalTable(make_family(s)); }

oracle::Set to_oracle(const VertexSet& s) {
  oracle::Set out(s.universe_size(), false);
  s.for_each([&](Vertex v) { out[v] = true; });
  return out;
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Unsupported;
}

}  // namespace

TEST_CASE("intervals on small families") {
  const auto p4 = table(FamilySpec::path(4));
  CHECK(interval(p4, 0, 3) == VertexSet::full(4));
  CHECK(interval(p4, 1, 1) == VertexSet(4, {1}));
  CHECK(interval(table(FamilySpec::cycle(4)), 0, 2) == VertexSet::full(4));
  CHECK(interval(table(FamilySpec::cycle(5)), 0, 2) == VertexSet(5, {0, 1, 2}));
  const auto k4 = table(FamilySpec::complete(4));
  CHECK(interval(k4, 0, 3) == VertexSet(4, {0, 3}));
  CHECK(k4.in_interval(0, 3, 3));
  CHECK_FALSE(k4.in_interval(0, 1, 3));
}

TEST_CASE("closure and hull") {
  const auto c6 = table(FamilySpec::cycle(6));
  CHECK(closure(c6, VertexSet(6, {0, 3})).is_full());
  CHECK(is_geodetic(c6, VertexSet(6, {0, 3})));
  CHECK_FALSE(is_geodetic(c6, VertexSet(6, {0, 2})));
  CHECK(closure_power(c6, VertexSet(6, {1}), 0) == VertexSet(6, {1}));

  const auto c5 = table(FamilySpec::cycle(5));
  const VertexSet s(5, {0, 2});
  CHECK_FALSE(is_geodetic(c5, s));
  CHECK(hull_of(c5, s) == VertexSet(5, {0, 1, 2}));
  CHECK(is_convex(c5, VertexSet(5, {0, 1, 2})));
  CHECK(is_hull(c5, VertexSet(5, {0, 1, 3})));
}

TEST_CASE("product hulls") {
  const auto c57 = strong_product(make_family(FamilySpec::cycle(5)), make_family(FamilySpec::cycle(7)));
  const IntervalTable t(c57.graph());
  const VertexSet s(35, {c57.encode(0, 0), c57.encode(1, 3)});
  CHECK(s == VertexSet(35, {0, 10}));
  CHECK(is_hull(t, s));
  CHECK_FALSE(is_geodetic(t, s));

  const auto p2c4 = strong_product(make_family(FamilySpec::path(2)), make_family(FamilySpec::cycle(4)));
  const IntervalTable u(p2c4.graph());
  const auto trace = convex_hull(u, VertexSet(8, {p2c4.encode(0, 0), p2c4.encode(0, 2)}));
  CHECK(trace.hull().is_full());
  CHECK(trace.iterations + 1 == trace.stages.size());
  CHECK(trace.iterations == 2);
}

TEST_CASE("hull trace stages are nested and end at a convex set") {
  const auto t = table(FamilySpec::path(7));
  const auto trace = convex_hull(t, VertexSet(7, {2, 4}));
  REQUIRE(trace.stages.size() == 2);
  CHECK(trace.stages[0] == VertexSet(7, {2, 4}));
  CHECK(trace.hull() == VertexSet(7, {2, 3, 4}));
  CHECK(trace.iterations == 1);
  CHECK(convex_hull(t, VertexSet(7, {3})).iterations == 0);
}

TEST_CASE("simplicial vertices") {
  CHECK(simplicial_vertices(make_family(FamilySpec::path(5))) == VertexSet(5, {0, 4}));
  CHECK(simplicial_vertices(make_family(FamilySpec::cycle(5))).empty());
  CHECK(simplicial_vertices(make_family(FamilySpec::complete(4))).is_full());
  CHECK(simplicial_vertices(make_family(FamilySpec::star(5))) == VertexSet(5, {1, 2, 3, 4}));
  CHECK(is_extreme_geodesic(make_family(fixed_tree_b())));
  CHECK_FALSE(is_extreme_geodesic(make_family(FamilySpec::cycle(6))));
  CHECK_FALSE(is_extreme_geodesic(make_family(FamilySpec::wheel(6))));
}

TEST_CASE("conditions A and B") {
  const auto c8 = table(FamilySpec::cycle(8));
  const VertexSet s(8, {0, 1, 4, 5});
  CHECK(condition_A(c8, s));
  const auto d = oracle::distances(c8.graph());
  CHECK(condition_B(c8, s) == oracle::condition_b(d, to_oracle(s)));

  const auto p5 = table(FamilySpec::path(5));
  CHECK_FALSE(condition_A(p5, VertexSet(5, {0, 4})));
  CHECK(condition_B(p5, VertexSet(5, {0, 4})));
  CHECK(condition_B(p5, VertexSet(5, {0, 2, 4})));
  CHECK_FALSE(condition_A(p5, VertexSet(5, {0, 2, 4})));
  CHECK_FALSE(condition_B(table(FamilySpec::cycle(4)), VertexSet::full(4)));
  CHECK(condition_A(table(FamilySpec::cycle(4)), VertexSet::full(4)));

  CHECK(code_of([&] { condition_A(p5, VertexSet(5)); }) == ErrorCode::EmptySet);
  CHECK(code_of([&] { condition_B(p5, VertexSet(5, {1})); }) == ErrorCode::TooSmall);
  CHECK(code_of([&] { closure(p5, VertexSet(5)); }) == ErrorCode::EmptySet);
}

TEST_CASE("agreement with the oracle on random graphs") {
  Rng rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_connected_graph(rng, std::size_t{3}, std::size_t{10});
    const std::size_t n = g.order();
    CAPTURE(g.order());
    const IntervalTable t(g);
    const auto d = oracle::distances(g);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        for (Vertex w = 0; w < n; ++w) REQUIRE(t.in_interval(u, w, v) == oracle::in_interval(d, u, w, v));
    for (int k = 0; k < 10; ++k) {
      VertexSet s = random_subset(rng, n, 0.3);
      if (s.count() < 2) continue;
      const auto os = to_oracle(s);
      CHECK(to_oracle(closure(t, s)) == oracle::closure(d, os));
      CHECK(to_oracle(hull_of(t, s)) == oracle::hull(d, os));
      CHECK(to_oracle(convex_hull(t, s).hull()) == oracle::hull(d, os));
      CHECK(condition_A(t, s) == oracle::condition_a(d, os));
      CHECK(condition_B(t, s) == oracle::condition_b(d, os));
    }
    CHECK(to_oracle(simplicial_vertices(g)) == oracle::simplicial(oracle::adjacency(g)));
  }
}

TEST_CASE("lazy tables agree with eager ones") {
  const auto big = strong_product(make_family(FamilySpec::cycle(23)), make_family(FamilySpec::path(23)));
  const IntervalTable lazy(big.graph());
  CHECK_FALSE(lazy.eager());
  const auto d = oracle::distances(big.graph());
  for (Vertex u = 0; u < 529; u += 37)
    for (Vertex v = 0; v < 529; v += 41)
      for (Vertex w = 0; w < 529; w += 5) CHECK(lazy.in_interval(u, w, v) == oracle::in_interval(d, u, w, v));
  const VertexSet s(529, {0, big.encode(11, 22)});
  CHECK(to_oracle(closure(lazy, s)) == oracle::closure(d, to_oracle(s)));
}
