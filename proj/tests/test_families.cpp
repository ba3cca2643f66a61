#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geoprod/error.hpp"
#include "geoprod/families.hpp"
#include "oracles.hpp"

using namespace geoprod;

TEST_CASE("family shapes") {
  CHECK(make_family(FamilySpec::path(5)).size() == 4);
  CHECK(make_family(FamilySpec::cycle(6)).size() == 6);
  CHECK(make_family(FamilySpec::complete(5)).size() == 10);
  const Graph k23 = make_family(FamilySpec::complete_bipartite(2, 3));
  CHECK(k23.order() == 5);
  CHECK(k23.size() == 6);
  CHECK_FALSE(k23.adjacent(0, 1));
  CHECK(k23.adjacent(0, 2));
  const Graph s = make_family(FamilySpec::star(5));
  CHECK(s.degree(0) == 4);
  const Graph w = make_family(FamilySpec::wheel(6));
  CHECK(w.size() == 10);
  CHECK(w.degree(0) == 5);
  CHECK(w.adjacent(1, 5));
  CHECK(w.degree(3) == 3);
}

TEST_CASE("family names") {
  CHECK(FamilySpec::path(5).name() == "P5");
  CHECK(FamilySpec::complete_bipartite(2, 3).name() == "K2,3");
  CHECK(FamilySpec::wheel(7).name() == "W7");
  CHECK(FamilySpec::tree({{0, 1}, {1, 2}}).name() == "T:(0-1,1-2)");
}

TEST_CASE("family parameter validation") {
  auto code = [](const FamilySpec& s) {
    try {
      make_family(s);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Unsupported;  // sentinel: no error
  };
  CHECK(code(FamilySpec::cycle(2)) == ErrorCode::BadParams);
  CHECK(code(FamilySpec::complete_bipartite(3, 2)) == ErrorCode::BadParams);
  CHECK(code(FamilySpec::complete_bipartite(1, 4)) == ErrorCode::BadParams);
  CHECK(code(FamilySpec::wheel(3)) == ErrorCode::BadParams);
  CHECK(code(FamilySpec::path(0)) == ErrorCode::BadParams);
  CHECK(code(FamilySpec::tree({{0, 1}, {1, 2}, {2, 0}})) != ErrorCode::Unsupported);
  CHECK(code(FamilySpec::tree({{0, 1}, {1, 5}})) == ErrorCode::BadParams);
}

TEST_CASE("closed forms for g and h") {
  CHECK(reference_g_h(FamilySpec::path(7)) == GeodeticHull{2, 2});
  CHECK(reference_g_h(FamilySpec::cycle(8)) == GeodeticHull{2, 2});
  CHECK(reference_g_h(FamilySpec::cycle(9)) == GeodeticHull{3, 3});
  CHECK(reference_g_h(FamilySpec::complete(5)) == GeodeticHull{5, 5});
  CHECK(reference_g_h(FamilySpec::complete_bipartite(3, 4)) == GeodeticHull{3, 2});
  CHECK(reference_g_h(FamilySpec::complete_bipartite(4, 4)) == GeodeticHull{4, 2});
  CHECK(reference_g_h(FamilySpec::complete_bipartite(2, 7)) == GeodeticHull{2, 2});
  CHECK(reference_g_h(FamilySpec::star(6)) == GeodeticHull{5, 5});
  CHECK(reference_g_h(FamilySpec::wheel(7)) == GeodeticHull{3, 3});
  CHECK(reference_g_h(FamilySpec::wheel(8)) == GeodeticHull{4, 4});
  CHECK(reference_g_h(fixed_tree_b()) == GeodeticHull{3, 3});
}

// The closed forms against plain subset enumeration, independent of the
// library's solver.
TEST_CASE("closed forms agree with the brute-force oracle") {
  for (const auto& spec : family_catalogue(8)) {
    CAPTURE(spec.name());
    const auto d = oracle::distances(make_family(spec));
    const auto ref = reference_g_h(spec);
    CHECK(oracle::minimum(d, false).value == ref.g);
    CHECK(oracle::minimum(d, true).value == ref.h);
  }
}

TEST_CASE("fixed trees") {
  CHECK(fixed_tree_a().order() == 4);
  CHECK(fixed_tree_b().order() == 6);
  CHECK(reference_g_h(fixed_tree_a()).g == 3);
}
