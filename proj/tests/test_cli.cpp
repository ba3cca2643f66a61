#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "geoprod/checks.hpp"
#include "geoprod/commands.hpp"
#include "geoprod/enumerate.hpp"
#include "geoprod/error.hpp"
#include "geoprod/expression.hpp"
#include "geoprod/record.hpp"

using namespace geoprod;

namespace {

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

TEST_CASE("expressions") {
  const auto k = parse_expression("K3 x C4");
  CHECK(k.is_product());
  CHECK(k.canonical == "K3 x C4");
  CHECK(k.graph.order() == 12);
  CHECK(k.left_spec->name() == "K3");

  const auto b = parse_expression("K2,3");
  CHECK_FALSE(b.is_product());
  CHECK(b.graph.size() == 6);

  const auto t = parse_expression("T:(0-1,1-2,1-3)");
  CHECK(t.graph.degree(1) == 3);

  CHECK(code_of([] { parse_expression("K3 ⊠ C4"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_expression("K3xC4"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_expression("Q4"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_expression(""); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_expression("C2"); }) == ErrorCode::BadParams);
  CHECK(code_of([] { parse_expression("P80 x P80"); }) == ErrorCode::Overflow);
}

TEST_CASE("file atoms") {
  const std::string path = "geoprod_test_graph.txt";
  {
    std::ofstream out(path);
    out << "4 4\n0 1\n1 2\n2 3\n3 0\n";
  }
  const auto inst = parse_expression("file:" + path + " x P2");
  CHECK(inst.graph.order() == 8);
  CHECK_FALSE(inst.left_spec.has_value());
  CHECK(inst.right_spec.has_value());
  std::remove(path.c_str());
  CHECK(code_of([] { parse_expression("file:/nonexistent/graph.txt"); }) == ErrorCode::ParseError);
}

TEST_CASE("record serialisation") {
  ResultRecord r;
  r.instance = "C5 x C7";
  r.g = ParamValue{6, false};
  r.h = ParamValue{3, true};
  r.witness_h = {{0, 0}, {1, 3}};
  r.reference_g = "6";
  r.checks["witness_g_valid"] = true;
  r.counts["p"] = {3, 4};
  r.sets["ext"] = {};
  r.metrics["order"] = 35;
  r.failures = {"something, quoted \"here\""};

  const auto j = to_json(r);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["h"] == "timeout");
  CHECK(j["h_upper"] == 3);
  CHECK(j["counts"]["p"] == nlohmann::json::array({3, 4}));
  CHECK_FALSE(j.contains("witness_g"));
  CHECK(record_from_json(j) == r);
  CHECK(record_from_json(nlohmann::json::parse(to_jsonl(r))) == r);
  CHECK(to_jsonl(r).find('\n') == std::string::npos);

  auto bad = j;
  bad["schema_version"] = 99;
  CHECK(code_of([&] { record_from_json(bad); }) == ErrorCode::ParseError);

  CHECK(csv_header() == "instance,g,h,ms");
  CHECK(to_csv(r) == "\"C5 x C7\",6,timeout,");
}

TEST_CASE("plain vertices serialise as integers") {
  const auto inst = parse_expression("P4");
  CHECK(coordinates(inst, VertexSet(4, {0, 3})) == std::vector<Coordinates>{{0}, {3}});
  const auto r = cmd_param(inst, {});
  CHECK(to_json(r)["witness_g"] == nlohmann::json::array({0, 3}));
  CHECK(r.metrics.at("diameter") == 3);
}

TEST_CASE("param records") {
  const auto r = cmd_param(parse_expression("C5 x C7"), {});
  CHECK(r.g->value == 7);
  CHECK(r.h->value == 2);
  CHECK(r.witness_h == std::vector<Coordinates>{{0, 0}, {1, 3}});
  CHECK(r.all_checks_pass());
  CHECK_FALSE(r.timing_ms.has_value());
  CHECK(cmd_param(parse_expression("C5"), {.timing = true}).timing_ms.has_value());
}

TEST_CASE("reference ranges") {
  CHECK(Reference::exact(5).to_string() == "5");
  CHECK(Reference{5, 6}.to_string() == "5-6");
  CHECK(Reference{5, 6}.contains(6));
  const auto inst = parse_expression("C4");
  const auto miss = solve_record(inst, {}, Reference::exact(3), Reference::exact(2));
  CHECK_FALSE(miss.checks.at("g_matches_reference"));
  CHECK(miss.checks.at("h_matches_reference"));
  CHECK_FALSE(miss.failures.empty());
}

TEST_CASE("tables") {
  const auto t7 = cmd_table("t7", {});
  REQUIRE(t7.size() == 6);
  const std::size_t expected[] = {5, 5, 6, 7, 4, 6};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(t7[i].g->value == expected[i]);
    CHECK(t7[i].all_checks_pass());
  }
  CHECK(t7[1].instance == "C5 x C5");
  CHECK(code_of([] { cmd_table("t9", {}); }) == ErrorCode::BadParams);
}

TEST_CASE("boundary command") {
  const auto r = cmd_boundary(parse_expression("P3"), parse_expression("C5"));
  CHECK(r.all_checks_pass());
  CHECK(r.metrics.at("orientable") == 1);
  CHECK(code_of([] { cmd_boundary(parse_expression("P3 x P3"), parse_expression("C5")); }) == ErrorCode::BadParams);
}

TEST_CASE("suites") {
  CheckOptions opts;
  opts.trials = 2;
  opts.max_factor_order = 4;
  const auto report = run_suite("conditions", opts);
  CHECK(report.passed());
  CHECK(report.complete);
  CHECK_FALSE(report.counts.empty());
  const auto rec = to_record(report);
  CHECK(rec.instance == "conditions");
  CHECK(rec.all_checks_pass());
  CHECK(code_of([&] { run_suite("nope", opts); }) == ErrorCode::BadParams);

  SuiteReport a{"x"};
  a.record("p", false, "why");
  CHECK_FALSE(a.passed());
  CHECK(a.failures == std::vector<std::string>{"p: why"});
  SuiteReport all{"all"};
  all.merge(a);
  CHECK(all.counts.at("x.p") == Tally{0, 1});
}

TEST_CASE("connected graph enumeration") {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(connected_graphs(n).size() == expected[n - 1]);
  CHECK(code_of([] { connected_graphs(8); }) == ErrorCode::BadParams);
  CHECK(single_graph_pool(4).size() == 9);
}
