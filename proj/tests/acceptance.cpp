// Acceptance runner. With no arguments every criterion runs; otherwise only
// the numbered ones. Prints one PASS/FAIL line each and exits nonzero if any
// failed. All numeric comparisons are exact (tolerance 0).

#include <array>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "geoprod/checks.hpp"
#include "geoprod/commands.hpp"
#include "geoprod/convexity.hpp"
#include "geoprod/expression.hpp"
#include "geoprod/families.hpp"
#include "geoprod/random_graph.hpp"
#include "geoprod/solvers.hpp"
#include "oracles.hpp"

using namespace geoprod;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

SolveResult solve_expr(const std::string& expr, Mode mode) {
  const IntervalTable t(parse_expression(expr).graph);
  return solve(t, {.mode = mode});
}

void expect_value(Outcome& out, const std::string& expr, Mode mode, std::size_t want) {
  const auto r = solve_expr(expr, mode);
  const bool ok = r.optimal && r.value == want;
  std::ostringstream what;
  what << (mode == Mode::Geodetic ? "g(" : "h(") << expr << ") = " << r.value << (r.optimal ? "" : "?")
       << ", expected " << want;
  out.expect(ok, what.str());
}

void expect_table(Outcome& out, const std::string& name) {
  const auto rows = cmd_table(name, {});
  for (const auto& r : rows)
    out.expect(r.all_checks_pass() && r.failures.empty() && !r.any_timeout(), name + " row " + r.instance);
  out.detail << ' ' << name << ": " << rows.size() << " rows";
}

void expect_suite(Outcome& out, const SuiteReport& r) {
  std::size_t passed = 0, total = 0;
  for (const auto& [_, t] : r.counts) {
    passed += t.passed;
    total += t.total;
  }
  out.detail << ' ' << r.suite << ' ' << passed << '/' << total;
  out.expect(r.complete, r.suite + " incomplete");
  out.expect(r.passed(), r.suite + (r.failures.empty() ? std::string() : ": " + r.failures.front()));
}

void table_one(Outcome& out) { expect_table(out, "t1"); }

void complete_by_cycle_g(Outcome& out) {
  expect_value(out, "K3 x C4", Mode::Geodetic, 4);
  expect_value(out, "K4 x C6", Mode::Geodetic, 4);
  expect_value(out, "K3 x C5", Mode::Geodetic, 5);
  expect_value(out, "K4 x C7", Mode::Geodetic, 5);
}

void complete_by_cycle_h(Outcome& out) {
  expect_value(out, "K3 x C4", Mode::Hull, 2);
  expect_value(out, "K4 x C6", Mode::Hull, 2);
  expect_value(out, "K3 x C5", Mode::Hull, 3);
  expect_value(out, "K4 x C7", Mode::Hull, 3);
}

void table_seven(Outcome& out) {
  const std::array<std::size_t, 6> want{5, 5, 6, 7, 4, 6};
  for (std::size_t n = 4; n <= 9; ++n)
    expect_value(out, "C5 x C" + std::to_string(n), Mode::Geodetic, want[n - 4]);
  expect_table(out, "t7");
}

void odd_cycle_hull(Outcome& out) {
  expect_value(out, "C5 x C7", Mode::Hull, 2);
  expect_value(out, "C5 x C5", Mode::Hull, 3);
  const auto inst = parse_expression("C5 x C7");
  const IntervalTable t(inst.graph);
  const VertexSet w(35, {inst.product->encode(0, 0), inst.product->encode(1, 3)});
  out.expect(is_hull(t, w), "{(0,0),(1,3)} is not a hull set of C5 x C7");
  out.expect(solve(t, {.mode = Mode::Hull}).witness == w, "lex-first hull witness of C5 x C7");
}

void odd_cycle_by_path_hull(Outcome& out) {
  expect_value(out, "C5 x P4", Mode::Hull, 2);
  expect_value(out, "C5 x P5", Mode::Hull, 2);
  expect_value(out, "C7 x P3", Mode::Hull, 3);
  expect_value(out, "C7 x P4", Mode::Hull, 3);
}

void path_by_cycle_g(Outcome& out) {
  expect_value(out, "P3 x C7", Mode::Geodetic, 5);
  expect_value(out, "P3 x C5", Mode::Geodetic, 6);
}

void table_three(Outcome& out) {
  expect_value(out, "P3 x P4", Mode::Geodetic, 4);
  expect_value(out, "P3 x K3", Mode::Geodetic, 6);
  expect_value(out, "K3 x K4", Mode::Geodetic, 12);
  expect_value(out, fixed_tree_a().name() + " x " + fixed_tree_b().name(), Mode::Geodetic, 9);
  expect_table(out, "t3");
}

void bound_suite(Outcome& out) {
  CheckOptions opts;
  opts.trials = 50;
  expect_suite(out, check_bounds(opts));
}

void lemma_suites(Outcome& out) {
  CheckOptions opts;
  opts.trials = 100;
  opts.exhaustive_pair_order = 6;
  expect_suite(out, check_intervals(opts));
  expect_suite(out, check_projections(opts));
  expect_suite(out, check_conditions(opts));
}

void boundary_suite(Outcome& out) {
  CheckOptions opts;
  opts.trials = 50;
  expect_suite(out, check_boundary(opts));
}

void solver_vs_oracle(Outcome& out) {
  std::vector<Graph> graphs;
  for (const auto& spec : family_catalogue(9)) graphs.push_back(make_family(spec));
  Rng rng(20240917);
  for (int i = 0; i < 200; ++i) graphs.push_back(random_connected_graph(rng, std::size_t{2}, std::size_t{9}));
  std::size_t compared = 0;
  for (const Graph& g : graphs) {
    const IntervalTable t(g);
    const auto d = oracle::distances(g);
    for (Mode mode : {Mode::Geodetic, Mode::Hull}) {
      const auto want = oracle::minimum(d, mode == Mode::Hull);
      const auto got = solve(t, {.mode = mode});
      ++compared;
      out.expect(got.optimal && got.value == want.value && got.witness.to_vector() == want.witness,
                 "solver and oracle differ on a graph of order " + std::to_string(g.order()));
    }
  }
  out.detail << ' ' << compared << " comparisons";
}

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string(GEOPROD_CLI) + ' ' + args;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return {-1, ""};
  std::string text;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) text.append(buf.data(), n);
  const int status = pclose(pipe.release());
  return {status, text};
}

void worker_determinism(Outcome& out) {
  const auto [s1, one] = run_cli("table t7 --workers 1");
  const auto [s8, eight] = run_cli("table t7 --workers 8");
  out.expect(s1 == 0 && s8 == 0, "nonzero exit status");
  out.expect(!one.empty() && one == eight, "outputs differ");
  out.detail << ' ' << one.size() << " bytes";
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"reference families", table_one},
      {"g of complete by cycle", complete_by_cycle_g},
      {"h of complete by cycle", complete_by_cycle_h},
      {"g of C5 by cycles", table_seven},
      {"h of odd cycle products", odd_cycle_hull},
      {"h of odd cycle by path", odd_cycle_by_path_hull},
      {"g of P3 by cycles", path_by_cycle_g},
      {"g of factor products", table_three},
      {"product bounds", bound_suite},
      {"lemma suites", lemma_suites},
      {"boundary identities", boundary_suite},
      {"solver against oracle", solver_vs_oracle},
      {"worker determinism", worker_determinism},
  };

  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    const int k = std::atoi(argv[i]);
    if (k < 1 || k > static_cast<int>(criteria.size())) {
      std::cerr << "unknown criterion " << argv[i] << '\n';
      return 2;
    }
    selected.push_back(static_cast<std::size_t>(k));
  }
  if (selected.empty())
    for (std::size_t k = 1; k <= criteria.size(); ++k) selected.push_back(k);

  bool all = true;
  for (std::size_t k : selected) {
    Outcome out;
    try {
      criteria[k - 1].second(out);
    } catch (const std::exception& e) {
      out.expect(false, e.what());
    }
    all = all && out.pass;
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << k << ": " << criteria[k - 1].first
              << " (exact)" << out.detail.str() << std::endl;
  }
  return all ? 0 : 1;
}
