// geoprod: geodetic and hull numbers of graphs and strong products.
//
//   geoprod param "K3 x C4"
//   geoprod table t7 --workers 8
//   geoprod check bounds --seed 7 --trials 50
//   geoprod boundary P3 C5
//   geoprod solve-raw graph.txt        (edge list, "-" for stdin)
//
// Exit status: 0 pass, 1 mismatch, 2 parse or usage error, 3 timeout.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geoprod/checks.hpp"
#include "geoprod/commands.hpp"
#include "geoprod/error.hpp"
#include "geoprod/expression.hpp"
#include "geoprod/graph.hpp"
#include "geoprod/record.hpp"

namespace {

enum Exit { kPass = 0, kMismatch = 1, kUsage = 2, kTimeout = 3 };

int emit(const std::vector<geoprod::ResultRecord>& records, const std::string& format) {
  bool mismatch = false, timeout = false;
  if (format == "csv") std::cout << geoprod::csv_header() << '\n';
  for (const auto& r : records) {
    std::cout << (format == "csv" ? geoprod::to_csv(r) : geoprod::to_jsonl(r)) << '\n';
    mismatch = mismatch || !r.all_checks_pass() || !r.failures.empty();
    timeout = timeout || r.any_timeout() || r.metrics.contains("incomplete");
  }
  std::cout.flush();
  if (mismatch) return kMismatch;
  return timeout ? kTimeout : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodetic and hull numbers of strong product graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  geoprod::RunOptions run;
  std::string format = "jsonl";
  app.add_option("--time-limit", run.time_limit_seconds, "Seconds per solver call")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--workers", run.workers, "Solver threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"jsonl", "csv"}))
      ->capture_default_str();
  app.add_flag("--timing", run.timing, "Include wall-clock milliseconds in records");

  std::string expr;
  auto* param = app.add_subcommand("param", "g, h, witnesses and boundary sets of an expression");
  param->add_option("expr", expr, "Expression, e.g. \"K3 x C4\"")->required();

  std::string table;
  auto* table_cmd = app.add_subcommand("table", "Reproduce a reference table");
  table_cmd->add_option("name", table, "t1, t3, t5 or t7")->required();

  std::string suite;
  geoprod::CheckOptions check_opts;
  auto* check = app.add_subcommand("check", "Run a property suite");
  check->add_option("suite", suite, "intervals, projections, bounds, conditions, boundary or all")->required();
  check->add_option("--seed", check_opts.seed, "Seed for random instances")->capture_default_str();
  check->add_option("--trials", check_opts.trials, "Random instances per suite")->capture_default_str();
  check->add_option("--exhaustive-order", check_opts.exhaustive_pair_order,
                    "Pair every connected graph up to this order in the product checks")
      ->check(CLI::Range(0, 6));

  std::string left, right;
  auto* boundary = app.add_subcommand("boundary", "Product formulas for boundary-type sets");
  boundary->add_option("G", left, "First factor")->required();
  boundary->add_option("H", right, "Second factor")->required();

  std::string path;
  auto* raw = app.add_subcommand("solve-raw", "g and h of a graph given as an edge list");
  raw->add_option("path", path, "Edge-list file, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    std::vector<geoprod::ResultRecord> records;
    if (*param) {
      records.push_back(geoprod::cmd_param(geoprod::parse_expression(expr), run));
    } else if (*table_cmd) {
      records = geoprod::cmd_table(table, run);
    } else if (*check) {
      check_opts.time_limit_seconds = run.time_limit_seconds;
      check_opts.workers = run.workers;
      records.push_back(geoprod::to_record(geoprod::run_suite(suite, check_opts)));
    } else if (*boundary) {
      records.push_back(
          geoprod::cmd_boundary(geoprod::parse_expression(left), geoprod::parse_expression(right)));
    } else if (*raw) {
      geoprod::Graph g = path == "-" ? geoprod::read_edge_list(std::cin) : geoprod::read_edge_list_file(path);
      const geoprod::Instance inst{path == "-" ? "stdin" : "file:" + path, g, std::nullopt, std::nullopt,
                                   std::nullopt};
      records.push_back(geoprod::solve_record(inst, run));
    }
    return emit(records, format);
  } catch (const geoprod::Error& e) {
    std::cerr << "geoprod: " << e.what() << '\n';
    return kUsage;
  }
}
