#pragma once

#include <cstddef>
#include <cstdint>
#include <concepts>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geoprod/graph.hpp"
#include "geoprod/record.hpp"

namespace geoprod {

struct CheckOptions {
  std::uint64_t seed = 1;
  /// Random instances per suite, on top of the fixed and exhaustive ones.
  std::size_t trials = 20;
  /// Exhaustive single-graph pools cover every connected graph up to this
  /// order; product pools pair every connected graph of order <= 4 with
  /// the family graphs up to this order.
  std::size_t max_factor_order = 6;
  /// When nonzero, product pools instead take every ordered pair of
  /// connected graphs of order <= this value.
  std::size_t exhaustive_pair_order = 0;
  /// Largest random factor for suites that only evaluate intervals; suites
  /// that solve g or h on products use at most 6.
  std::size_t max_random_order = 8;
  double time_limit_seconds = 300.0;
  unsigned workers = 1;
};

/// Per-property pass counts plus the first few failing cases.
struct SuiteReport {
  static constexpr std::size_t kMaxFailures = 20;

  std::string suite;
  std::map<std::string, Tally> counts;
  std::vector<std::string> failures;
  /// False when some solver call hit the time limit.
  bool complete = true;

  template <std::invocable Describe>
  void record(const std::string& property, bool ok, Describe&& describe) {
    auto& t = counts[property];
    ++t.total;
    if (ok) {
      ++t.passed;
    } else if (failures.size() < kMaxFailures) {
      failures.push_back(property + ": " + std::forward<Describe>(describe)());
    }
  }
  void record(const std::string& property, bool ok, const std::string& what) {
    record(property, ok, [&] { return what; });
  }

  bool passed() const;
  /// Folds `other` in with its property names prefixed by its suite name.
  void merge(const SuiteReport& other);
};

inline const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{"intervals", "projections", "bounds", "conditions", "boundary"};
  return names;
}

SuiteReport check_intervals(const CheckOptions& opts);
SuiteReport check_projections(const CheckOptions& opts);
SuiteReport check_bounds(const CheckOptions& opts);
SuiteReport check_conditions(const CheckOptions& opts);
SuiteReport check_boundary(const CheckOptions& opts);

/// One of suite_names() or "all"; Error(BadParams) otherwise.
SuiteReport run_suite(std::string_view name, const CheckOptions& opts);

ResultRecord to_record(const SuiteReport& report);

/// Every connected graph of order 2..max_order, one per isomorphism class.
std::vector<Graph> single_graph_pool(std::size_t max_order);

/// Factor pairs used by the exhaustive product checks: ordered pairs from
/// the connected graphs of order 2..4 and the family graphs of order
/// 5..max_factor_order, or every pair of connected graphs of order
/// 2..exhaustive_pair_order when that is set.
std::vector<std::pair<Graph, Graph>> product_pair_pool(const CheckOptions& opts);

}  // namespace geoprod
