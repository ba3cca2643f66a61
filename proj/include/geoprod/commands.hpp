#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geoprod/expression.hpp"
#include "geoprod/record.hpp"

namespace geoprod {

struct RunOptions {
  double time_limit_seconds = 300.0;
  unsigned workers = 1;
  /// Adds wall-clock timing to records. Off by default so that output is
  /// reproducible byte for byte.
  bool timing = false;
};

/// Closed range of acceptable values; lo == hi for an exact reference.
struct Reference {
  std::size_t lo = 0;
  std::size_t hi = 0;

  static Reference exact(std::size_t v) { return {v, v}; }
  bool contains(std::size_t v) const { return lo <= v && v <= hi; }
  /// "5" or "5-6".
  std::string to_string() const;
};

/// Solves g and h for `inst`, re-verifies both witnesses, and compares them
/// with the references when given. Timeouts are reported as "timeout" with
/// the best bound known.
ResultRecord solve_record(const Instance& inst, const RunOptions& opts, std::optional<Reference> ref_g = {},
                          std::optional<Reference> ref_h = {});

/// solve_record plus Ext, boundary-type sets, and metric data. Single family
/// atoms also carry their closed-form references.
ResultRecord cmd_param(const Instance& inst, const RunOptions& opts);

/// Table rows for "t1", "t3", "t5" or "t7"; Error(BadParams) otherwise.
std::vector<ResultRecord> cmd_table(std::string_view name, const RunOptions& opts);

/// The four product boundary identities for two single-graph expressions.
/// Uses the strict orientation when one exists, per-item otherwise.
ResultRecord cmd_boundary(const Instance& g, const Instance& h);

}  // namespace geoprod
