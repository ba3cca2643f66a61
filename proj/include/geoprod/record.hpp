#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "geoprod/expression.hpp"
#include "geoprod/solvers.hpp"

namespace geoprod {

inline constexpr int kSchemaVersion = 1;

/// A vertex written as its coordinates: one entry for a plain graph, two
/// (left, right) for a product vertex.
using Coordinates = std::vector<Vertex>;

/// g or h: a value, or a timeout carrying the best known upper bound.
struct ParamValue {
  std::size_t value = 0;
  bool timeout = false;
  friend bool operator==(const ParamValue&, const ParamValue&) = default;
};

struct Tally {
  std::size_t passed = 0;
  std::size_t total = 0;
  friend bool operator==(const Tally&, const Tally&) = default;
};

/// One line of JSON output.
///
/// Schema (keys absent when empty/unset):
///   schema_version: 1
///   instance: canonical expression or suite name
///   g, h: integer or "timeout"
///   g_upper, h_upper: best known bound when g/h is "timeout"
///   witness_g, witness_h, sets.<name>: arrays of vertices; a vertex is an
///     integer for plain graphs and [left, right] for products
///   reference_g, reference_h: expected value, "a" or range "a-b"
///   checks: {name: bool}
///   counts: {name: [passed, total]}
///   metrics: {name: integer}
///   failures: [string]
///   timing_ms: number
struct ResultRecord {
  std::string instance;
  std::optional<ParamValue> g;
  std::optional<ParamValue> h;
  std::vector<Coordinates> witness_g;
  std::vector<Coordinates> witness_h;
  std::optional<std::string> reference_g;
  std::optional<std::string> reference_h;
  std::map<std::string, bool> checks;
  std::map<std::string, Tally> counts;
  std::map<std::string, std::vector<Coordinates>> sets;
  std::map<std::string, long long> metrics;
  std::vector<std::string> failures;
  std::optional<double> timing_ms;

  bool all_checks_pass() const;
  bool any_timeout() const;
  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

nlohmann::json to_json(const ResultRecord& r);
ResultRecord record_from_json(const nlohmann::json& j);

std::string to_jsonl(const ResultRecord& r);
std::string csv_header();
/// Flat subset: instance, g, h, ms.
std::string to_csv(const ResultRecord& r);

/// Vertex coordinates in `inst` (pairs for products).
std::vector<Coordinates> coordinates(const Instance& inst, const VertexSet& s);

}  // namespace geoprod
