#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "geoprod/families.hpp"
#include "geoprod/graph.hpp"
#include "geoprod/product.hpp"

namespace geoprod {

/// A parsed graph expression: a single factor or a strong product of two.
struct Instance {
  std::string canonical;
  Graph graph;
  std::optional<ProductGraph> product;
  /// Family specs of the factor(s) when they came from the family DSL.
  std::optional<FamilySpec> left_spec;
  std::optional<FamilySpec> right_spec;

  bool is_product() const { return product.has_value(); }
};

/// Grammar:
///   expr := atom | atom " x " atom
///   atom := P<n> | C<n> | K<n> | K<p>,<q> | S<n> | W<n> | T:(<u>-<v>,...) | file:<path>
/// Errors: Error(ParseError) naming the position and expected tokens, or the
/// family's Error(BadParams).
Instance parse_expression(std::string_view text, std::size_t vertex_cap = default_vertex_cap());

/// Parses a single atom; `file:` atoms yield no FamilySpec.
std::pair<Graph, std::optional<FamilySpec>> parse_atom(std::string_view text);

}  // namespace geoprod
