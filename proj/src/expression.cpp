#include "geoprod/expression.hpp"

#include <cctype>

#include "geoprod/error.hpp"

namespace geoprod {

namespace {

constexpr std::string_view kSeparator = " x ";

class AtomParser {
 public:
  AtomParser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  std::pair<Graph, std::optional<FamilySpec>> parse() {
    if (text_.empty()) fail("P, C, K, S, W, T: or file:");
    if (text_.starts_with("file:")) {
      const std::string path(text_.substr(5));
      if (path.empty()) {
        pos_ = 5;
        fail("a file path");
      }
      return {read_edge_list_file(path), std::nullopt};
    }
    const char head = text_[pos_++];
    FamilySpec spec;
    switch (head) {
      case 'P': spec = FamilySpec::path(number()); break;
      case 'C': spec = FamilySpec::cycle(number()); break;
      case 'S': spec = FamilySpec::star(number()); break;
      case 'W': spec = FamilySpec::wheel(number()); break;
      case 'K': {
        const std::size_t p = number();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          spec = FamilySpec::complete_bipartite(p, number());
        } else {
          spec = FamilySpec::complete(p);
        }
        break;
      }
      case 'T': spec = FamilySpec::tree(tree_edges()); break;
      default:
        --pos_;
        fail("P, C, K, S, W, T: or file:");
    }
    if (pos_ != text_.size()) fail(head == 'K' ? "',' or end of factor" : "end of factor");
    return {make_family(spec), spec};
  }

 private:
  [[noreturn]] void fail(std::string_view expected) const {
    throw Error(ErrorCode::ParseError,
                "at position " + std::to_string(offset_ + pos_) + ": expected " + std::string(expected));
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("'") + c + "'");
    ++pos_;
  }

  std::size_t number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("a decimal number");
    if (pos_ - start > 6) {
      pos_ = start;
      fail("a number below 10^6");
    }
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  std::vector<Edge> tree_edges() {
    expect(':');
    expect('(');
    std::vector<Edge> edges;
    if (pos_ < text_.size() && text_[pos_] == ')') {
      ++pos_;
      return edges;
    }
    for (;;) {
      const std::size_t u = number();
      expect('-');
      const std::size_t v = number();
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      return edges;
    }
  }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

std::pair<Graph, std::optional<FamilySpec>> parse_atom(std::string_view text) { return AtomParser(text, 0).parse(); }

Instance parse_expression(std::string_view text, std::size_t vertex_cap) {
  const std::size_t sep = text.find(kSeparator);
  const std::string_view first = text.substr(0, sep);
  auto [left, left_spec] = AtomParser(first, 0).parse();
  auto name = [](std::string_view raw, const std::optional<FamilySpec>& spec) {
    return spec ? spec->name() : std::string(raw);
  };
  if (sep == std::string_view::npos) {
    return Instance{name(first, left_spec), left, std::nullopt, left_spec, std::nullopt};
  }
  const std::size_t second_at = sep + kSeparator.size();
  const std::string_view second = text.substr(second_at);
  if (second.find(kSeparator) != std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "at position " + std::to_string(second_at + second.find(kSeparator)) +
                                           ": expected end of expression (products take exactly two factors)");
  }
  auto [right, right_spec] = AtomParser(second, second_at).parse();
  ProductGraph p = strong_product(left, right, vertex_cap);
  Graph g = p.graph();
  return Instance{name(first, left_spec) + " x " + name(second, right_spec), std::move(g), std::move(p), left_spec,
                  right_spec};
}

}  // namespace geoprod
