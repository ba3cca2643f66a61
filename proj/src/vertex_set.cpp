#include "geoprod/vertex_set.hpp"

#include <algorithm>
#include <sstream>

#include "geoprod/error.hpp"

namespace geoprod {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::FormulaViolation: return "FormulaViolation";
    case ErrorCode::OrientationError: return "OrientationError";
  }
  return "Unknown";
}

VertexSet::VertexSet(std::size_t universe_size)
    : universe_(universe_size), words_(words_for(universe_size), 0) {}

VertexSet::VertexSet(std::size_t universe_size, std::initializer_list<Vertex> members)
    : VertexSet(universe_size) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe_size, std::span<const Vertex> members)
    : VertexSet(universe_size) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe_size) {
  VertexSet s(universe_size);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  s.trim();
  return s;
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void VertexSet::check(Vertex v) const {
  if (v >= universe_) {
    throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " outside universe of size " +
                                           std::to_string(universe_));
  }
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (other.universe_ != universe_) {
    throw Error(ErrorCode::OutOfRange, "vertex sets over different universes");
  }
}

void VertexSet::trim() noexcept {
  const std::size_t tail = universe_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

bool VertexSet::contains(Vertex v) const {
  check(v);
  return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
}

void VertexSet::insert(Vertex v) {
  check(v);
  words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  check(v);
  words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

void VertexSet::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet c(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
  c.trim();
  return c;
}

bool VertexSet::lex_less(const VertexSet& other) const {
  const auto a = to_vector();
  const auto b = other.to_vector();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](Vertex v) {
    if (!first) os << ',';
    os << v;
    first = false;
  });
  os << '}';
  return os.str();
}

}  // namespace geoprod
