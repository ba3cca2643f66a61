#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace geoprod {

using Vertex = std::uint32_t;

/// Subset of {0, ..., universe_size - 1} stored as a bit vector.
///
/// Binary operations require both operands to share the same universe.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe_size);
  VertexSet(std::size_t universe_size, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe_size, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe_size);
  static std::size_t words_for(std::size_t universe_size) {
    return (universe_size + kWordBits - 1) / kWordBits;
  }

  std::size_t universe_size() const noexcept { return universe_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return count() == universe_; }

  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);
  void clear() noexcept;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  VertexSet complement() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

  /// Lexicographic order on the sorted member lists.
  bool lex_less(const VertexSet& other) const;

  std::vector<Vertex> to_vector() const;
  std::string to_string() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(static_cast<Vertex>(w * kWordBits + bit));
        bits &= bits - 1;
      }
    }
  }

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

 private:
  void check(Vertex v) const;
  void check_same_universe(const VertexSet& other) const;
  void trim() noexcept;

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace geoprod
