#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace minorforge {

using Vertex = int;

/// Fixed-universe bitset over vertex indices 0..universe()-1.
///
/// All binary operations require both operands to share a universe size.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}
  VertexSet(int universe, std::initializer_list<Vertex> members);
  VertexSet(int universe, std::span<const Vertex> members);

  static VertexSet full(int universe);

  int universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return (words_[static_cast<std::size_t>(v) / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void insert(Vertex v) noexcept { words_[static_cast<std::size_t>(v) / kWordBits] |= bit(v); }
  void erase(Vertex v) noexcept { words_[static_cast<std::size_t>(v) / kWordBits] &= ~bit(v); }
  void clear() noexcept;

  int size() const noexcept;
  bool empty() const noexcept;
  bool intersects(const VertexSet& other) const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;

  /// Smallest member, or -1 when empty.
  Vertex first() const noexcept { return next(0); }
  /// Smallest member >= from, or -1.
  Vertex next(Vertex from) const noexcept;

  VertexSet& operator&=(const VertexSet& o) noexcept;
  VertexSet& operator|=(const VertexSet& o) noexcept;
  VertexSet& operator-=(const VertexSet& o) noexcept;  // set difference

  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }
  VertexSet complement() const;

  /// |this ∩ other| without materialising the intersection.
  int intersection_size(const VertexSet& other) const noexcept;

  std::vector<Vertex> members() const;

  std::span<const Word> words() const noexcept { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Lexicographic order of the sorted member lists.
  static bool lex_less(const VertexSet& a, const VertexSet& b);

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    Iterator() = default;
    Iterator(const VertexSet* set, Vertex at) : set_(set), at_(at) {}
    Vertex operator*() const noexcept { return at_; }
    Iterator& operator++() noexcept {
      at_ = set_->next(at_ + 1);
      return *this;
    }
    Iterator operator++(int) noexcept {
      Iterator t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const Iterator& a, const Iterator& b) noexcept { return a.at_ == b.at_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex at_ = -1;
  };

  Iterator begin() const noexcept { return {this, first()}; }
  Iterator end() const noexcept { return {this, -1}; }

 private:
  static std::size_t word_count(int universe) noexcept {
    return (static_cast<std::size_t>(universe) + kWordBits - 1) / kWordBits;
  }
  static Word bit(Vertex v) noexcept { return Word{1} << (v % kWordBits); }
  void trim() noexcept;

  int universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace minorforge
