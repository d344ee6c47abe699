#pragma once

#include <bit>
#include <cstdint>
#include <iterator>
#include <string>

namespace domgame {

/// Maximum graph order supported by the single-word bitset representation.
inline constexpr int kMaxVertices = 64;

using VertexId = int;

/// A subset of {0, ..., 63} stored in one machine word.
class VertexSet {
 public:
  using Word = std::uint64_t;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexId*;
    using reference = VertexId;

    constexpr iterator() = default;
    constexpr explicit iterator(Word rest) : rest_(rest) {}

    constexpr VertexId operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Word rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Word bits) : bits_(bits) {}

  /// {0, ..., n-1}.
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~Word{0} : (Word{1} << n) - 1);
  }
  static constexpr VertexSet single(VertexId v) { return VertexSet(Word{1} << v); }

  constexpr Word bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(VertexId v) const { return (bits_ >> v) & 1U; }
  constexpr VertexId min() const { return std::countr_zero(bits_); }

  constexpr void insert(VertexId v) { bits_ |= Word{1} << v; }
  constexpr void erase(VertexId v) { bits_ &= ~(Word{1} << v); }

  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return a |= b; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return a &= b; }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return a -= b; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  /// "{0,3,5}"
  std::string to_string() const;

 private:
  Word bits_ = 0;
};

}  // namespace domgame
