#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace pkit {

/// Largest supported ground set.
inline constexpr int kMaxGround = 16;

/// A subset of {0, ..., n-1} stored as a fixed-width bit set. The ground-set
/// size is not carried here; operations that need it (complement, range
/// checks) take it from the owning matroid.
class ElementSet {
 public:
  using Bits = std::uint32_t;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(Bits bits) : bits_(bits) {}

  constexpr ElementSet(std::initializer_list<int> elements) {
    for (int e : elements) bits_ |= Bits{1} << e;
  }

  static ElementSet from_vector(const std::vector<int>& elements) {
    ElementSet s;
    for (int e : elements) s.bits_ |= Bits{1} << e;
    return s;
  }

  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 32 ? ~Bits{0} : (Bits{1} << n) - 1);
  }
  static constexpr ElementSet single(int e) { return ElementSet(Bits{1} << e); }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  /// True when every member is below n.
  constexpr bool within(int n) const { return subset_of(full(n)); }

  constexpr ElementSet with(int e) const {
    return ElementSet(bits_ | (Bits{1} << e));
  }
  constexpr ElementSet without(int e) const {
    return ElementSet(bits_ & ~(Bits{1} << e));
  }
  constexpr ElementSet complement(int n) const {
    return ElementSet(~bits_ & full(n).bits_);
  }
  /// Smallest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr ElementSet operator|(ElementSet o) const {
    return ElementSet(bits_ | o.bits_);
  }
  constexpr ElementSet operator&(ElementSet o) const {
    return ElementSet(bits_ & o.bits_);
  }
  constexpr ElementSet operator-(ElementSet o) const {
    return ElementSet(bits_ & ~o.bits_);
  }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr auto operator<=>(const ElementSet&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(Bits rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Bits rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const {
    return std::vector<int>(begin(), end());
  }

  /// "{0,2,5}"
  std::string to_string() const;

 private:
  Bits bits_ = 0;
};

/// Lexicographic order on the sorted member lists (the order used when
/// writing basis families).
bool lex_less(ElementSet a, ElementSet b);

/// All k-element subsets of {0..n-1} in increasing bit order.
std::vector<ElementSet> k_subsets(int n, int k);

}  // namespace pkit

template <>
struct std::hash<pkit::ElementSet> {
  std::size_t operator()(pkit::ElementSet s) const noexcept {
    return std::hash<std::uint32_t>{}(s.bits());
  }
};
