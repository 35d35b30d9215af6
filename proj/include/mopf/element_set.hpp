#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace mopf {

/// Subset of poset elements packed into a single machine word.
///
/// Element i is present iff bit i is set, so every poset handled by the
/// library has at most `ElementSet::capacity` elements.
struct ElementSet {
  static constexpr int capacity = 64;

  std::uint64_t bits = 0;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t b) : bits(b) {}

  static constexpr ElementSet singleton(int i) { return ElementSet{std::uint64_t{1} << i}; }
  static constexpr ElementSet first(int n) {
    return ElementSet{n >= capacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr bool empty() const { return bits == 0; }
  constexpr int size() const { return std::popcount(bits); }
  constexpr bool contains(int i) const { return (bits >> i) & 1U; }
  constexpr bool subset_of(ElementSet o) const { return (bits & ~o.bits) == 0; }
  constexpr bool proper_subset_of(ElementSet o) const { return subset_of(o) && bits != o.bits; }
  constexpr bool intersects(ElementSet o) const { return (bits & o.bits) != 0; }

  constexpr void insert(int i) { bits |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits &= ~(std::uint64_t{1} << i); }

  /// Lowest element index; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet{a.bits | b.bits}; }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet{a.bits & b.bits}; }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet{a.bits & ~b.bits}; }
  constexpr ElementSet& operator|=(ElementSet o) { bits |= o.bits; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits &= o.bits; return *this; }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  friend constexpr auto operator<=>(ElementSet, ElementSet) = default;
};

/// Order ideals are plain element sets that happen to be downward closed.
using Ideal = ElementSet;

}  // namespace mopf
