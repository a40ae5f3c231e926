#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace hyperham {

/// Largest supported vertex count; a VertexSet is a single 64-bit word.
inline constexpr int kMaxVertices = 64;

/**
 * Set of vertex indices in [0, 64) stored as a bitmask.
 *
 * Ordering compares the raw mask value, which coincides with colex order
 * on equal-size sets. Every "first" or "least" witness in the library is
 * defined with respect to this order.
 */
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> members);
  static VertexSet of(std::span<const int> members);

  /// {0, ..., count-1}
  static constexpr VertexSet prefix(int count) {
    return VertexSet(count >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1));
  }
  static constexpr VertexSet singleton(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }

  /// Least member; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }
  /// Greatest member; undefined on the empty set.
  constexpr int highest() const { return 63 - std::countl_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr int intersection_size(VertexSet other) const { return std::popcount(bits_ & other.bits_); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

  constexpr auto operator<=>(const VertexSet&) const = default;

  std::vector<int> members() const;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

/// "{0,1,5}"
std::string to_string(VertexSet s);

/// Next mask with the same popcount in increasing numeric order (Gosper's hack).
/// Returns 0 once the enumeration would leave the low `width` bits.
constexpr std::uint64_t next_same_size(std::uint64_t x, int width) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  if (r == 0) return 0;
  const std::uint64_t next = (((r ^ x) >> 2) / c) | r;
  if (width < 64 && (next >> width) != 0) return 0;
  return next;
}

/// Scatter the low bits of `compact` onto the members of `universe`, in order.
constexpr std::uint64_t deposit_bits(std::uint64_t compact, std::uint64_t universe) {
  std::uint64_t out = 0;
  while (compact != 0 && universe != 0) {
    const std::uint64_t low = universe & (~universe + 1);
    if (compact & 1U) out |= low;
    compact >>= 1;
    universe &= universe - 1;
  }
  return out;
}

/// Calls fn(VertexSet) for every `size`-subset of `universe` in increasing mask order.
/// fn may return bool; returning false stops the enumeration.
template <class Fn>
void for_each_subset(VertexSet universe, int size, Fn&& fn) {
  const int width = universe.size();
  if (size < 0 || size > width) return;
  if (size == 0) {
    if constexpr (std::is_same_v<decltype(fn(VertexSet{})), bool>) {
      (void)fn(VertexSet{});
    } else {
      fn(VertexSet{});
    }
    return;
  }
  const bool is_prefix = universe == VertexSet::prefix(width);
  std::uint64_t compact = VertexSet::prefix(size).bits();
  while (compact != 0) {
    const VertexSet s(is_prefix ? compact : deposit_bits(compact, universe.bits()));
    if constexpr (std::is_same_v<decltype(fn(s)), bool>) {
      if (!fn(s)) return;
    } else {
      fn(s);
    }
    if (size == width) return;
    compact = next_same_size(compact, width);
  }
}

}  // namespace hyperham
