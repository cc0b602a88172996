#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace c2lab {

/// Subset of edge labels 1..64, stored as a bitmask (label i is bit i-1).
class EdgeSet {
 public:
  static constexpr int kMaxLabel = 64;

  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(std::uint64_t bits) : bits_(bits) {}
  EdgeSet(std::initializer_list<int> labels);

  static EdgeSet from_vector(const std::vector<int>& labels);
  /// {1, ..., n}
  static EdgeSet range(int n);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int label) const {
    return label >= 1 && label <= kMaxLabel && ((bits_ >> (label - 1)) & 1u);
  }
  constexpr bool subset_of(EdgeSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(EdgeSet other) const { return (bits_ & other.bits_) == 0; }
  /// Smallest label, 0 when empty.
  constexpr int min() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }
  constexpr int max() const { return bits_ ? 64 - std::countl_zero(bits_) : 0; }

  EdgeSet& insert(int label);
  EdgeSet& erase(int label);

  std::vector<int> to_vector() const;
  std::string to_string() const;  // "{1,2,5}"

  constexpr EdgeSet operator|(EdgeSet o) const { return EdgeSet(bits_ | o.bits_); }
  constexpr EdgeSet operator&(EdgeSet o) const { return EdgeSet(bits_ & o.bits_); }
  constexpr EdgeSet operator-(EdgeSet o) const { return EdgeSet(bits_ & ~o.bits_); }
  constexpr EdgeSet operator^(EdgeSet o) const { return EdgeSet(bits_ ^ o.bits_); }
  EdgeSet& operator|=(EdgeSet o) { bits_ |= o.bits_; return *this; }
  EdgeSet& operator&=(EdgeSet o) { bits_ &= o.bits_; return *this; }
  EdgeSet& operator-=(EdgeSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr auto operator<=>(const EdgeSet&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

/// Calls f(subset) for every subset of `s` with exactly k elements, in
/// increasing bitmask order.
template <typename F>
void for_each_subset_of_size(EdgeSet s, int k, F&& f) {
  const std::vector<int> items = s.to_vector();
  const int n = static_cast<int>(items.size());
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(EdgeSet{});
    return;
  }
  // Gosper's hack over positions (n <= 63 here); mapping positions to labels
  // is monotone, so increasing position masks give increasing label masks.
  const std::uint64_t limit = 1ull << n;
  std::uint64_t comb = (1ull << k) - 1;
  while (comb < limit) {
    std::uint64_t bits = 0;
    for (std::uint64_t c = comb; c; c &= c - 1) bits |= 1ull << (items[std::countr_zero(c)] - 1);
    f(EdgeSet(bits));
    const std::uint64_t low = comb & (~comb + 1);
    const std::uint64_t ripple = comb + low;
    comb = (((ripple ^ comb) >> 2) / low) | ripple;
  }
}

/// Calls f(subset) for every subset of `s`, including the empty set.
template <typename F>
void for_each_subset(EdgeSet s, F&& f) {
  const std::uint64_t m = s.bits();
  std::uint64_t sub = 0;
  while (true) {
    f(EdgeSet(sub));
    if (sub == m) break;
    sub = (sub - m) & m;
  }
}

}  // namespace c2lab
