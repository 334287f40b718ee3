#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace poset_assoc {

/// Subset of element indices; bit i set means element i is a member.
using ElementSet = std::uint32_t;

inline constexpr std::size_t kMaxElements = 32;

constexpr ElementSet singleton(std::size_t i) noexcept { return ElementSet{1} << i; }

constexpr ElementSet full_set(std::size_t n) noexcept {
  return n >= kMaxElements ? ~ElementSet{0} : (ElementSet{1} << n) - 1;
}

constexpr bool contains(ElementSet set, std::size_t i) noexcept { return (set >> i) & 1U; }

constexpr bool is_subset(ElementSet a, ElementSet b) noexcept { return (a & ~b) == 0; }

constexpr std::size_t cardinality(ElementSet set) noexcept {
  return static_cast<std::size_t>(std::popcount(set));
}

/// Total order on subsets: by size, then lexicographically on the sorted
/// index lists.
constexpr bool size_lex_less(ElementSet a, ElementSet b) noexcept {
  const auto ca = std::popcount(a);
  const auto cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  const ElementSet diff = a ^ b;
  if (diff == 0) return false;
  // The smallest differing index decides: whoever holds it sorts first.
  return (a & (diff & (~diff + 1))) != 0;
}

/// Indices in increasing order.
inline std::vector<std::size_t> members(ElementSet set) {
  std::vector<std::size_t> out;
  out.reserve(cardinality(set));
  while (set != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(set)));
    set &= set - 1;
  }
  return out;
}

template <typename F>
constexpr void for_each_member(ElementSet set, F&& f) {
  while (set != 0) {
    f(static_cast<std::size_t>(std::countr_zero(set)));
    set &= set - 1;
  }
}

}  // namespace poset_assoc
