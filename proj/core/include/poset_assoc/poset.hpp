#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "poset_assoc/element_set.hpp"

namespace poset_assoc {

using Relation = std::pair<std::size_t, std::size_t>;

// Finite strict partial order on elements 0..n-1 with display labels.
//
// The full order relation is stored densely: one bit-row per element for its
// strict up-set and one for its strict down-set. The covering relation and the
// Hasse adjacency are derived once at construction. Values are immutable.
class Poset {
public:
  Poset() = default;

  /// Builds the transitive closure of `relations` (pairs i < j by index).
  /// Throws Error{DuplicateElement} for repeated labels, Error{UnknownElement}
  /// for out-of-range indices, Error{CyclicRelation} if the closure is not
  /// irreflexive and Error{TooLarge} beyond kMaxElements elements.
  Poset(std::vector<std::string> labels, const std::vector<Relation>& relations);

  /// Unlabeled variant; elements are named "p0", "p1", ...
  static Poset unlabeled(std::size_t n, const std::vector<Relation>& relations);

  std::size_t size() const noexcept { return labels_.size(); }
  ElementSet ground_set() const noexcept { return full_set(size()); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool less(std::size_t i, std::size_t j) const noexcept { return contains(up_[i], j); }
  bool less_equal(std::size_t i, std::size_t j) const noexcept { return i == j || less(i, j); }
  bool comparable(std::size_t i, std::size_t j) const noexcept {
    return less(i, j) || less(j, i);
  }

  /// Strict up-set {j : i < j}.
  ElementSet up(std::size_t i) const noexcept { return up_[i]; }
  /// Strict down-set {j : j < i}.
  ElementSet down(std::size_t i) const noexcept { return down_[i]; }
  /// Union of strict up-sets of the members.
  ElementSet up_of(ElementSet set) const noexcept;
  ElementSet down_of(ElementSet set) const noexcept;

  /// Covering pairs (i, j), sorted lexicographically.
  const std::vector<Relation>& covers() const noexcept { return covers_; }
  /// Neighbours of i in the undirected Hasse diagram.
  ElementSet hasse_neighbors(std::size_t i) const noexcept { return hasse_[i]; }

  /// Whether the Hasse diagram restricted to `set` is connected (the empty set
  /// is not).
  bool is_hasse_connected(ElementSet set) const noexcept;
  bool is_connected() const noexcept { return size() > 0 && is_hasse_connected(ground_set()); }

  /// (x <= y <= z with x, z in set) implies y in set.
  bool is_convex(ElementSet set) const noexcept;

  /// Induced subposet on `set`, keeping labels and relative index order.
  Poset restrict(ElementSet set) const;

  /// Same relation on the same labels in the same order.
  friend bool operator==(const Poset& a, const Poset& b) noexcept {
    return a.labels_ == b.labels_ && a.up_ == b.up_;
  }

  /// Same relation on indices, ignoring labels.
  bool same_order(const Poset& other) const noexcept { return up_ == other.up_; }

private:
  std::vector<std::string> labels_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> hasse_;
  std::vector<Relation> covers_;
};

/// Sizes (a_1, ..., a_k) of consecutive antichain ranks.
class Composition {
public:
  /// Throws Error{EmptyComposition} for an empty list and
  /// Error{MalformedInput} for a non-positive part.
  explicit Composition(std::vector<int> parts);

  /// Parses "1,2,2".
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int total() const noexcept;

private:
  std::vector<int> parts_;
};

/// Parses the JSON poset format
///   {"elements": ["a", ...], "relations": [["a", "b"], ...]}
/// where each pair means a < b. Relations need not be covers.
Poset parse_poset(std::string_view text);

/// Ordinal sum of antichains; element j of rank i is labelled "x{i}_{j}"
/// (both 1-based).
Poset complete_graded(const Composition& composition);

Poset chain(std::size_t n);
Poset antichain(std::size_t n);

/// Same elements with every relation reversed.
Poset dual(const Poset& poset);

/// Replaces element `a` of `outer` with the poset `inner`. Output order is
/// outer minus a (in order) followed by inner (in order).
/// Throws Error{ElementNotFound} or Error{LabelClash}.
Poset substitute(const Poset& outer, std::size_t a, const Poset& inner);

/// Every outside element sees all of `set` the same way.
bool is_autonomous(const Poset& poset, ElementSet set) noexcept;

/// Reverses the order inside an autonomous subset; indices are preserved.
/// Throws Error{NotAutonomous}.
Poset flip(const Poset& poset, ElementSet set);

/// Resolves a list of labels to a subset. Throws Error{UnknownElement}.
ElementSet subset_from_labels(const Poset& poset, const std::vector<std::string>& labels);

}  // namespace poset_assoc
