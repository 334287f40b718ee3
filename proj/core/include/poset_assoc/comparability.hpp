#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "poset_assoc/element_set.hpp"
#include "poset_assoc/poset.hpp"

namespace poset_assoc {

/// Simple undirected graph stored as adjacency bit-rows.
class ComparabilityGraph {
public:
  explicit ComparabilityGraph(std::vector<ElementSet> adjacency);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  ElementSet neighbors(std::size_t v) const noexcept { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const noexcept { return cardinality(adjacency_[v]); }
  bool has_edge(std::size_t u, std::size_t v) const noexcept { return contains(adjacency_[u], v); }

  /// Edges {u, v} with u < v, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const ComparabilityGraph&, const ComparabilityGraph&) = default;

private:
  std::vector<ElementSet> adjacency_;
};

ComparabilityGraph comparability_graph(const Poset& poset);

/// Vertex bijection (mapping[v] is the image of v) witnessing G1 ~ G2, or
/// nullopt. The witness is the first one in lexicographic backtracking order.
std::optional<std::vector<std::size_t>> graphs_isomorphic(const ComparabilityGraph& g1,
                                                          const ComparabilityGraph& g2);

/// Canonical form of a poset up to isomorphism together with the labelling
/// that realises it: `order[k]` is the original element placed at position k.
struct CanonicalForm {
  std::vector<std::uint32_t> code;
  std::vector<std::size_t> order;
};

/// Lexicographically least incremental relation code over all relabellings
/// that list elements by (down-set size, up-set size). Supports up to 16
/// elements.
CanonicalForm canonical_form(const Poset& poset);

/// Order-isomorphism P -> Q (mapping[i] is the image of i), or nullopt.
std::optional<std::vector<std::size_t>> posets_isomorphic(const Poset& p, const Poset& q);

/// All autonomous subsets with at least `min_size` elements, sorted by
/// (size, index-lex). Always includes the ground set.
std::vector<ElementSet> autonomous_subsets(const Poset& poset, std::size_t min_size);

struct FlipSequence {
  /// Subsets flipped in order, as index sets of the source poset.
  std::vector<ElementSet> steps;
  /// mapping[i] is the target element that element i of the final poset is
  /// sent to by an order isomorphism.
  std::vector<std::size_t> mapping;
};

enum class FlipSearchFailure { GraphsDiffer, DepthExhausted };

using FlipSearchResult = std::variant<FlipSequence, FlipSearchFailure>;

/// Breadth-first search over flips of autonomous subsets (|S| >= 2), with
/// states identified up to isomorphism.
FlipSearchResult flip_sequence(const Poset& source, const Poset& target, std::size_t max_depth);

/// Applies the steps of a flip sequence in order.
Poset replay(const Poset& source, const FlipSequence& sequence);

/// Connected posets on n elements, one per isomorphism class, in canonical
/// code order. Elements are unlabelled ("p0", ...). Supports n <= 7.
std::vector<Poset> connected_posets(std::size_t n);

}  // namespace poset_assoc
