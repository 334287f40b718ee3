#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "poset_assoc/element_set.hpp"
#include "poset_assoc/poset.hpp"
#include "poset_assoc/tubing.hpp"

namespace poset_assoc {

/// Ordered set partition of {0, ..., n-1}, one bit-set per block.
using OrderedSetPartition = std::vector<ElementSet>;

struct Face {
  std::size_t dimension = 0;
  std::variant<Tubing, OrderedSetPartition> id;
};

/// Graded face poset of a polytope. `covers` holds pairs (upper, lower) of
/// face indices whose dimensions differ by one.
struct FaceLattice {
  std::vector<Face> faces;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::size_t dimension = 0;

  /// Number of faces of each dimension 0..dimension.
  FVector rank_counts() const;
  /// For every face, the sorted indices of the 0-dimensional faces below or
  /// equal to it.
  std::vector<std::vector<std::size_t>> vertices_below() const;
};

/// Multiset of vertex counts of the 2-dimensional faces, sorted ascending.
struct PolygonCensus {
  std::vector<std::size_t> sizes;

  bool contains(std::size_t k) const noexcept;
  std::map<std::size_t, std::size_t> histogram() const;
};

/// One face per proper tubing; T covers T' when T' adds exactly one tube.
FaceLattice face_lattice(const Poset& poset);

/// Faces are ordered set partitions of n elements; a partition with k blocks
/// has dimension n - k and is covered by merging two adjacent blocks.
FaceLattice permutohedron_lattice(std::size_t n);

/// f_i = (n - i)! * S(n, n - i), via Stirling numbers of the second kind.
FVector permutohedron_f_vector(std::size_t n);

/// Rank-preserving isomorphism test through vertex-facet incidences, with the
/// induced map checked on every face.
bool lattices_equivalent(const FaceLattice& a, const FaceLattice& b);

PolygonCensus two_face_census(const FaceLattice& lattice);
/// Requires a connected poset with at least 4 elements.
PolygonCensus two_face_census(const Poset& poset);

/// Contraction of `tube` by the maximal members of `tubing` strictly inside
/// it. `classes[k]` lists the original elements merged into element k.
struct Quotient {
  Poset poset;
  std::vector<ElementSet> classes;
};

/// `tube` may be the whole ground set. Throws Error{QuotientNotPoset} if the
/// contracted relation is cyclic.
Quotient quotient(const Poset& poset, const Tubing& tubing, ElementSet tube);

/// Quotients for every tube of the tubing and for the whole poset (last),
/// keeping those with at least two elements. Contracted elements are labelled
/// by their sorted member labels joined with "+".
std::vector<Poset> face_product_decomposition(const Poset& poset, const Tubing& tubing);

}  // namespace poset_assoc
