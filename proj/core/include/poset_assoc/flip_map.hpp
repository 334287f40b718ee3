#pragma once

#include <cstddef>
#include <vector>

#include "poset_assoc/element_set.hpp"
#include "poset_assoc/poset.hpp"
#include "poset_assoc/tubing.hpp"

namespace poset_assoc {

/// Split of a tubing relative to an autonomous subset S.
///
/// A tube is good when it avoids S, lies inside S, or contains S. A bad tube
/// is lower when some element outside S lies below one of its elements in S,
/// and upper in the opposite case; no bad tube is both, and each of the two
/// families is a chain under inclusion.
struct TubeClassification {
  std::vector<Tube> good;
  std::vector<Tube> lower;  // strictly increasing under inclusion
  std::vector<Tube> upper;  // strictly increasing under inclusion

  friend bool operator==(const TubeClassification&, const TubeClassification&) = default;
};

/// Nested sets outside S, each position optionally starred.
struct DecoratedSequence {
  std::vector<ElementSet> sets;
  std::vector<bool> starred;

  std::size_t size() const noexcept { return sets.size(); }
  std::size_t star_count() const noexcept;

  friend bool operator==(const DecoratedSequence&, const DecoratedSequence&) = default;
};

/// Bad tubes encoded as (lower, middle, upper).
///
/// `middle` is an ordered set partition of S: the blocks added by starred
/// lower positions, then the untouched remainder of S when nonempty
/// (`has_remainder`), then the blocks added by starred upper positions in
/// reverse order.
struct Decomposition {
  DecoratedSequence lower;
  std::vector<ElementSet> middle;
  DecoratedSequence upper;
  bool has_remainder = false;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Throws Error{NotAutonomous}, Error{NotATubing}, or
/// Error{StructureViolation} if a bad tube is neither or both lower and upper,
/// or if a family fails to be a chain.
TubeClassification classify_tubes(const Poset& poset, ElementSet subset, const Tubing& tubing);

Decomposition decompose(const Poset& poset, ElementSet subset,
                        const TubeClassification& classification);

/// Rebuilds the bad tubes from a decomposition; only the star pattern and
/// block order matter. Throws Error{MalformedDecomposition} when star counts
/// and block count disagree or the sequences are inconsistent.
std::vector<Tube> reconstruct(const Poset& poset, ElementSet subset,
                              const Decomposition& decomposition);

/// Same decomposition with the middle blocks reversed; the remainder flag is
/// recomputed for the new block order.
Decomposition reversed(const Decomposition& decomposition);

/// Image of `tubing` under the flip map to flip(poset, subset). The result is
/// re-validated as a proper tubing of the flipped poset; a failure throws
/// Error{FlipImageInvalid}.
Tubing flip_tubing(const Poset& poset, ElementSet subset, const Tubing& tubing);

/// No element of a later block lies strictly below an element of an earlier
/// block.
bool is_weakly_increasing(const Poset& poset, const std::vector<ElementSet>& blocks) noexcept;

}  // namespace poset_assoc
