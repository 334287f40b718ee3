#include "poset_assoc/flip_map.hpp"

#include <algorithm>

#include "poset_assoc/error.hpp"

namespace poset_assoc {

std::size_t DecoratedSequence::star_count() const noexcept {
  return static_cast<std::size_t>(std::count(starred.begin(), starred.end(), true));
}

namespace {

void require_autonomous(const Poset& poset, ElementSet subset) {
  if (subset == 0 || !is_subset(subset, poset.ground_set()) || !is_autonomous(poset, subset)) {
    throw Error(ErrorCode::NotAutonomous, "subset is not autonomous");
  }
}

bool strictly_nested(const std::vector<Tube>& chain) {
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (chain[i - 1].members == chain[i].members ||
        !is_subset(chain[i - 1].members, chain[i].members)) {
      return false;
    }
  }
  return true;
}

// Splits one side of the bad tubes into its decorated sequence and the S-blocks
// contributed at starred positions.
void decompose_side(const std::vector<Tube>& chain, ElementSet subset, DecoratedSequence& seq,
                    std::vector<ElementSet>& blocks) {
  ElementSet previous = 0;
  for (const Tube& tube : chain) {
    const ElementSet added_in_s = (tube.members & ~previous) & subset;
    seq.sets.push_back(tube.members & ~subset);
    seq.starred.push_back(added_in_s != 0);
    if (added_in_s != 0) blocks.push_back(added_in_s);
    previous = tube.members;
  }
}

void validate_sequence(const DecoratedSequence& seq, ElementSet subset, const char* side) {
  if (seq.sets.size() != seq.starred.size()) {
    throw Error(ErrorCode::MalformedDecomposition,
                std::string(side) + " sequence has mismatched star flags");
  }
  for (std::size_t i = 0; i < seq.sets.size(); ++i) {
    if ((seq.sets[i] & subset) != 0) {
      throw Error(ErrorCode::MalformedDecomposition,
                  std::string(side) + " sequence meets the flipped subset");
    }
    if (i > 0 && !is_subset(seq.sets[i - 1], seq.sets[i])) {
      throw Error(ErrorCode::MalformedDecomposition,
                  std::string(side) + " sequence is not nested");
    }
    if (seq.sets[i] == 0 && !seq.starred[i]) {
      throw Error(ErrorCode::MalformedDecomposition,
                  std::string(side) + " sequence has an empty unstarred set");
    }
  }
  if (!seq.sets.empty() && !seq.starred.front()) {
    throw Error(ErrorCode::MalformedDecomposition,
                std::string(side) + " sequence must start with a star");
  }
}

}  // namespace

TubeClassification classify_tubes(const Poset& poset, ElementSet subset, const Tubing& tubing) {
  require_autonomous(poset, subset);
  if (!is_proper_tubing(poset, tubing)) {
    throw Error(ErrorCode::NotATubing, "input is not a proper tubing");
  }
  TubeClassification out;
  for (const Tube& tube : tubing) {
    const ElementSet inside = tube.members & subset;
    const ElementSet outside = tube.members & ~subset;
    if (inside == 0 || outside == 0 || is_subset(subset, tube.members)) {
      out.good.push_back(tube);
      continue;
    }
    const bool is_lower = (poset.up_of(outside) & inside) != 0;
    const bool is_upper = (poset.down_of(outside) & inside) != 0;
    if (is_lower == is_upper) {
      throw Error(ErrorCode::StructureViolation,
                  is_lower ? "bad tube is both lower and upper" : "bad tube is neither lower nor upper");
    }
    (is_lower ? out.lower : out.upper).push_back(tube);
  }
  const auto by_size = [](Tube a, Tube b) { return a.size() < b.size(); };
  std::sort(out.lower.begin(), out.lower.end(), by_size);
  std::sort(out.upper.begin(), out.upper.end(), by_size);
  if (!strictly_nested(out.lower) || !strictly_nested(out.upper)) {
    throw Error(ErrorCode::StructureViolation, "lower or upper tubes are not nested");
  }
  return out;
}

Decomposition decompose(const Poset& /*poset*/, ElementSet subset,
                        const TubeClassification& classification) {
  Decomposition d;
  std::vector<ElementSet> lower_blocks;
  std::vector<ElementSet> upper_blocks;
  decompose_side(classification.lower, subset, d.lower, lower_blocks);
  decompose_side(classification.upper, subset, d.upper, upper_blocks);

  ElementSet covered = 0;
  for (const Tube& t : classification.lower) covered |= t.members;
  for (const Tube& t : classification.upper) covered |= t.members;
  const ElementSet remainder = subset & ~covered;

  d.middle = std::move(lower_blocks);
  if (remainder != 0) {
    d.middle.push_back(remainder);
    d.has_remainder = true;
  }
  d.middle.insert(d.middle.end(), upper_blocks.rbegin(), upper_blocks.rend());
  return d;
}

std::vector<Tube> reconstruct(const Poset& poset, ElementSet subset,
                              const Decomposition& decomposition) {
  const auto& blocks = decomposition.middle;
  const std::size_t lower_stars = decomposition.lower.star_count();
  const std::size_t upper_stars = decomposition.upper.star_count();
  const std::size_t expected =
      lower_stars + upper_stars + (decomposition.has_remainder ? 1 : 0);
  if (blocks.size() != expected) {
    throw Error(ErrorCode::MalformedDecomposition,
                "block count " + std::to_string(blocks.size()) + " does not match star count " +
                    std::to_string(expected));
  }
  validate_sequence(decomposition.lower, subset, "lower");
  validate_sequence(decomposition.upper, subset, "upper");
  ElementSet seen = 0;
  for (ElementSet b : blocks) {
    if (b == 0 || (b & seen) != 0 || !is_subset(b, subset)) {
      throw Error(ErrorCode::MalformedDecomposition,
                  "middle blocks must be nonempty, disjoint subsets of S");
    }
    seen |= b;
  }
  if (seen != subset || !is_subset(subset, poset.ground_set())) {
    throw Error(ErrorCode::MalformedDecomposition, "middle blocks do not partition S");
  }

  std::vector<Tube> out;
  ElementSet tube = 0;
  std::size_t star = 0;
  for (std::size_t i = 0; i < decomposition.lower.size(); ++i) {
    tube |= decomposition.lower.sets[i];
    if (decomposition.lower.starred[i]) tube |= blocks[star++];
    out.push_back({tube});
  }
  tube = 0;
  star = 0;
  for (std::size_t i = 0; i < decomposition.upper.size(); ++i) {
    tube |= decomposition.upper.sets[i];
    if (decomposition.upper.starred[i]) tube |= blocks[blocks.size() - 1 - star++];
    out.push_back({tube});
  }
  return out;
}

Decomposition reversed(const Decomposition& decomposition) {
  Decomposition out = decomposition;
  std::reverse(out.middle.begin(), out.middle.end());
  return out;
}

Tubing flip_tubing(const Poset& poset, ElementSet subset, const Tubing& tubing) {
  const TubeClassification cls = classify_tubes(poset, subset, tubing);
  const Decomposition d = decompose(poset, subset, cls);
  const Poset flipped = flip(poset, subset);
  std::vector<Tube> image = reconstruct(flipped, subset, reversed(d));
  image.insert(image.end(), cls.good.begin(), cls.good.end());
  Tubing out(std::move(image));
  if (out.size() != tubing.size() || !is_proper_tubing(flipped, out)) {
    throw Error(ErrorCode::FlipImageInvalid, "flip map produced an invalid tubing");
  }
  return out;
}

bool is_weakly_increasing(const Poset& poset, const std::vector<ElementSet>& blocks) noexcept {
  ElementSet earlier = 0;
  for (ElementSet block : blocks) {
    if ((poset.down_of(earlier) & block) != 0) return false;
    earlier |= block;
  }
  return true;
}

}  // namespace poset_assoc
