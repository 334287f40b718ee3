#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "poset_assoc/element_set.hpp"
#include "poset_assoc/poset.hpp"

namespace poset_assoc {

struct Tube {
  ElementSet members = 0;

  std::size_t size() const noexcept { return cardinality(members); }

  friend bool operator==(Tube, Tube) = default;
};

/// (size, index-lex) order used for every listing of tubes.
struct TubeOrder {
  bool operator()(Tube a, Tube b) const noexcept { return size_lex_less(a.members, b.members); }
};

/// A set of tubes, kept sorted in TubeOrder so equal sets compare equal.
class Tubing {
public:
  Tubing() = default;
  explicit Tubing(std::vector<Tube> tubes);

  const std::vector<Tube>& tubes() const noexcept { return tubes_; }
  std::size_t size() const noexcept { return tubes_.size(); }
  bool empty() const noexcept { return tubes_.empty(); }
  bool contains(Tube t) const noexcept;

  auto begin() const noexcept { return tubes_.begin(); }
  auto end() const noexcept { return tubes_.end(); }

  friend bool operator==(const Tubing&, const Tubing&) = default;
  /// Lexicographic in TubeOrder, shorter prefix first.
  friend bool operator<(const Tubing& a, const Tubing& b) noexcept;

private:
  std::vector<Tube> tubes_;
};

/// Face counts (f_0, ..., f_d) by dimension.
struct FVector {
  std::vector<std::uint64_t> counts;

  std::size_t dimension() const noexcept { return counts.empty() ? 0 : counts.size() - 1; }
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// Size >= 2, proper, convex and connected in the Hasse diagram.
bool is_proper_tube(const Poset& poset, ElementSet members) noexcept;

/// Edges (a, b) of the tube digraph, by position in `tubes`: tubes a and b are
/// disjoint and some element of a lies strictly below some element of b.
std::vector<std::pair<std::size_t, std::size_t>> tube_digraph(const Poset& poset,
                                                              const std::vector<Tube>& tubes);

bool is_proper_tubing(const Poset& poset, const std::vector<Tube>& tubes);
inline bool is_proper_tubing(const Poset& poset, const Tubing& tubing) {
  return is_proper_tubing(poset, tubing.tubes());
}

/// All proper tubes in TubeOrder. Throws Error{DisconnectedPoset} or
/// Error{TooSmall} (fewer than 2 elements).
std::vector<Tube> enumerate_tubes(const Poset& poset);

/// Visits every proper tubing exactly once, the empty tubing first, in
/// depth-first order where each step appends a tube later in TubeOrder.
void for_each_tubing(const Poset& poset, const std::function<void(const Tubing&)>& visit);

std::vector<Tubing> enumerate_tubings(const Poset& poset);

/// Number of tubings of each size 0..|P|-2 (index = number of tubes).
std::vector<std::uint64_t> tubing_size_counts(const Poset& poset);
/// Same counts, with the search split by first tube across worker threads.
std::vector<std::uint64_t> tubing_size_counts(const Poset& poset, unsigned threads);

/// f_i = number of tubings with d - i tubes, d = |P| - 2.
FVector f_vector(const Poset& poset);

/// Coefficients of f(z - 1).
std::vector<std::int64_t> h_vector(const FVector& f);

/// Tubings with exactly |P| - 2 tubes (the vertices).
std::vector<Tubing> maximal_tubings(const Poset& poset);

/// Throws unless the poset is connected with at least two elements.
void require_tubable(const Poset& poset);

}  // namespace poset_assoc
