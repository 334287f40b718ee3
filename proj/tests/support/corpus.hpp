#pragma once

#include <vector>

#include "poset_assoc/comparability.hpp"
#include "poset_assoc/poset.hpp"

namespace testing_corpus {

/// Connected posets with 2..max_n elements, one per isomorphism class.
inline std::vector<poset_assoc::Poset> connected_up_to(std::size_t max_n) {
  std::vector<poset_assoc::Poset> out;
  for (std::size_t n = 2; n <= max_n; ++n) {
    auto level = poset_assoc::connected_posets(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace testing_corpus
