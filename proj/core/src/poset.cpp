#include "poset_assoc/poset.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "poset_assoc/error.hpp"

namespace poset_assoc {

namespace {

void close_transitively(std::vector<ElementSet>& up) {
  const std::size_t n = up.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (contains(up[i], k)) up[i] |= up[k];
    }
  }
}

}  // namespace

Poset::Poset(std::vector<std::string> labels, const std::vector<Relation>& relations)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n > kMaxElements) {
    throw Error(ErrorCode::TooLarge,
                "poset has " + std::to_string(n) + " elements; at most " +
                    std::to_string(kMaxElements) + " supported");
  }
  {
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels_) {
      if (!seen.insert(l).second) {
        throw Error(ErrorCode::DuplicateElement, "duplicate element '" + l + "'");
      }
    }
  }
  up_.assign(n, 0);
  for (const auto& [i, j] : relations) {
    if (i >= n || j >= n) {
      throw Error(ErrorCode::UnknownElement, "relation references an index out of range");
    }
    up_[i] |= singleton(j);
  }
  close_transitively(up_);
  for (std::size_t i = 0; i < n; ++i) {
    if (contains(up_[i], i)) {
      throw Error(ErrorCode::CyclicRelation,
                  "relations contain a cycle through '" + labels_[i] + "'");
    }
  }

  down_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for_each_member(up_[i], [&](std::size_t j) { down_[j] |= singleton(i); });
  }

  hasse_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    // j covers i iff nothing strictly above i lies strictly below j.
    for_each_member(up_[i], [&](std::size_t j) {
      if ((up_[i] & down_[j]) == 0) {
        covers_.emplace_back(i, j);
        hasse_[i] |= singleton(j);
        hasse_[j] |= singleton(i);
      }
    });
  }
}

Poset Poset::unlabeled(std::size_t n, const std::vector<Relation>& relations) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return Poset(std::move(labels), relations);
}

std::optional<std::size_t> Poset::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

ElementSet Poset::up_of(ElementSet set) const noexcept {
  ElementSet out = 0;
  for_each_member(set, [&](std::size_t i) { out |= up_[i]; });
  return out;
}

ElementSet Poset::down_of(ElementSet set) const noexcept {
  ElementSet out = 0;
  for_each_member(set, [&](std::size_t i) { out |= down_[i]; });
  return out;
}

bool Poset::is_hasse_connected(ElementSet set) const noexcept {
  if (set == 0) return false;
  ElementSet reached = set & (~set + 1);
  ElementSet frontier = reached;
  while (frontier != 0) {
    ElementSet next = 0;
    for_each_member(frontier, [&](std::size_t i) { next |= hasse_[i]; });
    next &= set & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == set;
}

bool Poset::is_convex(ElementSet set) const noexcept {
  return is_subset(up_of(set) & down_of(set), set);
}

Poset Poset::restrict(ElementSet set) const {
  const auto idx = members(set);
  std::vector<std::string> labels;
  std::vector<Relation> rel;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    labels.push_back(labels_[idx[a]]);
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (less(idx[a], idx[b])) rel.emplace_back(a, b);
    }
  }
  return Poset(std::move(labels), rel);
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorCode::EmptyComposition, "composition has no parts");
  for (int p : parts_) {
    if (p < 1) throw Error(ErrorCode::MalformedInput, "composition parts must be >= 1");
  }
}

Composition Composition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) throw Error(ErrorCode::EmptyComposition, "composition has no parts");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::MalformedInput,
                  "composition part '" + std::string(item) + "' is not an integer");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

int Composition::total() const noexcept {
  int sum = 0;
  for (int p : parts_) sum += p;
  return sum;
}

Poset parse_poset(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array()) {
    throw Error(ErrorCode::MalformedInput, "poset must be an object with an 'elements' array");
  }
  std::vector<std::string> labels;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw Error(ErrorCode::MalformedInput, "element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second) {
      throw Error(ErrorCode::DuplicateElement, "duplicate element '" + labels[i] + "'");
    }
  }
  std::vector<Relation> relations;
  if (doc.contains("relations")) {
    const auto& rel = doc["relations"];
    if (!rel.is_array()) throw Error(ErrorCode::MalformedInput, "'relations' must be an array");
    for (const auto& pair : rel) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
        throw Error(ErrorCode::MalformedInput, "each relation must be a pair of labels");
      }
      const auto a = index.find(pair[0].get<std::string>());
      const auto b = index.find(pair[1].get<std::string>());
      if (a == index.end() || b == index.end()) {
        const auto& missing = a == index.end() ? pair[0] : pair[1];
        throw Error(ErrorCode::UnknownElement,
                    "relation references unknown element '" + missing.get<std::string>() + "'");
      }
      relations.emplace_back(a->second, b->second);
    }
  }
  return Poset(std::move(labels), relations);
}

Poset complete_graded(const Composition& composition) {
  std::vector<std::string> labels;
  std::vector<std::size_t> rank;
  const auto& parts = composition.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int j = 1; j <= parts[i]; ++j) {
      labels.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j));
      rank.push_back(i);
    }
  }
  std::vector<Relation> rel;
  for (std::size_t a = 0; a < rank.size(); ++a) {
    for (std::size_t b = 0; b < rank.size(); ++b) {
      if (rank[b] == rank[a] + 1) rel.emplace_back(a, b);
    }
  }
  return Poset(std::move(labels), rel);
}

Poset chain(std::size_t n) {
  std::vector<Relation> rel;
  for (std::size_t i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return Poset::unlabeled(n, rel);
}

Poset antichain(std::size_t n) { return Poset::unlabeled(n, {}); }

Poset dual(const Poset& poset) {
  std::vector<Relation> rel;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    for_each_member(poset.up(i), [&](std::size_t j) { rel.emplace_back(j, i); });
  }
  return Poset(poset.labels(), rel);
}

Poset substitute(const Poset& outer, std::size_t a, const Poset& inner) {
  if (a >= outer.size()) {
    throw Error(ErrorCode::ElementNotFound, "substitution target is not an element");
  }
  std::vector<std::size_t> outer_index;  // new index -> outer index
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (i == a) continue;
    outer_index.push_back(i);
    labels.push_back(outer.label(i));
  }
  const std::size_t offset = labels.size();
  for (const auto& l : inner.labels()) {
    if (std::find(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(offset), l) !=
        labels.begin() + static_cast<std::ptrdiff_t>(offset)) {
      throw Error(ErrorCode::LabelClash, "label '" + l + "' occurs in both posets");
    }
    labels.push_back(l);
  }
  std::vector<Relation> rel;
  for (std::size_t x = 0; x < offset; ++x) {
    for (std::size_t y = 0; y < offset; ++y) {
      if (outer.less(outer_index[x], outer_index[y])) rel.emplace_back(x, y);
    }
    for (std::size_t s = 0; s < inner.size(); ++s) {
      if (outer.less(a, outer_index[x])) rel.emplace_back(offset + s, x);
      if (outer.less(outer_index[x], a)) rel.emplace_back(x, offset + s);
    }
  }
  for (const auto& [s, t] : inner.covers()) rel.emplace_back(offset + s, offset + t);
  return Poset(std::move(labels), rel);
}

bool is_autonomous(const Poset& poset, ElementSet set) noexcept {
  const ElementSet outside = poset.ground_set() & ~set;
  bool ok = true;
  for_each_member(outside, [&](std::size_t z) {
    const ElementSet below = poset.down(z) & set;
    const ElementSet above = poset.up(z) & set;
    if ((below != 0 && below != set) || (above != 0 && above != set)) ok = false;
  });
  return ok;
}

Poset flip(const Poset& poset, ElementSet set) {
  if (!is_subset(set, poset.ground_set()) || !is_autonomous(poset, set)) {
    throw Error(ErrorCode::NotAutonomous, "subset is not autonomous");
  }
  std::vector<Relation> rel;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    for_each_member(poset.up(i), [&](std::size_t j) {
      if (contains(set, i) && contains(set, j)) {
        rel.emplace_back(j, i);
      } else {
        rel.emplace_back(i, j);
      }
    });
  }
  return Poset(poset.labels(), rel);
}

ElementSet subset_from_labels(const Poset& poset, const std::vector<std::string>& labels) {
  ElementSet set = 0;
  for (const auto& l : labels) {
    const auto i = poset.index_of(l);
    if (!i) throw Error(ErrorCode::UnknownElement, "unknown element '" + l + "'");
    set |= singleton(*i);
  }
  return set;
}

}  // namespace poset_assoc
