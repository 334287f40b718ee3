#include "poset_assoc/serialization.hpp"

#include <algorithm>

#include "poset_assoc/error.hpp"

namespace poset_assoc {

using nlohmann::json;

json poset_to_json(const Poset& poset) {
  json relations = json::array();
  for (const auto& [i, j] : poset.covers()) {
    relations.push_back({poset.label(i), poset.label(j)});
  }
  return {{"elements", poset.labels()}, {"relations", std::move(relations)}};
}

json subset_to_json(const Poset& poset, ElementSet set) {
  std::vector<std::string> names;
  for_each_member(set, [&](std::size_t i) { names.push_back(poset.label(i)); });
  std::sort(names.begin(), names.end());
  return names;
}

ElementSet subset_from_json(const Poset& poset, const json& labels) {
  if (!labels.is_array()) throw Error(ErrorCode::MalformedInput, "expected a list of labels");
  std::vector<std::string> names;
  for (const auto& l : labels) {
    if (!l.is_string()) throw Error(ErrorCode::MalformedInput, "labels must be strings");
    names.push_back(l.get<std::string>());
  }
  return subset_from_labels(poset, names);
}

json tubing_to_json(const Poset& poset, const Tubing& tubing) {
  json tubes = json::array();
  for (const Tube& t : tubing) tubes.push_back(subset_to_json(poset, t.members));
  return {{"tubes", std::move(tubes)}};
}

Tubing tubing_from_json(const Poset& poset, const json& doc) {
  const json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("tubes")) throw Error(ErrorCode::MalformedInput, "tubing needs a 'tubes' key");
    list = &doc["tubes"];
  }
  if (!list->is_array()) throw Error(ErrorCode::MalformedInput, "'tubes' must be an array");
  std::vector<Tube> tubes;
  for (const auto& t : *list) tubes.push_back({subset_from_json(poset, t)});
  return Tubing(std::move(tubes));
}

namespace {

json sequence_to_json(const Poset& poset, const DecoratedSequence& seq) {
  json out = json::array();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    out.push_back({{"set", subset_to_json(poset, seq.sets[i])}, {"star", bool(seq.starred[i])}});
  }
  return out;
}

DecoratedSequence sequence_from_json(const Poset& poset, const json& doc) {
  if (!doc.is_array()) throw Error(ErrorCode::MalformedInput, "decorated sequence must be an array");
  DecoratedSequence seq;
  for (const auto& entry : doc) {
    if (!entry.is_object() || !entry.contains("set") || !entry.contains("star") ||
        !entry["star"].is_boolean()) {
      throw Error(ErrorCode::MalformedInput, "sequence entries need 'set' and 'star'");
    }
    seq.sets.push_back(subset_from_json(poset, entry["set"]));
    seq.starred.push_back(entry["star"].get<bool>());
  }
  return seq;
}

}  // namespace

json decomposition_to_json(const Poset& poset, const Decomposition& d) {
  json middle = json::array();
  for (ElementSet b : d.middle) middle.push_back(subset_to_json(poset, b));
  return {{"L", sequence_to_json(poset, d.lower)},
          {"M", std::move(middle)},
          {"U", sequence_to_json(poset, d.upper)}};
}

Decomposition decomposition_from_json(const Poset& poset, const json& doc) {
  if (!doc.is_object() || !doc.contains("L") || !doc.contains("M") || !doc.contains("U") ||
      !doc["M"].is_array()) {
    throw Error(ErrorCode::MalformedInput, "decomposition needs 'L', 'M' and 'U'");
  }
  Decomposition d;
  d.lower = sequence_from_json(poset, doc["L"]);
  d.upper = sequence_from_json(poset, doc["U"]);
  for (const auto& block : doc["M"]) d.middle.push_back(subset_from_json(poset, block));
  const std::size_t stars = d.lower.star_count() + d.upper.star_count();
  if (d.middle.size() == stars + 1) {
    d.has_remainder = true;
  } else if (d.middle.size() != stars) {
    throw Error(ErrorCode::MalformedDecomposition, "block count does not match star count");
  }
  return d;
}

}  // namespace poset_assoc
