#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "poset_assoc/flip_map.hpp"
#include "poset_assoc/poset.hpp"
#include "poset_assoc/tubing.hpp"

namespace poset_assoc {

inline constexpr int kSchemaVersion = 1;

/// {"elements": [...], "relations": [covers...]}; parse_poset reads it back.
nlohmann::json poset_to_json(const Poset& poset);

/// Member labels in lexicographic order.
nlohmann::json subset_to_json(const Poset& poset, ElementSet set);
ElementSet subset_from_json(const Poset& poset, const nlohmann::json& labels);

/// {"tubes": [["a", "b"], ...]}
nlohmann::json tubing_to_json(const Poset& poset, const Tubing& tubing);
/// Accepts the object form or a bare list of tubes. Membership is resolved
/// against `poset`; properness is not checked here.
Tubing tubing_from_json(const Poset& poset, const nlohmann::json& doc);

/// {"L": [{"set": [...], "star": bool}, ...], "M": [[...], ...], "U": [...]}
nlohmann::json decomposition_to_json(const Poset& poset, const Decomposition& d);
/// The remainder flag is inferred from the block and star counts.
Decomposition decomposition_from_json(const Poset& poset, const nlohmann::json& doc);

}  // namespace poset_assoc
