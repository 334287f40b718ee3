#include "poset_assoc/comparability.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "poset_assoc/error.hpp"

namespace poset_assoc {

ComparabilityGraph::ComparabilityGraph(std::vector<ElementSet> adjacency)
    : adjacency_(std::move(adjacency)) {
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    if (contains(adjacency_[v], v)) {
      throw Error(ErrorCode::MalformedInput, "comparability graph has a loop");
    }
    for_each_member(adjacency_[v], [&](std::size_t u) {
      if (u >= adjacency_.size() || !contains(adjacency_[u], v)) {
        throw Error(ErrorCode::MalformedInput, "adjacency is not symmetric");
      }
    });
  }
}

std::vector<std::pair<std::size_t, std::size_t>> ComparabilityGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for_each_member(adjacency_[u], [&](std::size_t v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

ComparabilityGraph comparability_graph(const Poset& poset) {
  std::vector<ElementSet> adj(poset.size());
  for (std::size_t i = 0; i < poset.size(); ++i) adj[i] = poset.up(i) | poset.down(i);
  return ComparabilityGraph(std::move(adj));
}

namespace {

std::vector<std::size_t> neighbor_degree_profile(const ComparabilityGraph& g, std::size_t v) {
  std::vector<std::size_t> degs;
  for_each_member(g.neighbors(v), [&](std::size_t u) { degs.push_back(g.degree(u)); });
  std::sort(degs.begin(), degs.end());
  return degs;
}

class GraphMatcher {
public:
  GraphMatcher(const ComparabilityGraph& g1, const ComparabilityGraph& g2) : g1_(g1), g2_(g2) {
    const std::size_t n = g1.vertex_count();
    for (std::size_t v = 0; v < n; ++v) {
      profile1_.push_back(neighbor_degree_profile(g1, v));
      profile2_.push_back(neighbor_degree_profile(g2, v));
    }
    mapping_.assign(n, 0);
  }

  std::optional<std::vector<std::size_t>> run() {
    if (extend(0, 0)) return mapping_;
    return std::nullopt;
  }

private:
  bool extend(std::size_t v, ElementSet used) {
    const std::size_t n = g1_.vertex_count();
    if (v == n) return true;
    for (std::size_t u = 0; u < n; ++u) {
      if (contains(used, u)) continue;
      if (g1_.degree(v) != g2_.degree(u) || profile1_[v] != profile2_[u]) continue;
      bool consistent = true;
      for (std::size_t w = 0; w < v && consistent; ++w) {
        consistent = g1_.has_edge(v, w) == g2_.has_edge(u, mapping_[w]);
      }
      if (!consistent) continue;
      mapping_[v] = u;
      if (extend(v + 1, used | singleton(u))) return true;
    }
    return false;
  }

  const ComparabilityGraph& g1_;
  const ComparabilityGraph& g2_;
  std::vector<std::vector<std::size_t>> profile1_;
  std::vector<std::vector<std::size_t>> profile2_;
  std::vector<std::size_t> mapping_;
};

using ElementKey = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

ElementKey element_key(const Poset& p, std::size_t i) {
  const ElementSet lower_covers = p.hasse_neighbors(i) & p.down(i);
  const ElementSet upper_covers = p.hasse_neighbors(i) & p.up(i);
  return {cardinality(p.down(i)), cardinality(p.up(i)), cardinality(lower_covers),
          cardinality(upper_covers)};
}

class Canonizer {
public:
  explicit Canonizer(const Poset& p) : p_(p) {
    const std::size_t n = p.size();
    keys_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) keys_.push_back(element_key(p, i));
    slot_keys_ = keys_;
    std::sort(slot_keys_.begin(), slot_keys_.end());
    current_code_.assign(n, 0);
    current_order_.assign(n, 0);
  }

  CanonicalForm run() {
    search(0, 0);
    return {best_code_, best_order_};
  }

private:
  // Lexicographic comparison of the first k+1 words against the best code.
  int compare_prefix(std::size_t k) const {
    for (std::size_t i = 0; i <= k; ++i) {
      if (current_code_[i] != best_code_[i]) return current_code_[i] < best_code_[i] ? -1 : 1;
    }
    return 0;
  }

  void search(std::size_t k, ElementSet used) {
    const std::size_t n = p_.size();
    if (k == n) {
      if (best_code_.empty() || (n > 0 && compare_prefix(n - 1) < 0)) {
        best_code_ = current_code_;
        best_order_ = current_order_;
      }
      return;
    }
    for (std::size_t e = 0; e < n; ++e) {
      if (contains(used, e) || keys_[e] != slot_keys_[k]) continue;
      std::uint32_t word = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (p_.less(e, current_order_[i])) word |= std::uint32_t{1} << i;
        if (p_.less(current_order_[i], e)) word |= std::uint32_t{1} << (16 + i);
      }
      current_code_[k] = word;
      current_order_[k] = e;
      if (!best_code_.empty() && compare_prefix(k) > 0) continue;
      search(k + 1, used | singleton(e));
    }
  }

  const Poset& p_;
  std::vector<ElementKey> keys_;
  std::vector<ElementKey> slot_keys_;
  std::vector<std::uint32_t> current_code_;
  std::vector<std::size_t> current_order_;
  std::vector<std::uint32_t> best_code_;
  std::vector<std::size_t> best_order_;
};

}  // namespace

std::optional<std::vector<std::size_t>> graphs_isomorphic(const ComparabilityGraph& g1,
                                                          const ComparabilityGraph& g2) {
  if (g1.vertex_count() != g2.vertex_count()) return std::nullopt;
  if (g1.edges().size() != g2.edges().size()) return std::nullopt;
  return GraphMatcher(g1, g2).run();
}

CanonicalForm canonical_form(const Poset& poset) {
  if (poset.size() > 16) {
    throw Error(ErrorCode::TooLarge, "canonical form supports at most 16 elements");
  }
  return Canonizer(poset).run();
}

std::optional<std::vector<std::size_t>> posets_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return std::nullopt;
  const auto cp = canonical_form(p);
  const auto cq = canonical_form(q);
  if (cp.code != cq.code) return std::nullopt;
  std::vector<std::size_t> mapping(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) mapping[cp.order[k]] = cq.order[k];
  return mapping;
}

std::vector<ElementSet> autonomous_subsets(const Poset& poset, std::size_t min_size) {
  const std::size_t n = poset.size();
  if (n > 24) throw Error(ErrorCode::TooLarge, "autonomous subset enumeration is exhaustive");
  std::vector<ElementSet> out;
  const ElementSet limit = full_set(n);
  for (ElementSet s = 1; s != 0 && s <= limit; ++s) {
    if (cardinality(s) >= std::max<std::size_t>(min_size, 1) && is_autonomous(poset, s)) {
      out.push_back(s);
    }
    if (s == limit) break;
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

FlipSearchResult flip_sequence(const Poset& source, const Poset& target, std::size_t max_depth) {
  if (source.size() != target.size() ||
      !graphs_isomorphic(comparability_graph(source), comparability_graph(target))) {
    return FlipSearchFailure::GraphsDiffer;
  }
  const auto target_code = canonical_form(target).code;

  struct Node {
    Poset poset;
    std::size_t parent;
    ElementSet step;
  };
  std::vector<Node> nodes;
  nodes.push_back({source, 0, 0});

  auto finish = [&](std::size_t idx) {
    FlipSequence seq;
    for (std::size_t i = idx; i != 0; i = nodes[i].parent) seq.steps.push_back(nodes[i].step);
    std::reverse(seq.steps.begin(), seq.steps.end());
    seq.mapping = *posets_isomorphic(nodes[idx].poset, target);
    return seq;
  };

  const auto source_code = canonical_form(source).code;
  if (source_code == target_code) return finish(0);

  std::set<std::vector<std::uint32_t>> visited{source_code};
  std::vector<std::size_t> frontier{0};
  for (std::size_t depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (ElementSet s : autonomous_subsets(nodes[idx].poset, 2)) {
        Poset flipped = flip(nodes[idx].poset, s);
        auto code = canonical_form(flipped).code;
        if (!visited.insert(code).second) continue;
        nodes.push_back({std::move(flipped), idx, s});
        if (code == target_code) return finish(nodes.size() - 1);
        next.push_back(nodes.size() - 1);
      }
    }
    frontier = std::move(next);
  }
  return FlipSearchFailure::DepthExhausted;
}

Poset replay(const Poset& source, const FlipSequence& sequence) {
  Poset current = source;
  for (ElementSet s : sequence.steps) current = flip(current, s);
  return current;
}

std::vector<Poset> connected_posets(std::size_t n) {
  if (n > 7) throw Error(ErrorCode::TooLarge, "poset generation supports at most 7 elements");
  if (n == 0) return {};
  // Every poset has a natural labelling (i < j implies i precedes j), so it
  // suffices to scan transitively closed upper-triangular relations.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::map<std::vector<std::uint32_t>, Poset> classes;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::vector<ElementSet> up(n, 0);
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if ((bits >> b) & 1U) up[pairs[b].first] |= singleton(pairs[b].second);
    }
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i) {
      for_each_member(up[i], [&](std::size_t j) {
        if (!is_subset(up[j], up[i])) closed = false;
      });
    }
    if (!closed) continue;
    std::vector<Relation> rel;
    for (std::size_t i = 0; i < n; ++i) {
      for_each_member(up[i], [&](std::size_t j) { rel.emplace_back(i, j); });
    }
    Poset p = Poset::unlabeled(n, rel);
    if (!p.is_connected()) continue;
    auto form = canonical_form(p);
    if (classes.count(form.code) != 0) continue;
    std::vector<std::size_t> position(n);
    for (std::size_t k = 0; k < n; ++k) position[form.order[k]] = k;
    std::vector<Relation> relabelled;
    for (const auto& [i, j] : rel) relabelled.emplace_back(position[i], position[j]);
    classes.emplace(std::move(form.code), Poset::unlabeled(n, relabelled));
  }
  std::vector<Poset> out;
  out.reserve(classes.size());
  for (auto& [code, p] : classes) out.push_back(std::move(p));
  return out;
}

}  // namespace poset_assoc
