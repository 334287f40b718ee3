#include "poset_assoc/tubing.hpp"

#include <algorithm>
#include <future>
#include <unordered_set>

#include "poset_assoc/error.hpp"

namespace poset_assoc {

Tubing::Tubing(std::vector<Tube> tubes) : tubes_(std::move(tubes)) {
  std::sort(tubes_.begin(), tubes_.end(), TubeOrder{});
  tubes_.erase(std::unique(tubes_.begin(), tubes_.end()), tubes_.end());
}

bool Tubing::contains(Tube t) const noexcept {
  return std::binary_search(tubes_.begin(), tubes_.end(), t, TubeOrder{});
}

bool operator<(const Tubing& a, const Tubing& b) noexcept {
  return std::lexicographical_compare(a.tubes_.begin(), a.tubes_.end(), b.tubes_.begin(),
                                      b.tubes_.end(), TubeOrder{});
}

void require_tubable(const Poset& poset) {
  if (poset.size() < 2) {
    throw Error(ErrorCode::TooSmall, "poset associahedra need at least 2 elements");
  }
  if (!poset.is_connected()) {
    throw Error(ErrorCode::DisconnectedPoset, "poset is not connected");
  }
}

bool is_proper_tube(const Poset& poset, ElementSet members) noexcept {
  const ElementSet ground = poset.ground_set();
  return cardinality(members) >= 2 && is_subset(members, ground) && members != ground &&
         poset.is_convex(members) && poset.is_hasse_connected(members);
}

namespace {

bool nested_or_disjoint(ElementSet a, ElementSet b) noexcept {
  return (a & b) == 0 || is_subset(a, b) || is_subset(b, a);
}

bool has_tube_edge(const Poset& poset, ElementSet from, ElementSet to) noexcept {
  return (from & to) == 0 && (poset.up_of(from) & to) != 0;
}

// Kahn's algorithm over at most kMaxElements tubes.
bool acyclic(const std::vector<ElementSet>& successors) {
  const std::size_t k = successors.size();
  std::vector<std::size_t> indegree(k, 0);
  for (ElementSet s : successors) for_each_member(s, [&](std::size_t b) { ++indegree[b]; });
  std::vector<std::size_t> ready;
  for (std::size_t a = 0; a < k; ++a) {
    if (indegree[a] == 0) ready.push_back(a);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t a = ready.back();
    ready.pop_back();
    ++removed;
    for_each_member(successors[a], [&](std::size_t b) {
      if (--indegree[b] == 0) ready.push_back(b);
    });
  }
  return removed == k;
}

// Pairwise data for the DFS: compatibility (nested or disjoint) and tube
// digraph edges, indexed by tube position.
class TubingSearch {
public:
  explicit TubingSearch(const Poset& poset) : poset_(poset), tubes_(enumerate_tubes(poset)) {
    const std::size_t m = tubes_.size();
    compatible_.assign(m * m, 0);
    edge_.assign(m * m, 0);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        compatible_[a * m + b] = nested_or_disjoint(tubes_[a].members, tubes_[b].members);
        edge_[a * m + b] = has_tube_edge(poset_, tubes_[a].members, tubes_[b].members);
      }
    }
  }

  template <typename Visit>
  void run(Visit&& visit) {
    chosen_.clear();
    descend(0, visit);
  }

  // Tubings whose first tube in TubeOrder is tubes()[first].
  template <typename Visit>
  void run_rooted(std::size_t first, Visit&& visit) {
    chosen_.assign(1, first);
    descend(first + 1, visit);
  }

  const std::vector<Tube>& tubes() const noexcept { return tubes_; }
  const std::vector<std::size_t>& chosen() const noexcept { return chosen_; }

private:
  template <typename Visit>
  void descend(std::size_t next, Visit& visit) {
    visit(chosen_);
    for (std::size_t t = next; t < tubes_.size(); ++t) {
      if (!can_add(t)) continue;
      chosen_.push_back(t);
      descend(t + 1, visit);
      chosen_.pop_back();
    }
  }

  bool can_add(std::size_t t) const {
    const std::size_t m = tubes_.size();
    for (std::size_t c : chosen_) {
      if (!compatible_[c * m + t]) return false;
    }
    // Any new cycle passes through t: search for a path t -> ... -> t.
    std::vector<std::size_t> stack{t};
    std::vector<char> seen(chosen_.size(), 0);
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < chosen_.size(); ++i) {
        const std::size_t b = chosen_[i];
        if (!edge_[a * m + b]) continue;
        if (edge_[b * m + t]) return false;
        if (!seen[i]) {
          seen[i] = 1;
          stack.push_back(b);
        }
      }
    }
    return true;
  }

  const Poset& poset_;
  std::vector<Tube> tubes_;
  std::vector<char> compatible_;
  std::vector<char> edge_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> tube_digraph(const Poset& poset,
                                                              const std::vector<Tube>& tubes) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < tubes.size(); ++a) {
    for (std::size_t b = 0; b < tubes.size(); ++b) {
      if (a != b && has_tube_edge(poset, tubes[a].members, tubes[b].members)) {
        edges.emplace_back(a, b);
      }
    }
  }
  return edges;
}

bool is_proper_tubing(const Poset& poset, const std::vector<Tube>& tubes) {
  if (tubes.size() > kMaxElements) return false;
  for (std::size_t a = 0; a < tubes.size(); ++a) {
    if (!is_proper_tube(poset, tubes[a].members)) return false;
    for (std::size_t b = a + 1; b < tubes.size(); ++b) {
      if (tubes[a] == tubes[b]) return false;
      if (!nested_or_disjoint(tubes[a].members, tubes[b].members)) return false;
    }
  }
  std::vector<ElementSet> successors(tubes.size(), 0);
  for (const auto& [a, b] : tube_digraph(poset, tubes)) successors[a] |= singleton(b);
  return acyclic(successors);
}

std::vector<Tube> enumerate_tubes(const Poset& poset) {
  require_tubable(poset);
  std::vector<Tube> out;
  // Grow Hasse-connected sets from each minimum-index seed so every
  // connected subset is generated exactly once.
  const std::size_t n = poset.size();
  const ElementSet ground = poset.ground_set();
  std::vector<ElementSet> stack;
  std::unordered_set<ElementSet> seen;
  for (std::size_t seed = 0; seed < n; ++seed) {
    const ElementSet allowed = ground & ~full_set(seed);  // indices >= seed
    seen.insert(singleton(seed));
    stack.assign(1, singleton(seed));
    while (!stack.empty()) {
      const ElementSet set = stack.back();
      stack.pop_back();
      if (cardinality(set) >= 2 && set != ground && poset.is_convex(set)) out.push_back({set});
      ElementSet boundary = 0;
      for_each_member(set, [&](std::size_t i) { boundary |= poset.hasse_neighbors(i); });
      boundary &= allowed & ~set;
      for_each_member(boundary, [&](std::size_t j) {
        const ElementSet grown = set | singleton(j);
        if (seen.insert(grown).second) stack.push_back(grown);
      });
    }
  }
  std::sort(out.begin(), out.end(), TubeOrder{});
  return out;
}

void for_each_tubing(const Poset& poset, const std::function<void(const Tubing&)>& visit) {
  TubingSearch search(poset);
  const auto& tubes = search.tubes();
  search.run([&](const std::vector<std::size_t>& chosen) {
    std::vector<Tube> picked;
    picked.reserve(chosen.size());
    for (std::size_t c : chosen) picked.push_back(tubes[c]);
    visit(Tubing(std::move(picked)));
  });
}

std::vector<Tubing> enumerate_tubings(const Poset& poset) {
  std::vector<Tubing> out;
  for_each_tubing(poset, [&](const Tubing& t) { out.push_back(t); });
  return out;
}

std::vector<std::uint64_t> tubing_size_counts(const Poset& poset) {
  TubingSearch search(poset);
  std::vector<std::uint64_t> counts(poset.size() - 1, 0);
  search.run([&](const std::vector<std::size_t>& chosen) {
    if (chosen.size() >= counts.size()) counts.resize(chosen.size() + 1, 0);
    ++counts[chosen.size()];
  });
  return counts;
}

std::vector<std::uint64_t> tubing_size_counts(const Poset& poset, unsigned threads) {
  if (threads <= 1) return tubing_size_counts(poset);
  const std::size_t tube_count = enumerate_tubes(poset).size();
  std::vector<std::future<std::vector<std::uint64_t>>> jobs;
  for (unsigned w = 0; w < threads; ++w) {
    jobs.push_back(std::async(std::launch::async, [&poset, tube_count, threads, w] {
      TubingSearch search(poset);
      std::vector<std::uint64_t> counts(poset.size() - 1, 0);
      for (std::size_t first = w; first < tube_count; first += threads) {
        search.run_rooted(first, [&](const std::vector<std::size_t>& chosen) {
          if (chosen.size() >= counts.size()) counts.resize(chosen.size() + 1, 0);
          ++counts[chosen.size()];
        });
      }
      return counts;
    }));
  }
  std::vector<std::uint64_t> total(poset.size() - 1, 0);
  total[0] = 1;  // the empty tubing
  for (auto& job : jobs) {
    const auto counts = job.get();
    if (counts.size() > total.size()) total.resize(counts.size(), 0);
    for (std::size_t k = 0; k < counts.size(); ++k) total[k] += counts[k];
  }
  return total;
}

FVector f_vector(const Poset& poset) {
  const auto by_size = tubing_size_counts(poset);
  const std::size_t d = poset.size() - 2;
  FVector f;
  f.counts.assign(d + 1, 0);
  for (std::size_t k = 0; k < by_size.size(); ++k) {
    if (by_size[k] == 0) continue;
    if (k > d) throw Error(ErrorCode::StructureViolation, "tubing larger than |P| - 2");
    f.counts[d - k] = by_size[k];
  }
  return f;
}

std::vector<std::int64_t> h_vector(const FVector& f) {
  const std::size_t len = f.counts.size();
  // Expand sum_i f_i (z - 1)^i with Pascal rows.
  std::vector<std::int64_t> h(len, 0);
  std::vector<std::int64_t> binom{1};
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t k = 0; k <= i; ++k) {
      const std::int64_t sign = ((i - k) % 2 == 0) ? 1 : -1;
      h[k] += sign * binom[k] * static_cast<std::int64_t>(f.counts[i]);
    }
    std::vector<std::int64_t> next(binom.size() + 1, 1);
    for (std::size_t k = 1; k < binom.size(); ++k) next[k] = binom[k - 1] + binom[k];
    binom = std::move(next);
  }
  return h;
}

std::vector<Tubing> maximal_tubings(const Poset& poset) {
  require_tubable(poset);
  const std::size_t target = poset.size() - 2;
  std::vector<Tubing> out;
  for_each_tubing(poset, [&](const Tubing& t) {
    if (t.size() == target) out.push_back(t);
  });
  return out;
}

}  // namespace poset_assoc
