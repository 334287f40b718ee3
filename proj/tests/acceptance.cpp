// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check is exact; wall-clock limits are enforced too.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "poset_assoc/comparability.hpp"
#include "poset_assoc/error.hpp"
#include "poset_assoc/face_lattice.hpp"
#include "poset_assoc/flip_map.hpp"
#include "poset_assoc/tubing.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace poset_assoc;

namespace {

Poset graded(std::vector<int> parts) { return complete_graded(Composition(std::move(parts))); }

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_s) c.require(false, "took " + std::to_string(secs) + " s");
  if (!c.ok) ++failures;
  std::printf("[%s] criterion %d: %s (%.3f s)%s%s\n", c.ok ? "PASS" : "FAIL", id, title, secs,
              c.ok ? "" : " : ", c.detail.c_str());
  std::fflush(stdout);
}

bool vertex_degrees_ok(const Poset& p) {
  const auto verts = maximal_tubings(p);
  const std::size_t d = p.size() - 2;
  std::vector<std::set<ElementSet>> sets;
  for (const auto& v : verts) {
    std::set<ElementSet> s;
    for (const Tube& t : v) s.insert(t.members);
    sets.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::size_t neighbours = 0;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j) continue;
      std::size_t shared = 0;
      for (ElementSet t : sets[i]) shared += sets[j].count(t);
      if (shared + 1 == d) ++neighbours;
    }
    if (neighbours != d) return false;
  }
  return true;
}

}  // namespace

int main() {
  const auto corpus5 = testing_corpus::connected_up_to(5);
  const auto corpus6 = testing_corpus::connected_up_to(6);

  criterion(1, "pentagon", 1.0, [](Check& c) {
    const Poset p = chain(4);
    const FVector f = f_vector(p);
    c.require(f.counts == std::vector<std::uint64_t>{5, 5, 1}, "f-vector of the 4-chain");
    c.require(std::vector<std::uint64_t>(f.counts.rbegin(), f.counts.rend()) ==
                  oracle::tubing_counts(p),
              "brute-force tubing counts");
    c.require(maximal_tubings(p).size() == 5, "Catalan vertex count");
  });

  criterion(2, "octagon pair", 5.0, [](Check& c) {
    c.require(f_vector(graded({2, 2})).counts == std::vector<std::uint64_t>{8, 8, 1},
              "f-vector of P_(2,2)");
    c.require(two_face_census(graded({1, 2, 2})).contains(8), "octagon in P_(1,2,2)");
    for (std::size_t k : two_face_census(permutohedron_lattice(4)).sizes) {
      c.require(k == 4 || k == 6, "permutohedron 2-face of size " + std::to_string(k));
    }
  });

  criterion(3, "P_(2,1,2) is the 3-dimensional permutohedron", 10.0, [](Check& c) {
    const Poset p = graded({2, 1, 2});
    const FVector f = f_vector(p);
    c.require(f.counts == std::vector<std::uint64_t>{24, 36, 14, 1}, "f-vector");
    for (std::size_t i = 0; i < f.counts.size(); ++i) {
      c.require(f.counts[i] == oracle::ordered_partitions(4, 4 - i), "ordered partition oracle");
    }
    c.require(lattices_equivalent(face_lattice(p), permutohedron_lattice(4)), "lattice equivalence");
  });

  criterion(4, "P_(1,2,2) has the same f-vector but is not a permutohedron", 10.0, [](Check& c) {
    const Poset p = graded({1, 2, 2});
    c.require(f_vector(p) == f_vector(graded({2, 1, 2})), "f-vectors equal");
    c.require(f_vector(p) == permutohedron_f_vector(4), "permutohedron f-vector");
    c.require(!lattices_equivalent(face_lattice(p), permutohedron_lattice(4)),
              "lattices reported equivalent");
  });

  criterion(5, "f-vector invariant under every flip, all connected posets up to 6", 300.0,
            [&](Check& c) {
              std::size_t checked = 0;
              for (const Poset& p : corpus6) {
                const FVector f = f_vector(p);
                for (ElementSet s : autonomous_subsets(p, 2)) {
                  c.require(f_vector(flip(p, s)) == f, "f-vector changed by a flip");
                  ++checked;
                }
              }
              c.require(corpus6.size() == 1 + 3 + 10 + 44 + 238, "corpus size");
              c.require(checked > 0, "no subsets checked");
            });

  criterion(6, "flip map bijection suite up to 5 elements", 120.0, [&](Check& c) {
    for (const Poset& p : corpus5) {
      const auto tubings = enumerate_tubings(p);
      for (ElementSet s : autonomous_subsets(p, 2)) {
        const Poset q = flip(p, s);
        std::set<Tubing> images;
        for (const Tubing& t : tubings) {
          const auto cls = classify_tubes(p, s, t);
          const Tubing image = flip_tubing(p, s, t);
          c.require(image.size() == t.size(), "size not preserved");
          c.require(is_proper_tubing(q, image), "image is not a proper tubing");
          for (const Tube& g : cls.good) c.require(image.contains(g), "good tube moved");
          c.require(flip_tubing(q, s, image) == t, "round trip failed");
          images.insert(image);
        }
        c.require(images.size() == tubings.size(), "not injective");
        c.require(enumerate_tubings(q).size() == tubings.size(), "not surjective");
      }
    }
  });

  criterion(7, "decomposition suite up to 5 elements", 120.0, [&](Check& c) {
    for (const Poset& p : corpus5) {
      const auto tubings = enumerate_tubings(p);
      for (ElementSet s : autonomous_subsets(p, 2)) {
        for (const Tubing& t : tubings) {
          TubeClassification cls;
          try {
            cls = classify_tubes(p, s, t);
          } catch (const Error& e) {
            c.require(false, std::string("classification failed: ") + e.what());
            continue;
          }
          c.require(cls.good.size() + cls.lower.size() + cls.upper.size() == t.size(),
                    "classification is not a partition");
          const Decomposition d = decompose(p, s, cls);
          ElementSet seen = 0;
          bool disjoint = true;
          for (ElementSet b : d.middle) {
            disjoint = disjoint && b != 0 && (seen & b) == 0;
            seen |= b;
          }
          c.require(disjoint && seen == s, "middle is not an ordered set partition of S");
          c.require(is_weakly_increasing(p, d.middle), "middle is not weakly increasing");
          std::vector<Tube> bad = cls.lower;
          bad.insert(bad.end(), cls.upper.begin(), cls.upper.end());
          c.require(Tubing(reconstruct(p, s, d)) == Tubing(bad), "reconstruction differs");
        }
      }
    }
  });

  criterion(8, "polytopality invariants on the same corpora", 300.0, [&](Check& c) {
    for (const Poset& p : corpus6) {
      const FVector f = f_vector(p);
      std::int64_t euler = 0;
      for (std::size_t i = 0; i < f.counts.size(); ++i) {
        euler += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f.counts[i]);
      }
      c.require(euler == 1, "Euler relation");
      const auto h = h_vector(f);
      c.require(std::equal(h.begin(), h.end(), h.rbegin()), "h-vector not palindromic");
      for (auto x : h) c.require(x >= 0, "negative h entry");
      for (const auto& v : maximal_tubings(p)) {
        c.require(v.size() == p.size() - 2, "maximal tubing size");
      }
      c.require(vertex_degrees_ok(p), "vertex degree");
    }
  });

  criterion(9, "flip sequences between comparability-equivalent posets up to 5", 300.0,
            [&](Check& c) {
              std::size_t pairs = 0;
              for (std::size_t i = 0; i < corpus5.size(); ++i) {
                const auto gi = comparability_graph(corpus5[i]);
                for (std::size_t j = 0; j < corpus5.size(); ++j) {
                  if (corpus5[i].size() != corpus5[j].size()) continue;
                  if (!graphs_isomorphic(gi, comparability_graph(corpus5[j]))) continue;
                  ++pairs;
                  const auto r = flip_sequence(corpus5[i], corpus5[j], 8);
                  const auto* seq = std::get_if<FlipSequence>(&r);
                  c.require(seq != nullptr, "no flip sequence found");
                  if (!seq) continue;
                  const Poset end = replay(corpus5[i], *seq);
                  bool iso = true;
                  for (std::size_t a = 0; a < end.size(); ++a) {
                    for (std::size_t b = 0; b < end.size(); ++b) {
                      iso = iso && end.less(a, b) ==
                                       corpus5[j].less(seq->mapping[a], seq->mapping[b]);
                    }
                  }
                  c.require(iso, "replayed poset not isomorphic to the target");
                }
              }
              // Each poset pairs with itself and with its dual, so more pairs than
              // posets means non-trivial pairs were searched.
              c.require(pairs > corpus5.size(), "too few comparability-equivalent pairs");
            });

  return failures == 0 ? 0 : 1;
}
