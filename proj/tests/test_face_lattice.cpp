#include <doctest.h>

#include <algorithm>

#include "poset_assoc/comparability.hpp"
#include "poset_assoc/error.hpp"
#include "poset_assoc/face_lattice.hpp"
#include "poset_assoc/flip_map.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace poset_assoc;

namespace {

Poset graded(std::vector<int> parts) { return complete_graded(Composition(std::move(parts))); }

const Poset kChain4 =
    parse_poset(R"({"elements":["a","b","c","d"],"relations":[["a","b"],["b","c"],["c","d"]]})");

using Poly = std::vector<std::uint64_t>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

TEST_CASE("face_lattice") {
  const auto point = face_lattice(chain(2));
  CHECK(point.faces.size() == 1);
  CHECK(point.dimension == 0);
  CHECK(point.covers.empty());

  const auto pentagon = face_lattice(kChain4);
  CHECK(pentagon.faces.size() == 11);
  CHECK(pentagon.rank_counts().counts == std::vector<std::uint64_t>{5, 5, 1});
  // every edge has two vertices, the polygon has five
  const auto below = pentagon.vertices_below();
  for (std::size_t i = 0; i < pentagon.faces.size(); ++i) {
    const std::size_t dim = pentagon.faces[i].dimension;
    CHECK(below[i].size() == (dim == 0 ? 1 : dim == 1 ? 2 : 5));
  }

  for (const Poset& p : testing_corpus::connected_up_to(5)) {
    REQUIRE(face_lattice(p).rank_counts() == f_vector(p));
  }
}

TEST_CASE("permutohedron_lattice") {
  CHECK(permutohedron_lattice(2).rank_counts().counts == std::vector<std::uint64_t>{2, 1});
  CHECK(permutohedron_lattice(3).rank_counts().counts == std::vector<std::uint64_t>{6, 6, 1});
  CHECK(permutohedron_lattice(4).rank_counts().counts ==
        std::vector<std::uint64_t>{24, 36, 14, 1});
  CHECK(permutohedron_f_vector(2).counts == std::vector<std::uint64_t>{2, 1});
  CHECK(permutohedron_f_vector(3).counts == std::vector<std::uint64_t>{6, 6, 1});
  for (std::size_t n = 1; n <= 6; ++n) {
    const FVector f = permutohedron_f_vector(n);
    REQUIRE(f.counts.size() == n);
    for (std::size_t i = 0; i < n; ++i) REQUIRE(f.counts[i] == oracle::ordered_partitions(n, n - i));
    REQUIRE(permutohedron_lattice(n).rank_counts() == f);
  }
}

TEST_CASE("lattices_equivalent") {
  const auto pentagon = face_lattice(kChain4);
  const auto square = face_lattice(graded({2, 2}));
  CHECK(lattices_equivalent(pentagon, pentagon));
  CHECK_FALSE(lattices_equivalent(pentagon, square));
  CHECK(lattices_equivalent(face_lattice(chain(3)), permutohedron_lattice(2)));
  CHECK(lattices_equivalent(face_lattice(graded({1, 2})), face_lattice(graded({2, 1}))));

  SUBCASE("permutohedra from P_(m,1,n)") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(lattices_equivalent(face_lattice(graded({m, 1, n})),
                                permutohedron_lattice(static_cast<std::size_t>(m + n))));
    }
  }
  SUBCASE("same f-vector, different lattice") {
    const Poset p = graded({1, 2, 2});
    CHECK(f_vector(p) == permutohedron_f_vector(4));
    CHECK_FALSE(lattices_equivalent(face_lattice(p), permutohedron_lattice(4)));
  }
  SUBCASE("symmetric and consistent with f-vectors on the corpus") {
    const auto corpus = testing_corpus::connected_up_to(4);
    std::vector<FaceLattice> lattices;
    for (const Poset& p : corpus) lattices.push_back(face_lattice(p));
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      REQUIRE(lattices_equivalent(lattices[i], lattices[i]));
      for (std::size_t j = 0; j < corpus.size(); ++j) {
        const bool ij = lattices_equivalent(lattices[i], lattices[j]);
        REQUIRE(ij == lattices_equivalent(lattices[j], lattices[i]));
        if (ij) REQUIRE(lattices[i].rank_counts() == lattices[j].rank_counts());
      }
    }
  }
}

TEST_CASE("two_face_census") {
  CHECK(two_face_census(kChain4).sizes == std::vector<std::size_t>{5});
  CHECK(two_face_census(graded({2, 2})).sizes == std::vector<std::size_t>{8});

  const auto octagon = two_face_census(graded({1, 2, 2}));
  CHECK(octagon.contains(8));
  CHECK(octagon.sizes.size() == 14);

  const auto p212 = two_face_census(graded({2, 1, 2}));
  CHECK(p212.histogram() == std::map<std::size_t, std::size_t>{{4, 6}, {6, 8}});

  for (std::size_t n = 3; n <= 5; ++n) {
    for (std::size_t k : two_face_census(permutohedron_lattice(n)).sizes) {
      REQUIRE((k == 4 || k == 6));
    }
  }
  CHECK_THROWS_AS(two_face_census(chain(3)), Error);
}

TEST_CASE("face_product_decomposition") {
  const auto whole = face_product_decomposition(kChain4, Tubing{});
  REQUIRE(whole.size() == 1);
  CHECK(whole.front() == kChain4);

  const ElementSet ab = subset_from_labels(kChain4, {"a", "b"});
  const auto parts = face_product_decomposition(kChain4, Tubing({Tube{ab}}));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].labels() == std::vector<std::string>{"a", "b"});
  CHECK(parts[0].same_order(chain(2)));
  CHECK(parts[1].labels() == std::vector<std::string>{"a+b", "c", "d"});
  CHECK(parts[1].same_order(chain(3)));
}

TEST_CASE("faces factor as products of smaller associahedra") {
  for (const Poset& p : testing_corpus::connected_up_to(5)) {
    const auto tubings = enumerate_tubings(p);
    const std::size_t d = p.size() - 2;
    for (const Tubing& t : tubings) {
      // f-polynomial of the face: tubings refining t, by dimension.
      Poly face(d - t.size() + 1, 0);
      for (const Tubing& u : tubings) {
        if (std::all_of(t.begin(), t.end(), [&](Tube x) { return u.contains(x); })) {
          ++face[d - u.size()];
        }
      }
      Poly product{1};
      for (const Poset& factor : face_product_decomposition(p, t)) {
        product = multiply(product, f_vector(factor).counts);
      }
      REQUIRE(product == face);
    }
  }
}

TEST_CASE("the flip map commutes with quotients") {
  // Contract the good tubes inside the smallest good tube containing S. The
  // bad tubes live in that factor, and the flip map there (with S replaced by
  // its classes) agrees with the flip map on the whole poset.
  for (const Poset& p : testing_corpus::connected_up_to(5)) {
    const auto tubings = enumerate_tubings(p);
    for (ElementSet s : autonomous_subsets(p, 2)) {
      const Poset flipped = flip(p, s);
      for (const Tubing& t : tubings) {
        const auto cls = classify_tubes(p, s, t);
        ElementSet tube = p.ground_set();
        for (const Tube& g : cls.good) {
          if (is_subset(s, g.members) && cardinality(g.members) < cardinality(tube)) {
            tube = g.members;
          }
        }
        const Tubing good(cls.good);
        const Quotient q = quotient(p, good, tube);
        const auto lift = [&](ElementSet m) {
          ElementSet out = 0;
          for (std::size_t k = 0; k < q.classes.size(); ++k) {
            if (is_subset(q.classes[k], m)) out |= singleton(k);
          }
          return out;
        };
        const auto unlift = [&](ElementSet m) {
          ElementSet out = 0;
          for_each_member(m, [&](std::size_t k) { out |= q.classes[k]; });
          return out;
        };

        const ElementSet s_q = lift(s);
        REQUIRE(unlift(s_q) == s);
        REQUIRE(is_autonomous(q.poset, s_q));
        REQUIRE(quotient(flipped, good, tube).poset.same_order(flip(q.poset, s_q)));

        std::vector<Tube> bad_q;
        for (const auto* side : {&cls.lower, &cls.upper}) {
          for (const Tube& b : *side) {
            REQUIRE(unlift(lift(b.members)) == b.members);
            bad_q.push_back({lift(b.members)});
          }
        }
        const Tubing image_q = flip_tubing(q.poset, s_q, Tubing(bad_q));
        std::vector<Tube> expected;
        for (const Tube& x : image_q) expected.push_back({unlift(x.members)});
        for (const Tube& g : cls.good) expected.push_back(g);
        REQUIRE(Tubing(expected) == flip_tubing(p, s, t));
      }
    }
  }
}
