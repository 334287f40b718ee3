#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "poset_assoc/comparability.hpp"
#include "poset_assoc/error.hpp"
#include "poset_assoc/flip_map.hpp"
#include "poset_assoc/serialization.hpp"
#include "support/corpus.hpp"

using namespace poset_assoc;

namespace {

// a < s1 < s2
const Poset kChain =
    parse_poset(R"({"elements":["a","s1","s2"],"relations":[["a","s1"],["s1","s2"]]})");
const ElementSet kS = 0b110;

ElementSet set(const Poset& p, std::vector<std::string> names) {
  return subset_from_labels(p, names);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::MalformedInput;
}

}  // namespace

TEST_CASE("classify_tubes") {
  CHECK(classify_tubes(kChain, kS, Tubing{}) == TubeClassification{});

  const auto lower = classify_tubes(kChain, kS, Tubing({Tube{0b011}}));
  CHECK(lower.good.empty());
  CHECK(lower.lower == std::vector<Tube>{{0b011}});
  CHECK(lower.upper.empty());

  const auto good = classify_tubes(kChain, kS, Tubing({Tube{0b110}}));
  CHECK(good.good == std::vector<Tube>{{0b110}});
  CHECK(good.lower.empty());

  // a > s1 > s2: {s1, a} now reaches S from above.
  const auto upper = classify_tubes(dual(kChain), kS, Tubing({Tube{0b011}}));
  CHECK(upper.upper == std::vector<Tube>{{0b011}});

  CHECK(code_of([] { classify_tubes(kChain, 0b101, Tubing{}); }) == ErrorCode::NotAutonomous);
  CHECK(code_of([] { classify_tubes(kChain, kS, Tubing({Tube{0b101}})); }) ==
        ErrorCode::NotATubing);
}

TEST_CASE("decompose") {
  SUBCASE("single lower tube") {
    const auto d = decompose(kChain, kS, classify_tubes(kChain, kS, Tubing({Tube{0b011}})));
    CHECK(d.lower.sets == std::vector<ElementSet>{0b001});
    CHECK(d.lower.starred == std::vector<bool>{true});
    CHECK(d.middle == std::vector<ElementSet>{0b010, 0b100});
    CHECK(d.has_remainder);
    CHECK(d.upper.size() == 0);
  }
  SUBCASE("no bad tubes leaves S as the only block") {
    const auto d = decompose(kChain, kS, classify_tubes(kChain, kS, Tubing{}));
    CHECK(d.middle == std::vector<ElementSet>{kS});
    CHECK(d.has_remainder);
    CHECK(d.lower.size() == 0);
  }
  SUBCASE("outer lower tube adding only outside elements is unstarred") {
    const Poset p = parse_poset(
        R"({"elements":["b","a","s1","s2"],"relations":[["b","a"],["a","s1"],["s1","s2"]]})");
    const ElementSet s = set(p, {"s1", "s2"});
    const Tubing t({Tube{set(p, {"a", "s1"})}, Tube{set(p, {"a", "b", "s1"})}});
    const auto d = decompose(p, s, classify_tubes(p, s, t));
    CHECK(d.lower.sets == std::vector<ElementSet>{set(p, {"a"}), set(p, {"a", "b"})});
    CHECK(d.lower.starred == std::vector<bool>{true, false});
    CHECK(d.middle == std::vector<ElementSet>{set(p, {"s1"}), set(p, {"s2"})});
  }
}

TEST_CASE("reconstruct") {
  CHECK(reconstruct(kChain, kS, Decomposition{{}, {kS}, {}, true}).empty());

  // Worked example: M reversed on the flipped chain a < s2 < s1.
  const Poset flipped = flip(kChain, kS);
  const Decomposition d{{{0b001}, {true}}, {0b100, 0b010}, {}, true};
  CHECK(reconstruct(flipped, kS, d) == std::vector<Tube>{{0b101}});

  SUBCASE("malformed inputs") {
    // star count disagrees with block count
    CHECK(code_of([&] {
            reconstruct(kChain, kS, Decomposition{{{0b001}, {true}}, {kS}, {}, true});
          }) == ErrorCode::MalformedDecomposition);
    // blocks do not cover S
    CHECK(code_of([&] {
            reconstruct(kChain, kS, Decomposition{{{0b001}, {true}}, {0b010}, {}, false});
          }) == ErrorCode::MalformedDecomposition);
    // first position unstarred
    CHECK(code_of([&] {
            reconstruct(kChain, kS, Decomposition{{{0b001}, {false}}, {kS}, {}, true});
          }) == ErrorCode::MalformedDecomposition);
  }
}

TEST_CASE("flip_tubing examples") {
  CHECK(flip_tubing(kChain, kS, Tubing({Tube{0b011}})) == Tubing({Tube{0b101}}));
  CHECK(flip_tubing(kChain, kS, Tubing{}) == Tubing{});

  // Antichain S: the poset is unchanged, but the reversed middle still swaps
  // which element of S a lower tube picks up.
  const Poset p = complete_graded(Composition({1, 2, 2}));
  const ElementSet s = set(p, {"x2_1", "x2_2"});
  CHECK(flip(p, s) == p);
  CHECK(flip_tubing(p, s, Tubing({Tube{set(p, {"x1_1", "x2_1"})}})) ==
        Tubing({Tube{set(p, {"x1_1", "x2_2"})}}));
  const Tubing good({Tube{set(p, {"x1_1", "x2_1", "x2_2"})}});
  CHECK(flip_tubing(p, s, good) == good);
}

TEST_CASE("is_weakly_increasing") {
  CHECK(is_weakly_increasing(kChain, {kS}));
  CHECK(is_weakly_increasing(kChain, {0b010, 0b100}));
  CHECK_FALSE(is_weakly_increasing(kChain, {0b100, 0b010}));
}

TEST_CASE("flip map is a size-preserving bijection fixing good tubes, up to 5 elements") {
  for (const Poset& p : testing_corpus::connected_up_to(5)) {
    const auto tubings = enumerate_tubings(p);
    for (ElementSet s : autonomous_subsets(p, 2)) {
      const Poset q = flip(p, s);
      std::set<Tubing> images;
      for (const Tubing& t : tubings) {
        const auto cls = classify_tubes(p, s, t);
        REQUIRE(cls.good.size() + cls.lower.size() + cls.upper.size() == t.size());

        const auto d = decompose(p, s, cls);
        // M is an ordered set partition of S and weakly increasing.
        ElementSet covered = 0;
        for (ElementSet b : d.middle) {
          REQUIRE(b != 0);
          REQUIRE((covered & b) == 0);
          covered |= b;
        }
        REQUIRE(covered == s);
        REQUIRE(is_weakly_increasing(p, d.middle));
        REQUIRE(d.lower.star_count() + d.upper.star_count() + (d.has_remainder ? 1 : 0) ==
                d.middle.size());

        std::vector<Tube> bad = cls.lower;
        bad.insert(bad.end(), cls.upper.begin(), cls.upper.end());
        REQUIRE(Tubing(reconstruct(p, s, d)) == Tubing(bad));

        const Tubing image = flip_tubing(p, s, t);
        REQUIRE(image.size() == t.size());
        REQUIRE(is_proper_tubing(q, image));
        for (const Tube& g : cls.good) REQUIRE(image.contains(g));
        REQUIRE(flip_tubing(q, s, image) == t);
        images.insert(image);
      }
      REQUIRE(images.size() == tubings.size());
      REQUIRE(enumerate_tubings(q).size() == tubings.size());
    }
  }
}

TEST_CASE("f-vectors agree across flips up to 6 elements") {
  for (const Poset& p : testing_corpus::connected_up_to(6)) {
    const FVector f = f_vector(p);
    for (ElementSet s : autonomous_subsets(p, 2)) REQUIRE(f_vector(flip(p, s)) == f);
  }
}

TEST_CASE("decomposition JSON round trip") {
  const Poset p = parse_poset(
      R"({"elements":["b","a","s1","s2"],"relations":[["b","a"],["a","s1"],["s1","s2"]]})");
  const ElementSet s = set(p, {"s1", "s2"});
  const Tubing t({Tube{set(p, {"a", "s1"})}, Tube{set(p, {"a", "b", "s1"})}});
  const auto d = decompose(p, s, classify_tubes(p, s, t));
  const auto doc = decomposition_to_json(p, d);
  CHECK(doc["L"][0]["set"] == nlohmann::json::parse(R"(["a"])"));
  CHECK(doc["L"][1]["star"] == false);
  CHECK(doc["M"] == nlohmann::json::parse(R"([["s1"], ["s2"]])"));
  CHECK(decomposition_from_json(p, doc) == d);

  const auto empty = decompose(p, s, classify_tubes(p, s, Tubing{}));
  CHECK(decomposition_from_json(p, decomposition_to_json(p, empty)) == empty);
}
