#include <doctest.h>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "syt/errors.hpp"
#include "syt/poset.hpp"
#include "syt/poset_io.hpp"

using namespace syt;

namespace {

// Diamond: a below b and c, both below d.
FinitePoset diamond() {
  return FinitePoset::from_edges({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

FinitePoset chain3() { return FinitePoset::from_edges({"a", "b", "c"}, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("from_edges closes generating relations") {
  FinitePoset p = diamond();
  CHECK(p.size() == 4);
  CHECK(p.elements() == std::vector<std::string>{"a", "b", "c", "d"});

  SUBCASE("reflexive and transitive") {
    for (int v = 0; v < 4; ++v) CHECK(p.leq(v, v));
    CHECK(p.leq(0, 3));  // through either middle element
    CHECK(!p.leq(3, 0));
    CHECK(!p.leq(1, 2));
    CHECK(!p.leq(2, 1));
    CHECK(oracles::poset_axioms_hold(p));
  }

  SUBCASE("index_of") {
    CHECK(p.index_of("c") == 2);
    CHECK(p.index_of("missing") == -1);
  }

  SUBCASE("duplicate and self-loop edges are harmless") {
    FinitePoset q = FinitePoset::from_edges({"a", "b", "c", "d"},
                                            {{0, 1}, {0, 1}, {2, 2}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(poset_diff(p, q).first.empty());
    CHECK(poset_diff(p, q).second.empty());
  }

  SUBCASE("redundant closure edges do not change the order") {
    FinitePoset q =
        FinitePoset::from_edges({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}});
    CHECK(q.comparabilities() == p.comparabilities());
  }

  SUBCASE("empty and singleton posets") {
    FinitePoset empty = FinitePoset::from_edges({}, {});
    CHECK(empty.size() == 0);
    CHECK(empty.comparabilities().empty());
    FinitePoset one = FinitePoset::from_edges({"x"}, {});
    CHECK(one.leq(0, 0));
    CHECK(one.covers().empty());
  }

  SUBCASE("out-of-range edges are rejected") {
    CHECK_THROWS_AS(FinitePoset::from_edges({"a", "b"}, {{0, 2}}), InvalidInput);
    CHECK_THROWS_AS(FinitePoset::from_edges({"a", "b"}, {{-1, 0}}), InvalidInput);
  }
}

TEST_CASE("cycles are rejected with a witness") {
  SUBCASE("three-cycle") {
    try {
      FinitePoset::from_edges({"x", "y", "z"}, {{0, 1}, {1, 2}, {2, 0}});
      FAIL("expected NotAPartialOrder");
    } catch (const NotAPartialOrder& e) {
      std::string msg = e.what();
      CHECK(msg.find("witness cycle: ") != std::string::npos);
      CHECK(msg.find(" -> ") != std::string::npos);
      for (const char* label : {"x", "y", "z"}) CHECK(msg.find(label) != std::string::npos);
    }
  }
  SUBCASE("two-cycle") {
    CHECK_THROWS_AS(FinitePoset::from_edges({"p", "q"}, {{0, 1}, {1, 0}}), NotAPartialOrder);
  }
  SUBCASE("cycle hanging off a valid chain") {
    CHECK_THROWS_AS(
        FinitePoset::from_edges({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {3, 1}}),
        NotAPartialOrder);
  }
}

TEST_CASE("covers are the transitive reduction") {
  SUBCASE("chain given with all its relations") {
    FinitePoset p =
        FinitePoset::from_edges({"a", "b", "c", "d"},
                                {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  }

  SUBCASE("diamond covers") {
    CHECK(diamond().covers() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  }

  SUBCASE("antichain has no covers") {
    FinitePoset p = FinitePoset::from_edges({"a", "b", "c"}, {});
    CHECK(p.covers().empty());
    CHECK(p.comparabilities().empty());
  }

  SUBCASE("closing the covers reproduces the order") {
    FinitePoset p = diamond();
    FinitePoset q = FinitePoset::from_edges(p.elements(), p.covers());
    CHECK(q.comparabilities() == p.comparabilities());
  }
}

TEST_CASE("interval and comparability queries") {
  FinitePoset p = diamond();

  SUBCASE("interval") {
    CHECK(p.interval(0, 3) == std::vector<int>{0, 1, 2, 3});
    CHECK(p.interval(0, 1) == std::vector<int>{0, 1});
    CHECK(p.interval(1, 1) == std::vector<int>{1});
    CHECK(p.interval(1, 2).empty());  // incomparable endpoints
    CHECK(p.interval(3, 0).empty());  // reversed endpoints
    CHECK_THROWS_AS(p.interval(0, 4), InvalidInput);
  }

  SUBCASE("comparabilities are the strict pairs in index order") {
    CHECK(p.comparabilities() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
    auto pairs = p.comparabilities();
    CHECK(std::is_sorted(pairs.begin(), pairs.end()));
  }

  SUBCASE("leq rejects out-of-range indices") {
    CHECK_THROWS_AS(p.leq(-1, 0), InvalidInput);
    CHECK_THROWS_AS(p.leq(0, 4), InvalidInput);
  }
}

TEST_CASE("poset_diff") {
  SUBCASE("requires identical element lists") {
    FinitePoset p = FinitePoset::from_edges({"a", "b"}, {});
    FinitePoset q = FinitePoset::from_edges({"b", "a"}, {});
    CHECK_THROWS_AS(poset_diff(p, q), InvalidInput);
  }

  SUBCASE("reports one-sided relations") {
    FinitePoset p = chain3();
    FinitePoset q = FinitePoset::from_edges({"a", "b", "c"}, {{0, 1}});
    auto [only_p, only_q] = poset_diff(p, q);
    CHECK(only_p == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
    CHECK(only_q.empty());
    auto [back_q, back_p] = poset_diff(q, p);
    CHECK(back_q.empty());
    CHECK(back_p == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
  }

  SUBCASE("equal posets differ nowhere") {
    auto [a, b] = poset_diff(diamond(), diamond());
    CHECK(a.empty());
    CHECK(b.empty());
  }
}

TEST_CASE("check_map") {
  FinitePoset p = chain3();
  FinitePoset two = FinitePoset::from_edges({"x", "y"}, {{0, 1}});
  FinitePoset anti2 = FinitePoset::from_edges({"x", "y"}, {});

  SUBCASE("identity is an automorphism of a chain") {
    MapCheck c = check_map(p, p, {0, 1, 2}, MapKind::automorphism);
    CHECK(c.ok);
    CHECK(!c.witness.has_value());
  }

  SUBCASE("reversal is an anti-automorphism but not an automorphism") {
    MapCheck anti = check_map(p, p, {2, 1, 0}, MapKind::anti_automorphism);
    CHECK(anti.ok);
    MapCheck iso = check_map(p, p, {2, 1, 0}, MapKind::automorphism);
    CHECK(!iso.ok);
    CHECK(iso.witness.has_value());
    CHECK(iso.reason == "order relation not respected");
  }

  SUBCASE("diamond reversal swaps top and bottom") {
    FinitePoset d = diamond();
    CHECK(check_map(d, d, {3, 2, 1, 0}, MapKind::anti_automorphism).ok);
    CHECK(check_map(d, d, {0, 2, 1, 3}, MapKind::automorphism).ok);
    CHECK(!check_map(d, d, {3, 2, 1, 0}, MapKind::automorphism).ok);
  }

  SUBCASE("preserving maps may collapse elements") {
    FinitePoset point = FinitePoset::from_edges({"o"}, {});
    CHECK(check_map(p, point, {0, 0, 0}, MapKind::preserving).ok);
  }

  SUBCASE("a preserving violation names the offending pair") {
    MapCheck c = check_map(two, anti2, {0, 1}, MapKind::preserving);
    CHECK(!c.ok);
    CHECK(c.witness == std::pair<int, int>{0, 1});
  }

  SUBCASE("bijective kinds reject collisions and size mismatches") {
    MapCheck collide = check_map(anti2, anti2, {0, 0}, MapKind::automorphism);
    CHECK(!collide.ok);
    CHECK(collide.reason == "map is not injective");
    CHECK(collide.witness == std::pair<int, int>{0, 1});
    MapCheck sized = check_map(p, two, {0, 0, 1}, MapKind::automorphism);
    CHECK(!sized.ok);
    CHECK(sized.reason == "posets differ in size, no bijection exists");
  }

  SUBCASE("malformed maps are rejected outright") {
    CHECK_THROWS_AS(check_map(p, p, {0, 1}, MapKind::preserving), InvalidInput);
    CHECK_THROWS_AS(check_map(p, p, {0, 1, 3}, MapKind::preserving), InvalidInput);
  }
}

TEST_CASE("poset JSON round trip") {
  FinitePoset p = diamond();

  SUBCASE("covers-only document reconstructs the full order") {
    std::string text = poset_to_json(p, "demo", 4, false);
    CHECK(text.find("\"covers\"") != std::string::npos);
    CHECK(text.find("\"comparabilities\"") == std::string::npos);
    LoadedPoset loaded = poset_from_json(text);
    CHECK(loaded.order_name == "demo");
    CHECK(loaded.n == 4);
    CHECK(loaded.poset.elements() == p.elements());
    CHECK(loaded.poset.comparabilities() == p.comparabilities());
  }

  SUBCASE("full document lists every strict pair") {
    std::string text = poset_to_json(p, "demo", 4, true);
    CHECK(text.find("\"comparabilities\"") != std::string::npos);
    LoadedPoset loaded = poset_from_json(text);
    CHECK(loaded.poset.comparabilities() == p.comparabilities());
  }

  SUBCASE("malformed documents are rejected") {
    CHECK_THROWS_AS(poset_from_json("not json at all"), InvalidInput);
    CHECK_THROWS_AS(poset_from_json("{}"), InvalidInput);
    CHECK_THROWS_AS(poset_from_json("{\"n\": 2, \"order\": \"demo\", \"elements\": [\"a\"]}"),
                    InvalidInput);
    CHECK_THROWS_AS(
        poset_from_json("{\"n\": \"two\", \"order\": \"demo\", \"elements\": [], \"covers\": []}"),
        InvalidInput);
  }

  SUBCASE("documents with cyclic covers fail to load") {
    std::string text =
        "{\"n\": 2, \"order\": \"demo\", \"elements\": [\"a\", \"b\"],"
        " \"covers\": [[0, 1], [1, 0]]}";
    CHECK_THROWS_AS(poset_from_json(text), NotAPartialOrder);
  }
}

TEST_CASE("poset DOT output") {
  FinitePoset p = diamond();
  std::string dot = poset_to_dot(p, "demo");
  CHECK(dot.find("digraph \"demo\"") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  for (int v = 0; v < p.size(); ++v) {
    std::string node = "n" + std::to_string(v) + " [label=\"" +
                       p.elements()[static_cast<std::size_t>(v)] + "\"]";
    CHECK(dot.find(node) != std::string::npos);
  }
  // one edge per cover, not per comparability
  std::size_t edges = 0;
  for (std::size_t at = dot.find(" -> "); at != std::string::npos; at = dot.find(" -> ", at + 1))
    ++edges;
  CHECK(edges == p.covers().size());
}
