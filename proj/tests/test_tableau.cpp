#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "syt/errors.hpp"
#include "syt/tableau.hpp"
#include "syt/tableau_ops.hpp"
#include "syt/text_io.hpp"

using namespace syt;

TEST_CASE("standard tableau validation") {
  CHECK(StandardTableau({{1, 2}, {3}}).n() == 3);
  CHECK(StandardTableau(std::vector<std::vector<int>>{}).n() == 0);
  CHECK_THROWS_AS(StandardTableau({{1, 3}, {2, 4, 5}}), InvalidInput);  // row lengths grow
  CHECK_THROWS_AS(StandardTableau({{2, 1}}), InvalidInput);            // row not increasing
  CHECK_THROWS_AS(StandardTableau({{1, 2}, {2}}), InvalidInput);       // repeated entry
  CHECK_THROWS_AS(StandardTableau({{1, 4}, {3}}), InvalidInput);       // not 1..n
  CHECK_THROWS_AS(StandardTableau({{3, 4}, {1, 2}}), InvalidInput);    // column decreasing
  CHECK_THROWS_AS(StandardTableau({{1, 2}, {}}), InvalidInput);        // empty row
}

TEST_CASE("partial tableau allows gaps in entries") {
  PartialTableau t({{1, 2, 7}, {3, 8}, {4}, {6}});
  CHECK(t.size() == 7);
  CHECK(t.contains(7));
  CHECK(!t.contains(5));
  CHECK(t.shape() == Partition({3, 2, 1, 1}));
  CHECK_THROWS_AS(PartialTableau({{1, 2}, {3, 2}}), InvalidInput);
}

TEST_CASE("cell lookup") {
  StandardTableau t = parse_tableau("1,2,4,6/3,5/7/8");
  CHECK(t.cell_of(1) == Cell{0, 0});
  CHECK(t.cell_of(5) == Cell{1, 1});
  CHECK(t.cell_of(8) == Cell{3, 0});
  CHECK(t.entry_at(0, 3) == 6);
  CHECK(t.shape() == Partition({4, 2, 1, 1}));
}

TEST_CASE("skew tableau validation") {
  SkewTableau s(Partition({2}), {{4, 6}, {3, 5}});
  CHECK(s.outer() == Partition({4, 2}));
  CHECK(s.size() == 4);
  CHECK(!s.is_straight());
  CHECK(SkewTableau(Partition(std::vector<int>{}), {{1, 2}}).is_straight());
  // empty rows are fine when the inner shape swallows a whole row
  SkewTableau t(Partition({2, 2}), {{}, {}, {1}});
  CHECK(t.size() == 1);
  // entries must still increase down columns across the inner boundary
  CHECK_THROWS_AS(SkewTableau(Partition({1}), {{5, 3}}), InvalidInput);
  CHECK_THROWS_AS(SkewTableau(Partition({3}), {{1}, {2, 9, 4}}), InvalidInput);
}

TEST_CASE("prefix shape and tableau") {
  StandardTableau t = parse_tableau("1,2,4,6/3,5/7/8");
  CHECK(prefix_shape(t, 0) == Partition(std::vector<int>{}));
  CHECK(prefix_shape(t, 3) == Partition({2, 1}));
  CHECK(prefix_shape(t, 8) == t.shape());
  CHECK(prefix_tableau(t, 5) == parse_tableau("1,2,4/3,5"));
  CHECK(prefix_tableau(t, 8) == t);
  CHECK(prefix_tableau(t, 0) == StandardTableau(std::vector<std::vector<int>>{}));
}

TEST_CASE("enumeration counts match two oracles") {
  for (int n = 0; n <= 8; ++n) {
    auto tabs = enumerate_syt(n);
    CHECK(static_cast<long long>(tabs.size()) == oracles::involution_count(n));
  }
  for (int n = 1; n <= 8; ++n) {
    for (const auto& shape : partitions_of(n)) {
      CHECK(static_cast<long long>(enumerate_syt(shape).size()) ==
            oracles::hook_length_count(shape));
    }
  }
}

TEST_CASE("enumeration order and distinctness") {
  auto tabs = enumerate_syt(4);
  REQUIRE(tabs.size() == 10);
  CHECK(tabs.front() == parse_tableau("1,2,3,4"));
  CHECK(tabs.back() == parse_tableau("1/2/3/4"));
  for (std::size_t i = 0; i + 1 < tabs.size(); ++i)
    CHECK(tableau_canonical_less(tabs[i], tabs[i + 1]));

  SUBCASE("n = 3 listing") {
    auto t3 = enumerate_syt(3);
    REQUIRE(t3.size() == 4);
    CHECK(to_string(t3[0]) == "1,2,3");
    CHECK(to_string(t3[1]) == "1,2/3");
    CHECK(to_string(t3[2]) == "1,3/2");
    CHECK(to_string(t3[3]) == "1/2/3");
  }

  SUBCASE("no duplicates at n = 7") {
    auto t7 = enumerate_syt(7);
    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& t : t7) seen.insert(t.rows());
    CHECK(seen.size() == t7.size());
  }
}

TEST_CASE("enumeration capacity") {
  CHECK_THROWS_AS(enumerate_syt(11), CapacityError);
  CHECK(enumerate_syt(0).size() == 1);
}
