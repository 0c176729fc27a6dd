#include <doctest.h>

#include <random>

#include "syt/errors.hpp"
#include "syt/jdt.hpp"
#include "syt/tableau_ops.hpp"
#include "syt/text_io.hpp"

using namespace syt;

TEST_CASE("rectifying a straight tableau is the identity") {
  SkewTableau straight(Partition(std::vector<int>{}), {{1, 3}, {2}});
  CHECK(jdt_rectify(straight) == PartialTableau({{1, 3}, {2}}));
}

TEST_CASE("rectification worked example") {
  SkewTableau skew(Partition({2}), {{4, 6}, {3, 5}});
  CHECK(jdt_rectify(skew) == PartialTableau({{3, 4, 6}, {5}}));
}

TEST_CASE("interval restriction") {
  StandardTableau t = parse_tableau("1,2,4,6/3,5/7/8");
  CHECK(restrict_tableau(t, 3, 6) == parse_tableau("1,2,4/3"));
  CHECK(restrict_tableau(t, 1, 8) == t);
  CHECK(restrict_tableau(t, 1, 5) == prefix_tableau(t, 5));
  CHECK(restrict_tableau(t, 7, 8) == parse_tableau("1/2"));
  CHECK(restrict_tableau(t, 5, 6).n() == 2);

  SUBCASE("bounds are enforced") {
    CHECK_THROWS_AS(restrict_tableau(t, 0, 3), InvalidInput);
    CHECK_THROWS_AS(restrict_tableau(t, 3, 3), InvalidInput);
    CHECK_THROWS_AS(restrict_tableau(t, 5, 9), InvalidInput);
    CHECK_THROWS_AS(restrict_tableau(t, 6, 3), InvalidInput);
  }
}

TEST_CASE("restriction prefix identity over SYT_5") {
  for (const auto& t : enumerate_syt(5)) {
    for (int k = 2; k <= 5; ++k) {
      CHECK(restrict_tableau(t, 1, k) == prefix_tableau(t, k));
    }
  }
}

TEST_CASE("slide order does not change the rectification") {
  std::mt19937 rng(987654u);
  CornerChooser random_corner = [&rng](std::size_t count) {
    return static_cast<std::size_t>(rng() % count);
  };
  for (const auto& t : enumerate_syt(5)) {
    for (int i = 1; i < 5; ++i) {
      for (int j = i + 1; j <= 5; ++j) {
        StandardTableau reference = restrict_tableau(t, i, j);
        for (int trial = 0; trial < 5; ++trial) {
          CHECK(restrict_tableau(t, i, j, random_corner) == reference);
        }
      }
    }
  }
}
