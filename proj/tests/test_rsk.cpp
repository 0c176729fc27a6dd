#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "syt/errors.hpp"
#include "syt/rsk.hpp"
#include "syt/tableau_ops.hpp"
#include "syt/text_io.hpp"

using namespace syt;

TEST_CASE("row word") {
  CHECK(row_word(parse_tableau("1,2,4,7,8/3,6,9/5")) ==
        parse_permutation("5,3,6,9,1,2,4,7,8"));
  CHECK(row_word(StandardTableau()) == Permutation());
}

TEST_CASE("row and column insertion") {
  PartialTableau t({{1, 2, 6}, {3, 5}, {4, 7}});
  SUBCASE("row insertion bumps the leftmost larger entry") {
    PartialTableau r = row_insert(t, 8);
    CHECK(r.rows() == std::vector<std::vector<int>>{{1, 2, 6, 8}, {3, 5}, {4, 7}});
    PartialTableau r2 = row_insert(PartialTableau({{1, 3}, {2}}), 1 + 3);  // insert 4
    CHECK(r2.rows() == std::vector<std::vector<int>>{{1, 3, 4}, {2}});
  }
  SUBCASE("column insertion bumps the topmost larger entry") {
    // inserting 5 into the column-shifted tableau from the worked example
    PartialTableau shifted({{1, 2, 7}, {3, 8}, {4}, {6}});
    PartialTableau c = column_insert(shifted, 5);
    CHECK(c.rows() == std::vector<std::vector<int>>{{1, 2, 7}, {3, 6, 8}, {4}, {5}});
  }
  SUBCASE("duplicate entries are rejected") {
    CHECK_THROWS_AS(row_insert(t, 5), InvalidInput);
    CHECK_THROWS_AS(column_insert(t, 5), InvalidInput);
  }
}

TEST_CASE("rsk basics") {
  RskPair pq = rsk(parse_permutation("3,1,4,2"));
  CHECK(pq.p == parse_tableau("1,2/3,4"));
  CHECK(pq.q == parse_tableau("1,3/2,4"));
  CHECK(rsk(Permutation()).p == StandardTableau());

  SUBCASE("identity gives a single row twice") {
    RskPair id = rsk(parse_permutation("1,2,3,4,5"));
    CHECK(id.p == parse_tableau("1,2,3,4,5"));
    CHECK(id.q == parse_tableau("1,2,3,4,5"));
  }
  SUBCASE("decreasing word gives a single column") {
    RskPair w0 = rsk(parse_permutation("4,3,2,1"));
    CHECK(w0.p == parse_tableau("1/2/3/4"));
    CHECK(w0.q == parse_tableau("1/2/3/4"));
  }
}

TEST_CASE("rsk is a bijection onto same-shape pairs") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
    std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> seen;
    long long count = 0;
    do {
      Permutation pi(word);
      RskPair pq = rsk(pi);
      CHECK(pq.p.shape() == pq.q.shape());
      CHECK(rsk_inverse(pq) == pi);
      seen.insert({pq.p.rows(), pq.q.rows()});
      ++count;
    } while (std::next_permutation(word.begin(), word.end()));
    CHECK(static_cast<long long>(seen.size()) == count);
  }
}

TEST_CASE("inserting the row word reproduces the tableau") {
  for (const auto& t : enumerate_syt(6)) {
    CHECK(rsk(row_word(t)).p == t);
  }
}

TEST_CASE("rsk_inverse rejects mismatched shapes") {
  RskPair bad{parse_tableau("1,2/3"), parse_tableau("1,2,3")};
  CHECK_THROWS_AS(rsk_inverse(bad), InvalidInput);
}

TEST_CASE("knuth neighbors") {
  auto neighbors = knuth_neighbors(parse_permutation("2,1,3"));
  REQUIRE(neighbors.size() == 1);
  CHECK(neighbors[0] == parse_permutation("2,3,1"));
  CHECK(knuth_neighbors(parse_permutation("1,2,3")).empty());
  CHECK(knuth_neighbors(parse_permutation("3,2,1")).empty());

  SUBCASE("moves preserve the insertion tableau") {
    std::vector<int> word{1, 2, 3, 4, 5};
    do {
      Permutation pi(word);
      for (const auto& nb : knuth_neighbors(pi)) CHECK(rsk(nb).p == rsk(pi).p);
    } while (std::next_permutation(word.begin(), word.end()));
  }
}

TEST_CASE("knuth classes") {
  CHECK(knuth_class(parse_tableau("1,2/3")) ==
        std::vector<Permutation>{parse_permutation("1,3,2"), parse_permutation("3,1,2")});
  CHECK(knuth_class(parse_tableau("1,3/2")) ==
        std::vector<Permutation>{parse_permutation("2,1,3"), parse_permutation("2,3,1")});
  CHECK(knuth_class(parse_tableau("1,2,3")) ==
        std::vector<Permutation>{parse_permutation("1,2,3")});

  SUBCASE("classes partition S_n and match the brute filter") {
    for (int n = 1; n <= 5; ++n) {
      long long total = 0;
      for (const auto& t : enumerate_syt(n)) {
        auto fast = knuth_class(t);
        CHECK(fast == oracles::knuth_class_brute(t));
        CHECK(std::is_sorted(fast.begin(), fast.end()));
        total += static_cast<long long>(fast.size());
      }
      long long fact = 1;
      for (int k = 2; k <= n; ++k) fact *= k;
      CHECK(total == fact);
    }
  }

  SUBCASE("capacity ceiling") {
    CHECK_THROWS_AS(knuth_class(parse_tableau("1,2,3,4,5,6,7,8,9")), CapacityError);
  }
}
