#include <doctest.h>

#include <string>
#include <vector>

#include "syt/claims.hpp"
#include "syt/errors.hpp"

using namespace syt;

TEST_CASE("claim registry") {
  const std::vector<std::string> expected = {
      "counts",          "si-equals-shs",        "weak-subset-chainstrip",
      "coincide-n6",     "four-pairs-n7",        "transpose-anti",
      "evac-auto",       "restricts-segments",   "extends-segments",
      "descent-map",     "shape-map",            "pr-product",
      "interval-R",      "rs-insertion-fails",   "rs-insertion-shs-note",
      "inner-translation-fails"};
  CHECK(claim_ids() == expected);
}

TEST_CASE("claim filtering") {
  SUBCASE("filters run in registry order and deduplicate") {
    auto results = run_claims(std::vector<std::string>{"si-equals-shs", "counts", "counts"});
    REQUIRE(results.size() == 2);
    CHECK(results[0].claim_id == "counts");
    CHECK(results[1].claim_id == "si-equals-shs");
  }

  SUBCASE("unknown ids are rejected with the known list") {
    try {
      run_claims(std::vector<std::string>{"no-such-claim"});
      FAIL("expected InvalidInput");
    } catch (const InvalidInput& e) {
      std::string msg = e.what();
      CHECK(msg.find("no-such-claim") != std::string::npos);
      CHECK(msg.find("counts") != std::string::npos);
      CHECK(msg.find("inner-translation-fails") != std::string::npos);
    }
  }
}

TEST_CASE("the full registry passes") {
  // everything syt verify runs by default, so the shipped check exits clean
  auto results = run_claims();
  REQUIRE(results.size() == claim_ids().size());
  for (std::size_t k = 0; k < results.size(); ++k) {
    CHECK(results[k].claim_id == claim_ids()[k]);
    INFO(results[k].claim_id, ": ", results[k].detail);
    CHECK(results[k].pass);
  }
}

TEST_CASE("selected claims pass with meaningful reports") {
  SUBCASE("counts") {
    auto results = run_claims(std::vector<std::string>{"counts"});
    REQUIRE(results.size() == 1);
    CHECK(results[0].pass);
    CHECK(results[0].detail.find("1,2,4,10,26,76,232,764") != std::string::npos);
    CHECK(results[0].elapsed_ms >= 0.0);
  }

  SUBCASE("fixed counterexamples") {
    for (const char* id : {"rs-insertion-fails", "inner-translation-fails"}) {
      auto results = run_claims(std::vector<std::string>{id});
      REQUIRE(results.size() == 1);
      CHECK(results[0].claim_id == id);
      CHECK(results[0].pass);
      CHECK(!results[0].detail.empty());
    }
  }

  SUBCASE("interval bounds") {
    auto results = run_claims(std::vector<std::string>{"interval-R"});
    REQUIRE(results.size() == 1);
    CHECK(results[0].pass);
  }

  SUBCASE("the four extra pairs are reported as witnesses") {
    auto results = run_claims(std::vector<std::string>{"four-pairs-n7"});
    REQUIRE(results.size() == 1);
    CHECK(results[0].pass);
    CHECK(results[0].witnesses.size() == 4);
    bool found = false;
    for (const auto& w : results[0].witnesses)
      if (w.find("1,3,4,5/2,7/6") != std::string::npos &&
          w.find("1,3,4/2,5,7/6") != std::string::npos)
        found = true;
    CHECK(found);
  }
}
