#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "lattice_loom/claims.hpp"

#include "oracles.hpp"

using namespace loom;

TEST_CASE("glob matching") {
  CHECK(glob_match("*", ""));
  CHECK(glob_match("*", "anything"));
  CHECK(glob_match("fig1-*", "fig1-completion-size"));
  CHECK_FALSE(glob_match("fig1-*", "fig2-completion-size"));
  CHECK(glob_match("?", "x"));
  CHECK_FALSE(glob_match("?", ""));
  CHECK_FALSE(glob_match("?", "xy"));
  CHECK(glob_match("a*c", "abc"));
  CHECK(glob_match("a*c", "ac"));
  CHECK_FALSE(glob_match("a*c", "ab"));
  CHECK(glob_match("*-ram", "fanoc-mid-ram"));
  CHECK_FALSE(glob_match("", "x"));
  CHECK(glob_match("", ""));
}

TEST_CASE("registry shape") {
  const ClaimRegistry& reg = standard_claims();
  CHECK(reg.claims().size() == 46);

  std::set<std::string> ids;
  for (const Claim& c : reg.claims()) {
    CAPTURE(c.id);
    CHECK(!c.id.empty());
    CHECK(!c.description.empty());
    CHECK(!c.source.empty());
    CHECK(ids.insert(c.id).second);
  }

  ClaimRegistry local;
  Claim bad;
  bad.id = "x";
  bad.description = "d";
  bad.run = [] { return ClaimOutcome{"1", "1", true}; };
  CHECK_THROWS_AS(local.add(bad), BadParams);
  bad.source = "hand check";
  local.add(bad);
  CHECK(local.claims().size() == 1);
}

TEST_CASE("filtered runs come back sorted") {
  auto reports = standard_claims().run("fig1-*");
  REQUIRE(reports.size() == 4);
  for (std::size_t i = 1; i < reports.size(); ++i)
    CHECK(reports[i - 1].id < reports[i].id);
  for (const ClaimReport& r : reports) {
    CAPTURE(r.id, r.expected, r.computed);
    CHECK(r.status == "pass");
    CHECK(r.ok());
    CHECK(r.ms >= 0);
  }
  CHECK(standard_claims().run("no-such-claim-*").empty());
}

TEST_CASE("window bound results are flagged") {
  auto reports = standard_claims().run("dlc6-*");
  REQUIRE(reports.size() == 6);
  for (const ClaimReport& r : reports) {
    CAPTURE(r.id, r.expected, r.computed);
    CHECK(r.ok());
    if (r.id == "dlc6-window")
      CHECK(r.status == "pass");
    else
      CHECK(r.status == "window-relative");
  }
}

TEST_CASE("every registered claim holds") {
  for (const ClaimReport& r : standard_claims().run()) {
    CAPTURE(r.id, r.expected, r.computed, r.status);
    CHECK(r.ok());
  }
}

TEST_CASE("shared corpus") {
  const auto& corpus = standard_corpus();
  CHECK(corpus.size() == 20);
  std::set<std::string> names;
  int connected = 0;
  for (const CorpusEntry& e : corpus) {
    CHECK(names.insert(e.name).second);
    CHECK(e.graph.n >= 4);
    if (is_connected(e.graph)) ++connected;
  }
  CHECK(connected == 17);
}

TEST_CASE("running example matches its description") {
  Poset p = fig1_poset();
  REQUIRE(p.n == 6);
  CHECK(p.labels == std::vector<std::string>{"x", "y", "z", "u", "v", "w"});

  oracle::Mat m = oracle::warshall(
      6, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}});
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK(p.leq(a, b) == (a == b || m[a][b]));
  CHECK(p.minimals() == std::vector<int>{0, 1, 2});
  CHECK(p.maximals() == std::vector<int>{3, 4, 5});
}
