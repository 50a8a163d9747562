#include <doctest.h>

#include "dgq/criteria.hpp"
#include "dgq/errors.hpp"
#include "fixtures.hpp"

using namespace dgq;

TEST_CASE("Ext between simples by arrow counts") {
  auto q = fixture("q_rel");
  const int v1 = q.vertex("1"), v2 = q.vertex("2"), v3 = q.vertex("3");
  CHECK(ext_simples(q, v3, v1, 2) == 1);
  CHECK(ext_simples(q, v2, v1, 1) == 1);
  for (int i = 0; i < 3; ++i) CHECK(ext_simples(q, i, i, 0) == 1);
  CHECK(ext_simples(q, v1, v2, 0) == 0);
  CHECK(ext_simples(q, v1, v3, 2) == 0);
}

TEST_CASE("invalid quivers are rejected by ext_simples") {
  DgQuiver q;
  q.add_vertex("1");
  q.add_arrow("a", "1", "1", 2);
  CHECK_THROWS_AS(ext_simples(q, 0, 0, 1), InvalidInput);
}

TEST_CASE("projective dimension of simples") {
  auto q = fixture("q_rel");
  CHECK(projdim_simple(q, q.vertex("1")) == 0);
  CHECK(projdim_simple(q, q.vertex("2")) == 1);
  CHECK(projdim_simple(q, q.vertex("3")) == 2);
}

TEST_CASE("global dimension") {
  CHECK(global_dimension(fixture("q_rel")) == 2);
  CHECK(global_dimension(fixture("q_tildeA")) == 2);
  CHECK(global_dimension(fixture("q_a2")) == 1);
  DgQuiver k;
  k.add_vertex("0");
  CHECK(global_dimension(k) == 0);
}

TEST_CASE("mutation verdicts on the relation example") {
  auto q = fixture("q_rel");
  std::vector<std::string> admissible;
  for (int i = 0; i < 3; ++i)
    if (mutation_check(q, i, 2).admissible) admissible.push_back(q.vertices()[i]);
  CHECK(admissible == std::vector<std::string>{"1", "2"});
  auto v3 = mutation_check(q, q.vertex("3"), 2);
  CHECK(v3.reason == VerdictReason::OffendingArrows);
  CHECK(v3.offending == std::vector<std::string>{"gamma"});
  CHECK(mutation_check(q, 0, 2).reason == VerdictReason::NoOffendingArrow);
  CHECK_THROWS_AS(mutation_check(q, 0, 1), GlobalDimensionExceeded);
  try {
    mutation_check(q, 0, 1);
  } catch (const GlobalDimensionExceeded& e) {
    CHECK(e.witness() == "gamma");
  }
  CHECK_THROWS_AS(mutation_check(q, 0, 0), InvalidInput);
}

TEST_CASE("mutation verdicts on the affine example") {
  auto q = fixture("q_tildeA");
  std::vector<std::string> admissible;
  for (int i = 0; i < 4; ++i)
    if (mutation_check(q, i, 2).admissible) admissible.push_back(q.vertices()[i]);
  CHECK(admissible == std::vector<std::string>{"0", "1"});
  auto v2 = mutation_check(q, q.vertex("2"), 2);
  CHECK(v2.offending == std::vector<std::string>{"v"});
}

TEST_CASE("loops make the arrow criterion inapplicable") {
  auto b0 = fixture("q_b0");
  auto v = mutation_check(b0, b0.vertex("2"), 2);
  CHECK_FALSE(v.admissible);
  CHECK(v.reason == VerdictReason::LoopPresent);
  CHECK(to_string(v.reason) == "loop-present-criterion-inapplicable");
  auto cert = nu_obstruction_cycle(b0, 2);
  REQUIRE(cert);
  CHECK(cert->arrows == std::vector<std::string>{"l"});
  CHECK(cert->vertices == std::vector<std::string>{"2"});
}

TEST_CASE("obstruction cycles") {
  CHECK_FALSE(nu_obstruction_cycle(fixture("q_tildeA"), 2));
  DgQuiver empty;
  CHECK_FALSE(nu_obstruction_cycle(empty, 1));
  CHECK_FALSE(nu_obstruction_cycle(empty, 3));
  auto b1 = fixture("q_b1");
  auto cert = nu_obstruction_cycle(b1, 2);
  REQUIRE(cert);
  CHECK(cert->vertices == std::vector<std::string>{"3"});
  // degree 0 layer of B1 contains the 2-cycle between 1 and 3
  auto c1 = nu_obstruction_cycle(b1, 1);
  REQUIRE(c1);
  CHECK(c1->arrows.size() == 2);
}

TEST_CASE("Ext tables") {
  auto t = ext_table(fixture("q_tildeA"), 2);
  auto at = [&](const char* i, const char* j, int n) {
    auto idx = [&](const char* s) {
      return static_cast<int>(std::find(t.vertices.begin(), t.vertices.end(), s) - t.vertices.begin());
    };
    return t.at(idx(i), idx(j), n);
  };
  CHECK(at("3", "0", 2) == 2);
  CHECK(at("2", "0", 2) == 1);
  CHECK(at("3", "1", 2) == 1);
  long ext2 = 0, ext1 = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) ext2 += t.at(i, j, 2), ext1 += t.at(i, j, 1);
  CHECK(ext2 == 4);
  CHECK(at("1", "0", 1) == 2);
  CHECK(at("2", "0", 1) == 1);
  CHECK(at("2", "1", 1) == 2);
  CHECK(at("3", "1", 1) == 1);
  CHECK(at("3", "2", 1) == 2);
  CHECK(ext1 == 8);

  auto r = ext_table(fixture("q_rel"), 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(r.at(i, j, 3) == 0);
  CHECK(ext_table(fixture("q_rel")).window == 2);

  DgQuiver k;
  k.add_vertex("0");
  auto kt = ext_table(k);
  CHECK(kt.window == 0);
  CHECK(kt.at(0, 0, 0) == 1);
}

TEST_CASE("criteria are invariant under relabeling") {
  auto q = fixture("q_tildeA");
  auto r = relabeled(q, {{"0", "p"}, {"1", "q"}, {"2", "r"}, {"3", "s"}}, {{"v", "v'"}, {"u1", "U"}});
  CHECK(global_dimension(q) == global_dimension(r));
  CHECK(ext_table(q, 3).entries == ext_table(r, 3).entries);
  for (int i = 0; i < 4; ++i) {
    CHECK(mutation_check(q, i, 2).admissible == mutation_check(r, i, 2).admissible);
    CHECK(projdim_simple(q, i) == projdim_simple(r, i));
  }
}

TEST_CASE("admissibility matches vanishing Ext^d rows") {
  for (auto name : {"q_rel", "q_tildeA", "q_a2"}) {
    auto q = fixture(name);
    const int d = std::max(1, global_dimension(q));
    for (int i = 0; i < static_cast<int>(q.vertices().size()); ++i) {
      auto v = mutation_check(q, i, d);
      if (v.reason == VerdictReason::LoopPresent) continue;
      bool vanishing = true;
      for (int j = 0; j < static_cast<int>(q.vertices().size()); ++j)
        if (ext_simples(q, i, j, d) != 0) vanishing = false;
      CHECK(v.admissible == vanishing);
    }
  }
}
