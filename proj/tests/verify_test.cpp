#include "verify.hpp"

#include "doctest.h"
#include "io.hpp"

using namespace mg;

TEST_CASE("random graphs are deterministic in (seed, params)") {
  GeneratorParams params;
  PolarizedGraph a = random_graph(12345, params);
  PolarizedGraph b = random_graph(12345, params);
  CHECK(serialize_graph(a) == serialize_graph(b));
  PolarizedGraph c = random_graph(12346, params);
  CHECK(serialize_graph(a) != serialize_graph(c));
}

TEST_CASE("generated graphs respect the parameters") {
  GeneratorParams params;
  params.max_vertices = 6;
  params.max_edges = 9;
  params.genus_min = 2;
  for (int i = 0; i < 20; ++i) {
    PolarizedGraph pg = random_graph(SplitMix64::mix(31337, i), params);
    CHECK(pg.genus() >= 2);
    for (EdgeId e = 0; e < pg.graph().edge_count(); ++e)
      CHECK(pg.graph().edge(e).length.get_den() <= 12);
  }
}

TEST_CASE("tree-only generation yields betti 0") {
  GeneratorParams params;
  params.tree_only = true;
  for (int i = 0; i < 10; ++i) {
    PolarizedGraph pg = random_graph(SplitMix64::mix(4242, i), params);
    CHECK(pg.graph().first_betti() == 0);
  }
}

TEST_CASE("parameter validation") {
  GeneratorParams params;
  params.max_edges = 3;
  params.max_vertices = 10;
  CHECK_THROWS_AS(params.validate(), GenerationFailure);
  params = GeneratorParams{};
  params.points_per_elkies = 1;
  CHECK_THROWS_AS(params.validate(), GenerationFailure);
}

TEST_CASE("small campaign runs clean and deterministically") {
  GeneratorParams params;
  params.max_vertices = 6;
  params.max_edges = 8;
  CampaignReport first = campaign(7, 6, params, 2);
  CHECK(first.failures.empty());
  CHECK(first.rows.size() == 6);
  for (const auto& row : first.rows) CHECK(row.ok);

  CampaignReport second = campaign(7, 6, params, 1);
  REQUIRE(second.rows.size() == first.rows.size());
  for (std::size_t i = 0; i < first.rows.size(); ++i) {
    CHECK(first.rows[i].digest == second.rows[i].digest);
    CHECK(first.rows[i].c == second.rows[i].c);
    CHECK(first.rows[i].min_inequality_margin == second.rows[i].min_inequality_margin);
  }
}

TEST_CASE("tree-only campaign keeps the tree identity") {
  GeneratorParams params;
  params.max_vertices = 6;
  params.max_edges = 8;
  params.tree_only = true;
  CampaignReport report = campaign(11, 4, params, 1);
  CHECK(report.failures.empty());
  for (const auto& row : report.rows) CHECK(row.is_tree);
}

TEST_CASE("campaign rejects count 0") {
  GeneratorParams params;
  CHECK_THROWS_AS(campaign(1, 0, params), GenerationFailure);
}
