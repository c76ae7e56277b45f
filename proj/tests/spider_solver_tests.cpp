#include <catch2/catch_amalgamated.hpp>

#include "p4tract/generators.hpp"
#include "p4tract/oracle.hpp"
#include "p4tract/spider_solvers.hpp"
#include "test_util.hpp"

using namespace p4tract;
using namespace testutil;

TEST_CASE("edge deletion on bare spiders", "[spider-solvers]") {
  auto thin = make_spider(4, SpiderKind::Thin);
  auto sol = spider_edge_deletion(thin.graph);
  CHECK(sol.cost == 3);  // one leg per pair, last pair spared
  CHECK_FALSE(has_induced_p4(delete_edges(thin.graph, sol.edges)));

  auto thick = make_spider(4, SpiderKind::Thick);
  auto tsol = spider_edge_deletion(thick.graph);
  CHECK(tsol.cost == 6);  // all cross pairs i < j
  CHECK_FALSE(has_induced_p4(delete_edges(thick.graph, tsol.edges)));

  SplitRng rng(1);
  CHECK(spider_edge_deletion(gen_cograph(8, rng)).cost == 0);
  CHECK_THROWS_AS(spider_edge_deletion(path_graph(5)), std::invalid_argument);
}

TEST_CASE("edge formulas across body sizes", "[spider-solvers][property]") {
  for (int q = 2; q <= 6; ++q) {
    CHECK(spider_edge_deletion(make_spider(q, SpiderKind::Thin).graph).cost == q - 1);
    CHECK(spider_edge_deletion(make_spider(q, SpiderKind::Thick).graph).cost == q * (q - 1) / 2);
  }
  // with a head hanging off: the head decomposes independently
  auto fx = make_spider(3, SpiderKind::Thin, 2, {{0, 1}});
  CHECK(spider_edge_deletion(fx.graph).cost == 2);
}

TEST_CASE("vertex deletion on bare spiders", "[spider-solvers]") {
  CHECK(spider_vertex_deletion(make_spider(3, SpiderKind::Thin).graph).cost == 2);
  CHECK(spider_vertex_deletion(make_spider(3, SpiderKind::Thick).graph).cost == 2);
  SplitRng rng(2);
  CHECK(spider_vertex_deletion(gen_cograph(9, rng)).cost == 0);
}

TEST_CASE("constrained vertex deletion honors marks", "[spider-solvers]") {
  auto fx = make_spider(3, SpiderKind::Thin);
  // feet are 3,4,5 paired with bodies 0,1,2

  auto free = constrained_spider_vertex_deletion(fx.graph, {});
  CHECK(free.feasible);
  CHECK(free.cost == 2);
  CHECK(free.cost == spider_vertex_deletion(fx.graph).cost);

  // two fully forbidden pairs leave an unhittable P4
  auto blocked = constrained_spider_vertex_deletion(fx.graph, {0, 3, 1, 4});
  CHECK_FALSE(blocked.feasible);
  CHECK_FALSE(oracle_min_vertex_deletion_or_infeasible(fx.graph, DeletionTarget::P4Free, {0, 3, 1, 4}).has_value());

  // forbidden feet push the deletions onto the body
  auto shifted = constrained_spider_vertex_deletion(fx.graph, {3, 4});
  REQUIRE(shifted.feasible);
  CHECK(shifted.cost == 2);
  for (int v : shifted.vertices) CHECK((v != 3 && v != 4));
  CHECK_FALSE(has_induced_p4(delete_vertices(fx.graph, shifted.vertices).graph));
  auto oracle = oracle_min_vertex_deletion_or_infeasible(fx.graph, DeletionTarget::P4Free, {3, 4});
  REQUIRE(oracle.has_value());
  CHECK(oracle->minimum == shifted.cost);
}

TEST_CASE("constrained solver matches the constrained oracle", "[spider-solvers][property]") {
  SplitRng rng(31);
  for (int it = 0; it < 80; ++it) {
    const Graph g = gen_p4_sparse(rng.uniform(2, 9), rng);
    VertexSet forbidden;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (rng.chance(0.25)) forbidden.push_back(v);
    const auto mine = constrained_spider_vertex_deletion(g, forbidden);
    const auto ref = oracle_min_vertex_deletion_or_infeasible(g, DeletionTarget::P4Free, forbidden);
    CHECK(mine.feasible == ref.has_value());
    if (mine.feasible && ref) {
      CHECK(mine.cost == ref->minimum);
      for (int v : mine.vertices) CHECK_FALSE(std::binary_search(forbidden.begin(), forbidden.end(), v));
      CHECK_FALSE(has_induced_p4(delete_vertices(g, mine.vertices).graph));
    }
  }
}

TEST_CASE("trivially perfect edge finish", "[spider-solvers]") {
  auto fx = make_spider(3, SpiderKind::Thin);
  auto sol = tp_edge_final(fx.graph);
  CHECK(sol.cost == 2);
  CHECK(is_trivially_perfect(delete_edges(fx.graph, sol.edges)));

  // clique joined onto a C4-free graph: only the joined part matters
  const Graph inner = make_spider(2, SpiderKind::Thin).graph;  // a P4
  const Graph g = join(complete_graph(3), inner);
  auto joined = tp_edge_final(g);
  CHECK(joined.cost == tp_edge_final(inner).cost);
  CHECK(is_trivially_perfect(delete_edges(g, joined.edges)));

  CHECK(tp_edge_final(complete_graph(5)).cost == 0);
  CHECK_THROWS_AS(tp_edge_final(cycle_graph(4)), std::invalid_argument);
}

TEST_CASE("trivially perfect vertex finish", "[spider-solvers]") {
  const Graph two_k2 = disjoint_union(complete_graph(2), complete_graph(2));
  const Graph g = join(two_k2, two_k2);
  auto sol = tp_vertex_final(g);
  CHECK(sol.cost == 2);  // keep one side intact, shave the other to a clique
  CHECK(is_trivially_perfect(delete_vertices(g, sol.vertices).graph));
  CHECK(oracle_min_vertex_deletion(g, DeletionTarget::P4AndC4Free).minimum == 2);

  CHECK(tp_vertex_final(cycle_graph(4)).cost == 1);
  SplitRng rng(5);
  CHECK(tp_vertex_final(gen_cograph(4, rng)).cost <= 1);
  CHECK(tp_vertex_final(complete_graph(6)).cost == 0);
}

TEST_CASE("finishing phases match oracle minima", "[spider-solvers][property]") {
  SplitRng rng(37);
  OracleLimits wide;  // dense nine-vertex graphs can carry up to 36 edges
  wide.max_edge_elements = 36;
  int c4_free_seen = 0;
  for (int it = 0; it < 80; ++it) {
    const Graph g = gen_p4_sparse(rng.uniform(1, 9), rng);

    auto edge_sol = spider_edge_deletion(g);
    CHECK(edge_sol.cost == oracle_min_edge_deletion(g, DeletionTarget::P4Free, {}, wide).minimum);
    CHECK_FALSE(has_induced_p4(delete_edges(g, edge_sol.edges)));

    auto vert_sol = spider_vertex_deletion(g);
    CHECK(vert_sol.cost == oracle_min_vertex_deletion(g, DeletionTarget::P4Free).minimum);

    auto tpv = tp_vertex_final(g);
    CHECK(tpv.cost == oracle_min_vertex_deletion(g, DeletionTarget::P4AndC4Free).minimum);
    CHECK(is_trivially_perfect(delete_vertices(g, tpv.vertices).graph));

    if (!has_induced_c4(g)) {
      ++c4_free_seen;
      auto tpe = tp_edge_final(g);
      CHECK(tpe.cost == oracle_min_edge_deletion(g, DeletionTarget::P4AndC4Free, {}, wide).minimum);
      CHECK(is_trivially_perfect(delete_edges(g, tpe.edges)));
    }
  }
  CHECK(c4_free_seen > 10);
}

TEST_CASE("co-component summaries", "[spider-solvers]") {
  const Graph two_k2 = disjoint_union(complete_graph(2), complete_graph(2));
  const Graph g = join(two_k2, two_k2);
  auto summaries = co_component_summaries(g);
  REQUIRE(summaries.size() == 2);
  for (const auto& s : summaries) {
    CHECK(s.size == 4);
    CHECK(s.omega == 2);
    CHECK(s.eta == 0);  // each side alone is already trivially perfect
  }
}
