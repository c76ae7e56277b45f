#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "p4tract/obstructions.hpp"
#include "p4tract/oracle.hpp"
#include "test_util.hpp"

using namespace p4tract;
using namespace testutil;

namespace {

Graph apply_edge_rule(const Graph& pattern, const EdgeSet& rule) {
  Graph h = pattern;
  for (const Edge& e : rule) h.remove_edge(e.u, e.v);
  return h;
}

Graph apply_vertex_rule(const Graph& pattern, const VertexSet& rule) {
  return delete_vertices(pattern, rule).graph;
}

}  // namespace

TEST_CASE("canonical patterns have the advertised shape", "[obstructions]") {
  for (ObstructionKind k : kFiveVertexKinds) {
    const Graph& p = canonical_pattern(k);
    REQUIRE(p.vertex_count() == 5);
    CHECK(p4_count_within(p, p.vertices()) >= 2);
  }
  const std::array<int, 4> quad = {0, 1, 2, 3};
  CHECK(p4_count_within(canonical_pattern(ObstructionKind::P4), quad) == 1);
  CHECK(p4_count_within(canonical_pattern(ObstructionKind::C4), quad) == 0);

  // pairwise non-isomorphic
  for (std::size_t i = 0; i < kFiveVertexKinds.size(); ++i)
    for (std::size_t j = i + 1; j < kFiveVertexKinds.size(); ++j)
      CHECK_FALSE(detail::find_isomorphism_5(canonical_pattern(kFiveVertexKinds[i]),
                                             canonical_pattern(kFiveVertexKinds[j]))
                      .has_value());

  CHECK(canonical_pattern(ObstructionKind::CoP5) == complement(canonical_pattern(ObstructionKind::P5)));
  CHECK(canonical_pattern(ObstructionKind::CoPan4) == complement(canonical_pattern(ObstructionKind::Pan4)));
}

TEST_CASE("every 5-vertex graph with two P4s classifies, the rest do not", "[obstructions][exhaustive]") {
  int dense = 0;
  for (unsigned mask = 0; mask < (1u << 10); ++mask) {
    const Graph g = graph_from_mask(5, mask);
    const bool two_p4s = p4_count_within(g, g.vertices(), 2) >= 2;
    const auto inst = classify_5graph(g);
    CHECK(two_p4s == inst.has_value());
    if (inst) {
      ++dense;
      CHECK(verify_instance(g, *inst));
    }
  }
  CHECK(dense > 0);
}

TEST_CASE("classify_5graph on named graphs", "[obstructions]") {
  Graph house = complement(path_graph(5));
  auto inst = classify_5graph(house);
  REQUIRE(inst.has_value());
  CHECK(inst->kind == ObstructionKind::CoP5);

  auto c5 = classify_5graph(cycle_graph(5));
  REQUIRE(c5.has_value());
  CHECK(c5->kind == ObstructionKind::C5);

  CHECK_FALSE(classify_5graph(complete_graph(5)).has_value());
  CHECK_THROWS_AS(classify_5graph(complete_graph(4)), std::invalid_argument);
}

TEST_CASE("P4 and C4 finders are deterministic", "[obstructions]") {
  auto p4 = find_p4(path_graph(4));
  REQUIRE(p4.has_value());
  CHECK(p4->embedding == std::vector<int>{0, 1, 2, 3});

  CHECK_FALSE(find_c4(complete_graph(4)).has_value());

  // first quartet of C5 in cyclic order
  auto on_c5 = find_p4(cycle_graph(5));
  REQUIRE(on_c5.has_value());
  CHECK(on_c5->embedding == std::vector<int>{0, 1, 2, 3});

  auto c4 = find_c4(cycle_graph(4));
  REQUIRE(c4.has_value());
  CHECK(c4->embedding == std::vector<int>{0, 1, 2, 3});
  CHECK(verify_instance(cycle_graph(4), *c4));
}

TEST_CASE("obstruction finders", "[obstructions]") {
  Graph p5_padded = disjoint_union(path_graph(5), empty_graph(2));
  auto inst = find_p4_sparse_obstruction(p5_padded);
  REQUIRE(inst.has_value());
  CHECK(inst->kind == ObstructionKind::P5);
  CHECK(verify_instance(p5_padded, *inst));

  CHECK_FALSE(find_p4_sparse_obstruction(make_spider(4, SpiderKind::Thin, 1).graph).has_value());

  auto c5 = find_p4_sparse_obstruction(cycle_graph(5));
  REQUIRE(c5.has_value());
  CHECK(c5->kind == ObstructionKind::C5);

  CHECK_FALSE(find_extended_obstruction(cycle_graph(5)).has_value());
  auto ext = find_extended_obstruction(path_graph(5));
  REQUIRE(ext.has_value());
  CHECK(ext->kind == ObstructionKind::P5);
  auto fork = find_extended_obstruction(canonical_pattern(ObstructionKind::Fork));
  REQUIRE(fork.has_value());
  CHECK(fork->kind == ObstructionKind::Fork);
}

TEST_CASE("rule families match the golden table shapes", "[obstructions][golden]") {
  using K = ObstructionKind;
  const auto shape = [](K k, DeletionMode m, DeletionTarget t) { return synthesize_rules(k, m, t).cardinalities(); };
  using V = std::vector<int>;

  // edge rules toward P4-freeness
  CHECK(shape(K::C5, DeletionMode::Edge, DeletionTarget::P4Free) == V{2, 2, 2, 2, 2});
  CHECK(shape(K::P5, DeletionMode::Edge, DeletionTarget::P4Free) == V{1, 1, 2});
  CHECK(shape(K::CoP5, DeletionMode::Edge, DeletionTarget::P4Free) == V{2, 2, 2, 2, 3, 3, 3, 3});
  CHECK(shape(K::Pan4, DeletionMode::Edge, DeletionTarget::P4Free) == V{1, 2, 2, 2, 2});
  CHECK(shape(K::CoPan4, DeletionMode::Edge, DeletionTarget::P4Free) == V{1, 1, 2});
  CHECK(shape(K::Fork, DeletionMode::Edge, DeletionTarget::P4Free) == V{1, 1, 2});
  CHECK(shape(K::Kite, DeletionMode::Edge, DeletionTarget::P4Free) == V{1, 2, 2, 3, 3});
  CHECK(shape(K::P4, DeletionMode::Edge, DeletionTarget::P4Free) == V{1, 1, 1});

  // two edges of a C4 must go
  CHECK(shape(K::C4, DeletionMode::Edge, DeletionTarget::P4AndC4Free) == V{2, 2, 2, 2, 2, 2});

  // vertex rules toward P4-freeness: ten pairs for C5, three breaking
  // vertices plus one pair for the rest
  CHECK(shape(K::C5, DeletionMode::Vertex, DeletionTarget::P4Free) == V{2, 2, 2, 2, 2, 2, 2, 2, 2, 2});
  for (K k : kExtendedKinds) CHECK(shape(k, DeletionMode::Vertex, DeletionTarget::P4Free) == V{1, 1, 1, 2});

  // vertex rules toward trivial perfection
  CHECK(shape(K::C5, DeletionMode::Vertex, DeletionTarget::P4AndC4Free) == V{2, 2, 2, 2, 2, 2, 2, 2, 2, 2});
  CHECK(shape(K::P5, DeletionMode::Vertex, DeletionTarget::P4AndC4Free) == V{1, 1, 1, 2});
  CHECK(shape(K::CoP5, DeletionMode::Vertex, DeletionTarget::P4AndC4Free) == V{1, 1, 2, 2, 2});
  CHECK(shape(K::Pan4, DeletionMode::Vertex, DeletionTarget::P4AndC4Free) == V{1, 1, 2, 2, 2});
  CHECK(shape(K::CoPan4, DeletionMode::Vertex, DeletionTarget::P4AndC4Free) == V{1, 1, 1, 2});
  CHECK(shape(K::Fork, DeletionMode::Vertex, DeletionTarget::P4AndC4Free) == V{1, 1, 1, 2});
  CHECK(shape(K::Kite, DeletionMode::Vertex, DeletionTarget::P4AndC4Free) == V{1, 1, 1, 2});

  CHECK_THROWS_AS(synthesize_rules(K::C4, DeletionMode::Edge, DeletionTarget::P4Free), std::invalid_argument);
}

TEST_CASE("rules are sound, minimal and complete", "[obstructions][property]") {
  for (int ki = 0; ki < kObstructionKindCount; ++ki) {
    const auto kind = static_cast<ObstructionKind>(ki);
    const Graph& pattern = canonical_pattern(kind);
    for (DeletionMode mode : {DeletionMode::Edge, DeletionMode::Vertex}) {
      for (DeletionTarget target : {DeletionTarget::P4Free, DeletionTarget::P4AndC4Free}) {
        if (satisfies_target(pattern, target)) continue;
        const BranchRuleSet& rs = synthesize_rules(kind, mode, target);
        INFO(obstruction_name(kind) << " " << deletion_mode_name(mode) << " " << deletion_target_name(target));

        if (mode == DeletionMode::Edge) {
          // soundness
          for (const EdgeSet& r : rs.edge_rules) CHECK(satisfies_target(apply_edge_rule(pattern, r), target));
          // minimality: no rule contains another
          for (const EdgeSet& a : rs.edge_rules)
            for (const EdgeSet& b : rs.edge_rules)
              if (&a != &b) CHECK_FALSE(std::includes(a.begin(), a.end(), b.begin(), b.end()));
          // completeness over every edge subset
          const EdgeSet all = pattern.edges();
          for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
            EdgeSet sub;
            for (std::size_t i = 0; i < all.size(); ++i)
              if (mask & (1u << i)) sub.push_back(all[i]);
            if (!satisfies_target(apply_edge_rule(pattern, sub), target)) continue;
            bool covered = false;
            for (const EdgeSet& r : rs.edge_rules)
              covered = covered || std::includes(sub.begin(), sub.end(), r.begin(), r.end());
            CHECK(covered);
          }
        } else {
          for (const VertexSet& r : rs.vertex_rules) CHECK(satisfies_target(apply_vertex_rule(pattern, r), target));
          for (const VertexSet& a : rs.vertex_rules)
            for (const VertexSet& b : rs.vertex_rules)
              if (&a != &b) CHECK_FALSE(std::includes(a.begin(), a.end(), b.begin(), b.end()));
          const int n = pattern.vertex_count();
          for (unsigned mask = 0; mask < (1u << n); ++mask) {
            VertexSet sub;
            for (int v = 0; v < n; ++v)
              if (mask & (1u << v)) sub.push_back(v);
            if (!satisfies_target(apply_vertex_rule(pattern, sub), target)) continue;
            bool covered = false;
            for (const VertexSet& r : rs.vertex_rules)
              covered = covered || std::includes(sub.begin(), sub.end(), r.begin(), r.end());
            CHECK(covered);
          }
        }
      }
    }
  }
}

TEST_CASE("breaking vertices", "[obstructions]") {
  const auto p5 = breaking_vertices(ObstructionKind::P5);
  CHECK(p5.singles == std::array<int, 3>{1, 2, 3});  // interior of the path
  CHECK(p5.pair == std::array<int, 2>{0, 4});        // the endpoints

  for (ObstructionKind k : kExtendedKinds) {
    const auto bv = breaking_vertices(k);
    const Graph& pattern = canonical_pattern(k);
    for (int pos : bv.singles)
      CHECK(satisfies_target(delete_vertices(pattern, {pos}).graph, DeletionTarget::P4Free));
    CHECK(satisfies_target(delete_vertices(pattern, {bv.pair[0], bv.pair[1]}).graph, DeletionTarget::P4Free));
  }
  CHECK_THROWS_AS(breaking_vertices(ObstructionKind::C5), std::invalid_argument);
  CHECK_THROWS_AS(breaking_vertices(ObstructionKind::P4), std::invalid_argument);
}

TEST_CASE("rule mapping through embeddings", "[obstructions]") {
  // P5 sitting on shuffled vertex ids
  Graph g(5);
  const std::vector<int> order = {3, 0, 4, 1, 2};  // path 3-0-4-1-2
  for (int i = 0; i + 1 < 5; ++i) g.add_edge(order[i], order[i + 1]);
  auto inst = find_p4_sparse_obstruction(g);
  REQUIRE(inst.has_value());
  REQUIRE(inst->kind == ObstructionKind::P5);
  for (const EdgeSet& rule : synthesize_rules(ObstructionKind::P5, DeletionMode::Edge, DeletionTarget::P4Free).edge_rules) {
    const EdgeSet real = map_edge_rule(rule, inst->embedding);
    CHECK_FALSE(has_induced_p4(delete_edges(g, real)));
  }
}
