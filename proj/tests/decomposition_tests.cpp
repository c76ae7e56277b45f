#include <catch2/catch_amalgamated.hpp>

#include "p4tract/decomposition.hpp"
#include "p4tract/generators.hpp"
#include "test_util.hpp"

using namespace p4tract;
using namespace testutil;

TEST_CASE("cograph recognition", "[decomposition]") {
  CHECK(is_cograph(complete_graph(3)));
  CHECK_FALSE(is_cograph(path_graph(4)));

  auto bad = check_cograph(path_graph(4));
  auto* witness = std::get_if<std::array<int, 4>>(&bad);
  REQUIRE(witness != nullptr);
  CHECK(induces_p4(path_graph(4), (*witness)[0], (*witness)[1], (*witness)[2], (*witness)[3]));

  // joins cannot create P4s
  const Graph two_k2 = disjoint_union(complete_graph(2), complete_graph(2));
  const Graph joined = join(two_k2, two_k2);
  CHECK_FALSE(has_induced_p4(joined));  // quartet-scan reference
  CHECK(is_cograph(joined));
  auto ok = check_cograph(joined);
  REQUIRE(std::holds_alternative<DecompTree>(ok));
}

TEST_CASE("cograph trees have no spider nodes", "[decomposition]") {
  SplitRng rng(3);
  for (int it = 0; it < 20; ++it) {
    const Graph g = gen_cograph(rng.uniform(1, 12), rng);
    auto res = check_cograph(g);
    auto* tree = std::get_if<DecompTree>(&res);
    REQUIRE(tree != nullptr);
    int unions = 0, joins = 0, spiders = 0;
    detail::count_nodes(*tree, unions, joins, spiders);
    CHECK(spiders == 0);
  }
}

TEST_CASE("spider extraction on canonical spiders", "[decomposition]") {
  auto thin = make_spider(3, SpiderKind::Thin);
  auto part = extract_spider(thin.graph);
  REQUIRE(part.has_value());
  CHECK(part->kind == SpiderKind::Thin);
  CHECK(part->body == thin.body);
  CHECK(part->feet == thin.feet);
  CHECK(part->head.empty());
  CHECK(verify_spider(thin.graph, *part, thin.graph.vertices()));

  auto thick = make_spider(3, SpiderKind::Thick);
  auto tpart = extract_spider(thick.graph);
  REQUIRE(tpart.has_value());
  CHECK(tpart->kind == SpiderKind::Thick);
  CHECK(tpart->body == thick.body);
  CHECK(tpart->feet == thick.feet);
  CHECK(verify_spider(thick.graph, *tpart, thick.graph.vertices()));

  // a P4 is the two-legged thin spider; thin and thick coincide there
  auto p4part = extract_spider(path_graph(4));
  REQUIRE(p4part.has_value());
  CHECK(p4part->body == VertexSet{1, 2});
  CHECK(p4part->feet == VertexSet{0, 3});
}

TEST_CASE("C5 admits no spider partition", "[decomposition][exhaustive]") {
  const Graph c5 = cycle_graph(5);
  CHECK_FALSE(extract_spider(c5).has_value());

  // independent check: try every (body, feet, legs, kind) split by hand
  const int n = 5;
  bool found = false;
  for (unsigned bmask = 0; bmask < (1u << n); ++bmask) {
    VertexSet body;
    for (int v = 0; v < n; ++v)
      if (bmask & (1u << v)) body.push_back(v);
    if (body.size() != 2) continue;  // |K| = |S| forces |K| = 2 on five vertices
    for (unsigned fmask = 0; fmask < (1u << n); ++fmask) {
      if (fmask & bmask) continue;
      VertexSet feet;
      for (int v = 0; v < n; ++v)
        if (fmask & (1u << v)) feet.push_back(v);
      if (feet.size() != body.size()) continue;
      VertexSet head;
      for (int v = 0; v < n; ++v)
        if (!(bmask & (1u << v)) && !(fmask & (1u << v))) head.push_back(v);
      for (int flip = 0; flip < 2; ++flip) {
        for (SpiderKind kind : {SpiderKind::Thin, SpiderKind::Thick}) {
          SpiderPartition p;
          p.kind = kind;
          p.body = body;
          p.feet = feet;
          p.head = head;
          p.legs = {{feet[0], body[flip]}, {feet[1], body[1 - flip]}};
          found = found || verify_spider(c5, p, c5.vertices());
        }
      }
    }
  }
  CHECK_FALSE(found);
}

TEST_CASE("decomposition of drawn spiders", "[decomposition]") {
  auto fx = make_spider(5, SpiderKind::Thin, 2, {{0, 1}});
  auto res = p4_sparse_decompose(fx.graph);
  auto* tree = std::get_if<DecompTree>(&res);
  REQUIRE(tree != nullptr);
  REQUIRE(tree->kind == DecompNode::Kind::Spider);
  CHECK(tree->spider->kind == SpiderKind::Thin);
  CHECK(tree->spider->body == fx.body);
  CHECK(tree->spider->feet == fx.feet);
  CHECK(tree->spider->head == fx.head);

  auto thick = make_spider(5, SpiderKind::Thick, 2);
  auto tres = p4_sparse_decompose(thick.graph);
  auto* ttree = std::get_if<DecompTree>(&tres);
  REQUIRE(ttree != nullptr);
  REQUIRE(ttree->kind == DecompNode::Kind::Spider);
  CHECK(ttree->spider->kind == SpiderKind::Thick);
}

TEST_CASE("decomposition failures produce dense quintets", "[decomposition]") {
  auto res = p4_sparse_decompose(path_graph(5));
  auto* witness = std::get_if<std::array<int, 5>>(&res);
  REQUIRE(witness != nullptr);
  CHECK(p4_count_within(path_graph(5), *witness, 2) >= 2);
  CHECK(*witness == std::array<int, 5>{0, 1, 2, 3, 4});
}

TEST_CASE("decomposition agrees with the dense-quintet scan", "[decomposition][exhaustive]") {
  // exhaustive on four and five vertices
  for (int n : {4, 5}) {
    const int pairs = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      const bool sparse = !detail::dense_quintet_within(g, g.vertices()).has_value();
      CHECK(is_p4_sparse(g) == sparse);
      CHECK(std::holds_alternative<DecompTree>(p4_sparse_decompose(g)) == sparse);
    }
  }
  // seeded corpus on six and seven vertices
  SplitRng rng(17);
  for (int it = 0; it < 300; ++it) {
    const Graph g = gen_gnp(rng.uniform(6, 7), rng.unit(), rng);
    const bool sparse = !detail::dense_quintet_within(g, g.vertices()).has_value();
    CHECK(is_p4_sparse(g) == sparse);
    CHECK(std::holds_alternative<DecompTree>(p4_sparse_decompose(g)) == sparse);
    CHECK(find_p4_sparse_obstruction(g).has_value() == !sparse);
  }
}

TEST_CASE("spider partitions from decomposition always verify", "[decomposition][property]") {
  SplitRng rng(23);
  for (int it = 0; it < 100; ++it) {
    const Graph g = gen_p4_sparse(rng.uniform(1, 11), rng);
    auto res = p4_sparse_decompose(g);
    auto* tree = std::get_if<DecompTree>(&res);
    REQUIRE(tree != nullptr);
    // walk the tree, verifying every spider payload over its node's vertices
    std::vector<const DecompNode*> stack = {tree};
    while (!stack.empty()) {
      const DecompNode* node = stack.back();
      stack.pop_back();
      if (node->kind == DecompNode::Kind::Spider) CHECK(verify_spider(g, *node->spider, node->vertices));
      for (const auto& c : node->children) stack.push_back(&c);
    }
  }
}

TEST_CASE("max clique over decomposition trees", "[decomposition]") {
  auto tree_of = [](const Graph& g) {
    auto res = p4_sparse_decompose(g);
    return std::get<DecompTree>(res);
  };
  CHECK(max_clique_p4_sparse(tree_of(complete_graph(4))) == 4);
  CHECK(max_clique_p4_sparse(tree_of(make_spider(3, SpiderKind::Thin, 1).graph)) == 4);
  CHECK(max_clique_p4_sparse(tree_of(disjoint_union(complete_graph(2), complete_graph(2)))) == 2);

  SplitRng rng(29);
  for (int it = 0; it < 60; ++it) {
    const Graph g = gen_p4_sparse(rng.uniform(1, 10), rng);
    auto tree = tree_of(g);
    CHECK(max_clique_p4_sparse(tree) == brute_force_max_clique(g));
    const VertexSet w = max_clique_witness(tree);
    CHECK(static_cast<int>(w.size()) == max_clique_p4_sparse(tree));
    CHECK(is_clique(g, w));
  }
}
