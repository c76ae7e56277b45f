#pragma once

// Structural recognition. A graph in this family is either disconnected,
// co-disconnected, or a spider (clique body K, stable feet S with |K|=|S|,
// head R joined to K and detached from S); recursing through that trichotomy
// yields the decomposition tree. A stalled split (connected, co-connected,
// not a spider) certifies that the graph is outside the family.

#include <cassert>
#include <optional>
#include <variant>

#include "p4tract/graph.hpp"
#include "p4tract/obstructions.hpp"
#include "p4tract/scan.hpp"

namespace p4tract {

enum class SpiderKind { Thin, Thick };

struct SpiderPartition {
  SpiderKind kind{};
  VertexSet body;   // K: clique
  VertexSet feet;   // S: stable, |S| == |K| >= 2
  VertexSet head;   // R: joined to K, detached from S
  std::vector<std::pair<int, int>> legs;  // (foot, body partner), sorted by foot

  // Thin feet touch exactly their partner; thick feet touch all of the body
  // except their partner.
};

// Full check of the spider conditions for `p` against g restricted to
// `universe` (body, feet and head must partition it).
inline bool verify_spider(const Graph& g, const SpiderPartition& p, const VertexSet& universe) {
  VertexSet all;
  all.insert(all.end(), p.body.begin(), p.body.end());
  all.insert(all.end(), p.feet.begin(), p.feet.end());
  all.insert(all.end(), p.head.begin(), p.head.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;  // overlap
  if (all != canonical_vertex_set(universe)) return false;

  if (p.body.size() != p.feet.size() || p.body.size() < 2) return false;
  if (!is_clique(g, p.body) || !is_stable(g, p.feet)) return false;
  if (p.legs.size() != p.feet.size()) return false;

  VertexSet leg_feet, leg_bodies;
  for (auto [s, k] : p.legs) {
    leg_feet.push_back(s);
    leg_bodies.push_back(k);
  }
  if (canonical_vertex_set(leg_feet) != p.feet) return false;
  if (canonical_vertex_set(leg_bodies) != p.body) return false;

  for (auto [s, k] : p.legs) {
    for (int b : p.body) {
      const bool expect = (p.kind == SpiderKind::Thin) ? (b == k) : (b != k);
      if (g.has_edge(s, b) != expect) return false;
    }
  }
  for (int r : p.head) {
    for (int b : p.body)
      if (!g.has_edge(r, b)) return false;
    for (int s : p.feet)
      if (g.has_edge(r, s)) return false;
  }
  return true;
}

namespace detail {

inline int degree_within(const Graph& g, int v, const VertexSet& vs) {
  int d = 0;
  for (int u : vs)
    if (u != v && g.has_edge(u, v)) ++d;
  return d;
}

// Thin-spider extraction on g restricted to vs: with |K| >= 2 the feet are
// exactly the degree-1 vertices, their neighbors form the body, the rest is
// the head. Verification rejects anything that merely looks the part.
inline std::optional<SpiderPartition> extract_thin_within(const Graph& g, const VertexSet& vs) {
  VertexSet feet;
  for (int v : vs)
    if (degree_within(g, v, vs) == 1) feet.push_back(v);
  if (feet.size() < 2) return std::nullopt;

  std::vector<std::pair<int, int>> legs;
  VertexSet body;
  for (int s : feet) {
    int partner = -1;
    for (int u : vs)
      if (u != s && g.has_edge(u, s)) {
        partner = u;
        break;
      }
    if (partner < 0) return std::nullopt;
    legs.emplace_back(s, partner);
    body.push_back(partner);
  }
  body = canonical_vertex_set(body);
  if (body.size() != feet.size()) return std::nullopt;  // shared or missing partners

  VertexSet used = body;
  used.insert(used.end(), feet.begin(), feet.end());
  used = canonical_vertex_set(used);
  if (used.size() != body.size() + feet.size()) return std::nullopt;  // body meets feet

  VertexSet head;
  for (int v : vs)
    if (!std::binary_search(used.begin(), used.end(), v)) head.push_back(v);

  SpiderPartition p{SpiderKind::Thin, std::move(body), std::move(feet), std::move(head), std::move(legs)};
  std::sort(p.legs.begin(), p.legs.end());
  if (!verify_spider(g, p, vs)) return std::nullopt;
  return p;
}

}  // namespace detail

// Spider extraction on g restricted to vs (vs connected and co-connected).
// Tries the thin shape first, then the thick shape via the complement; both
// results are fully verified before being returned.
inline std::optional<SpiderPartition> extract_spider_within(const Graph& g, const VertexSet& vs) {
  const VertexSet sorted = canonical_vertex_set(vs);
  if (auto thin = detail::extract_thin_within(g, sorted)) return thin;

  auto sub = induced(g, sorted);
  const Graph co = complement(sub.graph);
  if (auto co_thin = detail::extract_thin_within(co, co.vertices())) {
    // Complementation swaps the roles: the complement's feet become the
    // body, its body becomes the feet, and each leg pairs a foot with its
    // unique non-neighbor in the body.
    SpiderPartition p;
    p.kind = SpiderKind::Thick;
    for (int v : co_thin->feet) p.body.push_back(sub.to_parent[v]);
    for (int v : co_thin->body) p.feet.push_back(sub.to_parent[v]);
    for (int v : co_thin->head) p.head.push_back(sub.to_parent[v]);
    for (auto [foot, body] : co_thin->legs) p.legs.emplace_back(sub.to_parent[body], sub.to_parent[foot]);
    p.body = canonical_vertex_set(p.body);
    p.feet = canonical_vertex_set(p.feet);
    p.head = canonical_vertex_set(p.head);
    std::sort(p.legs.begin(), p.legs.end());
    if (!verify_spider(g, p, sorted)) throw std::logic_error("thick spider extraction failed verification");
    return p;
  }
  return std::nullopt;
}

inline std::optional<SpiderPartition> extract_spider(const Graph& g) {
  return extract_spider_within(g, g.vertices());
}

struct DecompNode {
  enum class Kind { Leaf, Union, Join, Spider };

  Kind kind = Kind::Leaf;
  VertexSet vertices;  // all vertices covered by this subtree
  std::vector<DecompNode> children;
  std::optional<SpiderPartition> spider;  // set when kind == Spider; children = {head subtree} if any
};

using DecompTree = DecompNode;

namespace detail {

inline void count_nodes(const DecompNode& t, int& unions, int& joins, int& spiders) {
  switch (t.kind) {
    case DecompNode::Kind::Union: ++unions; break;
    case DecompNode::Kind::Join: ++joins; break;
    case DecompNode::Kind::Spider: ++spiders; break;
    case DecompNode::Kind::Leaf: break;
  }
  for (const auto& c : t.children) count_nodes(c, unions, joins, spiders);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Cograph recognition.

namespace detail {

inline bool cograph_rec(const Graph& g, const VertexSet& vs) {
  if (vs.size() <= 3) return true;  // a P4 needs four vertices
  auto comps = components_within(g, vs);
  if (comps.size() > 1) {
    for (const auto& c : comps)
      if (!cograph_rec(g, c)) return false;
    return true;
  }
  auto cocomps = co_components_within(g, vs);
  if (cocomps.size() > 1) {
    for (const auto& c : cocomps)
      if (!cograph_rec(g, c)) return false;
    return true;
  }
  return false;  // connected and co-connected on >= 4 vertices: a P4 exists
}

inline std::optional<std::array<int, 4>> p4_within(const Graph& g, const VertexSet& vs) {
  const int m = static_cast<int>(vs.size());
  std::array<int, 4> path{};
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        for (int d = c + 1; d < m; ++d)
          if (induces_p4(g, vs[a], vs[b], vs[c], vs[d], &path)) return path;
  return std::nullopt;
}

}  // namespace detail

inline bool is_cograph(const Graph& g) { return detail::cograph_rec(g, g.vertices()); }

// Either a union/join decomposition tree or four vertices inducing a P4.
using CographCheck = std::variant<DecompTree, std::array<int, 4>>;

namespace detail {

inline std::optional<DecompNode> cograph_tree_rec(const Graph& g, const VertexSet& vs,
                                                  std::array<int, 4>& witness) {
  DecompNode node;
  node.vertices = vs;
  if (vs.size() == 1) {
    node.kind = DecompNode::Kind::Leaf;
    return node;
  }
  auto comps = components_within(g, vs);
  std::vector<VertexSet>* parts = nullptr;
  if (comps.size() > 1) {
    node.kind = DecompNode::Kind::Union;
    parts = &comps;
  }
  auto cocomps = co_components_within(g, vs);
  if (!parts && cocomps.size() > 1) {
    node.kind = DecompNode::Kind::Join;
    parts = &cocomps;
  }
  if (!parts) {
    auto p4 = p4_within(g, vs);
    assert(p4.has_value());
    witness = *p4;
    return std::nullopt;
  }
  for (const auto& part : *parts) {
    auto child = cograph_tree_rec(g, part, witness);
    if (!child) return std::nullopt;
    node.children.push_back(std::move(*child));
  }
  return node;
}

}  // namespace detail

inline CographCheck check_cograph(const Graph& g) {
  if (g.vertex_count() == 0) return DecompTree{DecompNode::Kind::Union, {}, {}, std::nullopt};
  std::array<int, 4> witness{};
  if (auto tree = detail::cograph_tree_rec(g, g.vertices(), witness)) return std::move(*tree);
  return witness;
}

// ---------------------------------------------------------------------------
// P4-sparse recognition and decomposition.

namespace detail {

inline bool p4_sparse_rec(const Graph& g, const VertexSet& vs) {
  if (vs.size() <= 4) return true;  // two overlapping P4s need five vertices
  auto comps = components_within(g, vs);
  if (comps.size() > 1) {
    for (const auto& c : comps)
      if (!p4_sparse_rec(g, c)) return false;
    return true;
  }
  auto cocomps = co_components_within(g, vs);
  if (cocomps.size() > 1) {
    for (const auto& c : cocomps)
      if (!p4_sparse_rec(g, c)) return false;
    return true;
  }
  auto spider = extract_spider_within(g, vs);
  if (!spider) return false;
  return spider->head.empty() || p4_sparse_rec(g, spider->head);
}

// Lexicographically first 5-subset of vs inducing at least two P4s.
inline std::optional<std::array<int, 5>> dense_quintet_within(const Graph& g, const VertexSet& vs) {
  const int m = static_cast<int>(vs.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        for (int d = c + 1; d < m; ++d)
          for (int e = d + 1; e < m; ++e) {
            const std::array<int, 5> pick = {vs[a], vs[b], vs[c], vs[d], vs[e]};
            if (p4_count_within(g, pick, 2) >= 2) return pick;
          }
  return std::nullopt;
}

inline std::optional<DecompNode> p4_sparse_tree_rec(const Graph& g, const VertexSet& vs,
                                                    std::array<int, 5>& witness) {
  DecompNode node;
  node.vertices = vs;
  if (vs.size() == 1) {
    node.kind = DecompNode::Kind::Leaf;
    return node;
  }
  auto comps = components_within(g, vs);
  if (comps.size() > 1) {
    node.kind = DecompNode::Kind::Union;
    for (const auto& part : comps) {
      auto child = p4_sparse_tree_rec(g, part, witness);
      if (!child) return std::nullopt;
      node.children.push_back(std::move(*child));
    }
    return node;
  }
  auto cocomps = co_components_within(g, vs);
  if (cocomps.size() > 1) {
    node.kind = DecompNode::Kind::Join;
    for (const auto& part : cocomps) {
      auto child = p4_sparse_tree_rec(g, part, witness);
      if (!child) return std::nullopt;
      node.children.push_back(std::move(*child));
    }
    return node;
  }
  auto spider = extract_spider_within(g, vs);
  if (!spider) {
    auto bad = dense_quintet_within(g, vs);
    if (!bad) throw std::logic_error("stalled decomposition without a certifying 5-set");
    witness = *bad;
    return std::nullopt;
  }
  node.kind = DecompNode::Kind::Spider;
  if (!spider->head.empty()) {
    auto child = p4_sparse_tree_rec(g, spider->head, witness);
    if (!child) return std::nullopt;
    node.children.push_back(std::move(*child));
  }
  node.spider = std::move(*spider);
  return node;
}

}  // namespace detail

inline bool is_p4_sparse(const Graph& g) { return detail::p4_sparse_rec(g, g.vertices()); }

// Either a full decomposition tree or five vertices inducing two P4s.
using P4SparseCheck = std::variant<DecompTree, std::array<int, 5>>;

inline P4SparseCheck p4_sparse_decompose(const Graph& g) {
  if (g.vertex_count() == 0) return DecompTree{DecompNode::Kind::Union, {}, {}, std::nullopt};
  std::array<int, 5> witness{};
  if (auto tree = detail::p4_sparse_tree_rec(g, g.vertices(), witness)) return std::move(*tree);
  return witness;
}

// ---------------------------------------------------------------------------
// Maximum clique over a decomposition tree: max over union children, sum
// over join children, |K| plus the head's clique through a spider.

inline int max_clique_p4_sparse(const DecompTree& tree) {
  switch (tree.kind) {
    case DecompNode::Kind::Leaf:
      return 1;
    case DecompNode::Kind::Union: {
      int best = 0;
      for (const auto& c : tree.children) best = std::max(best, max_clique_p4_sparse(c));
      return best;
    }
    case DecompNode::Kind::Join: {
      int sum = 0;
      for (const auto& c : tree.children) sum += max_clique_p4_sparse(c);
      return sum;
    }
    case DecompNode::Kind::Spider: {
      const int head = tree.children.empty() ? 0 : max_clique_p4_sparse(tree.children.front());
      return static_cast<int>(tree.spider->body.size()) + head;
    }
  }
  return 0;
}

// Maximum clique with a concrete witness; ties resolved toward the
// lexicographically smallest vertex set, child by child.
inline VertexSet max_clique_witness(const DecompTree& tree) {
  switch (tree.kind) {
    case DecompNode::Kind::Leaf:
      return tree.vertices;
    case DecompNode::Kind::Union: {
      VertexSet best;
      for (const auto& c : tree.children) {
        VertexSet w = max_clique_witness(c);
        if (w.size() > best.size() || (w.size() == best.size() && w < best)) best = std::move(w);
      }
      return best;
    }
    case DecompNode::Kind::Join: {
      VertexSet all;
      for (const auto& c : tree.children) {
        VertexSet w = max_clique_witness(c);
        all.insert(all.end(), w.begin(), w.end());
      }
      return canonical_vertex_set(std::move(all));
    }
    case DecompNode::Kind::Spider: {
      VertexSet out = tree.spider->body;
      if (!tree.children.empty()) {
        VertexSet w = max_clique_witness(tree.children.front());
        out.insert(out.end(), w.begin(), w.end());
      }
      return canonical_vertex_set(std::move(out));
    }
  }
  return {};
}

// Per-co-component shape summary used by the trivially-perfect vertex phase:
// eta is the deletion cost of keeping the co-component (filled by the solver
// that owns the recursion).
struct CoComponentSummary {
  VertexSet vertices;
  int size = 0;
  int omega = 0;
  int eta = 0;
};

}  // namespace p4tract
