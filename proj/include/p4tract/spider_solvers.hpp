#pragma once

// Exact deletion solvers on P4-sparse structure. Components and
// co-components are independent subproblems; on a spider every P4 inside
// body-plus-feet is {s_i, k_i, k_j, s_j} for a pair of legs, so hitting all
// but one leg pair is necessary and sufficient there, and the head is an
// independent recursive subproblem.

#include <limits>
#include <numeric>

#include "p4tract/decomposition.hpp"
#include "p4tract/graph.hpp"
#include "p4tract/scan.hpp"

namespace p4tract {

struct StructuredSolution {
  EdgeSet edges;
  VertexSet vertices;
  int cost = 0;
  bool feasible = true;
};

namespace detail {

[[noreturn]] inline void not_p4_sparse() { throw std::invalid_argument("input graph is not P4-sparse"); }

// Minimum edge set making g[vs] P4-free. Thin spiders lose one leg per pair
// except the last; thick spiders lose the upper-triangle cross edges
// {k_i, s_j} (i < j), which nests the feet neighborhoods.
inline void cograph_edge_rec(const Graph& g, const VertexSet& vs, EdgeSet& out) {
  if (vs.size() <= 3) return;
  auto comps = components_within(g, vs);
  if (comps.size() > 1) {
    for (const auto& c : comps) cograph_edge_rec(g, c, out);
    return;
  }
  auto cocomps = co_components_within(g, vs);
  if (cocomps.size() > 1) {
    for (const auto& c : cocomps) cograph_edge_rec(g, c, out);
    return;
  }
  auto spider = extract_spider_within(g, vs);
  if (!spider) not_p4_sparse();
  const auto& legs = spider->legs;  // sorted by foot id
  const int q = static_cast<int>(legs.size());
  if (spider->kind == SpiderKind::Thin) {
    for (int i = 0; i + 1 < q; ++i) out.emplace_back(legs[i].first, legs[i].second);
  } else {
    for (int i = 0; i < q; ++i)
      for (int j = i + 1; j < q; ++j) out.emplace_back(legs[i].second, legs[j].first);
  }
  if (!spider->head.empty()) cograph_edge_rec(g, spider->head, out);
}

// Minimum vertex set making g[vs] P4-free while avoiding forbidden
// vertices. Each non-survivor leg pair gives up its foot, or its body
// vertex when the foot is forbidden; a pair with both members forbidden
// must be the survivor, and two such pairs are infeasible.
inline bool cograph_vertex_rec(const Graph& g, const VertexSet& vs, const std::vector<char>& forbidden,
                               VertexSet& out) {
  if (vs.size() <= 3) return true;
  auto comps = components_within(g, vs);
  if (comps.size() > 1) {
    for (const auto& c : comps)
      if (!cograph_vertex_rec(g, c, forbidden, out)) return false;
    return true;
  }
  auto cocomps = co_components_within(g, vs);
  if (cocomps.size() > 1) {
    for (const auto& c : cocomps)
      if (!cograph_vertex_rec(g, c, forbidden, out)) return false;
    return true;
  }
  auto spider = extract_spider_within(g, vs);
  if (!spider) not_p4_sparse();
  const auto& legs = spider->legs;
  const int q = static_cast<int>(legs.size());
  auto banned = [&](int v) { return !forbidden.empty() && forbidden[v]; };

  int blocked = -1;
  for (int i = 0; i < q; ++i) {
    if (banned(legs[i].first) && banned(legs[i].second)) {
      if (blocked >= 0) return false;  // two fully forbidden pairs: some P4 survives
      blocked = i;
    }
  }
  const int survivor = blocked >= 0 ? blocked : q - 1;
  for (int i = 0; i < q; ++i) {
    if (i == survivor) continue;
    if (!banned(legs[i].first))
      out.push_back(legs[i].first);
    else
      out.push_back(legs[i].second);
  }
  if (!spider->head.empty()) return cograph_vertex_rec(g, spider->head, forbidden, out);
  return true;
}

// Minimum edge set making a C4-free input trivially perfect. A
// co-disconnected C4-free graph is a clique completely joined to its single
// non-trivial co-component, so only that co-component matters.
inline void tp_edge_rec(const Graph& g, const VertexSet& vs, EdgeSet& out) {
  if (vs.size() <= 3) return;
  auto comps = components_within(g, vs);
  if (comps.size() > 1) {
    for (const auto& c : comps) tp_edge_rec(g, c, out);
    return;
  }
  auto cocomps = co_components_within(g, vs);
  if (cocomps.size() > 1) {
    const VertexSet* kept = nullptr;
    for (const auto& c : cocomps) {
      if (c.size() == 1) continue;
      if (kept) throw std::invalid_argument("input contains an induced C4 across co-components");
      kept = &c;
    }
    if (kept) tp_edge_rec(g, *kept, out);
    return;
  }
  auto spider = extract_spider_within(g, vs);
  if (!spider) not_p4_sparse();
  const auto& legs = spider->legs;
  const int q = static_cast<int>(legs.size());
  if (spider->kind == SpiderKind::Thin) {
    for (int i = 0; i + 1 < q; ++i) out.emplace_back(legs[i].first, legs[i].second);
  } else {
    for (int i = 0; i < q; ++i)
      for (int j = i + 1; j < q; ++j) out.emplace_back(legs[i].second, legs[j].first);
  }
  if (!spider->head.empty()) tp_edge_rec(g, spider->head, out);
}

inline int max_clique_within(const Graph& g, const VertexSet& vs, VertexSet* witness) {
  auto sub = induced(g, vs);
  auto check = p4_sparse_decompose(sub.graph);
  auto* tree = std::get_if<DecompTree>(&check);
  if (!tree) not_p4_sparse();
  if (witness) {
    *witness = max_clique_witness(*tree);
    for (int& v : *witness) v = sub.to_parent[v];
  }
  return max_clique_p4_sparse(*tree);
}

// Minimum vertex set making g[vs] trivially perfect. Induced C4s live only
// across non-clique co-components, so all co-components but one are pared
// down to a fixed maximum clique; the kept one is solved recursively and
// chosen to minimize total cost.
inline int tp_vertex_rec(const Graph& g, const VertexSet& vs, VertexSet& out) {
  if (vs.size() <= 3) return 0;
  auto comps = components_within(g, vs);
  if (comps.size() > 1) {
    int total = 0;
    for (const auto& c : comps) total += tp_vertex_rec(g, c, out);
    return total;
  }
  auto cocomps = co_components_within(g, vs);
  if (cocomps.size() > 1) {
    const int t = static_cast<int>(cocomps.size());
    std::vector<VertexSet> clique_witness(t), kept_deletions(t);
    std::vector<int> omega(t), eta(t);
    for (int i = 0; i < t; ++i) {
      omega[i] = max_clique_within(g, cocomps[i], &clique_witness[i]);
      eta[i] = tp_vertex_rec(g, cocomps[i], kept_deletions[i]);
    }
    int best = 0;
    long best_gain = -1;
    for (int i = 0; i < t; ++i) {
      const long gain = static_cast<long>(cocomps[i].size()) - omega[i] - eta[i];
      if (gain > best_gain) {  // lowest index wins ties
        best_gain = gain;
        best = i;
      }
    }
    int total = 0;
    for (int i = 0; i < t; ++i) {
      if (i == best) {
        out.insert(out.end(), kept_deletions[i].begin(), kept_deletions[i].end());
        total += eta[i];
      } else {
        for (int v : cocomps[i])
          if (!std::binary_search(clique_witness[i].begin(), clique_witness[i].end(), v)) {
            out.push_back(v);
            ++total;
          }
      }
    }
    return total;
  }
  auto spider = extract_spider_within(g, vs);
  if (!spider) not_p4_sparse();
  const auto& legs = spider->legs;
  const int q = static_cast<int>(legs.size());
  for (int i = 0; i + 1 < q; ++i) out.push_back(legs[i].first);
  int total = q - 1;
  if (!spider->head.empty()) total += tp_vertex_rec(g, spider->head, out);
  return total;
}

}  // namespace detail

inline StructuredSolution spider_edge_deletion(const Graph& g) {
  StructuredSolution sol;
  detail::cograph_edge_rec(g, g.vertices(), sol.edges);
  sol.edges = canonical_edge_set(std::move(sol.edges));
  sol.cost = static_cast<int>(sol.edges.size());
  return sol;
}

inline StructuredSolution constrained_spider_vertex_deletion(const Graph& g, const VertexSet& forbidden) {
  StructuredSolution sol;
  std::vector<char> banned;
  if (!forbidden.empty()) {
    banned.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : canonical_vertex_set(forbidden)) {
      if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("forbidden vertex out of range");
      banned[v] = 1;
    }
  }
  sol.feasible = detail::cograph_vertex_rec(g, g.vertices(), banned, sol.vertices);
  if (!sol.feasible) {
    sol.vertices.clear();
    sol.cost = 0;
    return sol;
  }
  sol.vertices = canonical_vertex_set(std::move(sol.vertices));
  sol.cost = static_cast<int>(sol.vertices.size());
  return sol;
}

inline StructuredSolution spider_vertex_deletion(const Graph& g) {
  return constrained_spider_vertex_deletion(g, {});
}

inline StructuredSolution tp_edge_final(const Graph& g) {
  if (has_induced_c4(g)) throw std::invalid_argument("input contains an induced C4");
  StructuredSolution sol;
  detail::tp_edge_rec(g, g.vertices(), sol.edges);
  sol.edges = canonical_edge_set(std::move(sol.edges));
  sol.cost = static_cast<int>(sol.edges.size());
  return sol;
}

inline StructuredSolution tp_vertex_final(const Graph& g) {
  StructuredSolution sol;
  sol.cost = detail::tp_vertex_rec(g, g.vertices(), sol.vertices);
  sol.vertices = canonical_vertex_set(std::move(sol.vertices));
  sol.cost = static_cast<int>(sol.vertices.size());
  return sol;
}

// Shape summaries of the top-level co-components: clique number plus the
// cost of keeping the co-component (its own trivially-perfect deletion
// number, computed recursively).
inline std::vector<CoComponentSummary> co_component_summaries(const Graph& g) {
  std::vector<CoComponentSummary> out;
  for (const auto& cc : co_components(g)) {
    CoComponentSummary s;
    s.vertices = cc;
    s.size = static_cast<int>(cc.size());
    s.omega = detail::max_clique_within(g, cc, nullptr);
    VertexSet scratch;
    s.eta = detail::tp_vertex_rec(g, cc, scratch);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace p4tract
