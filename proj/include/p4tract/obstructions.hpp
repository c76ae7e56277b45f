#pragma once

// The forbidden induced subgraphs driving the branching solvers: P4, C4 and
// the seven five-vertex graphs in which two induced P4s overlap (C5, P5 and
// its complement, fork and kite, 4-pan and co-4-pan). Branching rule
// families are synthesized by exhaustive enumeration on the canonical
// patterns rather than transcribed, so soundness, minimality and
// completeness hold by construction and are re-checkable.

#include <array>
#include <cassert>
#include <map>
#include <optional>
#include <string>

#include "p4tract/graph.hpp"
#include "p4tract/oracle.hpp"
#include "p4tract/scan.hpp"

namespace p4tract {

enum class ObstructionKind : int {
  P4 = 0,
  C4 = 1,
  C5 = 2,
  P5 = 3,
  CoP5 = 4,
  Fork = 5,
  Kite = 6,
  Pan4 = 7,
  CoPan4 = 8,
};

inline constexpr int kObstructionKindCount = 9;

inline constexpr std::array<ObstructionKind, 7> kFiveVertexKinds = {
    ObstructionKind::C5,   ObstructionKind::P5,   ObstructionKind::CoP5, ObstructionKind::Fork,
    ObstructionKind::Kite, ObstructionKind::Pan4, ObstructionKind::CoPan4};

// The five of the seven that contain no induced C4 themselves.
inline constexpr std::array<ObstructionKind, 5> kC4FreeFiveVertexKinds = {
    ObstructionKind::C5, ObstructionKind::P5, ObstructionKind::Fork, ObstructionKind::Kite,
    ObstructionKind::CoPan4};

// The six five-vertex kinds other than C5.
inline constexpr std::array<ObstructionKind, 6> kExtendedKinds = {
    ObstructionKind::P5,   ObstructionKind::CoP5, ObstructionKind::Fork,
    ObstructionKind::Kite, ObstructionKind::Pan4, ObstructionKind::CoPan4};

inline const char* obstruction_name(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::P4: return "P4";
    case ObstructionKind::C4: return "C4";
    case ObstructionKind::C5: return "C5";
    case ObstructionKind::P5: return "P5";
    case ObstructionKind::CoP5: return "co-P5";
    case ObstructionKind::Fork: return "fork";
    case ObstructionKind::Kite: return "kite";
    case ObstructionKind::Pan4: return "4-pan";
    case ObstructionKind::CoPan4: return "co-4-pan";
  }
  return "?";
}

inline int obstruction_order(ObstructionKind k) {
  return (k == ObstructionKind::P4 || k == ObstructionKind::C4) ? 4 : 5;
}

// Canonical adjacency patterns, 0-based positions:
//   P4      path 0-1-2-3
//   C4      cycle 0-1-2-3
//   C5      cycle 0-1-2-3-4
//   P5      path 0-1-2-3-4
//   co-P5   complement of P5
//   fork    leaves 0,1 on center 2, path 2-3-4
//   kite    K4 on 0..3 minus {0,2}, pendant 4 on 0
//   4-pan   cycle 0-1-2-3, pendant 4 on 0
//   co-4-pan complement of 4-pan
inline const Graph& canonical_pattern(ObstructionKind k) {
  static const std::array<Graph, kObstructionKindCount> patterns = [] {
    std::array<Graph, kObstructionKindCount> p{};
    auto make = [](int n, std::initializer_list<std::pair<int, int>> edges) {
      Graph g(n);
      for (auto [u, v] : edges) g.add_edge(u, v);
      return g;
    };
    p[static_cast<int>(ObstructionKind::P4)] = make(4, {{0, 1}, {1, 2}, {2, 3}});
    p[static_cast<int>(ObstructionKind::C4)] = make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    p[static_cast<int>(ObstructionKind::C5)] = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    p[static_cast<int>(ObstructionKind::P5)] = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    p[static_cast<int>(ObstructionKind::CoP5)] = complement(p[static_cast<int>(ObstructionKind::P5)]);
    p[static_cast<int>(ObstructionKind::Fork)] = make(5, {{0, 2}, {1, 2}, {2, 3}, {3, 4}});
    p[static_cast<int>(ObstructionKind::Kite)] = make(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}, {0, 4}});
    p[static_cast<int>(ObstructionKind::Pan4)] = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    p[static_cast<int>(ObstructionKind::CoPan4)] = complement(p[static_cast<int>(ObstructionKind::Pan4)]);
    return p;
  }();
  return patterns[static_cast<int>(k)];
}

// A located forbidden subgraph: embedding[p] is the graph vertex playing
// canonical position p.
struct ObstructionInstance {
  ObstructionKind kind{};
  std::vector<int> embedding;
};

namespace detail {

inline std::vector<int> sorted_degree_sequence(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

// First isomorphism (in lexicographic permutation order) from pattern
// positions onto g5's vertices, if any.
inline std::optional<std::vector<int>> find_isomorphism_5(const Graph& pattern, const Graph& g5) {
  if (pattern.edge_count() != g5.edge_count()) return std::nullopt;
  if (sorted_degree_sequence(pattern) != sorted_degree_sequence(g5)) return std::nullopt;
  std::array<int, 5> perm = {0, 1, 2, 3, 4};
  do {
    bool ok = true;
    for (int i = 0; i < 5 && ok; ++i)
      for (int j = i + 1; j < 5 && ok; ++j)
        if (pattern.has_edge(i, j) != g5.has_edge(perm[i], perm[j])) ok = false;
    if (ok) return std::vector<int>(perm.begin(), perm.end());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace detail

// Classifies a 5-vertex graph against the seven obstruction kinds; the
// embedding maps canonical positions to g5's own vertex ids.
inline std::optional<ObstructionInstance> classify_5graph(const Graph& g5) {
  if (g5.vertex_count() != 5) throw std::invalid_argument("classify_5graph expects exactly 5 vertices");
  for (ObstructionKind k : kFiveVertexKinds) {
    if (auto perm = detail::find_isomorphism_5(canonical_pattern(k), g5)) return ObstructionInstance{k, *perm};
  }
  return std::nullopt;
}

inline std::optional<ObstructionInstance> find_p4(const Graph& g) {
  if (auto path = find_induced_p4(g))
    return ObstructionInstance{ObstructionKind::P4, std::vector<int>(path->begin(), path->end())};
  return std::nullopt;
}

inline std::optional<ObstructionInstance> find_c4(const Graph& g) {
  if (auto cyc = find_induced_c4(g))
    return ObstructionInstance{ObstructionKind::C4, std::vector<int>(cyc->begin(), cyc->end())};
  return std::nullopt;
}

namespace detail {

// First 5-subset (lexicographic) inducing at least two P4s, classified.
// When skip_c5 is set, C5 subsets are passed over.
inline std::optional<ObstructionInstance> find_dense_p4_quintet(const Graph& g, bool skip_c5) {
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          for (int e = d + 1; e < n; ++e) {
            const std::array<int, 5> vs = {a, b, c, d, e};
            if (p4_count_within(g, vs, 2) < 2) continue;
            auto sub = induced(g, VertexSet(vs.begin(), vs.end()));
            auto inst = classify_5graph(sub.graph);
            if (!inst)
              throw std::logic_error("a 5-set with two induced P4s failed to classify");
            if (skip_c5 && inst->kind == ObstructionKind::C5) continue;
            for (int& pos : inst->embedding) pos = sub.to_parent[pos];
            return inst;
          }
  return std::nullopt;
}

}  // namespace detail

// First five-vertex obstruction (none means the graph is P4-sparse).
inline std::optional<ObstructionInstance> find_p4_sparse_obstruction(const Graph& g) {
  return detail::find_dense_p4_quintet(g, /*skip_c5=*/false);
}

// Same search with C5 excluded (none means extended P4-sparse).
inline std::optional<ObstructionInstance> find_extended_obstruction(const Graph& g) {
  return detail::find_dense_p4_quintet(g, /*skip_c5=*/true);
}

// The complete family of inclusion-minimal local deletion sets for one
// obstruction kind under one target, expressed in canonical positions.
struct BranchRuleSet {
  ObstructionKind kind{};
  DeletionMode mode{};
  DeletionTarget target{};
  std::vector<EdgeSet> edge_rules;      // mode == Edge; Edge{u,v} are positions
  std::vector<VertexSet> vertex_rules;  // mode == Vertex; entries are positions

  std::size_t size() const { return mode == DeletionMode::Edge ? edge_rules.size() : vertex_rules.size(); }

  // Rule cardinalities as a sorted multiset, for table comparisons.
  std::vector<int> cardinalities() const {
    std::vector<int> out;
    if (mode == DeletionMode::Edge)
      for (const auto& r : edge_rules) out.push_back(static_cast<int>(r.size()));
    else
      for (const auto& r : vertex_rules) out.push_back(static_cast<int>(r.size()));
    std::sort(out.begin(), out.end());
    return out;
  }
};

namespace detail {

inline int rule_key(ObstructionKind k, DeletionMode m, DeletionTarget t) {
  return static_cast<int>(k) * 4 + static_cast<int>(m) * 2 + static_cast<int>(t);
}

struct RuleCache {
  std::map<int, BranchRuleSet> table;

  RuleCache() {
    for (int ki = 0; ki < kObstructionKindCount; ++ki) {
      const auto kind = static_cast<ObstructionKind>(ki);
      const Graph& pattern = canonical_pattern(kind);
      for (DeletionMode mode : {DeletionMode::Edge, DeletionMode::Vertex}) {
        for (DeletionTarget target : {DeletionTarget::P4Free, DeletionTarget::P4AndC4Free}) {
          if (satisfies_target(pattern, target)) continue;  // nothing to destroy
          BranchRuleSet rs;
          rs.kind = kind;
          rs.mode = mode;
          rs.target = target;
          if (mode == DeletionMode::Edge)
            rs.edge_rules = minimal_local_edge_solutions(pattern, target);
          else
            rs.vertex_rules = minimal_local_vertex_solutions(pattern, target);
          table.emplace(rule_key(kind, mode, target), std::move(rs));
        }
      }
    }
  }
};

}  // namespace detail

inline const BranchRuleSet& synthesize_rules(ObstructionKind kind, DeletionMode mode, DeletionTarget target) {
  static const detail::RuleCache cache;  // built once, read-only afterwards
  auto it = cache.table.find(detail::rule_key(kind, mode, target));
  if (it == cache.table.end())
    throw std::invalid_argument(std::string("no branching rules for ") + obstruction_name(kind) +
                                " under target " + deletion_target_name(target) +
                                " (pattern already satisfies it)");
  return it->second;
}

// The three single-vertex rules and the unique pair rule that destroy both
// P4s of a non-C5 five-vertex obstruction.
struct BreakingVertices {
  std::array<int, 3> singles{};  // canonical positions, ascending
  std::array<int, 2> pair{};     // canonical positions, ascending
};

inline BreakingVertices breaking_vertices(ObstructionKind kind) {
  bool extended = false;
  for (ObstructionKind k : kExtendedKinds) extended = extended || k == kind;
  if (!extended)
    throw std::invalid_argument(std::string(obstruction_name(kind)) + " has no breaking-vertex rule shape");
  const BranchRuleSet& rs = synthesize_rules(kind, DeletionMode::Vertex, DeletionTarget::P4Free);
  BreakingVertices out;
  int singles = 0, pairs = 0;
  for (const VertexSet& rule : rs.vertex_rules) {
    if (rule.size() == 1) {
      if (singles == 3) throw std::logic_error("more than three single-vertex rules");
      out.singles[singles++] = rule[0];
    } else if (rule.size() == 2) {
      out.pair = {rule[0], rule[1]};
      ++pairs;
    } else {
      throw std::logic_error("unexpected rule size in breaking-vertex family");
    }
  }
  if (singles != 3 || pairs != 1) throw std::logic_error("breaking-vertex family is not 3 singles + 1 pair");
  std::sort(out.singles.begin(), out.singles.end());
  return out;
}

// Maps a rule through an instance's embedding into concrete graph elements.
inline EdgeSet map_edge_rule(const EdgeSet& rule, const std::vector<int>& embedding) {
  EdgeSet out;
  out.reserve(rule.size());
  for (const Edge& e : rule) out.emplace_back(embedding[e.u], embedding[e.v]);
  return canonical_edge_set(std::move(out));
}

inline VertexSet map_vertex_rule(const VertexSet& rule, const std::vector<int>& embedding) {
  VertexSet out;
  out.reserve(rule.size());
  for (int p : rule) out.push_back(embedding[p]);
  return canonical_vertex_set(std::move(out));
}

// Checks that an instance's embedding really induces its kind's pattern.
inline bool verify_instance(const Graph& g, const ObstructionInstance& inst) {
  const Graph& pattern = canonical_pattern(inst.kind);
  const int n = pattern.vertex_count();
  if (static_cast<int>(inst.embedding.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pattern.has_edge(i, j) != g.has_edge(inst.embedding[i], inst.embedding[j])) return false;
  return true;
}

}  // namespace p4tract
