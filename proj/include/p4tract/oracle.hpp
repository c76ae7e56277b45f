#pragma once

// Brute-force exact solvers used as ground truth. Candidate deletion sets
// are enumerated by ascending cardinality, and within one cardinality in
// lexicographic order, so the first hit is a minimum and the reported
// witness is deterministic. Deliberately unclever.

#include <cstdlib>
#include <functional>
#include <optional>
#include <string>

#include "p4tract/graph.hpp"
#include "p4tract/scan.hpp"

namespace p4tract {

struct OracleLimits {
  int max_edge_elements = 25;    // candidate edges for subset enumeration
  int max_vertex_elements = 14;  // candidate vertices for subset enumeration

  // P4TRACT_MAX_ORACLE_N, when set, replaces both element bounds.
  static OracleLimits from_env() {
    OracleLimits lim;
    if (const char* s = std::getenv("P4TRACT_MAX_ORACLE_N")) {
      const int v = std::atoi(s);
      if (v > 0) {
        lim.max_edge_elements = v;
        lim.max_vertex_elements = v;
      }
    }
    return lim;
  }
};

struct EdgeOracleResult {
  int minimum = 0;
  EdgeSet witness;
  std::uint64_t explored = 0;
};

struct VertexOracleResult {
  int minimum = 0;
  VertexSet witness;
  std::uint64_t explored = 0;
};

namespace detail {

// Visits all size-k index subsets of {0..m-1} in lexicographic order until
// the visitor returns true; reports whether a visitor accepted.
inline bool for_each_combination(int m, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > m) return false;
  for (;;) {
    if (visit(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

inline EdgeOracleResult oracle_min_edge_deletion(const Graph& g, DeletionTarget target,
                                                 const EdgeSet& forbidden = {},
                                                 const OracleLimits& limits = {}) {
  const EdgeSet banned = canonical_edge_set(forbidden);
  EdgeSet candidates;
  for (const Edge& e : g.edges())
    if (!std::binary_search(banned.begin(), banned.end(), e)) candidates.push_back(e);
  if (static_cast<int>(candidates.size()) > limits.max_edge_elements)
    throw std::invalid_argument("edge oracle: instance exceeds the configured size guard (" +
                                std::to_string(candidates.size()) + " candidate edges)");

  EdgeOracleResult res;
  const int m = static_cast<int>(candidates.size());
  for (int k = 0; k <= m; ++k) {
    bool found = detail::for_each_combination(m, k, [&](const std::vector<int>& idx) {
      ++res.explored;
      Graph h = g;
      for (int i : idx) h.remove_edge(candidates[i].u, candidates[i].v);
      if (!satisfies_target(h, target)) return false;
      res.minimum = k;
      res.witness.clear();
      for (int i : idx) res.witness.push_back(candidates[i]);
      return true;
    });
    if (found) return res;
  }
  throw std::runtime_error("edge oracle: the forbidden edges block every deletion set");
}

inline VertexOracleResult oracle_min_vertex_deletion(const Graph& g, DeletionTarget target,
                                                     const VertexSet& forbidden = {},
                                                     const OracleLimits& limits = {}) {
  const VertexSet banned = canonical_vertex_set(forbidden);
  VertexSet candidates;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!std::binary_search(banned.begin(), banned.end(), v)) candidates.push_back(v);
  if (static_cast<int>(candidates.size()) > limits.max_vertex_elements)
    throw std::invalid_argument("vertex oracle: instance exceeds the configured size guard (" +
                                std::to_string(candidates.size()) + " candidate vertices)");

  VertexOracleResult res;
  const int m = static_cast<int>(candidates.size());
  for (int k = 0; k <= m; ++k) {
    bool found = detail::for_each_combination(m, k, [&](const std::vector<int>& idx) {
      ++res.explored;
      VertexSet drop;
      for (int i : idx) drop.push_back(candidates[i]);
      if (!satisfies_target(delete_vertices(g, drop).graph, target)) return false;
      res.minimum = k;
      res.witness = std::move(drop);
      return true;
    });
    if (found) return res;
  }
  // Deleting every unforbidden vertex can still fail only if the forbidden
  // vertices alone induce a violation.
  throw std::logic_error("vertex oracle: forbidden vertices alone violate the target");
}

// Constrained feasibility probe: the minimum when one exists, nullopt when
// the forbidden set blocks every deletion set.
inline std::optional<VertexOracleResult> oracle_min_vertex_deletion_or_infeasible(
    const Graph& g, DeletionTarget target, const VertexSet& forbidden, const OracleLimits& limits = {}) {
  const VertexSet banned = canonical_vertex_set(forbidden);
  if (!satisfies_target(induced(g, banned).graph, target)) return std::nullopt;
  return oracle_min_vertex_deletion(g, target, forbidden, limits);
}

// All inclusion-minimal edge deletion sets of a small pattern achieving the
// target: ascending-size enumeration, supersets of accepted sets dropped.
inline std::vector<EdgeSet> minimal_local_edge_solutions(const Graph& pattern, DeletionTarget target) {
  if (pattern.vertex_count() > 5) throw std::invalid_argument("local solution enumeration expects at most 5 vertices");
  const EdgeSet all = pattern.edges();
  const int m = static_cast<int>(all.size());
  std::vector<EdgeSet> family;
  for (int k = 0; k <= m; ++k) {
    detail::for_each_combination(m, k, [&](const std::vector<int>& idx) {
      EdgeSet cand;
      for (int i : idx) cand.push_back(all[i]);
      for (const EdgeSet& known : family) {
        if (std::includes(cand.begin(), cand.end(), known.begin(), known.end())) return false;  // not minimal
      }
      Graph h = pattern;
      for (const Edge& e : cand) h.remove_edge(e.u, e.v);
      if (satisfies_target(h, target)) family.push_back(std::move(cand));
      return false;  // keep enumerating: we want the whole family
    });
  }
  return family;
}

inline std::vector<VertexSet> minimal_local_vertex_solutions(const Graph& pattern, DeletionTarget target) {
  if (pattern.vertex_count() > 5) throw std::invalid_argument("local solution enumeration expects at most 5 vertices");
  const int n = pattern.vertex_count();
  std::vector<VertexSet> family;
  for (int k = 0; k <= n; ++k) {
    detail::for_each_combination(n, k, [&](const std::vector<int>& idx) {
      VertexSet cand(idx.begin(), idx.end());
      for (const VertexSet& known : family) {
        if (std::includes(cand.begin(), cand.end(), known.begin(), known.end())) return false;
      }
      if (satisfies_target(delete_vertices(pattern, cand).graph, target)) family.push_back(std::move(cand));
      return false;
    });
  }
  return family;
}

}  // namespace p4tract
