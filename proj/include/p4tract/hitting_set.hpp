#pragma once

// Refined cograph vertex-deletion: the induced P4s form an implicit
// 4-hitting-set instance. Marking a vertex excludes it from the solution
// (removing it from every set it lies in); dominated vertices are marked for
// free, sets whose effective size drops to three or less get branched on
// directly, five-vertex obstructions other than C5 are branched through
// their breaking vertices, and the leftover extended P4-sparse graph is
// finished exactly: isolated C5s lose any two unmarked vertices, then the
// mark-constrained spider routine closes the remainder.

#include <algorithm>
#include <cassert>

#include "p4tract/obstructions.hpp"
#include "p4tract/scan.hpp"
#include "p4tract/search.hpp"
#include "p4tract/spider_solvers.hpp"

namespace p4tract {

struct HittingState {
  Graph graph;
  std::vector<int> to_orig;                 // current id -> original id
  std::vector<char> marked;                 // by current id
  std::vector<std::array<int, 4>> p4_sets;  // vertex sets of all induced P4s
  int budget = 0;
  VertexSet chosen;                         // original ids

  int effective_size(const std::array<int, 4>& set) const {
    int s = 0;
    for (int v : set) s += marked[v] ? 0 : 1;
    return s;
  }
};

struct HittingSetOptions {
  // Re-enumerate the P4 sets after every mutation and compare against the
  // incrementally maintained collection.
  bool verify_state = false;
};

namespace detail {

inline HittingState make_hitting_state(const Graph& g, int k) {
  HittingState st;
  st.graph = g;
  st.to_orig.resize(static_cast<std::size_t>(g.vertex_count()));
  for (int i = 0; i < g.vertex_count(); ++i) st.to_orig[i] = i;
  st.marked.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  st.p4_sets = all_p4_vertex_sets(g);
  st.budget = k;
  return st;
}

inline bool hitting_state_consistent(const HittingState& st) {
  if (st.p4_sets != all_p4_vertex_sets(st.graph)) return false;
  for (int orig : st.chosen)
    for (std::size_t cur = 0; cur < st.to_orig.size(); ++cur)
      if (st.to_orig[cur] == orig) return false;  // chosen vertices are gone from the graph
  return true;
}

// Deletes vertices (current ids) into the solution. Vertex deletion never
// creates induced P4s, so maintenance is drop-and-remap.
inline void include_vertices(HittingState& st, const VertexSet& del, const HittingSetOptions& opts) {
  const VertexSet drop = canonical_vertex_set(del);
  for (int v : drop) {
    assert(!st.marked[v]);
    st.chosen.push_back(st.to_orig[v]);
  }
  st.budget -= static_cast<int>(drop.size());

  auto sub = delete_vertices(st.graph, drop);
  std::vector<int> new_of_old(st.to_orig.size(), -1);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) new_of_old[sub.to_parent[i]] = static_cast<int>(i);

  std::vector<std::array<int, 4>> kept;
  kept.reserve(st.p4_sets.size());
  for (const auto& set : st.p4_sets) {
    std::array<int, 4> remapped{};
    bool alive = true;
    for (int i = 0; i < 4 && alive; ++i) {
      remapped[i] = new_of_old[set[i]];
      alive = remapped[i] >= 0;
    }
    if (alive) kept.push_back(remapped);
  }
  std::vector<char> new_marked(sub.to_parent.size());
  std::vector<int> new_ids(sub.to_parent.size());
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    new_marked[i] = st.marked[sub.to_parent[i]];
    new_ids[i] = st.to_orig[sub.to_parent[i]];
  }
  st.graph = std::move(sub.graph);
  st.to_orig = std::move(new_ids);
  st.marked = std::move(new_marked);
  st.p4_sets = std::move(kept);
  if (opts.verify_state && !hitting_state_consistent(st))
    throw std::logic_error("hitting state lost sync with the graph");
}

// First (u, v): u unmarked and in at least one P4, v unmarked, v != u, and
// v lies in every P4 containing u. Any solution using u could use v
// instead, so u can be marked. Lexicographic scan for determinism.
inline std::optional<std::pair<int, int>> find_dominated(const HittingState& st) {
  const int n = st.graph.vertex_count();
  for (int u = 0; u < n; ++u) {
    if (st.marked[u]) continue;
    bool in_any = false;
    std::vector<char> candidate(static_cast<std::size_t>(n), 1);
    candidate[u] = 0;
    for (const auto& set : st.p4_sets) {
      if (std::find(set.begin(), set.end(), u) == set.end()) continue;
      in_any = true;
      std::vector<char> member(static_cast<std::size_t>(n), 0);
      for (int w : set) member[w] = 1;
      for (int w = 0; w < n; ++w) candidate[w] = candidate[w] && member[w];
    }
    if (!in_any) continue;
    for (int v = 0; v < n; ++v)
      if (candidate[v] && !st.marked[v]) return std::make_pair(u, v);
  }
  return std::nullopt;
}

class HittingSearch {
 public:
  HittingSearch(const HittingSetOptions& opts) : opts_(opts) {}

  bool run(HittingState st, int depth, SearchStats& stats, VertexSet& result) {
    ++stats.nodes;
    stats.max_depth = std::max<std::uint64_t>(stats.max_depth, static_cast<std::uint64_t>(depth));
    for (;;) {
      if (st.p4_sets.empty()) {  // P4-free already; nothing left to hit
        ++stats.leaves;
        result = st.chosen;
        return true;
      }
      // A set with every vertex marked can no longer be hit.
      for (const auto& set : st.p4_sets)
        if (st.effective_size(set) == 0) {
          ++stats.leaves;
          return false;
        }
      if (st.budget <= 0) {
        ++stats.leaves;
        return false;
      }

      // Forced moves first: a set with one unmarked vertex pins it.
      if (const auto* s1 = first_set_of_effective_size(st, 1)) {
        for (int v : *s1)
          if (!st.marked[v]) {
            include_vertices(st, {v}, opts_);
            break;
          }
        continue;
      }
      if (const auto* s2 = first_set_of_effective_size(st, 2))
        return branch_on_small_set(std::move(st), *s2, depth, stats, result);
      if (const auto* s3 = first_set_of_effective_size(st, 3))
        return branch_on_small_set(std::move(st), *s3, depth, stats, result);

      if (auto dom = find_dominated(st)) {
        st.marked[dom->first] = 1;
        continue;
      }

      if (auto inst = find_extended_obstruction(st.graph))
        return branch_on_obstruction(std::move(st), *inst, depth, stats, result);

      return finish(std::move(st), stats, result);
    }
  }

 private:
  const std::array<int, 4>* first_set_of_effective_size(const HittingState& st, int size) const {
    for (const auto& set : st.p4_sets)
      if (st.effective_size(set) == size) return &set;
    return nullptr;
  }

  // Hit the set through its unmarked vertices in id order: take the first,
  // or mark it and take the second, and so on. The last unmarked vertex is
  // never merely marked, so the cases are exhaustive.
  bool branch_on_small_set(HittingState st, std::array<int, 4> set, int depth, SearchStats& stats,
                           VertexSet& result) {
    VertexSet open;
    for (int v : set)
      if (!st.marked[v]) open.push_back(v);
    std::sort(open.begin(), open.end());
    ++stats.branch_histogram[static_cast<int>(ObstructionKind::P4)];
    for (std::size_t i = 0; i < open.size(); ++i) {
      HittingState child = st;
      for (std::size_t j = 0; j < i; ++j) child.marked[open[j]] = 1;
      include_vertices(child, {open[i]}, opts_);
      if (run(std::move(child), depth + 1, stats, result)) return true;
    }
    return false;
  }

  bool branch_on_obstruction(HittingState st, const ObstructionInstance& inst, int depth,
                             SearchStats& stats, VertexSet& result) {
    const BreakingVertices bv = breaking_vertices(inst.kind);
    VertexSet open;  // unmarked breaking vertices, canonical position order
    for (int pos : bv.singles) {
      const int v = inst.embedding[pos];
      if (!st.marked[v]) open.push_back(v);
    }
    const int p0 = inst.embedding[bv.pair[0]];
    const int p1 = inst.embedding[bv.pair[1]];
    const bool pair_allowed = !st.marked[p0] && !st.marked[p1] && st.budget >= 2;

    if (open.empty() && !pair_allowed) {
      ++stats.leaves;
      return false;
    }
    ++stats.branch_histogram[static_cast<int>(inst.kind)];
    for (std::size_t i = 0; i < open.size(); ++i) {
      HittingState child = st;
      for (std::size_t j = 0; j < i; ++j) child.marked[open[j]] = 1;
      include_vertices(child, {open[i]}, opts_);
      if (i > 0 && opts_.verify_state) {
        // A marked breaking vertex is not dominated, so a P4 avoiding the
        // included vertex still holds it: some set is now short a candidate.
        bool shrunk = false;
        for (const auto& set : child.p4_sets) shrunk = shrunk || child.effective_size(set) <= 3;
        if (!shrunk) throw std::logic_error("marking a breaking vertex failed to shrink any set");
      }
      if (run(std::move(child), depth + 1, stats, result)) return true;
    }
    if (pair_allowed) {
      HittingState child = std::move(st);
      for (int v : open) child.marked[v] = 1;
      include_vertices(child, {p0, p1}, opts_);
      if (run(std::move(child), depth + 1, stats, result)) return true;
    }
    return false;
  }

  // Extended P4-sparse endgame. Every remaining C5 shares no P4 with the
  // rest of the graph, so any two of its unmarked vertices are optimal; a
  // C5 with four marked vertices contains an unhittable P4.
  bool finish(HittingState st, SearchStats& stats, VertexSet& result) {
    const auto c5s = all_induced_c5_sets(st.graph);
    VertexSet cleanup;
    for (const auto& cyc : c5s) {
      for (const auto& set : st.p4_sets) {
        int overlap = 0;
        for (int v : set) overlap += std::binary_search(cyc.begin(), cyc.end(), v) ? 1 : 0;
        if (overlap != 0 && overlap != 4)
          throw std::logic_error("a residual C5 overlaps a foreign P4");
      }
      VertexSet open;
      for (int v : cyc)
        if (!st.marked[v]) open.push_back(v);
      if (open.size() < 2) {  // four or five marked: some P4 of the cycle is dead
        ++stats.leaves;
        return false;
      }
      cleanup.push_back(open[0]);
      cleanup.push_back(open[1]);
    }
    if (static_cast<int>(cleanup.size()) > st.budget) {
      ++stats.leaves;
      return false;
    }
    if (!cleanup.empty()) include_vertices(st, cleanup, opts_);

    ++stats.subroutine_calls;
    ++stats.leaves;
    VertexSet forbidden;
    for (int v = 0; v < st.graph.vertex_count(); ++v)
      if (st.marked[v]) forbidden.push_back(v);
    const StructuredSolution fin = constrained_spider_vertex_deletion(st.graph, forbidden);
    if (!fin.feasible || fin.cost > st.budget) return false;
    result = st.chosen;
    for (int v : fin.vertices) result.push_back(st.to_orig[v]);
    return true;
  }

  HittingSetOptions opts_;
};

}  // namespace detail

inline SolveResult solve_cograph_vertex_hs(const Graph& g, int k, const SolveOptions& opts = {},
                                           const HittingSetOptions& hs_opts = {}) {
  (void)opts;  // sibling states are independent, but this driver stays sequential
  if (k < 0) throw std::invalid_argument("budget k must be nonnegative");
  SolveResult res;
  VertexSet chosen;
  detail::HittingSearch search(hs_opts);
  const bool ok = search.run(detail::make_hitting_state(g, k), 0, res.stats, chosen);
  res.solution.feasible = ok;
  if (ok) {
    res.solution.vertices = canonical_vertex_set(std::move(chosen));
    res.solution.budget_used = static_cast<int>(res.solution.vertices.size());
  }
  return res;
}

}  // namespace p4tract
