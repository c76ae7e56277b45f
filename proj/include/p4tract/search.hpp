#pragma once

// Bounded search trees. Each node checks the target class first, fails when
// the budget is spent, finishes exactly on obstruction-free structure, and
// otherwise branches over the complete minimal local deletion family of one
// located obstruction. Decision semantics: the first feasible branch wins,
// in synthesized rule order. Vertex solvers carry an id map so deletion
// sets are always reported in the ids of the original input.

#include <array>
#include <cstdint>
#include <future>
#include <string>

#include "p4tract/decomposition.hpp"
#include "p4tract/graph.hpp"
#include "p4tract/obstructions.hpp"
#include "p4tract/scan.hpp"
#include "p4tract/spider_solvers.hpp"

namespace p4tract {

enum class Problem {
  CographEdge,
  TpEdge,
  CographVertex,
  CographVertexHS,
  TpVertex,
  CographEdgeNaive,
  TpEdgeNaive,
};

inline const char* problem_name(Problem p) {
  switch (p) {
    case Problem::CographEdge: return "cograph-edge";
    case Problem::TpEdge: return "tp-edge";
    case Problem::CographVertex: return "cograph-vertex";
    case Problem::CographVertexHS: return "cograph-vertex-hs";
    case Problem::TpVertex: return "tp-vertex";
    case Problem::CographEdgeNaive: return "cograph-edge-naive";
    case Problem::TpEdgeNaive: return "tp-edge-naive";
  }
  return "?";
}

inline std::optional<Problem> parse_problem(const std::string& s) {
  for (Problem p : {Problem::CographEdge, Problem::TpEdge, Problem::CographVertex, Problem::CographVertexHS,
                    Problem::TpVertex, Problem::CographEdgeNaive, Problem::TpEdgeNaive})
    if (s == problem_name(p)) return p;
  return std::nullopt;
}

inline bool is_edge_problem(Problem p) {
  return p == Problem::CographEdge || p == Problem::TpEdge || p == Problem::CographEdgeNaive ||
         p == Problem::TpEdgeNaive;
}

inline DeletionTarget problem_target(Problem p) {
  switch (p) {
    case Problem::TpEdge:
    case Problem::TpVertex:
    case Problem::TpEdgeNaive:
      return DeletionTarget::P4AndC4Free;
    default:
      return DeletionTarget::P4Free;
  }
}

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t max_depth = 0;
  std::uint64_t subroutine_calls = 0;
  std::array<std::uint64_t, kObstructionKindCount> branch_histogram{};

  void merge(const SearchStats& o) {
    nodes += o.nodes;
    leaves += o.leaves;
    max_depth = std::max(max_depth, o.max_depth);
    subroutine_calls += o.subroutine_calls;
    for (int i = 0; i < kObstructionKindCount; ++i) branch_histogram[i] += o.branch_histogram[i];
  }

  std::uint64_t branch_nodes() const {
    std::uint64_t s = 0;
    for (auto v : branch_histogram) s += v;
    return s;
  }
};

struct Solution {
  bool feasible = false;
  EdgeSet edges;       // edge problems, original ids
  VertexSet vertices;  // vertex problems, original ids
  int budget_used = 0;
};

struct SolveResult {
  Solution solution;
  SearchStats stats;
};

struct SolveOptions {
  int threads = 1;  // > 1 explores the root's branches concurrently
};

// Applies a solution to the input and scans the result for the problem's
// target; used before any solution leaves the library boundary.
inline bool validate_solution(const Graph& g, Problem p, const Solution& sol) {
  if (!sol.feasible) return true;
  if (is_edge_problem(p)) {
    if (static_cast<int>(sol.edges.size()) != sol.budget_used) return false;
    return satisfies_target(delete_edges(g, sol.edges), problem_target(p));
  }
  if (static_cast<int>(sol.vertices.size()) != sol.budget_used) return false;
  return satisfies_target(delete_vertices(g, sol.vertices).graph, problem_target(p));
}

namespace detail {

// ---------------------------------------------------------------------------
// Edge-deletion searches (relaxation-guided and naive baselines).

class EdgeSearch {
 public:
  explicit EdgeSearch(Problem mode) : mode_(mode) {}

  SolveResult run(const Graph& g, int k, int threads) {
    if (k < 0) throw std::invalid_argument("budget k must be nonnegative");
    SolveResult res;
    EdgeSet chosen;
    const bool ok = threads > 1 ? node_parallel(g, k, chosen, res.stats, threads)
                                : node(g, k, 0, chosen, res.stats);
    res.solution.feasible = ok;
    if (ok) {
      res.solution.edges = canonical_edge_set(std::move(chosen));
      res.solution.budget_used = static_cast<int>(res.solution.edges.size());
    }
    return res;
  }

 private:
  bool satisfied(const Graph& g) const {
    if (!is_cograph(g)) return false;
    return problem_target(mode_) == DeletionTarget::P4Free || !has_induced_c4(g);
  }

  struct Step {
    std::optional<ObstructionInstance> inst;
    const BranchRuleSet* rules = nullptr;
    std::optional<StructuredSolution> finish;
  };

  // Either the obstruction to branch on or the exact finishing solution.
  Step plan(const Graph& g) const {
    Step step;
    switch (mode_) {
      case Problem::CographEdge:
        if (is_p4_sparse(g)) {
          step.finish = spider_edge_deletion(g);
        } else {
          step.inst = find_p4_sparse_obstruction(g);
          step.rules = &synthesize_rules(step.inst->kind, DeletionMode::Edge, DeletionTarget::P4Free);
        }
        break;
      case Problem::TpEdge:
        if (auto c4 = find_c4(g)) {
          step.inst = std::move(c4);
          step.rules = &synthesize_rules(ObstructionKind::C4, DeletionMode::Edge, DeletionTarget::P4AndC4Free);
        } else if (is_p4_sparse(g)) {
          step.finish = tp_edge_final(g);
        } else {
          step.inst = find_p4_sparse_obstruction(g);
          step.rules = &synthesize_rules(step.inst->kind, DeletionMode::Edge, DeletionTarget::P4Free);
        }
        break;
      case Problem::CographEdgeNaive:
        step.inst = find_p4(g);
        step.rules = &synthesize_rules(ObstructionKind::P4, DeletionMode::Edge, DeletionTarget::P4Free);
        break;
      case Problem::TpEdgeNaive:
        if (auto c4 = find_c4(g)) {
          step.inst = std::move(c4);
          step.rules = &synthesize_rules(ObstructionKind::C4, DeletionMode::Edge, DeletionTarget::P4AndC4Free);
        } else {
          step.inst = find_p4(g);
          step.rules = &synthesize_rules(ObstructionKind::P4, DeletionMode::Edge, DeletionTarget::P4Free);
        }
        break;
      default:
        throw std::logic_error("not an edge search mode");
    }
    return step;
  }

  bool node(const Graph& g, int k, int depth, EdgeSet& chosen, SearchStats& st) {
    ++st.nodes;
    st.max_depth = std::max<std::uint64_t>(st.max_depth, static_cast<std::uint64_t>(depth));
    if (satisfied(g)) {
      ++st.leaves;
      return true;
    }
    if (k <= 0) {
      ++st.leaves;
      return false;
    }
    Step step = plan(g);
    if (step.finish) {
      ++st.subroutine_calls;
      ++st.leaves;
      if (step.finish->cost <= k) {
        chosen.insert(chosen.end(), step.finish->edges.begin(), step.finish->edges.end());
        return true;
      }
      return false;
    }

    bool any = false;
    for (const EdgeSet& rule : step.rules->edge_rules)
      any = any || static_cast<int>(rule.size()) <= k;
    if (!any) {  // every local remedy exceeds the budget
      ++st.leaves;
      return false;
    }
    ++st.branch_histogram[static_cast<int>(step.inst->kind)];
    for (const EdgeSet& rule : step.rules->edge_rules) {
      if (static_cast<int>(rule.size()) > k) continue;
      const EdgeSet real = map_edge_rule(rule, step.inst->embedding);
      const std::size_t mark = chosen.size();
      chosen.insert(chosen.end(), real.begin(), real.end());
      if (node(delete_edges(g, real), k - static_cast<int>(rule.size()), depth + 1, chosen, st)) return true;
      chosen.resize(mark);
    }
    return false;
  }

  // Root-level variant: sibling subtrees run concurrently and are all
  // explored; feasibility is still decided in canonical rule order, so the
  // reported witness matches the sequential one.
  bool node_parallel(const Graph& g, int k, EdgeSet& chosen, SearchStats& st, int threads) {
    ++st.nodes;
    if (satisfied(g)) {
      ++st.leaves;
      return true;
    }
    if (k <= 0) {
      ++st.leaves;
      return false;
    }
    Step step = plan(g);
    if (step.finish) {
      ++st.subroutine_calls;
      ++st.leaves;
      if (step.finish->cost <= k) {
        chosen.insert(chosen.end(), step.finish->edges.begin(), step.finish->edges.end());
        return true;
      }
      return false;
    }
    std::vector<const EdgeSet*> applicable;
    for (const EdgeSet& rule : step.rules->edge_rules)
      if (static_cast<int>(rule.size()) <= k) applicable.push_back(&rule);
    if (applicable.empty()) {
      ++st.leaves;
      return false;
    }
    ++st.branch_histogram[static_cast<int>(step.inst->kind)];

    struct Branch {
      bool ok = false;
      EdgeSet chosen;
      SearchStats stats;
    };
    std::vector<Branch> results(applicable.size());
    std::size_t next = 0;
    while (next < applicable.size()) {
      const std::size_t batch = std::min<std::size_t>(static_cast<std::size_t>(threads), applicable.size() - next);
      std::vector<std::future<void>> wave;
      for (std::size_t i = 0; i < batch; ++i) {
        const std::size_t idx = next + i;
        wave.push_back(std::async(std::launch::async, [&, idx] {
          const EdgeSet& rule = *applicable[idx];
          const EdgeSet real = map_edge_rule(rule, step.inst->embedding);
          Branch& b = results[idx];
          b.chosen = real;
          b.ok = node(delete_edges(g, real), k - static_cast<int>(rule.size()), 1, b.chosen, b.stats);
        }));
      }
      for (auto& f : wave) f.get();
      next += batch;
    }
    bool ok = false;
    for (Branch& b : results) {
      st.merge(b.stats);
      if (!ok && b.ok) {
        ok = true;
        chosen.insert(chosen.end(), b.chosen.begin(), b.chosen.end());
      }
    }
    return ok;
  }

  Problem mode_;
};

// ---------------------------------------------------------------------------
// Vertex-deletion searches.

class VertexSearch {
 public:
  explicit VertexSearch(Problem mode) : mode_(mode) {}

  SolveResult run(const Graph& g, int k, int threads) {
    if (k < 0) throw std::invalid_argument("budget k must be nonnegative");
    SolveResult res;
    VertexSet chosen;
    std::vector<int> ids(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) ids[i] = i;
    const bool ok = threads > 1 ? node_parallel(g, ids, k, chosen, res.stats, threads)
                                : node(g, ids, k, 0, chosen, res.stats);
    res.solution.feasible = ok;
    if (ok) {
      res.solution.vertices = canonical_vertex_set(std::move(chosen));
      res.solution.budget_used = static_cast<int>(res.solution.vertices.size());
    }
    return res;
  }

 private:
  bool satisfied(const Graph& g) const {
    if (!is_cograph(g)) return false;
    return mode_ != Problem::TpVertex || !has_induced_c4(g);
  }

  DeletionTarget rule_target() const {
    return mode_ == Problem::TpVertex ? DeletionTarget::P4AndC4Free : DeletionTarget::P4Free;
  }

  StructuredSolution finish(const Graph& g) const {
    return mode_ == Problem::TpVertex ? tp_vertex_final(g) : spider_vertex_deletion(g);
  }

  bool node(const Graph& g, const std::vector<int>& to_orig, int k, int depth, VertexSet& chosen,
            SearchStats& st) {
    ++st.nodes;
    st.max_depth = std::max<std::uint64_t>(st.max_depth, static_cast<std::uint64_t>(depth));
    if (satisfied(g)) {
      ++st.leaves;
      return true;
    }
    if (k <= 0) {
      ++st.leaves;
      return false;
    }
    if (is_p4_sparse(g)) {
      ++st.subroutine_calls;
      ++st.leaves;
      StructuredSolution sol = finish(g);
      if (sol.cost <= k) {
        for (int v : sol.vertices) chosen.push_back(to_orig[v]);
        return true;
      }
      return false;
    }
    const auto inst = find_p4_sparse_obstruction(g);
    const BranchRuleSet& rules = synthesize_rules(inst->kind, DeletionMode::Vertex, rule_target());
    bool any = false;
    for (const VertexSet& rule : rules.vertex_rules) any = any || static_cast<int>(rule.size()) <= k;
    if (!any) {
      ++st.leaves;
      return false;
    }
    ++st.branch_histogram[static_cast<int>(inst->kind)];
    for (const VertexSet& rule : rules.vertex_rules) {
      if (static_cast<int>(rule.size()) > k) continue;
      const VertexSet real = map_vertex_rule(rule, inst->embedding);
      const std::size_t mark = chosen.size();
      for (int v : real) chosen.push_back(to_orig[v]);
      auto sub = delete_vertices(g, real);
      std::vector<int> child_ids(sub.to_parent.size());
      for (std::size_t i = 0; i < sub.to_parent.size(); ++i) child_ids[i] = to_orig[sub.to_parent[i]];
      if (node(sub.graph, child_ids, k - static_cast<int>(rule.size()), depth + 1, chosen, st)) return true;
      chosen.resize(mark);
    }
    return false;
  }

  bool node_parallel(const Graph& g, const std::vector<int>& to_orig, int k, VertexSet& chosen,
                     SearchStats& st, int threads) {
    ++st.nodes;
    if (satisfied(g)) {
      ++st.leaves;
      return true;
    }
    if (k <= 0) {
      ++st.leaves;
      return false;
    }
    if (is_p4_sparse(g)) {
      ++st.subroutine_calls;
      ++st.leaves;
      StructuredSolution sol = finish(g);
      if (sol.cost <= k) {
        for (int v : sol.vertices) chosen.push_back(to_orig[v]);
        return true;
      }
      return false;
    }
    const auto inst = find_p4_sparse_obstruction(g);
    const BranchRuleSet& rules = synthesize_rules(inst->kind, DeletionMode::Vertex, rule_target());
    std::vector<const VertexSet*> applicable;
    for (const VertexSet& rule : rules.vertex_rules)
      if (static_cast<int>(rule.size()) <= k) applicable.push_back(&rule);
    if (applicable.empty()) {
      ++st.leaves;
      return false;
    }
    ++st.branch_histogram[static_cast<int>(inst->kind)];

    struct Branch {
      bool ok = false;
      VertexSet chosen;
      SearchStats stats;
    };
    std::vector<Branch> results(applicable.size());
    std::size_t next = 0;
    while (next < applicable.size()) {
      const std::size_t batch = std::min<std::size_t>(static_cast<std::size_t>(threads), applicable.size() - next);
      std::vector<std::future<void>> wave;
      for (std::size_t i = 0; i < batch; ++i) {
        const std::size_t idx = next + i;
        wave.push_back(std::async(std::launch::async, [&, idx] {
          const VertexSet real = map_vertex_rule(*applicable[idx], inst->embedding);
          Branch& b = results[idx];
          for (int v : real) b.chosen.push_back(to_orig[v]);
          auto sub = delete_vertices(g, real);
          std::vector<int> child_ids(sub.to_parent.size());
          for (std::size_t j = 0; j < sub.to_parent.size(); ++j) child_ids[j] = to_orig[sub.to_parent[j]];
          b.ok = node(sub.graph, child_ids, k - static_cast<int>(applicable[idx]->size()), 1, b.chosen, b.stats);
        }));
      }
      for (auto& f : wave) f.get();
      next += batch;
    }
    bool ok = false;
    for (Branch& b : results) {
      st.merge(b.stats);
      if (!ok && b.ok) {
        ok = true;
        chosen.insert(chosen.end(), b.chosen.begin(), b.chosen.end());
      }
    }
    return ok;
  }

  Problem mode_;
};

}  // namespace detail

inline SolveResult solve_cograph_edge(const Graph& g, int k, const SolveOptions& opts = {}) {
  return detail::EdgeSearch(Problem::CographEdge).run(g, k, opts.threads);
}

inline SolveResult solve_tp_edge(const Graph& g, int k, const SolveOptions& opts = {}) {
  return detail::EdgeSearch(Problem::TpEdge).run(g, k, opts.threads);
}

inline SolveResult solve_cograph_vertex(const Graph& g, int k, const SolveOptions& opts = {}) {
  return detail::VertexSearch(Problem::CographVertex).run(g, k, opts.threads);
}

inline SolveResult solve_tp_vertex(const Graph& g, int k, const SolveOptions& opts = {}) {
  return detail::VertexSearch(Problem::TpVertex).run(g, k, opts.threads);
}

inline SolveResult solve_naive(const Graph& g, int k, Problem problem, const SolveOptions& opts = {}) {
  if (problem != Problem::CographEdgeNaive && problem != Problem::TpEdgeNaive)
    throw std::invalid_argument("naive baselines exist only for the edge problems");
  return detail::EdgeSearch(problem).run(g, k, opts.threads);
}

}  // namespace p4tract
