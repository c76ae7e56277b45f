#pragma once

// Problem dispatch and the minimization wrapper over the decision solvers.

#include "p4tract/hitting_set.hpp"
#include "p4tract/search.hpp"

namespace p4tract {

inline SolveResult solve(const Graph& g, int k, Problem problem, const SolveOptions& opts = {}) {
  SolveResult res;
  switch (problem) {
    case Problem::CographEdge: res = solve_cograph_edge(g, k, opts); break;
    case Problem::TpEdge: res = solve_tp_edge(g, k, opts); break;
    case Problem::CographVertex: res = solve_cograph_vertex(g, k, opts); break;
    case Problem::CographVertexHS: res = solve_cograph_vertex_hs(g, k, opts); break;
    case Problem::TpVertex: res = solve_tp_vertex(g, k, opts); break;
    case Problem::CographEdgeNaive:
    case Problem::TpEdgeNaive: res = solve_naive(g, k, problem, opts); break;
  }
  if (!validate_solution(g, problem, res.solution))
    throw std::logic_error("solver returned a deletion set that fails validation");
  return res;
}

struct MinimizeResult {
  int k = 0;
  Solution solution;
  SearchStats stats;  // stats of the run at the minimal feasible budget
};

// Smallest feasible budget by ascending linear search, with the witness of
// that run. Deleting every edge or vertex is always feasible, so the scan
// terminates.
inline MinimizeResult minimize(const Graph& g, Problem problem, const SolveOptions& opts = {}) {
  const int upper = is_edge_problem(problem) ? g.edge_count() : g.vertex_count();
  for (int k = 0; k <= upper; ++k) {
    SolveResult res = solve(g, k, problem, opts);
    if (res.solution.feasible) return {k, std::move(res.solution), res.stats};
  }
  throw std::logic_error("no feasible budget up to the trivial bound");
}

}  // namespace p4tract
