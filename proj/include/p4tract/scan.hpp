#pragma once

// Direct induced-subgraph scans for the two patterns that define the target
// classes: P4 (induced path on four vertices) and C4 (induced four-cycle).
// All scans are deterministic: candidate tuples are visited in lexicographic
// order of their sorted vertex sets.

#include <array>
#include <optional>
#include <span>

#include "p4tract/graph.hpp"

namespace p4tract {

enum class DeletionMode { Edge, Vertex };
enum class DeletionTarget { P4Free, P4AndC4Free };

inline const char* deletion_mode_name(DeletionMode m) { return m == DeletionMode::Edge ? "edge" : "vertex"; }

inline const char* deletion_target_name(DeletionTarget t) {
  return t == DeletionTarget::P4Free ? "p4-free" : "p4-c4-free";
}

namespace detail {

// Adjacency bits of the quadruple (a,b,c,d): ab,ac,ad,bc,bd,cd.
inline int quad_edge_mask(const Graph& g, int a, int b, int c, int d) {
  int m = 0;
  if (g.has_edge(a, b)) m |= 1;
  if (g.has_edge(a, c)) m |= 2;
  if (g.has_edge(a, d)) m |= 4;
  if (g.has_edge(b, c)) m |= 8;
  if (g.has_edge(b, d)) m |= 16;
  if (g.has_edge(c, d)) m |= 32;
  return m;
}

}  // namespace detail

// Tests whether {a,b,c,d} induces a P4 and, if so, writes the path order
// starting from the smaller endpoint.
inline bool induces_p4(const Graph& g, int a, int b, int c, int d, std::array<int, 4>* path = nullptr) {
  const int verts[4] = {a, b, c, d};
  int deg[4] = {0, 0, 0, 0};
  int edges = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (g.has_edge(verts[i], verts[j])) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
  if (edges != 3) return false;
  int ends = 0;
  for (int i = 0; i < 4; ++i) {
    if (deg[i] > 2) return false;  // star
    if (deg[i] == 0) return false;  // triangle plus isolated vertex
    if (deg[i] == 1) ++ends;
  }
  if (ends != 2) return false;
  if (path) {
    int first = -1;
    for (int i = 0; i < 4; ++i)
      if (deg[i] == 1 && (first < 0 || verts[i] < verts[first])) first = i;
    (*path)[0] = verts[first];
    int prev = -1, cur = verts[first];
    for (int step = 1; step < 4; ++step) {
      for (int i = 0; i < 4; ++i) {
        const int cand = verts[i];
        if (cand != cur && cand != prev && g.has_edge(cur, cand)) {
          (*path)[step] = cand;
          prev = cur;
          cur = cand;
          break;
        }
      }
    }
  }
  return true;
}

// Tests whether {a,b,c,d} induces a C4 and, if so, writes a cycle order
// [x, smaller neighbor of x, opposite, other] with x the smallest vertex.
inline bool induces_c4(const Graph& g, int a, int b, int c, int d, std::array<int, 4>* cycle = nullptr) {
  const int verts[4] = {a, b, c, d};
  int deg[4] = {0, 0, 0, 0};
  int edges = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (g.has_edge(verts[i], verts[j])) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
  if (edges != 4) return false;
  for (int i = 0; i < 4; ++i)
    if (deg[i] != 2) return false;
  if (cycle) {
    int x = std::min(std::min(a, b), std::min(c, d));
    int nb[2], nn = 0, opposite = -1;
    for (int i = 0; i < 4; ++i) {
      if (verts[i] == x) continue;
      if (g.has_edge(x, verts[i]))
        nb[nn++] = verts[i];
      else
        opposite = verts[i];
    }
    if (nb[0] > nb[1]) std::swap(nb[0], nb[1]);
    (*cycle) = {x, nb[0], opposite, nb[1]};
  }
  return true;
}

inline std::optional<std::array<int, 4>> find_induced_p4(const Graph& g) {
  const int n = g.vertex_count();
  std::array<int, 4> path{};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (induces_p4(g, a, b, c, d, &path)) return path;
  return std::nullopt;
}

inline std::optional<std::array<int, 4>> find_induced_c4(const Graph& g) {
  const int n = g.vertex_count();
  std::array<int, 4> cyc{};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (induces_c4(g, a, b, c, d, &cyc)) return cyc;
  return std::nullopt;
}

inline bool has_induced_p4(const Graph& g) { return find_induced_p4(g).has_value(); }
inline bool has_induced_c4(const Graph& g) { return find_induced_c4(g).has_value(); }

// All vertex sets of induced P4s as sorted quadruples, in lexicographic order.
inline std::vector<std::array<int, 4>> all_p4_vertex_sets(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::array<int, 4>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (induces_p4(g, a, b, c, d)) out.push_back({a, b, c, d});
  return out;
}

// Number of 4-subsets of `vs` that induce a P4; stops counting at `limit`.
inline int p4_count_within(const Graph& g, std::span<const int> vs, int limit = 1 << 30) {
  int count = 0;
  const int m = static_cast<int>(vs.size());
  for (int a = 0; a < m && count < limit; ++a)
    for (int b = a + 1; b < m && count < limit; ++b)
      for (int c = b + 1; c < m && count < limit; ++c)
        for (int d = c + 1; d < m && count < limit; ++d)
          if (induces_p4(g, vs[a], vs[b], vs[c], vs[d])) ++count;
  return count;
}

// Vertex sets of induced C5s as sorted quintuples, lexicographic order.
// A chordless 5-cycle is exactly a 2-regular quintuple with five edges.
inline std::vector<std::array<int, 5>> all_induced_c5_sets(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::array<int, 5>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          for (int e = d + 1; e < n; ++e) {
            const int verts[5] = {a, b, c, d, e};
            int deg[5] = {0, 0, 0, 0, 0};
            int edges = 0;
            for (int i = 0; i < 5; ++i)
              for (int j = i + 1; j < 5; ++j)
                if (g.has_edge(verts[i], verts[j])) {
                  ++edges;
                  ++deg[i];
                  ++deg[j];
                }
            if (edges != 5) continue;
            bool regular = true;
            for (int i = 0; i < 5; ++i) regular = regular && deg[i] == 2;
            if (regular) out.push_back({a, b, c, d, e});
          }
  return out;
}

inline bool satisfies_target(const Graph& g, DeletionTarget t) {
  if (has_induced_p4(g)) return false;
  if (t == DeletionTarget::P4AndC4Free && has_induced_c4(g)) return false;
  return true;
}

inline bool is_trivially_perfect(const Graph& g) { return satisfies_target(g, DeletionTarget::P4AndC4Free); }

}  // namespace p4tract
