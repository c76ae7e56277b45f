#pragma once

// Seeded instance generators. All randomness flows through SplitRng, which
// avoids std::uniform_int_distribution on purpose: its output is
// implementation-defined, and generated corpora must be byte-identical
// across toolchains.

#include <cstdint>
#include <random>
#include <string>

#include "p4tract/decomposition.hpp"
#include "p4tract/graph.hpp"

namespace p4tract {

class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : eng_(seed) {}

  // Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant at the
  // ranges used here and keeps results portable.
  int uniform(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool chance(double p) { return unit() < p; }

  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 eng_;
};

namespace detail {

// Random cotree over ids [lo, hi): binary splits with alternating
// union/join labels guarantee the result has no induced P4.
inline void cotree_edges(Graph& g, int lo, int hi, bool join, SplitRng& rng) {
  if (hi - lo <= 1) return;
  const int cut = lo + rng.uniform(1, hi - lo - 1);
  if (join)
    for (int u = lo; u < cut; ++u)
      for (int v = cut; v < hi; ++v) g.add_edge(u, v);
  cotree_edges(g, lo, cut, !join, rng);
  cotree_edges(g, cut, hi, !join, rng);
}

inline Graph permuted(const Graph& g, SplitRng& rng) {
  const int n = g.vertex_count();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform(0, i)]);
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v)) out.add_edge(perm[u], perm[v]);
  return out;
}

}  // namespace detail

inline Graph gen_cograph(int n, SplitRng& rng) {
  if (n < 1) throw std::invalid_argument("cograph generator needs n >= 1");
  Graph g(n);
  detail::cotree_edges(g, 0, n, rng.chance(0.5), rng);
  return detail::permuted(g, rng);
}

inline Graph gen_gnp(int n, double p, SplitRng& rng) {
  if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("bad G(n,p) parameters");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) g.add_edge(u, v);
  return g;
}

// Spider on n vertices: |K| = |S| = (n - |R|) / 2 with a small random head
// (at most two vertices, so the head is trivially P4-sparse), then a random
// relabeling.
inline Graph gen_spider(int n, SpiderKind kind, SplitRng& rng) {
  if (n < 4) throw std::invalid_argument("spider generator needs n >= 4");
  int head = rng.uniform(0, 2);
  while (head > 0 && ((n - head) % 2 != 0 || (n - head) / 2 < 2)) --head;
  if ((n - head) % 2 != 0) head = 1;
  const int q = (n - head) / 2;

  Graph g(n);  // body 0..q-1, feet q..2q-1, head 2q..n-1
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) g.add_edge(i, j);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      const bool leg = kind == SpiderKind::Thin ? i == j : i != j;
      if (leg) g.add_edge(i, q + j);
    }
  for (int r = 2 * q; r < n; ++r)
    for (int i = 0; i < q; ++i) g.add_edge(i, r);
  for (int r1 = 2 * q; r1 < n; ++r1)
    for (int r2 = r1 + 1; r2 < n; ++r2)
      if (rng.chance(0.5)) g.add_edge(r1, r2);
  return detail::permuted(g, rng);
}

// Cograph with k extra edges planted on top (absent pairs turned into
// edges), so deleting the planted edges restores a cograph and the
// edge-deletion instance is feasible at budget k by construction.
inline Graph gen_planted_edge(int n, int k, SplitRng& rng) {
  if (k < 0) throw std::invalid_argument("negative plant count");
  for (int attempt = 0; attempt < 32; ++attempt) {
    Graph g = gen_cograph(n, rng);
    EdgeSet gaps;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v)) gaps.emplace_back(u, v);
    if (static_cast<int>(gaps.size()) < k) continue;
    for (int i = 0; i < k; ++i) {
      const int pick = rng.uniform(i, static_cast<int>(gaps.size()) - 1);
      std::swap(gaps[i], gaps[pick]);
      g.add_edge(gaps[i].u, gaps[i].v);
    }
    return g;
  }
  throw std::invalid_argument("could not plant " + std::to_string(k) + " edges on a cograph of size " +
                              std::to_string(n));
}

// Cograph on n-k vertices plus k extra vertices with arbitrary random
// attachments: deleting the extras restores a cograph, so the
// vertex-deletion instance is feasible at budget k.
inline Graph gen_planted_vertex(int n, int k, SplitRng& rng) {
  if (k < 0 || k >= n) throw std::invalid_argument("plant count must lie in [0, n)");
  const Graph base = gen_cograph(n - k, rng);
  Graph g(n);
  for (int u = 0; u < n - k; ++u)
    for (int v = u + 1; v < n - k; ++v)
      if (base.has_edge(u, v)) g.add_edge(u, v);
  for (int x = n - k; x < n; ++x)
    for (int v = 0; v < x; ++v)
      if (rng.chance(0.5)) g.add_edge(x, v);
  return g;
}

// Random member of the union/join/spider decomposition family on exactly n
// vertices; used to exercise the exact finishing phases.
inline Graph gen_p4_sparse(int n, SplitRng& rng) {
  if (n < 1) throw std::invalid_argument("generator needs n >= 1");
  Graph g(n);
  // Recursive builder over id ranges [lo, hi).
  auto build = [&](auto&& self, int lo, int hi, bool may_join) -> void {
    const int size = hi - lo;
    if (size <= 1) return;
    const int choice = rng.uniform(0, size >= 4 ? 2 : 1);
    if (choice == 2) {  // spider with whatever head space remains
      const int q = rng.uniform(2, (size - (size % 2)) / 2);
      const int head = size - 2 * q;
      const int body = lo, feet = lo + q, rest = lo + 2 * q;
      const bool thick = q >= 3 && rng.chance(0.5);
      for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) g.add_edge(body + i, body + j);
      for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
          if (thick ? i != j : i == j) g.add_edge(body + i, feet + j);
      for (int r = rest; r < hi; ++r)
        for (int i = 0; i < q; ++i) g.add_edge(body + i, r);
      if (head > 0) self(self, rest, hi, true);
      return;
    }
    const bool join = choice == 1 && may_join;
    const int cut = lo + rng.uniform(1, size - 1);
    if (join)
      for (int u = lo; u < cut; ++u)
        for (int v = cut; v < hi; ++v) g.add_edge(u, v);
    self(self, lo, cut, !join);
    self(self, cut, hi, !join);
  };
  build(build, 0, n, true);
  return detail::permuted(g, rng);
}

}  // namespace p4tract
