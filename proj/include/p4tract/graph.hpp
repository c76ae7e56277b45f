#pragma once

// Undirected simple graphs over dense vertex ids 0..n-1, adjacency kept as
// word-packed bit rows. Graphs behave as values: every operation returns a
// new graph and never mutates its input, so instances can be shared freely
// between threads once built.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace p4tract {

using VertexSet = std::vector<int>;  // sorted, duplicate-free by convention

struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw std::invalid_argument("edge endpoints must differ");
  }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeSet = std::vector<Edge>;  // sorted, duplicate-free by convention

namespace detail {

inline constexpr int kWordBits = 64;

inline int word_count(int bits) { return (bits + kWordBits - 1) / kWordBits; }

inline void set_bit(std::uint64_t* w, int i) { w[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits); }
inline void clear_bit(std::uint64_t* w, int i) { w[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits)); }
inline bool test_bit(const std::uint64_t* w, int i) { return (w[i / kWordBits] >> (i % kWordBits)) & 1u; }

inline int popcount_words(const std::uint64_t* w, int words) {
  int c = 0;
  for (int i = 0; i < words; ++i) c += __builtin_popcountll(w[i]);
  return c;
}

// Index of the lowest set bit, or -1 if all words are zero.
inline int lowest_bit(const std::uint64_t* w, int words) {
  for (int i = 0; i < words; ++i)
    if (w[i]) return i * kWordBits + __builtin_ctzll(w[i]);
  return -1;
}

}  // namespace detail

class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), words_(detail::word_count(n)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
  }

  Graph(int n, const EdgeSet& edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  int vertex_count() const { return n_; }
  int words_per_row() const { return words_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && detail::test_bit(row(u), v);
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    detail::set_bit(mutable_row(u), v);
    detail::set_bit(mutable_row(v), u);
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    detail::clear_bit(mutable_row(u), v);
    detail::clear_bit(mutable_row(v), u);
  }

  int degree(int u) const {
    check_vertex(u);
    return detail::popcount_words(row(u), words_);
  }

  int edge_count() const {
    int total = 0;
    for (int u = 0; u < n_; ++u) total += degree(u);
    return total / 2;
  }

  EdgeSet edges() const {
    EdgeSet out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (detail::test_bit(row(u), v)) out.emplace_back(u, v);
    return out;
  }

  VertexSet vertices() const {
    VertexSet out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) out[i] = i;
    return out;
  }

  VertexSet neighbors(int u) const {
    check_vertex(u);
    VertexSet out;
    for (int v = 0; v < n_; ++v)
      if (v != u && detail::test_bit(row(u), v)) out.push_back(v);
    return out;
  }

  // Raw adjacency row for mask-based algorithms.
  const std::uint64_t* row(int u) const { return rows_.data() + static_cast<std::size_t>(u) * words_; }

  const std::vector<std::string>& labels() const { return labels_; }

  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
      throw std::invalid_argument("label count must match vertex count");
    labels_ = std::move(labels);
  }

  // Structural equality; external labels are not part of it.
  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  std::uint64_t* mutable_row(int u) { return rows_.data() + static_cast<std::size_t>(u) * words_; }

  void check_vertex(int u) const {
    if (u < 0 || u >= n_) throw std::out_of_range("vertex id out of range");
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::string> labels_;
};

// A subgraph together with the map from its vertex ids back to the ids of
// the graph it was taken from: to_parent[new_id] == parent_id.
struct InducedSubgraph {
  Graph graph;
  VertexSet to_parent;
};

inline VertexSet canonical_vertex_set(VertexSet vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

inline EdgeSet canonical_edge_set(EdgeSet es) {
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return es;
}

inline Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  if (!g.labels().empty()) out.set_labels(g.labels());
  return out;
}

inline InducedSubgraph induced(const Graph& g, const VertexSet& vs) {
  VertexSet keep = canonical_vertex_set(vs);
  for (int v : keep)
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex id out of range");
  const int m = static_cast<int>(keep.size());
  Graph sub(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.has_edge(keep[i], keep[j])) sub.add_edge(i, j);
  if (!g.labels().empty()) {
    std::vector<std::string> labels(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) labels[i] = g.labels()[keep[i]];
    sub.set_labels(std::move(labels));
  }
  return {std::move(sub), std::move(keep)};
}

inline InducedSubgraph delete_vertices(const Graph& g, const VertexSet& vs) {
  VertexSet drop = canonical_vertex_set(vs);
  for (int v : drop)
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex id out of range");
  VertexSet keep;
  keep.reserve(g.vertex_count() - drop.size());
  std::size_t d = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (d < drop.size() && drop[d] == v) {
      ++d;
      continue;
    }
    keep.push_back(v);
  }
  return induced(g, keep);
}

inline Graph delete_edges(const Graph& g, const EdgeSet& es) {
  Graph out = g;
  for (const Edge& e : canonical_edge_set(es)) {
    if (!out.has_edge(e.u, e.v)) throw std::invalid_argument("deleting a nonexistent edge");
    out.remove_edge(e.u, e.v);
  }
  return out;
}

namespace detail {

// Connected components of g restricted to `within`, using direct adjacency
// when `in_complement` is false and complement adjacency otherwise. Output
// groups are sorted and ordered by smallest member.
inline std::vector<VertexSet> split_components(const Graph& g, const VertexSet& within, bool in_complement) {
  const int n = g.vertex_count();
  const int words = detail::word_count(n);
  std::vector<std::uint64_t> remaining(static_cast<std::size_t>(words), 0);
  for (int v : within) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex id out of range");
    detail::set_bit(remaining.data(), v);
  }

  std::vector<VertexSet> groups;
  std::vector<std::uint64_t> frontier(static_cast<std::size_t>(words), 0);
  for (;;) {
    const int start = detail::lowest_bit(remaining.data(), words);
    if (start < 0) break;
    VertexSet group;
    std::fill(frontier.begin(), frontier.end(), 0);
    detail::set_bit(frontier.data(), start);
    detail::clear_bit(remaining.data(), start);
    while (true) {
      const int u = detail::lowest_bit(frontier.data(), words);
      if (u < 0) break;
      detail::clear_bit(frontier.data(), u);
      group.push_back(u);
      const std::uint64_t* adj = g.row(u);
      for (int w = 0; w < words; ++w) {
        const std::uint64_t reach = in_complement ? (~adj[w] & remaining[w]) : (adj[w] & remaining[w]);
        frontier[w] |= reach;
        remaining[w] &= ~reach;
      }
      // In complement mode u's own bit is never in `remaining` here, so the
      // ~adj self-bit cannot re-add it.
    }
    std::sort(group.begin(), group.end());
    groups.push_back(std::move(group));
  }
  return groups;
}

}  // namespace detail

inline std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
  return detail::split_components(g, canonical_vertex_set(within), false);
}

inline std::vector<VertexSet> co_components_within(const Graph& g, const VertexSet& within) {
  return detail::split_components(g, canonical_vertex_set(within), true);
}

inline std::vector<VertexSet> components(const Graph& g) { return components_within(g, g.vertices()); }

inline std::vector<VertexSet> co_components(const Graph& g) { return co_components_within(g, g.vertices()); }

inline bool is_clique(const Graph& g, const VertexSet& vs) {
  VertexSet s = canonical_vertex_set(vs);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return false;
  return true;
}

inline bool is_stable(const Graph& g, const VertexSet& vs) {
  VertexSet s = canonical_vertex_set(vs);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.has_edge(s[i], s[j])) return false;
  return true;
}

}  // namespace p4tract
