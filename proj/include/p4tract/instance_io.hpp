#pragma once

// Plain-text instance format:
//
//   # comment lines may appear anywhere
//   p <n> <m>
//   <u> <v>        (m lines, 0-based vertex ids)
//
// Serialization is canonical (edges sorted, no comments), so equal graphs
// produce identical bytes and parse(serialize(g)) == g.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "p4tract/graph.hpp"

namespace p4tract {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Graph parse_instance(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1, m = -1, seen = 0;
  Graph g;
  auto fail = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;  // blank
    if (line[start] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string tag;
      if (!(ls >> tag >> n >> m) || tag != "p" || n < 0 || m < 0) fail("expected header 'p <n> <m>'");
      std::string extra;
      if (ls >> extra) fail("trailing tokens after header");
      g = Graph(n);
      continue;
    }
    int u, v;
    if (!(ls >> u >> v)) fail("expected edge line '<u> <v>'");
    std::string extra;
    if (ls >> extra) fail("trailing tokens after edge");
    if (u < 0 || u >= n || v < 0 || v >= n) fail("vertex id out of range");
    if (u == v) fail("self-loop");
    if (g.has_edge(u, v)) fail("duplicate edge");
    g.add_edge(u, v);
    ++seen;
  }
  if (n < 0) throw ParseError("missing header 'p <n> <m>'");
  if (seen != m)
    throw ParseError("header announces " + std::to_string(m) + " edges but " + std::to_string(seen) +
                     " were given");
  return g;
}

inline Graph parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

inline std::string serialize_instance(const Graph& g) {
  std::ostringstream out;
  const EdgeSet es = g.edges();
  out << "p " << g.vertex_count() << ' ' << es.size() << '\n';
  for (const Edge& e : es) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

inline Graph load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_instance(in);
}

inline void save_instance(const Graph& g, const std::string& path, const std::string& comment = {}) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  if (!comment.empty()) out << "# " << comment << '\n';
  out << serialize_instance(g);
}

// FNV-1a over the canonical serialization: a digest of the graph itself,
// stable under comments and edge order in the source file.
inline std::string instance_digest(const Graph& g) {
  const std::string bytes = serialize_instance(g);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace p4tract
