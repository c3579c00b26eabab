#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "k4bip/errors.hpp"
#include "k4bip/graph.hpp"

namespace k4bip {

// Text format:
//   c <comment>        (any number, anywhere before or between records)
//   p <n> <m>          (exactly once, before any edge)
//   e <u> <v>          (m lines, 1-indexed endpoints)
// Writers emit edges sorted lexicographically with u < v.

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& what) {
    throw InputError("edge list line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line == "c" || line.rfind("c ", 0) == 0) continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "p") {
      if (n >= 0) fail("duplicate header");
      if (!(fields >> n >> m) || n < 0 || m < 0) fail("malformed header, expected 'p <n> <m>'");
    } else if (tag == "e") {
      if (n < 0) fail("edge before header");
      long long u = 0;
      long long v = 0;
      if (!(fields >> u >> v)) fail("malformed edge, expected 'e <u> <v>'");
      if (u < 1 || u > n || v < 1 || v > n) fail("endpoint out of range 1.." + std::to_string(n));
      if (u == v) fail("self-loop");
      edges.push_back(Edge::normalized(static_cast<int>(u - 1), static_cast<int>(v - 1)));
    } else {
      fail("unknown record '" + tag + "'");
    }
    std::string rest;
    if (fields >> rest) fail("trailing characters");
  }
  if (n < 0) throw InputError("edge list has no 'p <n> <m>' header");
  if (static_cast<long long>(edges.size()) != m)
    throw InputError("edge list header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  return Graph::from_edges(static_cast<int>(n), edges);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  g.for_each_edge([&](int u, int v) { out << "e " << u + 1 << ' ' << v + 1 << '\n'; });
}

inline std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace k4bip
