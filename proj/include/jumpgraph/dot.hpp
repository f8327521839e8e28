#ifndef JUMPGRAPH_DOT_HPP
#define JUMPGRAPH_DOT_HPP

// Graphviz output with node names that only depend on graph content.

#include <jumpgraph/graph.hpp>

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace jumpgraph {

/// 64-bit FNV-1a; stable across platforms and runs.
inline std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// "g" plus the first 12 hex digits of the hash of `key`.
inline std::string dot_node_name(std::string_view key) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "g%012llx", static_cast<unsigned long long>(fnv1a(key) >> 16));
  return buf;
}

inline std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

inline std::string to_dot(const Graph& g, std::string_view name = "G") {
  std::string out = "graph " + std::string(name) + " {\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const Edge& e : g.edges()) out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  return out + "}\n";
}

/// One cluster per iterate J^0 .. J^(n-1); vertex v of panel k is "k_v".
inline std::string trace_to_dot(const std::vector<Graph>& iterates) {
  std::string out = "graph trace {\n  node [shape=point];\n";
  for (std::size_t k = 0; k < iterates.size(); ++k) {
    const Graph& g = iterates[k];
    const std::string p = "k" + std::to_string(k) + "_";
    out += "  subgraph cluster_" + std::to_string(k) + " {\n    label=\"J^" + std::to_string(k) + "\";\n";
    for (std::size_t v = 0; v < g.order(); ++v) out += "    " + p + std::to_string(v) + ";\n";
    for (const Edge& e : g.edges())
      out += "    " + p + std::to_string(e.u) + " -- " + p + std::to_string(e.v) + ";\n";
    out += "  }\n";
  }
  return out + "}\n";
}

}  // namespace jumpgraph

#endif  // JUMPGRAPH_DOT_HPP
