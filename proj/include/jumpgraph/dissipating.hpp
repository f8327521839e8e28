#ifndef JUMPGRAPH_DISSIPATING_HPP
#define JUMPGRAPH_DISSIPATING_HPP

// The known dissipating graphs: a finite list plus four infinite families,
// each with its dissipation number, and the diameter-2 subset.

#include <jumpgraph/graph.hpp>
#include <jumpgraph/iso.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jumpgraph {

/// Builds a graph from 1-based vertex pairs; the order is the largest label.
inline Graph from_pairs(std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
  std::size_t n = 0;
  for (auto [u, v] : pairs) n = std::max({n, u, v});
  Graph g(n);
  for (auto [u, v] : pairs) g.add_edge(u - 1, v - 1);
  return g;
}

struct DissipatingEntry {
  std::string name;
  Graph graph;
  std::size_t d = 0;
  std::string parent;  // name of the entry J(graph) reduces to
};

enum class DissipatingFamily { star, triangle_with_pendants, spider_with_leg, star_plus_edge };

inline std::string family_name(DissipatingFamily f) {
  switch (f) {
    case DissipatingFamily::star: return "S_n";
    case DissipatingFamily::triangle_with_pendants: return "K3+pendants";
    case DissipatingFamily::spider_with_leg: return "P3+pendants";
    case DissipatingFamily::star_plus_edge: return "S_n+K2";
  }
  return "?";
}

namespace graphs {

/// Triangle with `pendants` leaves on one corner.
inline Graph triangle_with_pendants(std::size_t pendants) {
  Graph g(3 + pendants);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  for (std::size_t i = 0; i < pendants; ++i) g.add_edge(0, 3 + i);
  return g;
}

/// Path 0-1-2 with `pendants` extra leaves on vertex 0.
inline Graph spider_with_leg(std::size_t pendants) {
  Graph g(3 + pendants);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  for (std::size_t i = 0; i < pendants; ++i) g.add_edge(0, 3 + i);
  return g;
}

inline Graph star_plus_edge(std::size_t leaves) { return disjoint_union(star(leaves), graphs::path(2)); }

}  // namespace graphs

/// Named finite members, with the node their jump graph lands on.
/// "empty" is the graph with no vertices, "vertices" any edgeless graph.
inline const std::vector<DissipatingEntry>& dissipating_entries() {
  static const std::vector<DissipatingEntry> entries = [] {
    std::vector<DissipatingEntry> e;
    e.push_back({"empty", Graph(), 0, ""});
    e.push_back({"vertices", Graph(1), 1, "empty"});
    e.push_back({"K3", graphs::cycle(3), 2, "vertices"});
    e.push_back({"3K2", graphs::matching(3), 3, "K3"});
    e.push_back({"K4", graphs::complete(4), 4, "3K2"});
    e.push_back({"4K2", graphs::matching(4), 5, "K4"});
    e.push_back({"paw+K2", from_pairs({{1, 2}, {2, 3}, {1, 3}, {3, 4}, {5, 6}}), 4, "K3+pendants"});
    e.push_back({"P4+K2", from_pairs({{1, 2}, {2, 3}, {3, 4}, {5, 6}}), 4, "K3+pendants"});
    e.push_back({"P5", graphs::path(5), 4, "P3+pendants"});
    e.push_back({"C4+leaf", from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}}), 5, "P5"});
    e.push_back({"fork", from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}}), 6, "C4+leaf"});
    e.push_back({"house+leaf", from_pairs({{1, 2}, {2, 3}, {3, 4}, {5, 2}, {2, 6}, {6, 3}}), 6, "C4+leaf"});
    e.push_back({"triangle+broom", from_pairs({{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {3, 6}}), 7, "house+leaf"});
    e.push_back({"diamond+leaf", from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}, {3, 5}}), 5, "P5"});
    e.push_back({"chair+K2", from_pairs({{1, 2}, {2, 3}, {3, 4}, {2, 5}, {6, 7}}), 6, "diamond+leaf"});
    e.push_back({"bull-", from_pairs({{1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 3}}), 4, "P3+pendants"});
    e.push_back({"E", from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}}), 5, "bull-"});
    e.push_back({"diamond+far-leaf", from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 1}, {2, 4}, {3, 5}}), 6, "E"});
    e.push_back({"K3+tail", from_pairs({{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}}), 4, "P3+pendants"});
    e.push_back({"diamond", from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}}), 4, "S_n+K2"});
    e.push_back({"P3+2K2", from_pairs({{1, 2}, {2, 3}, {4, 5}, {6, 7}}), 5, "diamond"});
    e.push_back({"C4", graphs::cycle(4), 4, "S_n+K2"});
    e.push_back({"2P3", from_pairs({{1, 2}, {2, 3}, {4, 5}, {5, 6}}), 5, "C4"});
    e.push_back({"H", from_pairs({{1, 2}, {2, 3}, {3, 4}, {2, 5}, {3, 6}}), 5, "C4"});
    e.push_back({"bowtie", from_pairs({{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}}), 6, "H"});
    e.push_back({"C4+K2", from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6}}), 7, "bowtie"});
    e.push_back({"K3+K2", from_pairs({{1, 2}, {2, 3}, {1, 3}, {4, 5}}), 3, "S_n"});
    return e;
  }();
  return entries;
}

struct Membership {
  std::string name;  // entry name, or family name
  std::size_t d = 0;
  std::optional<DissipatingFamily> family;
  std::size_t parameter = 0;  // family index n
};

/// Family membership of an isolated-vertex-free graph.
inline std::optional<Membership> family_membership(const Graph& g) {
  const std::size_t m = g.size();
  if (m == 0 || isolated_vertices(g) != 0) return std::nullopt;
  auto hit = [&](DissipatingFamily f, std::size_t n, std::size_t d) {
    return Membership{family_name(f), d, f, n};
  };
  if (is_isomorphic(g, graphs::star(m))) return hit(DissipatingFamily::star, m, 2);
  if (m >= 4 && is_isomorphic(g, graphs::triangle_with_pendants(m - 3)))
    return hit(DissipatingFamily::triangle_with_pendants, m - 3, 3);
  if (m >= 3 && is_isomorphic(g, graphs::spider_with_leg(m - 2)))
    return hit(DissipatingFamily::spider_with_leg, m - 2, 3);
  if (m >= 2 && is_isomorphic(g, graphs::star_plus_edge(m - 1)))
    return hit(DissipatingFamily::star_plus_edge, m - 1, 3);
  return std::nullopt;
}

/// Looks `g` up among the known dissipating graphs. An edgeless graph with
/// vertices is the "vertices" node; otherwise isolated vertices are stripped.
inline std::optional<Membership> catalog_membership(const Graph& g) {
  const auto& entries = dissipating_entries();
  if (g.order() == 0) return Membership{entries[0].name, 0, std::nullopt, 0};
  if (g.size() == 0) return Membership{entries[1].name, 1, std::nullopt, 0};
  const Graph h = strip_isolated(g);
  for (const auto& e : entries)
    if (e.graph.size() == h.size() && is_isomorphic(e.graph, h)) return Membership{e.name, e.d, std::nullopt, 0};
  return family_membership(h);
}

/// Dissipating graphs of diameter 2: C4, the bowtie, stars with at least two
/// leaves, the diamond, the diamond with a leaf on a degree-3 vertex, and a
/// triangle with pendants on one corner.
inline bool is_diameter2_dissipating(const Graph& g) {
  const Graph h = strip_isolated(g);
  if (h.size() == 0) return false;
  for (const char* name : {"C4", "bowtie", "diamond", "diamond+leaf"})
    for (const auto& e : dissipating_entries())
      if (e.name == name && is_isomorphic(e.graph, h)) return true;
  auto fam = family_membership(h);
  if (!fam) return false;
  if (*fam->family == DissipatingFamily::star) return fam->parameter >= 2;
  return *fam->family == DissipatingFamily::triangle_with_pendants;
}

/// The only diameter-3 graphs with at least 7 edges that dissipate: a path
/// 0-1-2 with extra leaves on vertex 0.
inline bool is_exception_family(const Graph& g) {
  auto fam = family_membership(strip_isolated(g));
  return fam && *fam->family == DissipatingFamily::spider_with_leg;
}

}  // namespace jumpgraph

#endif  // JUMPGRAPH_DISSIPATING_HPP
