#ifndef JUMPGRAPH_TESTS_FIXTURES_HPP
#define JUMPGRAPH_TESTS_FIXTURES_HPP

// Named example graphs, the frozen oracle files, and shared helpers.

#include <jumpgraph/jumpgraph.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace fixtures {

using jumpgraph::from_pairs;
using jumpgraph::Graph;

inline std::string data_path(const std::string& name) { return std::string(JUMPGRAPH_TEST_DATA) + "/" + name; }

/// C4 plus a disjoint edge; its jump is the bowtie.
inline Graph gamma() { return from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6}}); }

/// Two triangles sharing vertex 3.
inline Graph bowtie() { return from_pairs({{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}}); }

/// Path 1-2-3-4 with leaves 2-5 and 3-6.
inline Graph h_shape() { return from_pairs({{1, 2}, {2, 3}, {3, 4}, {2, 5}, {3, 6}}); }

inline Graph c5_chord() { return from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 3}}); }

/// The host graph of the snipped-subgraph example (7 vertices, 8 edges).
inline Graph snipped_host() {
  return from_pairs({{1, 2}, {2, 3}, {4, 2}, {2, 5}, {5, 6}, {5, 7}, {4, 3}, {6, 7}});
}

/// Caterpillar 1-2-3-4-5 with leaves 2-6 and 3-7: gluing 6 and 4 gives N.
inline Graph caterpillar() { return from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}, {3, 7}}); }

/// The eleven graphs with diameter 3 and 6 edges, labelled a..k.
inline std::map<char, Graph> diameter3_six_edges() {
  using namespace jumpgraph::graphs;
  return {
      {'a', spider_with_leg(4)},
      {'b', from_pairs({{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {3, 6}})},
      {'c', from_pairs({{1, 2}, {2, 3}, {3, 4}, {5, 2}, {2, 6}, {6, 3}})},
      {'d', from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 1}, {2, 4}, {3, 5}})},
      {'e', stickman()},
      {'f', bug()},
      {'g', pendulum()},
      {'h', from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}, {2, 6}})},
      {'i', net()},
      {'j', from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}})},
      {'k', cycle(6)},
  };
}

/// The two graphs with diameter 4 and 5 edges.
inline std::vector<Graph> diameter4_five_edges() {
  return {from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}}), from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}})};
}

/// Diameter 4, six edges: C4 2-3-4-6 with pendants 1 and 5 at opposite
/// corners. Gluing the path ends 1 and 5 gives K2,3.
inline Graph diameter4_six_edges_b() { return from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}, {6, 4}}); }

/// Complements of the forbidden line-graph obstructions as drawn; index 3
/// is omitted because its drawing is not the complement of its partner.
inline std::map<std::size_t, Graph> drawn_jump_forbidden() {
  using jumpgraph::disjoint_union;
  using namespace jumpgraph::graphs;
  return {
      {0, disjoint_union(cycle(3), Graph(1))},
      {1, disjoint_union(path(3), path(2))},
      {2, from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 1}, {2, 5}, {5, 3}, {2, 6}, {6, 3}})},
      {4, from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 1}, {4, 5}, {3, 6}})},
      {5, from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 1}, {3, 5}, {3, 6}})},
      {6, disjoint_union(cycle(4), Graph(2))},
      {7, disjoint_union(path(2), Graph(3))},
      {8, disjoint_union(cycle(5), Graph(1))},
  };
}

/// Connected graphs of one diameter and one edge count.
inline jumpgraph::CatalogFilter diameter_edges(std::size_t diameter, std::size_t edges) {
  jumpgraph::CatalogFilter f;
  f.connected = true;
  f.diameter = diameter;
  f.min_edges = edges;
  f.max_edges = edges;
  return f;
}

struct OracleRow {
  std::string graph6;
  std::string verdict;
  std::string d;
};

inline std::vector<OracleRow> oracle_classes() {
  std::ifstream in(data_path("classes_upto7.tsv"));
  std::vector<OracleRow> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    OracleRow row;
    std::getline(fields, row.graph6, '\t');
    std::getline(fields, row.verdict, '\t');
    std::getline(fields, row.d, '\t');
    out.push_back(row);
  }
  return out;
}

inline Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(g.order());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return jumpgraph::relabel(g, perm);
}

/// The n <= 6 and n <= 7 catalogs, generated once per process.
inline const jumpgraph::GraphCatalog& catalog_upto(std::size_t n) {
  static std::map<std::size_t, jumpgraph::GraphCatalog> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, jumpgraph::generate(n)).first;
  return it->second;
}

}  // namespace fixtures

#endif  // JUMPGRAPH_TESTS_FIXTURES_HPP
