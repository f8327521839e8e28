#ifndef JUMPGRAPH_GRAPH_HPP
#define JUMPGRAPH_GRAPH_HPP

// Simple undirected graphs on at most 64 vertices, stored as one 64-bit
// adjacency row per vertex, plus the jump / line / complement operators.

#include <jumpgraph/config.hpp>
#include <jumpgraph/errors.hpp>

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jumpgraph {

using Row = std::uint64_t;

inline constexpr Row bit(std::size_t v) noexcept { return Row{1} << v; }

/// Mask with the low `n` bits set.
inline constexpr Row low_mask(std::size_t n) noexcept {
  return n >= 64 ? ~Row{0} : (Row{1} << n) - 1;
}

/// Edge with `u < v`. Its position in Graph::edges() is its edge id.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;

  bool touches(std::size_t x) const noexcept { return u == x || v == x; }
  bool incident(const Edge& o) const noexcept {
    return touches(o.u) || touches(o.v);
  }
};

class Graph {
 public:
  /// The empty graph (no vertices).
  Graph() = default;

  /// Edgeless graph on `n` vertices.
  explicit Graph(std::size_t n) : n_(n), rows_(n, 0) {
    if (n > kMaxVertices) throw vertex_limit_error(n, kMaxVertices);
  }

  Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  Graph(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> edges)
      : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }
  bool empty() const noexcept { return n_ == 0; }

  Row all_vertices() const noexcept { return low_mask(n_); }
  Row neighbors(std::size_t v) const { return rows_.at(v); }
  std::size_t degree(std::size_t v) const {
    return static_cast<std::size_t>(std::popcount(rows_.at(v)));
  }
  bool adjacent(std::size_t u, std::size_t v) const {
    return (rows_.at(u) & bit(v)) != 0;
  }

  /// Adds {u,v}; no-op if present. Loops are rejected.
  void add_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (adjacent(u, v)) return;
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
    ++m_;
  }

  void remove_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    if (!adjacent(u, v)) return;
    rows_[u] &= ~bit(v);
    rows_[v] &= ~bit(u);
    --m_;
  }

  /// Edges in lexicographic (u, v) order; index i is edge id i.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (std::size_t u = 0; u < n_; ++u) {
      Row higher = rows_[u] & ~low_mask(u + 1);
      while (higher != 0) {
        auto v = static_cast<std::size_t>(std::countr_zero(higher));
        higher &= higher - 1;
        out.push_back({u, v});
      }
    }
    return out;
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> out(n_);
    for (std::size_t v = 0; v < n_; ++v) out[v] = degree(v);
    return out;
  }

  std::span<const Row> rows() const noexcept { return rows_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(std::size_t v) const {
    if (v >= n_)
      throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of order " +
                              std::to_string(n_));
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<Row> rows_;
};

namespace detail {

// incidence[v] = bitmask over edge ids touching v. Needs m <= 64.
inline std::vector<Row> edge_incidence(const Graph& g, const std::vector<Edge>& edges) {
  std::vector<Row> incidence(g.order(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incidence[edges[i].u] |= bit(i);
    incidence[edges[i].v] |= bit(i);
  }
  return incidence;
}

}  // namespace detail

/// J(G): vertices are the edges of G, adjacent iff the edges share no endpoint.
/// Vertex i of the result is edge i of `g`.
inline Graph jump(const Graph& g) {
  const auto edges = g.edges();
  if (edges.size() > kMaxVertices) throw vertex_limit_error(edges.size(), kMaxVertices);
  const auto incidence = detail::edge_incidence(g, edges);
  Graph out(edges.size());
  const Row all = low_mask(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Row disjoint = all & ~(incidence[edges[i].u] | incidence[edges[i].v]) & ~low_mask(i + 1);
    while (disjoint != 0) {
      auto j = static_cast<std::size_t>(std::countr_zero(disjoint));
      disjoint &= disjoint - 1;
      out.add_edge(i, j);
    }
  }
  return out;
}

/// L(G): vertices are the edges of G, adjacent iff the edges share an endpoint.
inline Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  if (edges.size() > kMaxVertices) throw vertex_limit_error(edges.size(), kMaxVertices);
  const auto incidence = detail::edge_incidence(g, edges);
  Graph out(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Row touching = (incidence[edges[i].u] | incidence[edges[i].v]) & ~low_mask(i + 1);
    while (touching != 0) {
      auto j = static_cast<std::size_t>(std::countr_zero(touching));
      touching &= touching - 1;
      out.add_edge(i, j);
    }
  }
  return out;
}

inline Graph complement(const Graph& g) {
  Graph out(g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

/// Subgraph induced by the vertices in `keep`, relabeled in increasing order.
inline Graph induced_subgraph(const Graph& g, Row keep) {
  keep &= g.all_vertices();
  std::vector<std::size_t> index(g.order(), 0);
  std::size_t next = 0;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (keep & bit(v)) index[v] = next++;
  Graph out(next);
  for (const Edge& e : g.edges())
    if ((keep & bit(e.u)) && (keep & bit(e.v))) out.add_edge(index[e.u], index[e.v]);
  return out;
}

inline Row isolated_vertices(const Graph& g) {
  Row out = 0;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.neighbors(v) == 0) out |= bit(v);
  return out;
}

/// Drops degree-0 vertices; survivors keep their relative order.
inline Graph strip_isolated(const Graph& g) {
  return induced_subgraph(g, g.all_vertices() & ~isolated_vertices(g));
}

/// `perm[v]` is the new index of vertex v.
inline Graph relabel(const Graph& g, std::span<const std::size_t> perm) {
  if (perm.size() != g.order()) throw std::invalid_argument("permutation size mismatch");
  Graph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(a.order() + e.u, a.order() + e.v);
  return out;
}

/// Vertex sets of the connected components, ordered by smallest vertex.
inline std::vector<Row> connected_components(const Graph& g) {
  std::vector<Row> out;
  Row unseen = g.all_vertices();
  while (unseen != 0) {
    Row component = bit(static_cast<std::size_t>(std::countr_zero(unseen)));
    Row frontier = component;
    while (frontier != 0) {
      Row next = 0;
      for (Row f = frontier; f != 0; f &= f - 1)
        next |= g.neighbors(static_cast<std::size_t>(std::countr_zero(f)));
      frontier = next & ~component;
      component |= next;
    }
    out.push_back(component);
    unseen &= ~component;
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

/// Longest shortest path. nullopt means infinite (the graph is disconnected).
/// Throws std::domain_error on the empty graph.
inline std::optional<std::size_t> diameter(const Graph& g) {
  if (g.empty()) throw std::domain_error("diameter of the empty graph is undefined");
  std::size_t longest = 0;
  for (std::size_t source = 0; source < g.order(); ++source) {
    Row reached = bit(source);
    Row frontier = reached;
    std::size_t depth = 0;
    while (true) {
      Row next = 0;
      for (Row f = frontier; f != 0; f &= f - 1)
        next |= g.neighbors(static_cast<std::size_t>(std::countr_zero(f)));
      next &= ~reached;
      if (next == 0) break;
      reached |= next;
      frontier = next;
      ++depth;
    }
    if (reached != g.all_vertices()) return std::nullopt;
    longest = std::max(longest, depth);
  }
  return longest;
}

inline constexpr std::uint64_t choose2(std::uint64_t x) noexcept {
  return x < 2 ? 0 : x * (x - 1) / 2;
}

/// |E(J(g))| = C(m,2) - sum_v C(deg v, 2), without building J(g).
inline std::uint64_t edge_count_of_jump(const Graph& g) {
  std::uint64_t incident_pairs = 0;
  for (std::size_t v = 0; v < g.order(); ++v) incident_pairs += choose2(g.degree(v));
  return choose2(g.size()) - incident_pairs;
}

/// |E(J(J(g)))| from g alone. A vertex {a,b} of J(g) has degree
/// m - deg(a) - deg(b) + 1 there.
inline std::uint64_t edge_count_of_double_jump(const Graph& g) {
  const std::uint64_t m = g.size();
  std::uint64_t incident_pairs = 0;
  for (const Edge& e : g.edges())
    incident_pairs += choose2(m + 1 - g.degree(e.u) - g.degree(e.v));
  return choose2(edge_count_of_jump(g)) - incident_pairs;
}

/// Small graphs with fixed vertex numbering.
namespace graphs {

inline Graph empty(std::size_t n) { return Graph(n); }

/// Path on `n` vertices (n - 1 edges).
inline Graph path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

inline Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// Star with `leaves` pendant edges at centre 0.
inline Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

inline Graph matching(std::size_t edges) {
  Graph g(2 * edges);
  for (std::size_t i = 0; i < edges; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

}  // namespace graphs

}  // namespace jumpgraph

#endif  // JUMPGRAPH_GRAPH_HPP
