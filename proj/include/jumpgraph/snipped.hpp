#ifndef JUMPGRAPH_SNIPPED_HPP
#define JUMPGRAPH_SNIPPED_HPP

// Snipped subgraphs: H is snipped in G when H is a quotient of a subgraph of
// G. It suffices to pick |E(H)| edges of G and label their endpoints with
// H-vertices so that each chosen edge carries the labels of its H-edge.
// Several G-vertices may share a label (they are glued together).

#include <jumpgraph/graph.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jumpgraph {

struct SnippedWitness {
  std::vector<std::size_t> edge_map;              // H-edge id -> G-edge id
  std::vector<std::optional<std::size_t>> label;  // G-vertex -> H-vertex

  friend bool operator==(const SnippedWitness&, const SnippedWitness&) = default;
};

/// Checks a witness against (h, g) from scratch.
inline bool verify_snipped(const SnippedWitness& w, const Graph& h, const Graph& g) {
  const auto h_edges = h.edges();
  const auto g_edges = g.edges();
  if (w.edge_map.size() != h_edges.size() || w.label.size() != g.order()) return false;
  Row labeled_needed = 0;
  std::vector<bool> used(g_edges.size(), false);
  for (std::size_t i = 0; i < h_edges.size(); ++i) {
    const std::size_t f = w.edge_map[i];
    if (f >= g_edges.size() || used[f]) return false;
    used[f] = true;
    const auto lu = w.label[g_edges[f].u];
    const auto lv = w.label[g_edges[f].v];
    if (!lu || !lv) return false;
    const bool forward = *lu == h_edges[i].u && *lv == h_edges[i].v;
    const bool backward = *lu == h_edges[i].v && *lv == h_edges[i].u;
    if (!forward && !backward) return false;
    labeled_needed |= bit(g_edges[f].u) | bit(g_edges[f].v);
  }
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (!w.label[x]) continue;
    if (*w.label[x] >= h.order() || !(labeled_needed & bit(x))) return false;
  }
  return true;
}

namespace detail {

class SnippedSearch {
 public:
  SnippedSearch(const Graph& h, const Graph& g)
      : h_(h), g_(g), h_edges_(h.edges()), g_edges_(g.edges()) {}

  std::optional<SnippedWitness> run() {
    if (h_edges_.size() > g_edges_.size()) return std::nullopt;
    order_edges();
    g_jdeg_.resize(g_edges_.size());
    for (std::size_t f = 0; f < g_edges_.size(); ++f)
      g_jdeg_[f] = g_.size() + 1 - g_.degree(g_edges_[f].u) - g_.degree(g_edges_[f].v);
    label_.assign(g_.order(), std::nullopt);
    edge_map_.assign(h_edges_.size(), 0);
    used_.assign(g_edges_.size(), false);
    if (!extend(0)) return std::nullopt;
    return SnippedWitness{edge_map_, label_};
  }

 private:
  // H-edges in an order where each edge touches an earlier one when possible.
  void order_edges() {
    std::vector<bool> placed(h_edges_.size(), false);
    Row seen = 0;
    while (order_.size() < h_edges_.size()) {
      std::size_t pick = h_edges_.size();
      int best = -1;
      for (std::size_t i = 0; i < h_edges_.size(); ++i) {
        if (placed[i]) continue;
        const int touching = ((seen & bit(h_edges_[i].u)) ? 1 : 0) + ((seen & bit(h_edges_[i].v)) ? 1 : 0);
        if (touching > best) {
          best = touching;
          pick = i;
        }
      }
      placed[pick] = true;
      order_.push_back(pick);
      seen |= bit(h_edges_[pick].u) | bit(h_edges_[pick].v);
    }
  }

  std::size_t h_jdeg(std::size_t i) const {
    return h_.size() + 1 - h_.degree(h_edges_[i].u) - h_.degree(h_edges_[i].v);
  }

  bool try_assign(std::size_t depth, std::size_t f, std::size_t x, std::size_t a, std::size_t y, std::size_t b) {
    const bool x_free = !label_[x];
    const bool y_free = !label_[y];
    if ((!x_free && *label_[x] != a) || (!y_free && *label_[y] != b)) return false;
    label_[x] = a;
    label_[y] = b;
    used_[f] = true;
    edge_map_[order_[depth]] = f;
    if (extend(depth + 1)) return true;
    used_[f] = false;
    if (x_free) label_[x].reset();
    if (y_free) label_[y].reset();
    return false;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t i = order_[depth];
    const std::size_t need = h_jdeg(i);
    const auto [a, b] = std::pair{h_edges_[i].u, h_edges_[i].v};
    for (std::size_t f = 0; f < g_edges_.size(); ++f) {
      if (used_[f] || g_jdeg_[f] < need) continue;
      const auto [u, v] = std::pair{g_edges_[f].u, g_edges_[f].v};
      if (try_assign(depth, f, u, a, v, b)) return true;
      if (try_assign(depth, f, u, b, v, a)) return true;
    }
    return false;
  }

  const Graph& h_;
  const Graph& g_;
  std::vector<Edge> h_edges_;
  std::vector<Edge> g_edges_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> g_jdeg_;
  std::vector<std::optional<std::size_t>> label_;
  std::vector<std::size_t> edge_map_;
  std::vector<bool> used_;
};

}  // namespace detail

/// First snipped witness of `h` in `g`, or nullopt. `h` must have no
/// isolated vertices.
inline std::optional<SnippedWitness> find_snipped(const Graph& h, const Graph& g) {
  if (isolated_vertices(h) != 0) throw std::invalid_argument("snipped search needs h without isolated vertices");
  return detail::SnippedSearch(h, g).run();
}

enum class NamedTag { C5, Net, K23, Bug, Stickman, Pendulum };

struct NamedGraph {
  NamedTag tag;
  Graph graph;
};

inline std::string_view to_string(NamedTag tag) {
  switch (tag) {
    case NamedTag::C5: return "C5";
    case NamedTag::Net: return "Net";
    case NamedTag::K23: return "K23";
    case NamedTag::Bug: return "Bug";
    case NamedTag::Stickman: return "Stickman";
    case NamedTag::Pendulum: return "Pendulum";
  }
  return "?";
}

namespace graphs {

/// Triangle 0-1-2 with pendants 0-3, 1-4, 2-5.
inline Graph net() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }

/// 4-cycle 0-1-2-3 with two pendants on vertex 0.
inline Graph bug() { return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {0, 5}}); }

/// Vertex 0 with leaves 1, 2, 3, joined to vertex 4 with leaves 5, 6.
inline Graph stickman() { return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {4, 6}}); }

/// Triangle 0-1-2; vertex 0 joined to 3, which carries leaves 4 and 5.
inline Graph pendulum() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {3, 5}}); }

}  // namespace graphs

inline std::vector<NamedGraph> named_graphs() {
  return {{NamedTag::C5, graphs::cycle(5)},          {NamedTag::Net, graphs::net()},
          {NamedTag::K23, graphs::complete_bipartite(2, 3)}, {NamedTag::Bug, graphs::bug()},
          {NamedTag::Stickman, graphs::stickman()},  {NamedTag::Pendulum, graphs::pendulum()}};
}

}  // namespace jumpgraph

#endif  // JUMPGRAPH_SNIPPED_HPP
