#ifndef JUMPGRAPH_ISO_HPP
#define JUMPGRAPH_ISO_HPP

// Canonical labeling, isomorphism tests and subgraph search.
//
// The canonical labeling refines an ordered partition by neighbour counts,
// then individualizes vertices of the first smallest non-singleton cell.
// The canonical leaf maximizes (invariant path, adjacency certificate).
// Subtrees are pruned when their invariant prefix is already smaller than the
// best one, and when the individualized vertex is a twin of, or in an orbit
// with, one already tried. Orbits come from automorphisms found at equal leaves.

#include <jumpgraph/graph.hpp>
#include <jumpgraph/graph_io.hpp>

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace jumpgraph {

/// graph6 string of the canonically relabeled graph. Equal iff isomorphic.
struct CanonicalForm {
  std::string bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

using Cells = std::vector<std::vector<std::size_t>>;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  std::vector<std::size_t> run() {
    if (g_.order() == 0) return {};
    Cells cells(1);
    cells[0].resize(g_.order());
    std::iota(cells[0].begin(), cells[0].end(), std::size_t{0});
    visit(std::move(cells));
    std::vector<std::size_t> perm(g_.order());
    for (std::size_t pos = 0; pos < best_order_.size(); ++pos) perm[best_order_[pos]] = pos;
    return perm;
  }

 private:
  // Splits every cell by the vector of neighbour counts into all cells until
  // stable. Sub-cells are ordered by that vector, so the result only depends
  // on the isomorphism class of (graph, ordered partition).
  void refine(Cells& cells) const {
    const std::size_t n = g_.order();
    std::vector<Row> masks;
    while (true) {
      masks.assign(cells.size(), 0);
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (std::size_t v : cells[c]) masks[c] |= bit(v);
      Cells next;
      next.reserve(n);
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> keyed;
        keyed.reserve(cell.size());
        for (std::size_t v : cell) {
          std::vector<std::uint32_t> key(masks.size());
          for (std::size_t c = 0; c < masks.size(); ++c)
            key[c] = static_cast<std::uint32_t>(std::popcount(g_.neighbors(v) & masks[c]));
          keyed.emplace_back(std::move(key), v);
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
          next.back().push_back(keyed[i].second);
        }
      }
      const bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  // Cell sizes followed by the quotient matrix of neighbour counts.
  std::vector<std::uint32_t> invariant(const Cells& cells) const {
    std::vector<std::uint32_t> out;
    out.reserve(cells.size() * (cells.size() + 1));
    std::vector<Row> masks(cells.size(), 0);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out.push_back(static_cast<std::uint32_t>(cells[c].size()));
      for (std::size_t v : cells[c]) masks[c] |= bit(v);
    }
    for (const auto& cell : cells)
      for (Row mask : masks)
        out.push_back(static_cast<std::uint32_t>(std::popcount(g_.neighbors(cell.front()) & mask)));
    return out;
  }

  std::vector<Row> certificate(const std::vector<std::size_t>& order) const {
    std::vector<std::size_t> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    std::vector<Row> rows(order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (Row r = g_.neighbors(order[i]); r != 0; r &= r - 1)
        rows[i] |= bit(pos[static_cast<std::size_t>(std::countr_zero(r))]);
    return rows;
  }

  // Compares the current path's invariants with the best path's, up to `depth`.
  std::strong_ordering compare_prefix(std::size_t depth) const {
    for (std::size_t d = 0; d <= depth; ++d) {
      if (d >= best_path_.size()) return std::strong_ordering::greater;
      if (auto c = path_[d] <=> best_path_[d]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  bool twins(std::size_t u, std::size_t v) const {
    return (g_.neighbors(u) & ~bit(v)) == (g_.neighbors(v) & ~bit(u));
  }

  void visit(Cells cells) {
    refine(cells);
    const std::size_t depth = path_.size();
    path_.push_back(invariant(cells));
    if (have_best_ && compare_prefix(depth) < 0) {
      path_.pop_back();
      return;
    }

    if (cells.size() == g_.order()) {
      std::vector<std::size_t> order;
      order.reserve(cells.size());
      for (const auto& cell : cells) order.push_back(cell.front());
      auto cert = certificate(order);
      bool better = !have_best_;
      if (!better) {
        auto c = compare_prefix(depth);
        better = c > 0 || (c == 0 && path_.size() == best_path_.size() && cert > best_cert_);
      }
      if (better) {
        have_best_ = true;
        best_path_ = path_;
        best_cert_ = std::move(cert);
        best_order_ = std::move(order);
      } else if (path_ == best_path_ && cert == best_cert_) {
        std::vector<std::size_t> gamma(g_.order());
        for (std::size_t i = 0; i < order.size(); ++i) gamma[best_order_[i]] = order[i];
        automorphisms_.push_back(std::move(gamma));
      }
      path_.pop_back();
      return;
    }

    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size()))
        target = c;

    std::vector<std::size_t> tried;
    for (std::size_t v : cells[target]) {
      if (equivalent_to_tried(v, tried)) continue;
      tried.push_back(v);
      fixed_.push_back(v);

      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<std::size_t> rest;
        for (std::size_t w : cells[c])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      visit(std::move(child));
      fixed_.pop_back();
    }
    path_.pop_back();
  }

  // v is skipped when a twin of, or in the same orbit as, a vertex already
  // tried at this node. Orbits come from the found automorphisms that fix
  // every individualized vertex on the current path.
  bool equivalent_to_tried(std::size_t v, const std::vector<std::size_t>& tried) const {
    for (std::size_t u : tried)
      if (twins(u, v)) return true;
    if (tried.empty() || automorphisms_.empty()) return false;
    std::vector<std::size_t> parent(g_.order());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool stabilizes = true;
      for (std::size_t f : fixed_)
        if (gamma[f] != f) {
          stabilizes = false;
          break;
        }
      if (!stabilizes) continue;
      for (std::size_t x = 0; x < gamma.size(); ++x) parent[find(x)] = find(gamma[x]);
    }
    for (std::size_t u : tried)
      if (find(u) == find(v)) return true;
    return false;
  }

  const Graph& g_;
  std::vector<std::vector<std::uint32_t>> path_;
  std::vector<std::vector<std::uint32_t>> best_path_;
  std::vector<Row> best_cert_;
  std::vector<std::size_t> best_order_;
  bool have_best_ = false;
  std::vector<std::vector<std::size_t>> automorphisms_;
  std::vector<std::size_t> fixed_;
};

}  // namespace detail

/// `perm[v]` is the canonical position of vertex v.
inline std::vector<std::size_t> canonical_labeling(const Graph& g) {
  return detail::CanonicalSearch(g).run();
}

inline Graph canonical_graph(const Graph& g) { return relabel(g, canonical_labeling(g)); }

inline CanonicalForm canonical_form(const Graph& g) { return {to_graph6(canonical_graph(g))}; }

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = a.degrees();
  auto db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

/// Injection V(H) -> V(G). Every edge of H lands on an edge of G; when
/// `induced`, every non-edge lands on a non-edge too.
struct SubgraphWitness {
  std::vector<std::size_t> vertex_map;
  bool induced = false;

  friend bool operator==(const SubgraphWitness&, const SubgraphWitness&) = default;
};

inline bool is_valid_witness(const Graph& h, const Graph& g, const SubgraphWitness& w) {
  if (w.vertex_map.size() != h.order()) return false;
  Row used = 0;
  for (std::size_t x : w.vertex_map) {
    if (x >= g.order() || (used & bit(x))) return false;
    used |= bit(x);
  }
  for (std::size_t a = 0; a < h.order(); ++a)
    for (std::size_t b = a + 1; b < h.order(); ++b) {
      const bool in_h = h.adjacent(a, b);
      const bool in_g = g.adjacent(w.vertex_map[a], w.vertex_map[b]);
      if (in_h && !in_g) return false;
      if (w.induced && !in_h && in_g) return false;
    }
  return true;
}

namespace detail {

class SubgraphSearch {
 public:
  SubgraphSearch(const Graph& h, const Graph& g, bool induced) : h_(h), g_(g), induced_(induced) {}

  std::optional<SubgraphWitness> run() {
    if (h_.order() > g_.order() || h_.size() > g_.size()) return std::nullopt;
    if (h_.order() == 0) return SubgraphWitness{{}, induced_};
    build_order();
    build_domains();
    map_.assign(h_.order(), 0);
    if (!extend(0, 0)) return std::nullopt;
    return SubgraphWitness{map_, induced_};
  }

 private:
  // Start at a max-degree vertex, then repeatedly take the vertex with the
  // most already-placed neighbours (ties: higher degree, lower index).
  void build_order() {
    const std::size_t n = h_.order();
    Row placed = 0;
    order_.clear();
    while (order_.size() < n) {
      std::size_t pick = n;
      std::pair<int, int> best{-1, -1};
      for (std::size_t v = 0; v < n; ++v) {
        if (placed & bit(v)) continue;
        std::pair<int, int> key{std::popcount(h_.neighbors(v) & placed),
                                static_cast<int>(h_.degree(v))};
        if (key > best) {
          best = key;
          pick = v;
        }
      }
      order_.push_back(pick);
      placed |= bit(pick);
    }
  }

  static std::vector<std::size_t> neighbour_degrees(const Graph& g, std::size_t v) {
    std::vector<std::size_t> out;
    for (Row r = g.neighbors(v); r != 0; r &= r - 1)
      out.push_back(g.degree(static_cast<std::size_t>(std::countr_zero(r))));
    std::sort(out.rbegin(), out.rend());
    return out;
  }

  // Degree and neighbourhood-degree domination.
  void build_domains() {
    domain_.assign(h_.order(), 0);
    std::vector<std::vector<std::size_t>> gnd(g_.order());
    for (std::size_t x = 0; x < g_.order(); ++x) gnd[x] = neighbour_degrees(g_, x);
    for (std::size_t a = 0; a < h_.order(); ++a) {
      const auto hnd = neighbour_degrees(h_, a);
      for (std::size_t x = 0; x < g_.order(); ++x) {
        if (g_.degree(x) < h_.degree(a)) continue;
        bool dominated = true;
        for (std::size_t i = 0; i < hnd.size(); ++i)
          if (gnd[x][i] < hnd[i]) {
            dominated = false;
            break;
          }
        if (dominated) domain_[a] |= bit(x);
      }
    }
  }

  bool extend(std::size_t depth, Row used) {
    if (depth == order_.size()) return true;
    const std::size_t a = order_[depth];
    Row candidates = domain_[a] & ~used;
    for (std::size_t i = 0; i < depth && candidates != 0; ++i) {
      const std::size_t b = order_[i];
      if (h_.adjacent(a, b))
        candidates &= g_.neighbors(map_[b]);
      else if (induced_)
        candidates &= ~g_.neighbors(map_[b]);
    }
    while (candidates != 0) {
      auto x = static_cast<std::size_t>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      map_[a] = x;
      if (extend(depth + 1, used | bit(x))) return true;
    }
    return false;
  }

  const Graph& h_;
  const Graph& g_;
  bool induced_;
  std::vector<std::size_t> order_;
  std::vector<Row> domain_;
  std::vector<std::size_t> map_;
};

}  // namespace detail

/// First embedding of `h` into `g` in backtracking order, or nullopt.
inline std::optional<SubgraphWitness> find_subgraph(const Graph& h, const Graph& g, bool induced) {
  return detail::SubgraphSearch(h, g, induced).run();
}

}  // namespace jumpgraph

#endif  // JUMPGRAPH_ISO_HPP
