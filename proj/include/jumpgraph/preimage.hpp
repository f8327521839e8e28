#ifndef JUMPGRAPH_PREIMAGE_HPP
#define JUMPGRAPH_PREIMAGE_HPP

// Going backwards through J: line-graph recognition by the nine forbidden
// induced subgraphs, preimage search, and the tree of dissipating graphs.

#include <jumpgraph/catalog.hpp>
#include <jumpgraph/classify.hpp>
#include <jumpgraph/dissipating.hpp>
#include <jumpgraph/dot.hpp>
#include <jumpgraph/errors.hpp>
#include <jumpgraph/graph.hpp>
#include <jumpgraph/iso.hpp>
#include <jumpgraph/parallel.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace jumpgraph {

struct ForbiddenCatalog {
  std::vector<Graph> line_forbidden;  // index 0 is the claw
  std::vector<Graph> jump_forbidden;  // complements, same order
};

inline const ForbiddenCatalog& forbidden_catalog() {
  static const ForbiddenCatalog catalog = [] {
    ForbiddenCatalog c;
    c.line_forbidden = {
        from_pairs({{1, 2}, {2, 3}, {2, 4}}),
        from_pairs({{1, 2}, {2, 3}, {3, 1}, {2, 4}, {4, 3}, {1, 5}, {5, 4}}),
        from_pairs({{1, 2}, {2, 3}, {3, 1}, {2, 4}, {4, 3}, {1, 5}, {4, 6}}),
        from_pairs({{1, 2}, {2, 3}, {3, 1}, {2, 4}, {4, 3}, {1, 5}, {5, 6}, {6, 4}}),
        from_pairs({{1, 2}, {2, 3}, {4, 5}, {5, 6}, {1, 4}, {4, 2}, {2, 5}, {5, 3}, {3, 6}}),
        from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}, {2, 4}, {2, 5}, {5, 3}, {5, 6}}),
        from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {1, 5}, {5, 3}, {4, 2}, {2, 6}, {2, 5}}),
        from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}, {2, 4}, {2, 5}, {5, 4}, {3, 5}}),
        from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}}),
    };
    for (const Graph& g : c.line_forbidden) c.jump_forbidden.push_back(complement(g));
    return c;
  }();
  return catalog;
}

struct ForbiddenHit {
  std::size_t index = 0;
  SubgraphWitness witness;  // induced
};

/// Line-graph test. Converts to true when no forbidden graph is induced.
struct LineGraphCheck {
  std::optional<ForbiddenHit> hit;

  explicit operator bool() const noexcept { return !hit; }
};

inline LineGraphCheck is_line_graph(const Graph& g) {
  const auto& forbidden = forbidden_catalog().line_forbidden;
  for (std::size_t i = 0; i < forbidden.size(); ++i)
    if (auto w = find_subgraph(forbidden[i], g, true)) return {ForbiddenHit{i, std::move(*w)}};
  return {};
}

inline bool has_jump_preimage(const Graph& g) { return static_cast<bool>(is_line_graph(complement(g))); }

/// Raised when a preimage would need more edges than the search allows.
class search_bound_exceeded : public bound_error {
 public:
  search_bound_exceeded(std::size_t needed, std::size_t bound)
      : bound_error("preimages need " + std::to_string(needed) + " edges, search bound is " +
                    std::to_string(bound)) {}
};

inline constexpr std::size_t kDefaultSearchBound = 9;

namespace detail {

// Isolated-vertex-free graphs with exactly m edges, canonically labeled.
// Levels are generated once per process and shared.
inline const std::vector<Graph>& graphs_with_edges(std::size_t m) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<Graph>> levels;
  std::lock_guard lock(mutex);
  if (!levels.contains(m)) {
    std::map<std::size_t, std::vector<Graph>> fresh;
    const GraphCatalog all = generate_by_edges(m);
    for (const auto* e : all.entries()) fresh[e->graph.size()].push_back(e->graph);
    fresh.try_emplace(m);
    levels.merge(fresh);  // levels already cached stay as they were
  }
  return levels.at(m);
}

}  // namespace detail

/// Every isolated-vertex-free H with J(H) isomorphic to `g`, one per class.
/// Isolated vertices of `g` count: three isolated vertices give C3 and S3.
inline std::vector<Graph> jump_preimages(const Graph& g, std::size_t search_bound = kDefaultSearchBound) {
  const std::size_t m = g.order();
  if (m > search_bound) throw search_bound_exceeded(m, search_bound);
  if (m == 0) return {Graph()};
  auto degrees = g.degrees();
  std::sort(degrees.begin(), degrees.end());
  std::vector<Graph> out;
  for (const Graph& h : detail::graphs_with_edges(m)) {
    if (edge_count_of_jump(h) != g.size()) continue;
    const Graph j = jump(h);
    auto jd = j.degrees();
    std::sort(jd.begin(), jd.end());
    if (jd == degrees && is_isomorphic(j, g)) out.push_back(h);
  }
  return out;
}

struct TreeNode {
  CanonicalForm form;
  Graph graph;  // canonical, isolated-vertex-free (K1 for the edgeless node)
  std::size_t level = 0;
  std::optional<std::size_t> parent;  // index into nodes
  bool closure = false;               // added only as the jump of a node
};

/// Dissipating graphs with arrows to their (stripped) jump graphs. The empty
/// graph is node 0; every edgeless graph is represented by K1 at level 1.
struct DissipationTree {
  std::size_t max_edges = 0;
  std::vector<TreeNode> nodes;

  std::optional<std::size_t> find(const CanonicalForm& form) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].form == form) return i;
    return std::nullopt;
  }
};

namespace detail {

// Tree key for the jump of a node: empty, "vertices" (K1) or stripped.
inline Graph tree_reduce(const Graph& g) {
  if (g.order() == 0) return g;
  if (g.size() == 0) return Graph(1);
  return strip_isolated(g);
}

}  // namespace detail

/// Nodes are the dissipating graphs with at most `max_edges` edges, plus any
/// larger graph reached as a jump (flagged `closure`). Nodes are ordered by
/// level, then canonical form.
inline DissipationTree build_dissipation_tree(std::size_t max_edges, const IterationLimits& limits = {}) {
  if (max_edges > kMaxVertices / 2) throw bound_error("edge bound too large");
  const GraphCatalog candidates = generate_by_edges(max_edges);
  const auto entries = candidates.entries();
  auto kept = parallel_map(entries.size(), [&](std::size_t i) -> std::optional<std::size_t> {
    const Classification c = classify(entries[i]->graph, limits);
    return c.d_value;
  });

  struct Pending {
    Graph graph;
    std::size_t level;
    bool closure;
  };
  std::map<std::string, Pending> found;
  found.emplace(to_graph6(Graph(1)), Pending{Graph(1), 1, false});
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (kept[i]) found.emplace(entries[i]->form.bytes, Pending{entries[i]->graph, *kept[i], false});

  // Close under the jump so every arrow has a target.
  std::vector<std::string> frontier;
  for (const auto& [form, p] : found) frontier.push_back(form);
  while (!frontier.empty()) {
    const std::string key = frontier.back();
    frontier.pop_back();
    const Pending p = found.at(key);
    if (p.level == 0) continue;
    const Graph target = canonical_graph(detail::tree_reduce(jump(p.graph)));
    const std::string form = to_graph6(target);
    if (found.contains(form)) continue;
    found.emplace(form, Pending{target, p.level - 1, true});
    frontier.push_back(form);
  }

  DissipationTree tree;
  tree.max_edges = max_edges;
  std::vector<std::pair<std::size_t, std::string>> order;
  for (const auto& [form, p] : found) order.emplace_back(p.level, form);
  std::sort(order.begin(), order.end());
  for (const auto& [level, form] : order) {
    const Pending& p = found.at(form);
    tree.nodes.push_back({CanonicalForm{form}, p.graph, level, std::nullopt, p.closure});
  }
  for (auto& node : tree.nodes) {
    if (node.level == 0) continue;
    node.parent = tree.find(canonical_form(detail::tree_reduce(jump(node.graph))));
  }
  return tree;
}

/// One line per node: canonical form, level, parent's canonical form ("-").
inline std::string tree_manifest(const DissipationTree& tree) {
  std::string out;
  for (const auto& node : tree.nodes) {
    out += node.form.bytes + "\t" + std::to_string(node.level) + "\t";
    out += node.parent ? tree.nodes[*node.parent].form.bytes : std::string("-");
    out += "\n";
  }
  return out;
}

/// One cluster per level; arrows point from a graph to its jump.
inline std::string tree_to_dot(const DissipationTree& tree) {
  std::string out = "digraph dissipation {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  std::size_t level = 0;
  bool open = false;
  for (const auto& node : tree.nodes) {
    if (!open || node.level != level) {
      if (open) out += "  }\n";
      level = node.level;
      open = true;
      out += "  subgraph cluster_level" + std::to_string(level) + " {\n    label=\"d=" + std::to_string(level) +
             "\";\n";
    }
    std::string label = dot_escape(node.form.bytes);
    if (auto m = catalog_membership(node.graph)) label += "\\n" + dot_escape(m->name);
    out += "    " + dot_node_name(node.form.bytes) + " [label=\"" + label + "\"" +
           (node.closure ? ", style=dashed" : "") + "];\n";
  }
  if (open) out += "  }\n";
  for (const auto& node : tree.nodes)
    if (node.parent)
      out += "  " + dot_node_name(node.form.bytes) + " -> " + dot_node_name(tree.nodes[*node.parent].form.bytes) +
             ";\n";
  return out + "}\n";
}

}  // namespace jumpgraph

#endif  // JUMPGRAPH_PREIMAGE_HPP
