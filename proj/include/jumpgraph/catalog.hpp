#ifndef JUMPGRAPH_CATALOG_HPP
#define JUMPGRAPH_CATALOG_HPP

// Isomorph-free catalogs of small graphs: orderly generation by vertex count,
// generation of isolated-vertex-free graphs by edge count, and graph6 ingest.

#include <jumpgraph/errors.hpp>
#include <jumpgraph/graph.hpp>
#include <jumpgraph/graph_io.hpp>
#include <jumpgraph/iso.hpp>
#include <jumpgraph/parallel.hpp>

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace jumpgraph {

inline constexpr std::size_t kMaxGeneratedVertices = 8;

struct CatalogEntry {
  Graph graph;  // canonically labeled
  Graph stripped;
  CanonicalForm form;
};

inline CatalogEntry make_entry(const Graph& g) {
  Graph canon = canonical_graph(g);
  CanonicalForm form{to_graph6(canon)};
  Graph stripped = strip_isolated(canon);
  return {std::move(canon), std::move(stripped), std::move(form)};
}

/// Scope filter. Unset fields match everything. A disconnected graph has
/// infinite diameter and never matches a `diameter` value.
struct CatalogFilter {
  std::optional<bool> connected;
  std::optional<std::size_t> diameter;
  std::optional<std::size_t> min_edges;
  std::optional<std::size_t> max_edges;
  std::optional<std::size_t> max_vertices;

  bool matches(const Graph& g) const {
    if (max_vertices && g.order() > *max_vertices) return false;
    if (min_edges && g.size() < *min_edges) return false;
    if (max_edges && g.size() > *max_edges) return false;
    if (connected && is_connected(g) != *connected) return false;
    if (diameter) {
      if (g.empty()) return false;
      auto d = jumpgraph::diameter(g);
      if (!d || *d != *diameter) return false;
    }
    return true;
  }
};

class GraphCatalog {
 public:
  GraphCatalog() = default;
  explicit GraphCatalog(std::string source) : source_(std::move(source)) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t duplicates_dropped() const noexcept { return duplicates_; }

  /// Inserts unless an isomorphic entry exists. Returns whether it was new.
  bool insert(const Graph& g) {
    CatalogEntry entry = make_entry(g);
    if (!forms_.insert(entry.form.bytes).second) {
      ++duplicates_;
      return false;
    }
    auto& bucket = by_vertices_[entry.graph.order()];
    auto pos = std::lower_bound(bucket.begin(), bucket.end(), entry,
                                [](const CatalogEntry& a, const CatalogEntry& b) { return a.form < b.form; });
    bucket.insert(pos, std::move(entry));
    return true;
  }

  bool contains(const Graph& g) const { return forms_.contains(canonical_form(g).bytes); }

  const std::map<std::size_t, std::vector<CatalogEntry>>& by_vertices() const noexcept { return by_vertices_; }

  /// Entries for `n` vertices (empty when none).
  const std::vector<CatalogEntry>& with_vertices(std::size_t n) const {
    static const std::vector<CatalogEntry> none;
    auto it = by_vertices_.find(n);
    return it == by_vertices_.end() ? none : it->second;
  }

  /// All entries ordered by vertex count, then canonical form.
  std::vector<const CatalogEntry*> entries() const {
    std::vector<const CatalogEntry*> out;
    for (const auto& [n, bucket] : by_vertices_)
      for (const auto& e : bucket) out.push_back(&e);
    return out;
  }

  std::size_t size() const noexcept { return forms_.size(); }
  bool empty() const noexcept { return forms_.empty(); }

  GraphCatalog filter(const CatalogFilter& f) const {
    GraphCatalog out(source_ + " (filtered)");
    for (const auto* e : entries())
      if (f.matches(e->graph)) out.insert_entry(*e);
    return out;
  }

  /// One canonical graph6 line per entry, sorted.
  std::string manifest() const {
    std::string out;
    for (const auto& form : forms_) out += form + "\n";
    return out;
  }

 private:
  void insert_entry(const CatalogEntry& e) {
    forms_.insert(e.form.bytes);
    by_vertices_[e.graph.order()].push_back(e);
  }

  std::string source_;
  std::size_t duplicates_ = 0;
  std::set<std::string> forms_;
  std::map<std::size_t, std::vector<CatalogEntry>> by_vertices_;
};

namespace detail {

// Children of `parent` obtained by adding one vertex, kept only when the new
// vertex is canonically last up to isomorphism: removing the child's
// canonically last vertex must give back the parent's class.
inline std::vector<Graph> canonical_children(const Graph& parent, const CanonicalForm& parent_form) {
  const std::size_t n = parent.order();
  std::vector<Graph> out;
  std::set<std::string> seen;
  for (Row s = 0; s < (Row{1} << n); ++s) {
    Graph child(n + 1);
    for (const Edge& e : parent.edges()) child.add_edge(e.u, e.v);
    for (Row r = s; r != 0; r &= r - 1) child.add_edge(static_cast<std::size_t>(std::countr_zero(r)), n);
    const auto perm = canonical_labeling(child);
    const auto last = static_cast<std::size_t>(std::find(perm.begin(), perm.end(), n) - perm.begin());
    const Graph reduced = induced_subgraph(child, child.all_vertices() & ~bit(last));
    if (canonical_form(reduced) != parent_form) continue;
    Graph canon = relabel(child, perm);
    if (seen.insert(to_graph6(canon)).second) out.push_back(std::move(canon));
  }
  return out;
}

}  // namespace detail

/// Every simple graph on 1..n_max vertices, one per isomorphism class.
inline GraphCatalog generate(std::size_t n_max) {
  if (n_max > kMaxGeneratedVertices)
    throw bound_error("generation is limited to " + std::to_string(kMaxGeneratedVertices) + " vertices");
  GraphCatalog catalog("generated n<=" + std::to_string(n_max));
  if (n_max == 0) return catalog;
  std::vector<Graph> level{Graph(1)};
  catalog.insert(level.front());
  for (std::size_t n = 2; n <= n_max; ++n) {
    auto batches = parallel_map(level.size(), [&](std::size_t i) {
      return detail::canonical_children(level[i], canonical_form(level[i]));
    });
    std::vector<Graph> next;
    for (auto& batch : batches)
      for (auto& g : batch) {
        catalog.insert(g);
        next.push_back(std::move(g));
      }
    level = std::move(next);
  }
  return catalog;
}

/// Isolated-vertex-free graphs with 1..max_edges edges (plus the empty graph),
/// grown one edge at a time and deduplicated by canonical form.
inline GraphCatalog generate_by_edges(std::size_t max_edges) {
  if (2 * max_edges > kMaxVertices) throw bound_error("edge bound too large for the vertex limit");
  GraphCatalog catalog("generated m<=" + std::to_string(max_edges));
  catalog.insert(Graph());
  std::vector<Graph> level{Graph()};
  for (std::size_t m = 1; m <= max_edges; ++m) {
    auto batches = parallel_map(level.size(), [&](std::size_t i) {
      const Graph& g = level[i];
      const std::size_t n = g.order();
      std::vector<Graph> out;
      auto grown = [&](std::size_t extra) {
        Graph h(n + extra);
        for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
        return h;
      };
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
          if (!g.adjacent(u, v)) {
            Graph h = grown(0);
            h.add_edge(u, v);
            out.push_back(std::move(h));
          }
      for (std::size_t u = 0; u < n; ++u) {
        Graph h = grown(1);
        h.add_edge(u, n);
        out.push_back(std::move(h));
      }
      Graph h = grown(2);
      h.add_edge(n, n + 1);
      out.push_back(std::move(h));
      return out;
    });
    std::vector<Graph> next;
    for (auto& batch : batches)
      for (auto& h : batch)
        if (catalog.insert(h)) next.push_back(canonical_graph(h));
    level = std::move(next);
  }
  return catalog;
}

/// Reads one graph6 string per non-blank line. Duplicates are dropped and
/// counted; a malformed line raises format_error naming it.
inline GraphCatalog ingest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  GraphCatalog catalog(path);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (detail::trim(line).empty()) continue;
    catalog.insert(from_graph6(line, number));
  }
  return catalog;
}

}  // namespace jumpgraph

#endif  // JUMPGRAPH_CATALOG_HPP
