#ifndef JUMPGRAPH_CLASSIFY_HPP
#define JUMPGRAPH_CLASSIFY_HPP

// End behaviour of the sequence G, J(G), J(J(G)), ...
//
// A graph either reaches the empty graph (it dissipates), is C5 or the net N
// up to isolated vertices (it converges), or some iterate contains C5 or N as
// a subgraph (it diverges). Divergence always comes with a checkable witness.

#include <jumpgraph/config.hpp>
#include <jumpgraph/dissipating.hpp>
#include <jumpgraph/graph.hpp>
#include <jumpgraph/iso.hpp>
#include <jumpgraph/snipped.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jumpgraph {

enum class Verdict { dissipates, converges, diverges };
enum class Target { C5, Net };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::dissipates: return "DISSIPATES";
    case Verdict::converges: return "CONVERGES";
    case Verdict::diverges: return "DIVERGES";
  }
  return "?";
}

inline std::string_view to_string(Target t) { return t == Target::C5 ? "C5" : "N"; }

inline Graph target_graph(Target t) { return t == Target::C5 ? graphs::cycle(5) : graphs::net(); }

/// One iterate. `materialized` is false for counts derived in closed form.
struct TraceRow {
  std::size_t k = 0;
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  bool materialized = true;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

/// The target sits inside J^k(G). With `via_snipped`, J^k(G) was too large to
/// build: witness.vertex_map then sends target vertices to edge ids of
/// J^(k-1)(G), and adjacency in J^k means those edges share no endpoint.
struct Accumulation {
  std::size_t k = 0;
  Target target = Target::C5;
  SubgraphWitness witness;
  bool via_snipped = false;
};

struct Classification {
  Verdict verdict = Verdict::dissipates;
  std::optional<std::size_t> d_value;
  std::optional<Target> fixed_point;
  std::optional<Accumulation> accumulation;
  std::vector<TraceRow> trace;
};

/// Classification gave up: max_k reached or an iterate outgrew the vertex
/// limit without a witness.
class unresolved_error : public std::runtime_error {
 public:
  unresolved_error(const std::string& reason, std::size_t max_k, std::vector<TraceRow> trace)
      : std::runtime_error("unresolved after " + std::to_string(trace.empty() ? 0 : trace.back().k) +
                           " jumps (max_k=" + std::to_string(max_k) + "): " + reason),
        max_k_(max_k),
        trace_(std::move(trace)) {}

  std::size_t max_k() const noexcept { return max_k_; }
  const std::vector<TraceRow>& trace() const noexcept { return trace_; }

 private:
  std::size_t max_k_;
  std::vector<TraceRow> trace_;
};

/// d(g): the number of jumps to reach the empty graph, or nullopt if it is
/// not reached within `max_k` jumps. Throws vertex_limit_error when an
/// iterate would exceed `vertex_limit` first.
inline std::optional<std::size_t> dissipation_number(const Graph& g, std::size_t max_k,
                                                     std::size_t vertex_limit = kMaxVertices) {
  if (max_k < 1) throw std::invalid_argument("max_k must be at least 1");
  Graph cur = g;
  for (std::size_t k = 0;; ++k) {
    if (cur.order() == 0) return k;
    if (k == max_k) return std::nullopt;
    if (cur.size() > vertex_limit) throw vertex_limit_error(cur.size(), vertex_limit);
    cur = jump(cur);
  }
}

namespace detail {

inline std::optional<Accumulation> find_target(const Graph& g, std::size_t k) {
  for (Target t : {Target::C5, Target::Net})
    if (auto w = find_subgraph(target_graph(t), g, false)) return Accumulation{k, t, std::move(*w), false};
  return std::nullopt;
}

// A snipped copy of the target in `g` puts the target inside J(g): compose
// an embedding target -> J(target) with the witness's edge map.
inline std::optional<Accumulation> find_snipped_target(const Graph& g, std::size_t k) {
  for (Target t : {Target::C5, Target::Net}) {
    const Graph h = target_graph(t);
    auto snipped = find_snipped(h, g);
    if (!snipped) continue;
    auto self = find_subgraph(h, jump(h), false);
    if (!self) throw std::logic_error("target is not a fixed point of the jump");
    SubgraphWitness w{std::vector<std::size_t>(h.order()), false};
    for (std::size_t x = 0; x < h.order(); ++x) w.vertex_map[x] = snipped->edge_map[self->vertex_map[x]];
    return Accumulation{k + 1, t, std::move(w), true};
  }
  return std::nullopt;
}

}  // namespace detail

inline Classification classify(const Graph& g, const IterationLimits& limits = {}) {
  if (limits.max_k < 1) throw std::invalid_argument("max_k must be at least 1");
  Classification out;
  const Graph stripped = strip_isolated(g);
  for (Target t : {Target::C5, Target::Net})
    if (is_isomorphic(stripped, target_graph(t))) {
      out.verdict = Verdict::converges;
      out.fixed_point = t;
      out.trace.push_back({0, g.order(), g.size(), true});
      return out;
    }

  Graph cur = g;
  for (std::size_t k = 0;; ++k) {
    out.trace.push_back({k, cur.order(), cur.size(), true});
    if (cur.order() == 0) {
      out.verdict = Verdict::dissipates;
      out.d_value = k;
      return out;
    }
    if (auto acc = detail::find_target(cur, k)) {
      out.verdict = Verdict::diverges;
      out.accumulation = std::move(acc);
      return out;
    }
    if (k == limits.max_k) throw unresolved_error("max_k reached", limits.max_k, std::move(out.trace));
    if (cur.size() > limits.vertex_limit) {
      if (auto acc = detail::find_snipped_target(cur, k)) {
        out.trace.push_back({k + 1, cur.size(), edge_count_of_jump(cur), false});
        out.verdict = Verdict::diverges;
        out.accumulation = std::move(acc);
        return out;
      }
      throw unresolved_error("iterate " + std::to_string(k + 1) + " has " + std::to_string(cur.size()) +
                                 " vertices, over the limit of " + std::to_string(limits.vertex_limit),
                             limits.max_k, std::move(out.trace));
    }
    cur = jump(cur);
  }
}

/// Re-derives a classification's claims from `g` alone.
inline bool validate_classification(const Graph& g, const Classification& c) {
  const int payloads = int(c.d_value.has_value()) + int(c.fixed_point.has_value()) + int(c.accumulation.has_value());
  if (payloads != 1) return false;
  switch (c.verdict) {
    case Verdict::dissipates: {
      if (!c.d_value) return false;
      Graph cur = g;
      for (std::size_t k = 0; k < *c.d_value; ++k) {
        if (cur.order() == 0 || cur.size() > kMaxVertices) return false;
        cur = jump(cur);
      }
      return cur.order() == 0;
    }
    case Verdict::converges:
      return c.fixed_point && is_isomorphic(strip_isolated(g), target_graph(*c.fixed_point));
    case Verdict::diverges: {
      if (!c.accumulation) return false;
      const auto& acc = *c.accumulation;
      const std::size_t steps = acc.via_snipped ? acc.k - 1 : acc.k;
      if (acc.via_snipped && acc.k == 0) return false;
      Graph cur = g;
      for (std::size_t k = 0; k < steps; ++k) {
        if (cur.size() > kMaxVertices) return false;
        cur = jump(cur);
      }
      const Graph h = target_graph(acc.target);
      if (!acc.via_snipped) return is_valid_witness(h, cur, acc.witness);
      const auto edges = cur.edges();
      const auto& map = acc.witness.vertex_map;
      if (map.size() != h.order()) return false;
      for (std::size_t a = 0; a < map.size(); ++a) {
        if (map[a] >= edges.size()) return false;
        for (std::size_t b = a + 1; b < map.size(); ++b)
          if (map[a] == map[b]) return false;
      }
      for (const Edge& e : h.edges())
        if (edges[map[e.u]].incident(edges[map[e.v]])) return false;
      return true;
    }
  }
  return false;
}

struct GrowthRow {
  std::size_t k = 0;
  std::uint64_t edges = 0;
  std::optional<std::int64_t> delta;  // edges(k) - edges(k-1)
  bool materialized = true;
};

struct GrowthReport {
  std::vector<GrowthRow> rows;
  bool truncated = false;
};

/// |E(J^k(g))| for k = 0..k_max. Past the vertex limit the next one or two
/// counts come from closed forms, then the report is marked truncated.
inline GrowthReport growth_check(const Graph& g, std::size_t k_max, std::size_t vertex_limit = kMaxVertices) {
  GrowthReport out;
  auto push = [&](std::size_t k, std::uint64_t edges, bool materialized) {
    std::optional<std::int64_t> delta;
    if (!out.rows.empty())
      delta = static_cast<std::int64_t>(edges) - static_cast<std::int64_t>(out.rows.back().edges);
    out.rows.push_back({k, edges, delta, materialized});
  };
  Graph cur = g;
  push(0, cur.size(), true);
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (cur.size() <= vertex_limit) {
      cur = jump(cur);
      push(k, cur.size(), true);
      continue;
    }
    push(k, edge_count_of_jump(cur), false);
    if (k + 1 <= k_max) push(k + 1, edge_count_of_double_jump(cur), false);
    out.truncated = k + 1 < k_max;
    break;
  }
  return out;
}

struct PeriodicResult {
  std::optional<std::size_t> period;
  bool truncated = false;
};

/// Smallest 1 <= k <= k_max with J^k(g) isomorphic to g, isolated vertices
/// ignored on both sides.
inline PeriodicResult find_periodic(const Graph& g, std::size_t k_max, std::size_t vertex_limit = kMaxVertices) {
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  const Graph base = strip_isolated(g);
  Graph cur = g;
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (cur.size() > vertex_limit) {
      // J^k and J^(k+1) cannot be built; their edge counts still rule them out.
      if (edge_count_of_jump(cur) == base.size()) return {std::nullopt, true};
      if (k + 1 <= k_max && edge_count_of_double_jump(cur) == base.size()) return {std::nullopt, true};
      return {std::nullopt, k + 1 < k_max};
    }
    cur = jump(cur);
    if (cur.size() == base.size() && is_isomorphic(strip_isolated(cur), base)) return {k, false};
  }
  return {std::nullopt, false};
}

/// One-line verdict: "DISSIPATES d=7", "CONVERGES target=C5",
/// "DIVERGES k=1 target=C5".
inline std::string to_record(const Classification& c) {
  std::string out(to_string(c.verdict));
  if (c.d_value) out += " d=" + std::to_string(*c.d_value);
  if (c.fixed_point) out += " target=" + std::string(to_string(*c.fixed_point));
  if (c.accumulation) {
    out += " k=" + std::to_string(c.accumulation->k) + " target=" + std::string(to_string(c.accumulation->target));
    if (c.accumulation->via_snipped) out += " via=snipped";
  }
  return out;
}

}  // namespace jumpgraph

#endif  // JUMPGRAPH_CLASSIFY_HPP
