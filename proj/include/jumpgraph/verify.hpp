#ifndef JUMPGRAPH_VERIFY_HPP
#define JUMPGRAPH_VERIFY_HPP

// Executable statements about J, checked over every graph of a catalog.
// Each check is data: an instance generator and a predicate over one
// instance. Instances are lists of graphs, serialized as comma-joined graph6,
// so any failure can be replayed from its payload alone.

#include <jumpgraph/catalog.hpp>
#include <jumpgraph/classify.hpp>
#include <jumpgraph/dissipating.hpp>
#include <jumpgraph/graph.hpp>
#include <jumpgraph/graph_io.hpp>
#include <jumpgraph/iso.hpp>
#include <jumpgraph/parallel.hpp>
#include <jumpgraph/preimage.hpp>
#include <jumpgraph/snipped.hpp>

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jumpgraph {

enum class Outcome { pass, fail, unresolved };
enum class CheckStatus { pass, fail, skip };

inline std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
  }
  return "?";
}

struct CheckFailure {
  std::string check_id;
  std::string payload;  // comma-joined graph6
};

struct CheckResult {
  std::string id;
  std::string statement;
  std::string scope;
  std::size_t tested = 0;
  std::size_t failures = 0;
  std::size_t unresolved = 0;
  CheckStatus status = CheckStatus::skip;
  std::vector<CheckFailure> failing;
  double elapsed_seconds = 0;  // never serialized
};

struct VerificationReport {
  std::string catalog_source;
  std::size_t catalog_size = 0;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (c.failures > 0) return false;
    return true;
  }
};

/// Shared inputs and memoized derived data for one run.
class VerifyContext {
 public:
  VerifyContext(const GraphCatalog& catalog, IterationLimits limits) : catalog_(catalog), limits_(limits) {}

  const GraphCatalog& catalog() const { return catalog_; }
  const IterationLimits& limits() const { return limits_; }

  /// Catalog graphs grouped by the canonical form of their line graph;
  /// connected graphs with at least one edge only.
  const std::map<std::string, std::vector<std::string>>& line_classes() const {
    std::call_once(line_once_, [&] {
      for (const auto* e : catalog_.entries())
        if (e->graph.size() > 0 && is_connected(e->graph))
          line_classes_[canonical_form(line_graph(e->graph)).bytes].push_back(e->form.bytes);
    });
    return line_classes_;
  }

 private:
  const GraphCatalog& catalog_;
  IterationLimits limits_;
  mutable std::once_flag line_once_;
  mutable std::map<std::string, std::vector<std::string>> line_classes_;
};

using Instance = std::vector<Graph>;

struct Check {
  std::string id;
  std::string statement;
  std::string scope;
  std::function<std::vector<Instance>(const VerifyContext&)> instances;
  std::function<Outcome(const VerifyContext&, const Instance&)> predicate;
};

namespace detail {

inline Outcome verdict(bool ok) { return ok ? Outcome::pass : Outcome::fail; }

// Pairwise edge comparison; shares no code with jump().
inline Graph reference_jump(const Graph& g) {
  const auto edges = g.edges();
  Graph out(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      if (a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v) out.add_edge(i, j);
    }
  return out;
}

inline std::vector<Instance> each_graph(const VerifyContext& ctx, const std::function<bool(const Graph&)>& keep) {
  std::vector<Instance> out;
  for (const auto* e : ctx.catalog().entries())
    if (keep(e->graph)) out.push_back({e->graph});
  return out;
}

// Stripped, nonempty, one per class.
inline std::vector<Graph> stripped_classes(const VerifyContext& ctx) {
  std::set<std::string> seen;
  std::vector<Graph> out;
  for (const auto* e : ctx.catalog().entries())
    if (e->stripped.size() > 0 && seen.insert(canonical_form(e->stripped).bytes).second) out.push_back(e->stripped);
  return out;
}

// Quotient of g gluing u and v; loops and duplicate edges vanish.
inline Graph glue(const Graph& g, std::size_t u, std::size_t v) {
  std::vector<std::size_t> index(g.order());
  std::size_t next = 0;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (x != v) index[x] = next++;
  index[v] = index[u];
  Graph out(next);
  for (const Edge& e : g.edges())
    if (index[e.u] != index[e.v]) out.add_edge(index[e.u], index[e.v]);
  return out;
}

inline bool strictly_contains(const Graph& g, const Graph& h) {
  const Graph s = strip_isolated(g);
  return s.size() > h.size() && find_subgraph(h, s, false).has_value();
}

// All computable deltas |E(J^(k+1))| - |E(J^k)| for k >= from are >= bound.
inline bool deltas_at_least(const Graph& g, std::size_t from, std::int64_t bound, const IterationLimits& limits) {
  const auto report = growth_check(g, limits.max_k, limits.vertex_limit);
  for (const auto& row : report.rows)
    if (row.delta && row.k >= from + 1 && *row.delta < bound) return false;
  return true;
}

}  // namespace detail

inline Graph c5_plus_chord() { return from_pairs({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 3}}); }

inline Graph net_plus_pendant() {
  Graph g = disjoint_union(graphs::net(), Graph(1));
  g.add_edge(3, 6);
  return g;
}

/// The check roster, V1 to V10.
inline std::vector<Check> standard_checks() {
  using detail::verdict;
  std::vector<Check> checks;

  checks.push_back({"V1", "J(G) equals the complement of L(G); closed-form edge counts agree", "every catalog graph",
                    [](const VerifyContext& ctx) { return detail::each_graph(ctx, [](const Graph&) { return true; }); },
                    [](const VerifyContext&, const Instance& in) {
                      const Graph& g = in.at(0);
                      const Graph j = jump(g);
                      bool ok = j == complement(line_graph(g)) && j == detail::reference_jump(g);
                      ok = ok && j.order() == g.size() && j.size() == edge_count_of_jump(g);
                      ok = ok && jump(strip_isolated(g)) == j;
                      if (j.size() <= kMaxVertices) ok = ok && jump(j).size() == edge_count_of_double_jump(g);
                      return verdict(ok);
                    }});

  checks.push_back({"V2", "H subgraph of G implies J(H) induced subgraph of J(G)",
                    "every catalog graph with each single edge removed, plus one seeded random spanning subgraph",
                    [](const VerifyContext& ctx) {
                      std::vector<Instance> out;
                      std::mt19937_64 rng(20240601);
                      for (const auto* e : ctx.catalog().entries()) {
                        const Graph& g = e->graph;
                        const auto edges = g.edges();
                        for (const Edge& x : edges) {
                          Graph h = g;
                          h.remove_edge(x.u, x.v);
                          out.push_back({g, h});
                        }
                        Graph h(g.order());
                        for (const Edge& x : edges)
                          if (rng() & 1) h.add_edge(x.u, x.v);
                        out.push_back({g, h});
                      }
                      return out;
                    },
                    [](const VerifyContext&, const Instance& in) {
                      const Graph jg = jump(in.at(0));
                      const Graph jh = jump(in.at(1));
                      auto w = find_subgraph(jh, jg, true);
                      return verdict(w && is_valid_witness(jh, jg, *w));
                    }});

  checks.push_back({"V3", "H snipped in G implies J(H) subgraph of J(G)",
                    "every catalog graph with each vertex pair glued, isolated vertices removed",
                    [](const VerifyContext& ctx) {
                      std::vector<Instance> out;
                      for (const auto* e : ctx.catalog().entries()) {
                        const Graph& g = e->stripped;
                        for (std::size_t u = 0; u < g.order(); ++u)
                          for (std::size_t v = u + 1; v < g.order(); ++v) {
                            Graph h = strip_isolated(detail::glue(g, u, v));
                            if (h.size() > 0) out.push_back({g, h});
                          }
                      }
                      return out;
                    },
                    [](const VerifyContext&, const Instance& in) {
                      const Graph& g = in.at(0);
                      const Graph& h = in.at(1);
                      auto s = find_snipped(h, g);
                      if (!s || !verify_snipped(*s, h, g)) return Outcome::fail;
                      const Graph jh = jump(h);
                      const Graph jg = jump(g);
                      auto w = find_subgraph(jh, jg, false);
                      return verdict(w && is_valid_witness(jh, jg, *w));
                    }});

  checks.push_back({"V4", "H snipped in G, both dissipating, implies d(H) <= d(G)",
                    "ordered pairs of distinct dissipating catalog classes",
                    [](const VerifyContext& ctx) {
                      std::vector<Graph> finite;
                      for (const Graph& g : detail::stripped_classes(ctx))
                        if (catalog_membership(g)) finite.push_back(g);
                      std::vector<Instance> out;
                      for (const Graph& h : finite)
                        for (const Graph& g : finite)
                          if (!(h == g) && h.size() <= g.size()) out.push_back({h, g});
                      return out;
                    },
                    [](const VerifyContext& ctx, const Instance& in) {
                      const Graph& h = in.at(0);
                      const Graph& g = in.at(1);
                      if (!find_snipped(h, g)) return Outcome::pass;
                      auto dh = dissipation_number(h, ctx.limits().max_k, ctx.limits().vertex_limit);
                      auto dg = dissipation_number(g, ctx.limits().max_k, ctx.limits().vertex_limit);
                      if (!dh || !dg) return Outcome::unresolved;
                      return verdict(*dh <= *dg);
                    }});

  checks.push_back({"V5", "J^k(G) = G for some k >= 1 only for C5 and N, with k = 1",
                    "every catalog graph with at least one edge, k <= 3",
                    [](const VerifyContext& ctx) { return detail::each_graph(ctx, [](const Graph& g) { return g.size() > 0; }); },
                    [](const VerifyContext& ctx, const Instance& in) {
                      const Graph s = strip_isolated(in.at(0));
                      const bool fixed = is_isomorphic(s, graphs::cycle(5)) || is_isomorphic(s, graphs::net());
                      const auto p = find_periodic(in.at(0), 3, ctx.limits().vertex_limit);
                      if (fixed) return verdict(p.period == 1u);
                      return verdict(!p.period);
                    }});

  checks.push_back({"V6", "exactly one verdict; divergence has a valid C5 or N witness; dissipation matches the known list",
                    "every catalog graph",
                    [](const VerifyContext& ctx) { return detail::each_graph(ctx, [](const Graph&) { return true; }); },
                    [](const VerifyContext& ctx, const Instance& in) {
                      const Graph& g = in.at(0);
                      try {
                        const Classification c = classify(g, ctx.limits());
                        if (!validate_classification(g, c)) return Outcome::fail;
                        const auto member = catalog_membership(g);
                        if ((c.verdict == Verdict::dissipates) != member.has_value()) return Outcome::fail;
                        return verdict(!member || member->d == *c.d_value);
                      } catch (const unresolved_error&) {
                        return Outcome::unresolved;
                      }
                    }});

  checks.push_back({"V7", "diameter rules: >= 5 diverges; 4 diverges iff >= 6 edges; 3 with >= 7 edges diverges "
                          "outside the spider family; 2 dissipates iff in the diameter-2 list",
                    "connected catalog graphs with diameter >= 2",
                    [](const VerifyContext& ctx) {
                      return detail::each_graph(ctx, [](const Graph& g) {
                        if (g.order() < 2 || !is_connected(g)) return false;
                        return *diameter(g) >= 2;
                      });
                    },
                    [](const VerifyContext& ctx, const Instance& in) {
                      const Graph& g = in.at(0);
                      Classification c;
                      try {
                        c = classify(g, ctx.limits());
                      } catch (const unresolved_error&) {
                        return Outcome::unresolved;
                      }
                      const bool diverges = c.verdict == Verdict::diverges || c.verdict == Verdict::converges;
                      const std::size_t d = *diameter(g);
                      if (d >= 5) return verdict(diverges);
                      if (d == 4) return verdict(diverges == (g.size() >= 6));
                      if (d == 3) return verdict(g.size() < 7 || diverges == !is_exception_family(g));
                      return verdict(!diverges == is_diameter2_dissipating(g));
                    }});

  checks.push_back({"V8", "edge counts never drop once C5 is strictly contained and strictly grow once N is; "
                          "C5 plus a chord grows by at least 2 per jump",
                    "every catalog graph plus C5+chord and N+pendant, until the vertex limit",
                    [](const VerifyContext& ctx) {
                      auto out = detail::each_graph(ctx, [](const Graph& g) { return g.size() > 0; });
                      for (const Graph& extra : {c5_plus_chord(), net_plus_pendant()})
                        if (!ctx.catalog().contains(extra)) out.push_back({extra});
                      return out;
                    },
                    [](const VerifyContext& ctx, const Instance& in) {
                      const Graph& g = in.at(0);
                      bool ok = true;
                      if (detail::strictly_contains(g, graphs::cycle(5)))
                        ok = ok && detail::deltas_at_least(g, 0, 0, ctx.limits());
                      if (detail::strictly_contains(g, graphs::net()))
                        ok = ok && detail::deltas_at_least(g, 0, 1, ctx.limits());
                      if (is_isomorphic(strip_isolated(g), c5_plus_chord()))
                        ok = ok && detail::deltas_at_least(g, 1, 2, ctx.limits());
                      return verdict(ok);
                    }});

  checks.push_back({"V9", "no isolated vertices and at least two components implies J(G) connected",
                    "catalog graphs whose stripped form is disconnected",
                    [](const VerifyContext& ctx) {
                      std::vector<Instance> out;
                      for (const auto* e : ctx.catalog().entries())
                        if (e->stripped.size() > 0 && !is_connected(e->stripped)) out.push_back({e->stripped});
                      return out;
                    },
                    [](const VerifyContext&, const Instance& in) { return verdict(is_connected(jump(in.at(0)))); }});

  checks.push_back({"V10", "connected graphs with isomorphic line graphs are isomorphic, except C3 and S3",
                    "connected catalog graphs with at least one edge",
                    [](const VerifyContext& ctx) {
                      return detail::each_graph(ctx, [](const Graph& g) { return g.size() > 0 && is_connected(g); });
                    },
                    [](const VerifyContext& ctx, const Instance& in) {
                      const Graph& g = in.at(0);
                      const auto& classes = ctx.line_classes();
                      auto it = classes.find(canonical_form(line_graph(g)).bytes);
                      if (it == classes.end()) return Outcome::fail;
                      const bool exception = is_isomorphic(g, graphs::cycle(3)) || is_isomorphic(g, graphs::star(3));
                      return verdict(it->second.size() == (exception ? 2u : 1u));
                    }});
  return checks;
}

inline std::string encode_instance(const Instance& in) {
  std::string out;
  for (const Graph& g : in) {
    if (!out.empty()) out += ",";
    out += to_graph6(g);
  }
  return out;
}

inline Instance decode_instance(std::string_view payload) {
  Instance out;
  std::size_t start = 0;
  while (start <= payload.size()) {
    const std::size_t comma = payload.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? payload.size() : comma;
    out.push_back(from_graph6(payload.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline CheckResult run_check(const Check& check, const VerifyContext& ctx) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  r.id = check.id;
  r.statement = check.statement;
  r.scope = check.scope;
  const auto instances = check.instances(ctx);
  const auto outcomes = parallel_map(instances.size(), [&](std::size_t i) { return check.predicate(ctx, instances[i]); });
  for (std::size_t i = 0; i < instances.size(); ++i) {
    ++r.tested;
    if (outcomes[i] == Outcome::unresolved) ++r.unresolved;
    if (outcomes[i] != Outcome::fail) continue;
    ++r.failures;
    r.failing.push_back({check.id, encode_instance(instances[i])});
  }
  r.status = r.failures > 0 ? CheckStatus::fail : r.tested == 0 ? CheckStatus::skip : CheckStatus::pass;
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Runs the checks whose ids are listed (all when `only` is empty).
inline VerificationReport run_all(const GraphCatalog& catalog, const IterationLimits& limits = {},
                                  const std::vector<std::string>& only = {}) {
  if (catalog.empty()) throw std::invalid_argument("verification needs a nonempty catalog");
  VerifyContext ctx(catalog, limits);
  VerificationReport report{catalog.source(), catalog.size(), {}};
  for (const auto& check : standard_checks()) {
    if (!only.empty() && std::find(only.begin(), only.end(), check.id) == only.end()) continue;
    report.checks.push_back(run_check(check, ctx));
  }
  return report;
}

/// Re-evaluates one failure payload against the same catalog.
inline Outcome replay(const std::string& check_id, std::string_view payload, const GraphCatalog& catalog,
                      const IterationLimits& limits = {}) {
  VerifyContext ctx(catalog, limits);
  for (const auto& check : standard_checks())
    if (check.id == check_id) return check.predicate(ctx, decode_instance(payload));
  throw std::invalid_argument("unknown check id " + check_id);
}

/// `check_id<TAB>tested<TAB>failures<TAB>status` per check.
inline std::string format_machine(const VerificationReport& report) {
  std::string out;
  for (const auto& c : report.checks)
    out += c.id + "\t" + std::to_string(c.tested) + "\t" + std::to_string(c.failures) + "\t" +
           std::string(to_string(c.status)) + "\n";
  return out;
}

inline std::string format_text(const VerificationReport& report, bool with_timings = false) {
  std::string out = "catalog: " + report.catalog_source + " (" + std::to_string(report.catalog_size) + " graphs)\n";
  for (const auto& c : report.checks) {
    out += std::string(to_string(c.status)) + " " + c.id + ": " + c.statement + "\n";
    out += "     scope: " + c.scope + "\n";
    out += "     tested " + std::to_string(c.tested) + ", failures " + std::to_string(c.failures) + ", unresolved " +
           std::to_string(c.unresolved);
    if (with_timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, ", %.3fs", c.elapsed_seconds);
      out += buf;
    }
    out += "\n";
    for (const auto& f : c.failing) out += "     replay: " + f.check_id + " " + f.payload + "\n";
  }
  out += report.passed() ? "overall: PASS\n" : "overall: FAIL\n";
  return out;
}

}  // namespace jumpgraph

#endif  // JUMPGRAPH_VERIFY_HPP
