#ifndef JUMPGRAPH_TOOLS_CLI_HPP
#define JUMPGRAPH_TOOLS_CLI_HPP

// Command-line front end. run_cli() is separate from main() so tests can
// drive every command in-process.

#include <jumpgraph/jumpgraph.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace jumpgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Usage problems that are detected after argument parsing.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads one graph from `source`: "g6:<graph6>", "edges:<u v;...>" with
/// ';' separating lines, "-" for standard input, or a file path.
inline Graph read_graph(const std::string& source, GraphFormat format, std::istream& in) {
  std::string text;
  if (source.starts_with("g6:")) {
    text = source.substr(3);
    if (format == GraphFormat::automatic) format = GraphFormat::graph6;
  } else if (source.starts_with("edges:")) {
    text = source.substr(6);
    if (format == GraphFormat::automatic) format = GraphFormat::edge_list;
  } else if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(source);
    if (!file) throw usage_error("cannot open input '" + source + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  return parse_graph(text, format);
}

inline nlohmann::json to_json(const Classification& c) {
  nlohmann::json j;
  j["verdict"] = std::string(to_string(c.verdict));
  if (c.d_value) j["d"] = *c.d_value;
  if (c.fixed_point) j["target"] = std::string(to_string(*c.fixed_point));
  if (c.accumulation) {
    j["k"] = c.accumulation->k;
    j["target"] = std::string(to_string(c.accumulation->target));
    j["via_snipped"] = c.accumulation->via_snipped;
    j["witness"] = c.accumulation->witness.vertex_map;
  }
  j["trace"] = nlohmann::json::array();
  for (const auto& row : c.trace)
    j["trace"].push_back({{"k", row.k}, {"vertices", row.vertices}, {"edges", row.edges},
                          {"materialized", row.materialized}});
  return j;
}

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["catalog"] = r.catalog_source;
  j["catalog_size"] = r.catalog_size;
  j["overall"] = r.passed() ? "PASS" : "FAIL";
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json failing = nlohmann::json::array();
    for (const auto& f : c.failing) failing.push_back(f.payload);
    j["checks"].push_back({{"id", c.id}, {"statement", c.statement}, {"scope", c.scope}, {"tested", c.tested},
                           {"failures", c.failures}, {"unresolved", c.unresolved},
                           {"status", std::string(to_string(c.status))}, {"failing", failing}});
  }
  return j;
}

inline void print_trace(std::ostream& out, const std::vector<TraceRow>& trace) {
  out << "k\tn\tm\n";
  for (const auto& row : trace)
    out << row.k << "\t" << row.vertices << "\t" << row.edges << (row.materialized ? "" : "\t(closed form)") << "\n";
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw usage_error("cannot write '" + path + "'");
  file << text;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
  const IterationLimits env = IterationLimits::from_environment();

  CLI::App app{
      "Jump graphs J(G): the complement of the line graph.\n"
      "Graphs are read from --in: a file, '-' for stdin, g6:<graph6> or edges:<n N;u v;...>.\n"
      "Edge lists start with 'n <vertex_count>' followed by 'u v' lines.\n"
      "Exit codes: 0 success, 1 domain failure (unresolved, failed check), 2 usage or format error.\n"
      "Environment: JUMPGRAPH_MAX_K and JUMPGRAPH_VERTEX_LIMIT set defaults; flags win.",
      "jumpgraph"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format_name = "auto";
  std::size_t max_k = env.max_k;
  std::size_t vertex_limit = env.vertex_limit;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--in", input, "graph source (file, -, g6:..., edges:...)");
    cmd->add_option("--format", format_name, "auto, graph6 or edges")->check(CLI::IsMember({"auto", "graph6", "edges"}));
  };
  auto add_limits = [&](CLI::App* cmd) {
    cmd->add_option("--max-k", max_k, "most jumps to compute")->check(CLI::PositiveNumber);
    cmd->add_option("--vertex-limit", vertex_limit, "largest iterate to build (<= 64)")->check(CLI::Range(1, 64));
  };

  auto* jump_cmd = app.add_subcommand("jump", "print J(G) in graph6");
  add_input(jump_cmd);
  bool jump_edges = false;
  jump_cmd->add_flag("--edges", jump_edges, "print an edge list instead");

  auto* iterate_cmd = app.add_subcommand("iterate", "print k<TAB>n<TAB>m<TAB>graph6 for J^0..J^K");
  add_input(iterate_cmd);
  std::size_t steps = 5;
  iterate_cmd->add_option("--steps", steps, "number of jumps");

  auto* classify_cmd = app.add_subcommand("classify", "verdict line and trace table");
  add_input(classify_cmd);
  add_limits(classify_cmd);
  bool witness = false;
  bool as_json = false;
  classify_cmd->add_flag("--witness", witness, "print the C5/N vertex map");
  classify_cmd->add_flag("--json", as_json, "print a JSON document");

  auto* d_cmd = app.add_subcommand("d-value", "print d(G) or INFINITE");
  add_input(d_cmd);
  add_limits(d_cmd);

  auto* snipped_cmd = app.add_subcommand("snipped", "snipped witness of H in G, or NOT-SNIPPED");
  std::string h_source, g_source;
  snipped_cmd->set_help_flag("--help", "Print this help message and exit");  // frees "h" for --h
  snipped_cmd->add_option("--h", h_source, "pattern graph H")->required();
  snipped_cmd->add_option("--g", g_source, "host graph G")->required();
  snipped_cmd->add_option("--format", format_name, "auto, graph6 or edges")
      ->check(CLI::IsMember({"auto", "graph6", "edges"}));

  auto* preimage_cmd = app.add_subcommand("preimage", "all H with J(H) isomorphic to G, in graph6");
  add_input(preimage_cmd);
  std::size_t bound = kDefaultSearchBound;
  preimage_cmd->add_option("--bound", bound, "largest preimage edge count to search");

  auto* tree_cmd = app.add_subcommand("tree", "dissipation tree manifest: form<TAB>d<TAB>parent");
  std::size_t max_edges = 6;
  std::string dot_path;
  tree_cmd->add_option("--max-edges", max_edges, "edge bound of the enumeration")->check(CLI::Range(0, 10));
  tree_cmd->add_option("--dot", dot_path, "also write Graphviz DOT here");
  add_limits(tree_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run checks V1-V10 over a catalog");
  std::size_t n_max = 6;
  std::string catalog_path;
  bool machine = false;
  bool timings = false;
  std::vector<std::string> only;
  std::vector<std::string> replay_args;
  verify_cmd->add_option("--n-max", n_max, "generate all graphs up to this order")->check(CLI::Range(1, 8));
  verify_cmd->add_option("--catalog", catalog_path, "graph6 file to use instead of generation");
  verify_cmd->add_option("--check", only, "restrict to these check ids");
  verify_cmd->add_option("--replay", replay_args, "CHECK_ID PAYLOAD: re-run one failure")->expected(2);
  verify_cmd->add_flag("--machine", machine, "check_id<TAB>tested<TAB>failures<TAB>status");
  verify_cmd->add_flag("--json", as_json, "print a JSON document");
  verify_cmd->add_flag("--timings", timings, "add elapsed time per check");
  add_limits(verify_cmd);

  auto* render_cmd = app.add_subcommand("render", "Graphviz DOT for a graph or its iterates");
  add_input(render_cmd);
  render_cmd->add_option("--dot", dot_path, "output path")->required();
  std::size_t render_steps = 0;
  render_cmd->add_option("--steps", render_steps, "also draw J^1..J^K as panels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nhint: run 'jumpgraph --help'\n";
    return kExitUsage;
  }

  const GraphFormat format = format_name == "graph6" ? GraphFormat::graph6
                             : format_name == "edges" ? GraphFormat::edge_list
                                                      : GraphFormat::automatic;
  const IterationLimits limits{max_k, std::min(vertex_limit, kMaxVertices)};

  try {
    if (jump_cmd->parsed()) {
      const Graph j = jump(read_graph(input, format, in));
      out << (jump_edges ? to_edge_list(j) : to_graph6(j) + "\n");
      return kExitOk;
    }

    if (iterate_cmd->parsed()) {
      Graph cur = read_graph(input, format, in);
      for (std::size_t k = 0;; ++k) {
        out << k << "\t" << cur.order() << "\t" << cur.size() << "\t" << to_graph6(cur) << "\n";
        if (k == steps) return kExitOk;
        if (cur.size() > limits.vertex_limit) {
          err << "stopped: J^" << (k + 1) << " has " << cur.size() << " vertices, over the limit of "
              << limits.vertex_limit << "\n";
          return kExitDomain;
        }
        cur = jump(cur);
      }
    }

    if (classify_cmd->parsed() || d_cmd->parsed()) {
      const Graph g = read_graph(input, format, in);
      Classification c;
      try {
        c = classify(g, limits);
      } catch (const unresolved_error& e) {
        if (as_json) {
          nlohmann::json j{{"verdict", "UNRESOLVED"}, {"reason", e.what()}};
          out << j.dump(2) << "\n";
        } else {
          out << "UNRESOLVED\n";
          if (classify_cmd->parsed()) print_trace(out, e.trace());
        }
        err << e.what() << "\n";
        return kExitDomain;
      }
      if (d_cmd->parsed()) {
        out << (c.d_value ? std::to_string(*c.d_value) : std::string("INFINITE")) << "\n";
        return kExitOk;
      }
      if (as_json) {
        out << to_json(c).dump(2) << "\n";
        return kExitOk;
      }
      out << to_record(c) << "\n";
      if (witness && c.accumulation) {
        out << "witness";
        for (std::size_t x = 0; x < c.accumulation->witness.vertex_map.size(); ++x)
          out << " " << x << ":" << c.accumulation->witness.vertex_map[x];
        out << (c.accumulation->via_snipped ? "  (images are edge ids of the previous iterate)" : "") << "\n";
      }
      print_trace(out, c.trace);
      return kExitOk;
    }

    if (snipped_cmd->parsed()) {
      const Graph h = read_graph(h_source, format, in);
      const Graph g = read_graph(g_source, format, in);
      if (isolated_vertices(h) != 0) throw usage_error("H must not have isolated vertices");
      const auto w = find_snipped(h, g);
      if (!w) {
        out << "NOT-SNIPPED\n";
        return kExitOk;
      }
      const auto he = h.edges();
      const auto ge = g.edges();
      out << "SNIPPED\nedge_map\n";
      for (std::size_t i = 0; i < he.size(); ++i) {
        const Edge& f = ge[w->edge_map[i]];
        out << he[i].u << "-" << he[i].v << "\t" << f.u << "-" << f.v << "\n";
      }
      out << "labels\n";
      for (std::size_t x = 0; x < g.order(); ++x)
        if (w->label[x]) out << x << "\t" << *w->label[x] << "\n";
      return kExitOk;
    }

    if (preimage_cmd->parsed()) {
      const Graph g = read_graph(input, format, in);
      for (const Graph& h : jump_preimages(g, bound)) out << to_graph6(h) << "\n";
      return kExitOk;
    }

    if (tree_cmd->parsed()) {
      const DissipationTree tree = build_dissipation_tree(max_edges, limits);
      out << tree_manifest(tree);
      if (!dot_path.empty()) write_file(dot_path, tree_to_dot(tree));
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const GraphCatalog catalog = catalog_path.empty() ? generate(n_max) : ingest(catalog_path);
      if (!replay_args.empty()) {
        const Outcome o = replay(replay_args[0], replay_args[1], catalog, limits);
        out << (o == Outcome::pass ? "PASS" : o == Outcome::fail ? "FAIL" : "UNRESOLVED") << "\n";
        return o == Outcome::fail ? kExitDomain : kExitOk;
      }
      const VerificationReport report = run_all(catalog, limits, only);
      if (as_json)
        out << to_json(report).dump(2) << "\n";
      else
        out << (machine ? format_machine(report) : format_text(report, timings));
      return report.passed() ? kExitOk : kExitDomain;
    }

    if (render_cmd->parsed()) {
      Graph cur = read_graph(input, format, in);
      if (render_steps == 0) {
        write_file(dot_path, to_dot(cur));
        return kExitOk;
      }
      std::vector<Graph> iterates{cur};
      for (std::size_t k = 0; k < render_steps; ++k) {
        if (cur.size() > limits.vertex_limit) throw vertex_limit_error(cur.size(), limits.vertex_limit);
        cur = jump(cur);
        iterates.push_back(cur);
      }
      write_file(dot_path, trace_to_dot(iterates));
      return kExitOk;
    }
  } catch (const format_error& e) {
    err << "format error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\nhint: run 'jumpgraph --help'\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace jumpgraph::cli

#endif  // JUMPGRAPH_TOOLS_CLI_HPP
