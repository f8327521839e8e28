#ifndef JUMPGRAPH_GRAPH_IO_HPP
#define JUMPGRAPH_GRAPH_IO_HPP

// graph6 (nauty's ASCII format) and a plain edge-list format:
//
//   n <vertex_count>
//   u v
//   ...
//
// Blank lines and lines starting with '#' are ignored in edge lists.

#include <jumpgraph/errors.hpp>
#include <jumpgraph/graph.hpp>

#include <cctype>
#include <charconv>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace jumpgraph {

enum class GraphFormat { automatic, graph6, edge_list };

namespace detail {

inline constexpr char kGraph6Bias = 63;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline std::string to_graph6(const Graph& g) {
  std::string out;
  const std::size_t n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + detail::kGraph6Bias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + detail::kGraph6Bias));
  }
  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  int filled = 0;
  int chunk = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + detail::kGraph6Bias));
        filled = 0;
        chunk = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + detail::kGraph6Bias));
  return out;
}

/// Decodes one graph6 string (an optional ">>graph6<<" prefix is accepted).
inline Graph from_graph6(std::string_view text, std::size_t line = 0) {
  text = detail::trim(text);
  if (text.starts_with(detail::kGraph6Header)) text.remove_prefix(detail::kGraph6Header.size());
  if (text.empty()) throw format_error("empty graph6 string", line);
  for (char c : text)
    if (c < 63 || c > 126) throw format_error("byte outside graph6 range in '" + std::string(text) + "'", line);

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(text[0] - detail::kGraph6Bias);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') throw format_error("graph6 order beyond 258047 is unsupported", line);
    if (text.size() < 4) throw format_error("truncated graph6 order", line);
    for (std::size_t k = 1; k <= 3; ++k)
      n = (n << 6) | static_cast<std::size_t>(text[k] - detail::kGraph6Bias);
    pos = 4;
  }
  if (n > kMaxVertices) throw vertex_limit_error(n, kMaxVertices);

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected)
    throw format_error("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                           std::to_string(expected),
                       line);
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - detail::kGraph6Bias;
      if (byte & (1 << (5 - static_cast<int>(k % 6)))) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    int byte = text[pos + k / 6] - detail::kGraph6Bias;
    if (byte & ((1 << (6 - static_cast<int>(k % 6))) - 1)) throw format_error("nonzero graph6 padding bits", line);
  }
  return g;
}

inline std::string to_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

/// Parses the edge-list format. ';' also separates lines, for inline use.
inline Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n' || text[i] == ';') {
      lines.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }

  auto read_number = [](std::string_view& rest, std::size_t line) {
    rest = detail::trim(rest);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc{}) throw format_error("expected a non-negative integer", line);
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    return value;
  };

  std::optional<Graph> g;
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t line = idx + 1;
    std::string_view rest = detail::trim(lines[idx]);
    if (rest.empty() || rest.front() == '#') continue;
    if (!g) {
      if (rest.front() != 'n') throw format_error("edge list must start with 'n <vertex_count>'", line);
      rest.remove_prefix(1);
      std::size_t n = read_number(rest, line);
      if (!detail::trim(rest).empty()) throw format_error("trailing text after vertex count", line);
      if (n > kMaxVertices) throw vertex_limit_error(n, kMaxVertices);
      g.emplace(n);
      continue;
    }
    std::size_t u = read_number(rest, line);
    std::size_t v = read_number(rest, line);
    if (!detail::trim(rest).empty()) throw format_error("expected 'u v'", line);
    if (u >= g->order() || v >= g->order()) throw format_error("vertex out of range", line);
    if (u == v) throw format_error("self-loop", line);
    g->add_edge(u, v);
  }
  if (!g) throw format_error("missing 'n <vertex_count>' header");
  return *g;
}

/// Edge lists announce themselves with an 'n ' header (after comments);
/// anything else is read as graph6.
inline GraphFormat detect_format(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    return (t.size() >= 2 && t[0] == 'n' && std::isspace(static_cast<unsigned char>(t[1])))
               ? GraphFormat::edge_list
               : GraphFormat::graph6;
  }
  return GraphFormat::graph6;
}

/// Parses a single graph; graph6 input must hold exactly one non-empty line.
inline Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::automatic) {
  if (format == GraphFormat::automatic) format = detect_format(text);
  if (format == GraphFormat::edge_list) return parse_edge_list(text);
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Graph> g;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (detail::trim(line).empty()) continue;
    if (g) throw format_error("expected a single graph6 line", number);
    g = from_graph6(line, number);
  }
  if (!g) throw format_error("no graph found");
  return *g;
}

}  // namespace jumpgraph

#endif  // JUMPGRAPH_GRAPH_IO_HPP
