#ifndef JUMPGRAPH_CONFIG_HPP
#define JUMPGRAPH_CONFIG_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string_view>

namespace jumpgraph {

/// Width of one adjacency row. Every Graph lives inside this bound.
inline constexpr std::size_t kMaxVertices = 64;

inline constexpr std::size_t kDefaultMaxK = 12;

namespace detail {

inline std::optional<std::size_t> env_size(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr) return std::nullopt;
  std::string_view text(raw);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace detail

/// Knobs shared by every iterating operation.
struct IterationLimits {
  std::size_t max_k = kDefaultMaxK;
  std::size_t vertex_limit = kMaxVertices;

  /// Defaults, overridden by JUMPGRAPH_MAX_K and JUMPGRAPH_VERTEX_LIMIT.
  /// The vertex limit can only be lowered below kMaxVertices.
  static IterationLimits from_environment() {
    IterationLimits limits;
    if (auto k = detail::env_size("JUMPGRAPH_MAX_K"); k && *k >= 1) limits.max_k = *k;
    if (auto v = detail::env_size("JUMPGRAPH_VERTEX_LIMIT"); v && *v >= 1)
      limits.vertex_limit = std::min(*v, kMaxVertices);
    return limits;
  }
};

}  // namespace jumpgraph

#endif  // JUMPGRAPH_CONFIG_HPP
