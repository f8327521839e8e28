#ifndef JUMPGRAPH_ERRORS_HPP
#define JUMPGRAPH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jumpgraph {

/// Raised when a graph would need more vertices than the adjacency rows hold.
class vertex_limit_error : public std::length_error {
 public:
  vertex_limit_error(std::size_t requested, std::size_t limit)
      : std::length_error("graph needs " + std::to_string(requested) +
                          " vertices, limit is " + std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

/// Malformed graph text. `line()` is 1-based, 0 when not line oriented.
class format_error : public std::runtime_error {
 public:
  explicit format_error(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class bound_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace jumpgraph

#endif  // JUMPGRAPH_ERRORS_HPP
