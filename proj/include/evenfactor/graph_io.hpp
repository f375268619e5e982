#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "evenfactor/graph.hpp"

namespace evenfactor {

/// Malformed textual graph input. `offset` is the byte position of the
/// offending character (or line number for edge lists, see `what()`).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Largest order representable in graph6 (36-bit size field).
inline constexpr std::uint64_t kGraph6MaxOrder = (std::uint64_t{1} << 36) - 1;

/// Decodes one graph6 string. An optional ">>graph6<<" header and a single
/// trailing newline are accepted.
Graph parse_graph6(std::string_view text);

/// Encodes g in graph6 with the shortest size header.
std::string write_graph6(const Graph& g);

/// One "u v" pair per line, 0-indexed. Blank lines are ignored, '#' starts a
/// comment; a comment of the form "# n=K" fixes the vertex count (otherwise
/// it is one more than the largest index seen).
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Accepts either format: text whose first meaningful line is a single token
/// is read as graph6, anything else as an edge list.
Graph parse_graph_text(std::string_view text);

}  // namespace evenfactor
