#ifndef SPECTRADOM_GRAPH6_HPP
#define SPECTRADOM_GRAPH6_HPP

// graph6 encoding (see docs/graph6.md). Only orders 1..64 are representable.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "spectradom/graph.hpp"

namespace spectradom {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at byte " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses one graph6 string. An optional ">>graph6<<" prefix and a trailing
/// CR/LF are accepted; anything else that deviates from the format throws
/// ParseError.
Graph parse_graph6(std::string_view text);

/// Encodes g; the result has no line terminator.
std::string emit_graph6(const Graph& g);

}  // namespace spectradom

#endif
