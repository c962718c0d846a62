#pragma once

#include <string>
#include <string_view>

#include "sspec/graph.hpp"

namespace sspec {

inline constexpr std::size_t kGraph6MaxOrder = 258047;

/// Decodes one graph6 string (no trailing newline). Throws ParseError with the
/// offending byte offset on malformed input.
Graph parse_graph6(std::string_view text);

/// Encodes g, using the short header for n <= 62 and the 4-byte form above.
std::string write_graph6(const Graph& g);

}  // namespace sspec
