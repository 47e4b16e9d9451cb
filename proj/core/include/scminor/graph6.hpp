#pragma once

#include <string>
#include <string_view>

#include "scminor/graph.hpp"

namespace scminor {

/// Largest order representable by the one-byte graph6 header.
inline constexpr int kGraph6MaxOrder = 62;

/// Parses one graph6 line (short form). A single trailing '\n' or "\r\n" is
/// accepted. Throws ParseError carrying the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Encodes without a trailing newline.
std::string write_graph6(const Graph& g);

}  // namespace scminor
