#pragma once

#include <string>
#include <string_view>

#include "rainbow/graph.hpp"

namespace rainbow {

/// graph6 encoding (no ">>graph6<<" header, no trailing newline).
std::string encode_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" header and one trailing newline.
/// Throws ParseError carrying the offending byte offset.
Graph decode_graph6(std::string_view text);

} // namespace rainbow
