#pragma once

#include <string>
#include <string_view>

#include "rainbow/rainbow_iso.hpp"
#include "rainbow/verifier.hpp"

namespace rainbow {

/// Line format:
///
///     <graph6 of G>
///     <graph6 of H>
///     u v[ # copies=N[ witness=a-b,c-d,...]]     (one line per step)
///
/// parse(serialize(c)) == c and serialize(parse(text)) == text for any text
/// serialize produced.
std::string serialize_certificate(const Certificate& cert);
Certificate parse_certificate(std::string_view text);

/// Sidecar color map: one "u v: colorId" line per edge, lexicographic order.
std::string write_color_map(const ColoredGraph& g);
/// Every edge of g must be listed exactly once and no non-edge may appear.
ColoredGraph parse_color_map(const Graph& g, std::string_view text);

} // namespace rainbow
