#pragma once

#include "oddcol/graph.hpp"

#include <string>
#include <string_view>

namespace oddcol {

/// Decodes one graph6 line. A trailing newline and the optional
/// ">>graph6<<" prefix are accepted; padding bits are ignored.
///
/// Errors: MalformedHeader (empty or bad size field), TruncatedBits
/// (payload too short), TrailingGarbage (payload too long),
/// MalformedInput (byte outside 63..126).
auto parse_graph6(std::string_view text) -> Graph;

/// Canonical graph6 encoding without trailing newline.
auto emit_graph6(const Graph& g) -> std::string;

}  // namespace oddcol
