#pragma once

#include "oddcol/embedding.hpp"
#include "oddcol/graph.hpp"

#include <string>
#include <string_view>

namespace oddcol {

/// Rotation file: header "n m", then one line "v: a b c ..." per vertex
/// listing its neighbours in cyclic order. Lines starting with '#' and
/// blank lines are ignored.
///
/// Errors: MalformedHeader, MalformedInput, MissingVertexLine,
/// DuplicateNeighbor, AsymmetricAdjacency, VertexOutOfRange, LoopEdge.
auto parse_rotation(std::string_view text) -> EmbeddedGraph;
auto emit_rotation(const EmbeddedGraph& e) -> std::string;

/// Edge list: header "n m", then m lines "u v". Comments as above.
auto parse_edge_list(std::string_view text) -> Graph;
auto emit_edge_list(const Graph& g) -> std::string;

}  // namespace oddcol
