#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace oddcol {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Instances are only produced by `build_graph` (or the parsers built on
/// it), so every Graph is loop-free, has no parallel edges and symmetric
/// adjacency.
class Graph {
public:
    Graph() = default;

    [[nodiscard]] auto order() const noexcept -> int { return static_cast<int>(adjacency_.size()); }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return edge_count_; }

    [[nodiscard]] auto neighbours(Vertex v) const -> std::span<const Vertex> { return adjacency_[v]; }
    [[nodiscard]] auto degree(Vertex v) const -> int { return static_cast<int>(adjacency_[v].size()); }
    [[nodiscard]] auto adjacent(Vertex u, Vertex v) const -> bool;

    /// Edges as (u, v) with u < v, sorted lexicographically.
    [[nodiscard]] auto edges() const -> std::vector<Edge>;

    [[nodiscard]] auto is_connected() const -> bool;

    friend auto operator==(const Graph&, const Graph&) -> bool = default;

private:
    friend auto build_graph(int n, std::span<const Edge> edges) -> Graph;

    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Builds a graph; duplicate pairs collapse to one edge.
/// Throws Error{LoopEdge} for (u, u) and Error{VertexOutOfRange} for ids
/// outside 0..n-1.
auto build_graph(int n, std::span<const Edge> edges) -> Graph;

inline auto build_graph(int n, const std::vector<Edge>& edges) -> Graph
{
    return build_graph(n, std::span<const Edge>(edges));
}

}  // namespace oddcol
