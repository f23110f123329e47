#include "oddcol/graph.hpp"

#include "oddcol/error.hpp"

#include <algorithm>
#include <string>

namespace oddcol {

auto Graph::adjacent(Vertex u, Vertex v) const -> bool
{
    const auto& nu = adjacency_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

auto Graph::is_connected() const -> bool
{
    if (order() <= 1)
        return true;
    std::vector<char> seen(order(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (! stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adjacency_[v])
            if (! seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == order();
}

auto build_graph(int n, std::span<const Edge> edges) -> Graph
{
    if (n < 0)
        throw Error(ErrorCode::VertexOutOfRange, "negative vertex count");

    Graph g;
    g.adjacency_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorCode::VertexOutOfRange,
                "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") with n = " + std::to_string(n));
        if (u == v)
            throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }

    std::size_t half_degrees = 0;
    for (auto& nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        half_degrees += nbrs.size();
    }
    g.edge_count_ = half_degrees / 2;
    return g;
}

}  // namespace oddcol
