#include "oddcol/coloring.hpp"

#include "oddcol/error.hpp"

#include <algorithm>
#include <string>

namespace oddcol {

namespace {
    auto check_size(const Graph& g, std::span<const Color> colors) -> void
    {
        if (static_cast<int>(colors.size()) != g.order())
            throw Error(ErrorCode::SizeMismatch, "colouring has " + std::to_string(colors.size())
                    + " entries for " + std::to_string(g.order()) + " vertices");
    }
}

auto Coloring::make(int k, std::vector<Color> colors) -> Coloring
{
    if (k < 1)
        throw Error(ErrorCode::BadPalette, "palette size must be at least 1");
    for (Color c : colors)
        if (c < 1 || c > k)
            throw Error(ErrorCode::BadPalette, "colour " + std::to_string(c) + " outside 1.." + std::to_string(k));
    return Coloring{k, std::move(colors)};
}

auto odd_colors(const Graph& g, std::span<const Color> colors, Vertex v) -> std::vector<Color>
{
    std::vector<Color> seen;
    for (Vertex u : g.neighbours(v))
        if (colors[u] != 0)
            seen.push_back(colors[u]);
    std::sort(seen.begin(), seen.end());

    std::vector<Color> odd;
    for (std::size_t i = 0; i < seen.size();) {
        std::size_t j = i;
        while (j < seen.size() && seen[j] == seen[i])
            ++j;
        if ((j - i) % 2 == 1)
            odd.push_back(seen[i]);
        i = j;
    }
    return odd;
}

auto is_proper(const Graph& g, const Coloring& c) -> bool
{
    check_size(g, c.colors);
    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v])
            return false;
    return true;
}

auto odd_report(const Graph& g, const Coloring& c) -> OddReport
{
    check_size(g, c.colors);
    OddReport report;
    report.vertices.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        auto& entry = report.vertices[v];
        entry.odd_set = odd_colors(g, c.colors, v);
        if (! entry.odd_set.empty())
            entry.designated = entry.odd_set.front();
        if (entry.odd_set.size() == 1)
            entry.unique = entry.odd_set.front();
    }
    return report;
}

auto validate_odd(const Graph& g, const Coloring& c) -> ValidationReport
{
    check_size(g, c.colors);
    ValidationReport report;
    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v])
            report.improper_edges.emplace_back(u, v);
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0 && odd_colors(g, c.colors, v).empty())
            report.even_vertices.push_back(v);
    report.valid = report.improper_edges.empty() && report.even_vertices.empty();
    return report;
}

auto is_odd_coloring(const Graph& g, std::span<const Color> colors) -> bool
{
    check_size(g, colors);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (colors[v] == 0)
            return false;
        for (Vertex u : g.neighbours(v))
            if (colors[u] == colors[v])
                return false;
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0 && odd_colors(g, colors, v).empty())
            return false;
    return true;
}

}  // namespace oddcol
