#pragma once

#include "oddcol/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace oddcol {

using Color = int;

/// Total assignment of colours 1..k to the vertices of a graph.
struct Coloring {
    int k = 0;
    std::vector<Color> colors;

    /// Throws BadPalette unless k >= 1 and every colour lies in 1..k.
    static auto make(int k, std::vector<Color> colors) -> Coloring;

    friend auto operator==(const Coloring&, const Coloring&) -> bool = default;
};

/// Colours of odd multiplicity among the neighbours of v, ascending.
/// Entries equal to 0 in `colors` are treated as uncoloured and skipped,
/// so this also serves partial colourings.
auto odd_colors(const Graph& g, std::span<const Color> colors, Vertex v) -> std::vector<Color>;

struct OddEntry {
    std::vector<Color> odd_set;
    /// Minimum of odd_set, or 0 when it is empty.
    Color designated = 0;
    /// The sole odd colour when |odd_set| == 1.
    std::optional<Color> unique;
};

struct OddReport {
    std::vector<OddEntry> vertices;
};

struct ValidationReport {
    bool valid = false;
    std::vector<Edge> improper_edges;
    /// Non-isolated vertices with an empty odd set.
    std::vector<Vertex> even_vertices;
};

auto is_proper(const Graph& g, const Coloring& c) -> bool;
auto odd_report(const Graph& g, const Coloring& c) -> OddReport;
auto validate_odd(const Graph& g, const Coloring& c) -> ValidationReport;

/// validate_odd(...).valid over a raw colour vector; an entry of 0
/// (uncoloured) makes the answer false.
auto is_odd_coloring(const Graph& g, std::span<const Color> colors) -> bool;

}  // namespace oddcol
