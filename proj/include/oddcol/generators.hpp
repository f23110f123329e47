#pragma once

#include "oddcol/embedding.hpp"
#include "oddcol/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oddcol {

enum class Family { Cycle, Path, Complete, TorusTriangulation, K7Torus };

struct GeneratorSpec {
    Family family;
    std::vector<int> parameters;
};

/// Parses "cycle 5", "path 4", "complete 7", "torus-tri 4 4", "k7-torus".
auto parse_generator_spec(const std::vector<std::string>& words) -> GeneratorSpec;

struct Generated {
    Graph graph;
    std::optional<EmbeddedGraph> embedding;
};

/// cycle(n >= 3), path(n >= 1), complete(n >= 1), torus-tri(m >= 3, n >= 3),
/// k7-torus. Cycles, paths and both torus families carry an embedding.
/// Throws BadParameters.
auto generate(const GeneratorSpec& spec) -> Generated;

auto cycle_graph(int n) -> EmbeddedGraph;
auto path_graph(int n) -> EmbeddedGraph;
auto complete_graph(int n) -> Graph;

/// Triangulated m x n torus: vertex (i, j) has id i * n + j and is joined to
/// (i+1, j), (i, j+1), (i+1, j+1). Every face is a triangle.
auto torus_triangulation(int m, int n) -> EmbeddedGraph;

/// Vertex id of (i, j) in torus_triangulation(m, n), indices taken mod m, n.
auto torus_vertex(int m, int n, int i, int j) -> Vertex;

/// K7 on the torus; row i of the rotation is (i+1, i+3, i+2, i+6, i+4, i+5) mod 7.
auto k7_torus() -> EmbeddedGraph;

}  // namespace oddcol
