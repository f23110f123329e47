#pragma once

#include "oddcol/graph.hpp"

#include <span>
#include <utility>
#include <vector>

namespace oddcol {

/// A graph together with a rotation system: for every vertex, the cyclic
/// order of its neighbours. Darts (u -> v) are numbered so that the dart
/// leaving v towards `rotation(v)[i]` has id `first_dart(v) + i`.
class EmbeddedGraph {
public:
    EmbeddedGraph() = default;

    /// Rotation lists must be permutations of the neighbourhoods of `graph`.
    EmbeddedGraph(Graph graph, std::vector<std::vector<Vertex>> rotation);

    [[nodiscard]] auto graph() const noexcept -> const Graph& { return graph_; }
    [[nodiscard]] auto order() const noexcept -> int { return graph_.order(); }
    [[nodiscard]] auto rotation(Vertex v) const -> std::span<const Vertex> { return rotation_[v]; }
    [[nodiscard]] auto rotations() const noexcept -> const std::vector<std::vector<Vertex>>& { return rotation_; }

    [[nodiscard]] auto dart_count() const noexcept -> int { return static_cast<int>(dart_head_.size()); }
    [[nodiscard]] auto first_dart(Vertex v) const -> int { return dart_offset_[v]; }
    [[nodiscard]] auto dart(Vertex from, Vertex to) const -> int;
    [[nodiscard]] auto dart_tail(int d) const -> Vertex { return dart_tail_[d]; }
    [[nodiscard]] auto dart_head(int d) const -> Vertex { return dart_head_[d]; }

    /// Position of neighbour `u` in the rotation at `v`.
    [[nodiscard]] auto position(Vertex v, Vertex u) const -> int;
    [[nodiscard]] auto successor(Vertex v, Vertex u) const -> Vertex;
    [[nodiscard]] auto predecessor(Vertex v, Vertex u) const -> Vertex;

    /// Face-tracing step: (u -> v) is followed by (v -> successor of u at v).
    [[nodiscard]] auto next_dart(int d) const -> int;

    friend auto operator==(const EmbeddedGraph& a, const EmbeddedGraph& b) -> bool
    {
        return a.graph_ == b.graph_ && a.rotation_ == b.rotation_;
    }

private:
    Graph graph_;
    std::vector<std::vector<Vertex>> rotation_;
    std::vector<int> dart_offset_;
    std::vector<Vertex> dart_tail_, dart_head_;
    // position_of_[v][k] is the rotation index of graph_.neighbours(v)[k]
    std::vector<std::vector<int>> position_of_;
};

/// Builds an embedding from rotation lists alone. Throws LoopEdge,
/// VertexOutOfRange, DuplicateNeighbor or AsymmetricAdjacency.
auto make_embedding(std::vector<std::vector<Vertex>> rotation) -> EmbeddedGraph;

/// Faces as orbits of the next-dart map.
class FaceSet {
public:
    [[nodiscard]] auto count() const noexcept -> int { return static_cast<int>(faces_.size()); }
    /// Boundary walk of face f: consecutive entries (and last -> first) are darts.
    [[nodiscard]] auto boundary(int f) const -> std::span<const Vertex> { return faces_[f]; }
    [[nodiscard]] auto degree(int f) const -> int { return static_cast<int>(faces_[f].size()); }
    [[nodiscard]] auto face_of_dart(int d) const -> int { return dart_face_[d]; }

    /// Faces met going around v; entry i is the corner between rotation
    /// entries i-1 and i, so a vertex of degree d has d entries.
    [[nodiscard]] auto faces_around(const EmbeddedGraph& e, Vertex v) const -> std::vector<int>;

    /// The faces on the two sides of edge uv: (face of u->v, face of v->u).
    [[nodiscard]] auto edge_faces(const EmbeddedGraph& e, Vertex u, Vertex v) const -> std::pair<int, int>;

    [[nodiscard]] auto degree_sum() const -> long;

private:
    friend auto trace_faces(const EmbeddedGraph& e) -> FaceSet;

    std::vector<std::vector<Vertex>> faces_;
    std::vector<int> dart_face_;
};

auto trace_faces(const EmbeddedGraph& e) -> FaceSet;

/// Orientable genus (2 - V + E - F) / 2. Throws Disconnected.
auto euler_genus(const EmbeddedGraph& e) -> int;
auto euler_genus(const EmbeddedGraph& e, const FaceSet& faces) -> int;

/// V + F - E, the quantity the charge identity is stated in.
auto euler_characteristic(const EmbeddedGraph& e, const FaceSet& faces) -> long;

// Local surgery, used to build fixtures. Each returns a fresh embedding.

/// Deletes edge uv from the graph and both rotations.
auto remove_edge(const EmbeddedGraph& e, Vertex u, Vertex v) -> EmbeddedGraph;

/// Replaces edge uv by a path u - w - v through a new vertex w = order().
auto subdivide_edge(const EmbeddedGraph& e, Vertex u, Vertex v) -> EmbeddedGraph;

/// Replaces edge uv, whose two sides are triangles uva and vub, by edge ab.
/// Throws BadParameters if a side is not a triangle or ab already exists.
auto flip_edge(const EmbeddedGraph& e, Vertex u, Vertex v) -> EmbeddedGraph;

}  // namespace oddcol
