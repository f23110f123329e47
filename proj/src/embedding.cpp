#include "oddcol/embedding.hpp"

#include "oddcol/error.hpp"

#include <algorithm>
#include <string>

namespace oddcol {

EmbeddedGraph::EmbeddedGraph(Graph graph, std::vector<std::vector<Vertex>> rotation) :
    graph_(std::move(graph)),
    rotation_(std::move(rotation))
{
    if (static_cast<int>(rotation_.size()) != graph_.order())
        throw Error(ErrorCode::SizeMismatch, "rotation system does not cover every vertex");

    dart_offset_.resize(graph_.order() + 1, 0);
    position_of_.resize(graph_.order());
    for (Vertex v = 0; v < graph_.order(); ++v) {
        auto nbrs = graph_.neighbours(v);
        const auto& rot = rotation_[v];
        if (rot.size() != nbrs.size())
            throw Error(ErrorCode::AsymmetricAdjacency, "rotation at " + std::to_string(v) + " is not a permutation of its neighbours");
        auto& pos = position_of_[v];
        pos.assign(nbrs.size(), -1);
        for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
            auto it = std::lower_bound(nbrs.begin(), nbrs.end(), rot[i]);
            if (it == nbrs.end() || *it != rot[i])
                throw Error(ErrorCode::AsymmetricAdjacency, "rotation at " + std::to_string(v) + " lists a non-neighbour");
            auto k = it - nbrs.begin();
            if (pos[k] != -1)
                throw Error(ErrorCode::DuplicateNeighbor, "rotation at " + std::to_string(v) + " repeats " + std::to_string(rot[i]));
            pos[k] = i;
        }
        dart_offset_[v + 1] = dart_offset_[v] + static_cast<int>(rot.size());
    }

    dart_tail_.resize(dart_offset_.back());
    dart_head_.resize(dart_offset_.back());
    for (Vertex v = 0; v < graph_.order(); ++v)
        for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i) {
            dart_tail_[dart_offset_[v] + i] = v;
            dart_head_[dart_offset_[v] + i] = rotation_[v][i];
        }
}

auto EmbeddedGraph::position(Vertex v, Vertex u) const -> int
{
    auto nbrs = graph_.neighbours(v);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), u);
    if (it == nbrs.end() || *it != u)
        throw Error(ErrorCode::BadParameters, std::to_string(u) + " is not a neighbour of " + std::to_string(v));
    return position_of_[v][it - nbrs.begin()];
}

auto EmbeddedGraph::dart(Vertex from, Vertex to) const -> int
{
    return dart_offset_[from] + position(from, to);
}

auto EmbeddedGraph::successor(Vertex v, Vertex u) const -> Vertex
{
    const auto& rot = rotation_[v];
    return rot[(position(v, u) + 1) % rot.size()];
}

auto EmbeddedGraph::predecessor(Vertex v, Vertex u) const -> Vertex
{
    const auto& rot = rotation_[v];
    return rot[(position(v, u) + rot.size() - 1) % rot.size()];
}

auto EmbeddedGraph::next_dart(int d) const -> int
{
    Vertex u = dart_tail_[d], v = dart_head_[d];
    return dart(v, successor(v, u));
}

auto make_embedding(std::vector<std::vector<Vertex>> rotation) -> EmbeddedGraph
{
    int n = static_cast<int>(rotation.size());
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        auto sorted = rotation[v];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(ErrorCode::DuplicateNeighbor, "rotation at " + std::to_string(v) + " repeats a neighbour");
        for (Vertex u : sorted) {
            if (u < 0 || u >= n)
                throw Error(ErrorCode::VertexOutOfRange, "neighbour " + std::to_string(u) + " of " + std::to_string(v));
            if (u == v)
                throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(v));
            if (std::find(rotation[u].begin(), rotation[u].end(), v) == rotation[u].end())
                throw Error(ErrorCode::AsymmetricAdjacency,
                    std::to_string(u) + " is listed at " + std::to_string(v) + " but not vice versa");
            if (v < u)
                edges.emplace_back(v, u);
        }
    }
    return EmbeddedGraph(build_graph(n, edges), std::move(rotation));
}

auto FaceSet::faces_around(const EmbeddedGraph& e, Vertex v) const -> std::vector<int>
{
    std::vector<int> result;
    int first = e.first_dart(v);
    for (int i = 0; i < e.graph().degree(v); ++i)
        result.push_back(dart_face_[first + i]);
    return result;
}

auto FaceSet::edge_faces(const EmbeddedGraph& e, Vertex u, Vertex v) const -> std::pair<int, int>
{
    return {dart_face_[e.dart(u, v)], dart_face_[e.dart(v, u)]};
}

auto FaceSet::degree_sum() const -> long
{
    long total = 0;
    for (const auto& f : faces_)
        total += static_cast<long>(f.size());
    return total;
}

auto trace_faces(const EmbeddedGraph& e) -> FaceSet
{
    FaceSet result;
    result.dart_face_.assign(e.dart_count(), -1);
    for (int start = 0; start < e.dart_count(); ++start) {
        if (result.dart_face_[start] != -1)
            continue;
        int id = result.count();
        std::vector<Vertex> walk;
        int d = start;
        do {
            result.dart_face_[d] = id;
            walk.push_back(e.dart_tail(d));
            d = e.next_dart(d);
        } while (d != start);
        result.faces_.push_back(std::move(walk));
    }
    return result;
}

auto euler_characteristic(const EmbeddedGraph& e, const FaceSet& faces) -> long
{
    return static_cast<long>(e.order()) + faces.count() - static_cast<long>(e.graph().size());
}

auto euler_genus(const EmbeddedGraph& e, const FaceSet& faces) -> int
{
    if (! e.graph().is_connected())
        throw Error(ErrorCode::Disconnected, "genus of a disconnected embedding");
    if (e.order() <= 1)
        return 0;
    return static_cast<int>((2 - euler_characteristic(e, faces)) / 2);
}

auto euler_genus(const EmbeddedGraph& e) -> int
{
    return euler_genus(e, trace_faces(e));
}

namespace {
    auto erase_neighbour(std::vector<Vertex>& rot, Vertex u) -> void
    {
        rot.erase(std::find(rot.begin(), rot.end(), u));
    }
}

auto remove_edge(const EmbeddedGraph& e, Vertex u, Vertex v) -> EmbeddedGraph
{
    if (! e.graph().adjacent(u, v))
        throw Error(ErrorCode::BadParameters, "no edge to remove");
    auto rot = e.rotations();
    erase_neighbour(rot[u], v);
    erase_neighbour(rot[v], u);
    return make_embedding(std::move(rot));
}

auto subdivide_edge(const EmbeddedGraph& e, Vertex u, Vertex v) -> EmbeddedGraph
{
    if (! e.graph().adjacent(u, v))
        throw Error(ErrorCode::BadParameters, "no edge to subdivide");
    auto rot = e.rotations();
    Vertex w = e.order();
    *std::find(rot[u].begin(), rot[u].end(), v) = w;
    *std::find(rot[v].begin(), rot[v].end(), u) = w;
    rot.push_back({u, v});
    return make_embedding(std::move(rot));
}

auto flip_edge(const EmbeddedGraph& e, Vertex u, Vertex v) -> EmbeddedGraph
{
    if (! e.graph().adjacent(u, v))
        throw Error(ErrorCode::BadParameters, "no edge to flip");
    Vertex a = e.successor(v, u);
    Vertex b = e.successor(u, v);
    if (e.successor(a, v) != u || e.successor(u, a) != v || e.successor(b, u) != v || e.successor(v, b) != u)
        throw Error(ErrorCode::BadParameters, "edge is not flanked by two triangles");
    if (a == b || e.graph().adjacent(a, b))
        throw Error(ErrorCode::BadParameters, "flip would create a parallel edge");

    auto rot = e.rotations();
    auto insert_after = [](std::vector<Vertex>& r, Vertex after, Vertex x) {
        r.insert(std::find(r.begin(), r.end(), after) + 1, x);
    };
    insert_after(rot[a], v, b);
    insert_after(rot[b], u, a);
    erase_neighbour(rot[u], v);
    erase_neighbour(rot[v], u);
    return make_embedding(std::move(rot));
}

}  // namespace oddcol
