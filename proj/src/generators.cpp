#include "oddcol/generators.hpp"

#include "oddcol/error.hpp"

#include <charconv>
#include <utility>

namespace oddcol {

namespace {
    auto require(bool condition, const std::string& message) -> void
    {
        if (! condition)
            throw Error(ErrorCode::BadParameters, message);
    }

    auto to_int(const std::string& word) -> int
    {
        int value = 0;
        auto [p, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
        require(ec == std::errc{} && p == word.data() + word.size(), "not an integer: " + word);
        return value;
    }
}

auto parse_generator_spec(const std::vector<std::string>& words) -> GeneratorSpec
{
    require(! words.empty(), "missing generator family");
    const auto& name = words.front();
    std::vector<int> params;
    for (std::size_t i = 1; i < words.size(); ++i)
        params.push_back(to_int(words[i]));

    auto expect = [&](std::size_t count) {
        require(params.size() == count, name + " takes " + std::to_string(count) + " parameter(s)");
    };
    if (name == "cycle") {
        expect(1);
        return {Family::Cycle, params};
    }
    if (name == "path") {
        expect(1);
        return {Family::Path, params};
    }
    if (name == "complete") {
        expect(1);
        return {Family::Complete, params};
    }
    if (name == "torus-tri") {
        expect(2);
        return {Family::TorusTriangulation, params};
    }
    if (name == "k7-torus") {
        expect(0);
        return {Family::K7Torus, params};
    }
    throw Error(ErrorCode::BadParameters, "unknown family " + name);
}

auto cycle_graph(int n) -> EmbeddedGraph
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<std::vector<Vertex>> rot(n);
    for (int i = 0; i < n; ++i)
        rot[i] = {(i + n - 1) % n, (i + 1) % n};
    return make_embedding(std::move(rot));
}

auto path_graph(int n) -> EmbeddedGraph
{
    require(n >= 1, "path needs n >= 1");
    std::vector<std::vector<Vertex>> rot(n);
    for (int i = 0; i < n; ++i) {
        if (i > 0)
            rot[i].push_back(i - 1);
        if (i + 1 < n)
            rot[i].push_back(i + 1);
    }
    return make_embedding(std::move(rot));
}

auto complete_graph(int n) -> Graph
{
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return build_graph(n, edges);
}

auto torus_vertex(int m, int n, int i, int j) -> Vertex
{
    return ((i % m + m) % m) * n + ((j % n + n) % n);
}

auto torus_triangulation(int m, int n) -> EmbeddedGraph
{
    require(m >= 3 && n >= 3, "torus-tri needs m, n >= 3");
    // Counter-clockwise in the sheared lattice where (1, 1) lies between
    // (1, 0) and (0, 1); consecutive directions differ by a lattice edge.
    constexpr std::pair<int, int> directions[6] = {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
    std::vector<std::vector<Vertex>> rot(m * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            for (auto [di, dj] : directions)
                rot[torus_vertex(m, n, i, j)].push_back(torus_vertex(m, n, i + di, j + dj));
    return make_embedding(std::move(rot));
}

auto k7_torus() -> EmbeddedGraph
{
    std::vector<std::vector<Vertex>> rot(7);
    for (int i = 0; i < 7; ++i)
        for (int offset : {1, 3, 2, 6, 4, 5})
            rot[i].push_back((i + offset) % 7);
    return make_embedding(std::move(rot));
}

auto generate(const GeneratorSpec& spec) -> Generated
{
    const auto& p = spec.parameters;
    auto embedded = [](EmbeddedGraph e) { return Generated{e.graph(), std::move(e)}; };
    switch (spec.family) {
    case Family::Cycle:
        require(p.size() == 1, "cycle takes n");
        return embedded(cycle_graph(p[0]));
    case Family::Path:
        require(p.size() == 1, "path takes n");
        return embedded(path_graph(p[0]));
    case Family::Complete:
        require(p.size() == 1, "complete takes n");
        return {complete_graph(p[0]), std::nullopt};
    case Family::TorusTriangulation:
        require(p.size() == 2, "torus-tri takes m n");
        return embedded(torus_triangulation(p[0], p[1]));
    case Family::K7Torus:
        require(p.empty(), "k7-torus takes no parameters");
        return embedded(k7_torus());
    }
    throw Error(ErrorCode::BadParameters, "unknown family");
}

}  // namespace oddcol
