#include "oddcol/io.hpp"

#include "oddcol/error.hpp"

#include <charconv>
#include <optional>
#include <vector>

namespace oddcol {

namespace {
    auto content_lines(std::string_view text) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> lines;
        while (! text.empty()) {
            auto end = text.find('\n');
            auto line = text.substr(0, end);
            text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
            while (! line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
                line.remove_suffix(1);
            while (! line.empty() && (line.front() == ' ' || line.front() == '\t'))
                line.remove_prefix(1);
            if (line.empty() || line.front() == '#')
                continue;
            lines.push_back(line);
        }
        return lines;
    }

    auto integers(std::string_view line) -> std::optional<std::vector<long>>
    {
        std::vector<long> values;
        const char* p = line.data();
        const char* end = line.data() + line.size();
        while (p != end) {
            if (*p == ' ' || *p == '\t') {
                ++p;
                continue;
            }
            long value = 0;
            auto [next, ec] = std::from_chars(p, end, value);
            if (ec != std::errc{})
                return std::nullopt;
            values.push_back(value);
            p = next;
        }
        return values;
    }

    auto header(const std::vector<std::string_view>& lines) -> std::pair<int, long>
    {
        if (lines.empty())
            throw Error(ErrorCode::MalformedHeader, "missing \"n m\" header");
        auto values = integers(lines.front());
        if (! values || values->size() != 2 || (*values)[0] < 0 || (*values)[1] < 0 || (*values)[0] > (1 << 24))
            throw Error(ErrorCode::MalformedHeader, "expected \"n m\" header, got \"" + std::string(lines.front()) + "\"");
        return {static_cast<int>((*values)[0]), (*values)[1]};
    }
}

auto parse_rotation(std::string_view text) -> EmbeddedGraph
{
    auto lines = content_lines(text);
    auto [n, m] = header(lines);

    std::vector<std::vector<Vertex>> rotation(n);
    std::vector<char> seen(n, 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto line = lines[i];
        auto colon = line.find(':');
        auto vertex = colon == std::string_view::npos ? std::nullopt : integers(line.substr(0, colon));
        auto nbrs = colon == std::string_view::npos ? std::nullopt : integers(line.substr(colon + 1));
        if (! vertex || vertex->size() != 1 || ! nbrs)
            throw Error(ErrorCode::MalformedInput, "expected \"v: neighbours...\", got \"" + std::string(line) + "\"");
        long v = vertex->front();
        if (v < 0 || v >= n)
            throw Error(ErrorCode::VertexOutOfRange, "vertex line for " + std::to_string(v));
        if (seen[v])
            throw Error(ErrorCode::MalformedInput, "two lines for vertex " + std::to_string(v));
        seen[v] = 1;
        for (long u : *nbrs) {
            if (u < 0 || u >= n)
                throw Error(ErrorCode::VertexOutOfRange, "neighbour " + std::to_string(u) + " of " + std::to_string(v));
            rotation[v].push_back(static_cast<Vertex>(u));
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (! seen[v])
            throw Error(ErrorCode::MissingVertexLine, "no line for vertex " + std::to_string(v));

    auto e = make_embedding(std::move(rotation));
    if (static_cast<long>(e.graph().size()) != m)
        throw Error(ErrorCode::MalformedHeader, "header declares " + std::to_string(m) + " edges, rotation has "
                + std::to_string(e.graph().size()));
    return e;
}

auto emit_rotation(const EmbeddedGraph& e) -> std::string
{
    std::string out = std::to_string(e.order()) + " " + std::to_string(e.graph().size()) + "\n";
    for (Vertex v = 0; v < e.order(); ++v) {
        out += std::to_string(v) + ":";
        for (Vertex u : e.rotation(v))
            out += " " + std::to_string(u);
        out += "\n";
    }
    return out;
}

auto parse_edge_list(std::string_view text) -> Graph
{
    auto lines = content_lines(text);
    auto [n, m] = header(lines);
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto values = integers(lines[i]);
        if (! values || values->size() != 2)
            throw Error(ErrorCode::MalformedInput, "expected \"u v\", got \"" + std::string(lines[i]) + "\"");
        auto in_range = [&](long x) { return x >= 0 && x < n; };
        if (! in_range((*values)[0]) || ! in_range((*values)[1]))
            throw Error(ErrorCode::VertexOutOfRange, "edge line \"" + std::string(lines[i]) + "\"");
        edges.emplace_back(static_cast<Vertex>((*values)[0]), static_cast<Vertex>((*values)[1]));
    }
    if (static_cast<long>(edges.size()) != m)
        throw Error(ErrorCode::MalformedHeader, "header declares " + std::to_string(m) + " edges, found "
                + std::to_string(edges.size()));
    return build_graph(n, edges);
}

auto emit_edge_list(const Graph& g) -> std::string
{
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace oddcol
