#include "oddcol/graph6.hpp"

#include "oddcol/error.hpp"

#include <cstdint>

namespace oddcol {

namespace {
    constexpr int bias = 63;

    auto sextet(char ch) -> int
    {
        int value = static_cast<unsigned char>(ch) - bias;
        if (value < 0 || value > 63)
            throw Error(ErrorCode::MalformedInput, "byte outside the graph6 range");
        return value;
    }

    auto payload_bytes(std::uint64_t n) -> std::uint64_t
    {
        std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
        return (bits + 5) / 6;
    }
}

auto parse_graph6(std::string_view text) -> Graph
{
    constexpr std::string_view prefix = ">>graph6<<";
    if (text.starts_with(prefix))
        text.remove_prefix(prefix.size());
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);

    if (text.empty())
        throw Error(ErrorCode::MalformedHeader, "empty graph6 input");

    auto header_sextet = [&](std::size_t i) -> std::uint64_t {
        if (i >= text.size())
            throw Error(ErrorCode::MalformedHeader, "truncated size field");
        int value = static_cast<unsigned char>(text[i]) - bias;
        if (value < 0 || value > 63)
            throw Error(ErrorCode::MalformedHeader, "size byte outside the graph6 range");
        return static_cast<std::uint64_t>(value);
    };

    std::uint64_t n = 0;
    std::size_t pos = 0;
    if (header_sextet(0) < 63) {
        n = header_sextet(0);
        pos = 1;
    }
    else if (text.size() > 1 && header_sextet(1) < 63) {
        for (std::size_t i = 1; i <= 3; ++i)
            n = (n << 6) | header_sextet(i);
        pos = 4;
        if (n < 63)
            throw Error(ErrorCode::MalformedHeader, "non-canonical 4-byte size field");
    }
    else {
        for (std::size_t i = 2; i <= 7; ++i)
            n = (n << 6) | header_sextet(i);
        pos = 8;
        if (n < 258048)
            throw Error(ErrorCode::MalformedHeader, "non-canonical 8-byte size field");
    }

    std::uint64_t needed = payload_bytes(n);
    std::uint64_t available = text.size() - pos;
    if (available < needed)
        throw Error(ErrorCode::TruncatedBits, "payload has " + std::to_string(available) + " bytes, expected "
                + std::to_string(needed));
    if (available > needed)
        throw Error(ErrorCode::TrailingGarbage, std::to_string(available - needed) + " unexpected bytes after payload");
    if (n > (1u << 24))
        throw Error(ErrorCode::MalformedHeader, "graph too large");

    std::vector<Edge> edges;
    std::uint64_t bit = 0;
    for (Vertex j = 1; j < static_cast<Vertex>(n); ++j)
        for (Vertex i = 0; i < j; ++i, ++bit) {
            int byte = sextet(text[pos + bit / 6]);
            if (byte & (1 << (5 - bit % 6)))
                edges.emplace_back(i, j);
        }
    return build_graph(static_cast<int>(n), edges);
}

auto emit_graph6(const Graph& g) -> std::string
{
    std::string out;
    auto n = static_cast<std::uint64_t>(g.order());
    if (n < 63)
        out.push_back(static_cast<char>(bias + n));
    else if (n < 258048) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(bias + ((n >> shift) & 63)));
    }
    else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(bias + ((n >> shift) & 63)));
    }

    int acc = 0, filled = 0;
    for (Vertex j = 1; j < g.order(); ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(bias + acc));
                acc = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>(bias + (acc << (6 - filled))));
    return out;
}

}  // namespace oddcol
