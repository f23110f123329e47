#pragma once

#include "oddcol/embedding.hpp"
#include "oddcol/generators.hpp"
#include "oddcol/graph.hpp"
#include "oddcol/reductions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace oddcol;

inline auto random_graph(int n, double p, std::mt19937& rng) -> Graph
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return build_graph(n, edges);
}

/// Relabels vertex v as perm[v], keeping every rotation.
inline auto permute(const EmbeddedGraph& e, const std::vector<Vertex>& perm) -> EmbeddedGraph
{
    std::vector<std::vector<Vertex>> rot(e.order());
    for (Vertex v = 0; v < e.order(); ++v)
        for (Vertex w : e.rotation(v))
            rot[perm[v]].push_back(perm[w]);
    return make_embedding(std::move(rot));
}

inline auto random_permutation(int n, std::mt19937& rng) -> std::vector<Vertex>
{
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

/// Straight decoding of a short graph6 line: header byte 63+n, then the
/// pairs (i, j), i < j, ordered by j then i, six bits per byte.
inline auto reference_graph6(const std::string& line) -> std::vector<Edge>
{
    int n = line[0] - 63;
    std::vector<int> bits;
    for (std::size_t k = 1; k < line.size(); ++k)
        for (int b = 5; b >= 0; --b)
            bits.push_back(((line[k] - 63) >> b) & 1);
    std::vector<Edge> edges;
    std::size_t idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (bits.at(idx++))
                edges.emplace_back(i, j);
    return edges;
}

/// Small graphs for oracle comparisons: every cycle, path and complete
/// graph up to 7 vertices, a few named graphs, then random graphs.
inline auto catalogue(int random_count, std::uint32_t seed) -> std::vector<Graph>
{
    std::vector<Graph> out;
    for (int n = 3; n <= 7; ++n)
        out.push_back(cycle_graph(n).graph());
    for (int n = 1; n <= 7; ++n) {
        out.push_back(path_graph(n).graph());
        out.push_back(complete_graph(n));
    }
    out.push_back(build_graph(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));                  // star
    out.push_back(build_graph(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}}));  // C4 plus pendant
    out.push_back(build_graph(6, std::vector<Edge>{{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}));
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> order(1, 7);
    std::uniform_real_distribution<double> density(0.15, 0.85);
    while (static_cast<int>(out.size()) < random_count)
        out.push_back(random_graph(order(rng), density(rng), rng));
    return out;
}

inline auto data_path(const std::string& name) -> std::string
{
    return std::string(ODDCOL_TEST_DATA) + "/" + name;
}

/// Precolouring of G' for an L7 site on which the claim fails: ring colours
/// 1..6 and outer colours making u1, u3, u5 unique on 7, 8, 9. `relabel`
/// renames colour c to relabel[c - 1].
inline auto claim_breaking_fixing(const ConfigSite& site, const AuxiliaryReduction& aux,
    const std::array<Color, 9>& relabel) -> std::vector<Color>
{
    auto f = Figure1::from_site(site);
    std::vector<Color> fixed(aux.reduced.order(), 0);
    for (int i = 1; i <= 6; ++i)
        fixed[aux.to_reduced[f.ring[i]]] = relabel[i - 1];
    const std::array<std::pair<int, Color>, 9> outer{
        {{12, 2}, {1, 6}, {2, 7}, {4, 4}, {5, 8}, {6, 2}, {8, 6}, {9, 9}, {10, 4}}};
    for (auto [j, c] : outer)
        fixed[aux.to_reduced[f.outer[j]]] = relabel[c - 1];
    return fixed;
}

inline auto random_relabel(std::mt19937& rng) -> std::array<Color, 9>
{
    std::array<Color, 9> r{1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::shuffle(r.begin(), r.end(), rng);
    return r;
}

}  // namespace testing
