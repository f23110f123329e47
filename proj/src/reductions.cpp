#include "oddcol/reductions.hpp"

#include "oddcol/error.hpp"

#include <algorithm>
#include <set>

namespace oddcol {

auto to_string(Lemma lemma) -> std::string_view
{
    switch (lemma) {
    case Lemma::L1: return "L1";
    case Lemma::L2: return "L2";
    case Lemma::L3: return "L3";
    case Lemma::L7: return "L7";
    }
    return "?";
}

auto parse_lemma(std::string_view text) -> std::optional<Lemma>
{
    for (auto lemma : {Lemma::L1, Lemma::L2, Lemma::L3, Lemma::L7})
        if (text == to_string(lemma))
            return lemma;
    return std::nullopt;
}

namespace {
    auto outer_index(int j) -> int { return ((j - 1) % 12 + 12) % 12 + 1; }

    auto same_set(std::vector<Vertex> a, std::span<const Vertex> b) -> bool
    {
        std::vector<Vertex> sorted_b(b.begin(), b.end());
        std::sort(a.begin(), a.end());
        std::sort(sorted_b.begin(), sorted_b.end());
        return a == sorted_b;
    }

    auto stale(const std::string& why) -> Error { return Error(ErrorCode::StaleSite, why); }
}

auto Figure1::from_site(const ConfigSite& site) -> Figure1
{
    if (site.lemma != Lemma::L7 || site.roles.size() != 19)
        throw Error(ErrorCode::BadParameters, "not an L7 site");
    Figure1 f;
    f.center = site.roles[0];
    for (int i = 1; i <= 6; ++i)
        f.ring[i] = site.roles[i];
    for (int j = 1; j <= 12; ++j)
        f.outer[j] = site.roles[6 + j];
    return f;
}

auto Figure1::reflected() const -> Figure1
{
    Figure1 r;
    r.center = center;
    r.ring[0] = ring[0];
    for (int i = 1; i <= 6; ++i)
        r.ring[i] = ring[i == 1 ? 1 : 8 - i];
    for (int j = 1; j <= 12; ++j)
        r.outer[j] = outer[outer_index(2 - j)];
    return r;
}

auto Figure1::outer_of(int i) const -> std::array<Vertex, 3>
{
    return {outer[outer_index(2 * i - 2)], outer[outer_index(2 * i - 1)], outer[outer_index(2 * i)]};
}

auto figure1_model() -> Graph
{
    std::vector<Edge> edges;
    for (int i = 1; i <= 6; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, i % 6 + 1);
        for (int j : {2 * i - 2, 2 * i - 1, 2 * i})
            edges.emplace_back(i, 6 + outer_index(j));
    }
    for (int j = 1; j <= 12; ++j)
        edges.emplace_back(6 + j, 6 + outer_index(j + 1));
    return build_graph(19, edges);
}

auto is_special6(const EmbeddedGraph& e, const FaceSet& faces, Vertex v) -> bool
{
    if (e.graph().degree(v) != 6)
        return false;
    for (int f : faces.faces_around(e, v))
        if (faces.degree(f) != 3)
            return false;
    return true;
}

auto is_special6(const EmbeddedGraph& e, Vertex v) -> bool
{
    return is_special6(e, trace_faces(e), v);
}

namespace {
    auto l1_sites(const Graph& g, const EmbeddedGraph* e) -> std::vector<ConfigSite>
    {
        std::vector<ConfigSite> sites;
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) <= 4) {
                ConfigSite site{Lemma::L1, {v}};
                auto nbrs = e ? e->rotation(v) : g.neighbours(v);
                site.roles.insert(site.roles.end(), nbrs.begin(), nbrs.end());
                sites.push_back(std::move(site));
            }
        return sites;
    }

    auto l2_sites(const Graph& g) -> std::vector<ConfigSite>
    {
        std::vector<ConfigSite> sites;
        for (auto [u, v] : g.edges())
            if (g.degree(u) % 2 == 1 && g.degree(v) % 2 == 1)
                sites.push_back({Lemma::L2, {u, v}});
        return sites;
    }

    // Neighbours of x other than `skip`, in rotation order starting after `from`.
    auto others_in_rotation(const EmbeddedGraph& e, Vertex x, Vertex from, std::initializer_list<Vertex> skip)
        -> std::vector<Vertex>
    {
        auto rot = e.rotation(x);
        int start = e.position(x, from);
        std::vector<Vertex> out;
        for (std::size_t i = 1; i <= rot.size(); ++i) {
            Vertex w = rot[(start + i) % rot.size()];
            if (std::find(skip.begin(), skip.end(), w) == skip.end())
                out.push_back(w);
        }
        return out;
    }

    auto l3_sites_at(const EmbeddedGraph& e, const FaceSet& faces, Vertex u) -> std::vector<ConfigSite>
    {
        std::vector<ConfigSite> sites;
        const auto& g = e.graph();
        if (g.degree(u) != 5)
            return sites;
        auto rot = e.rotation(u);
        auto corner_is_triangle = [&](Vertex b) { return faces.degree(faces.face_of_dart(e.dart(u, b))) == 3; };
        for (int s = 0; s < 5; ++s) {
            std::array<Vertex, 6> n{};
            for (int i = 1; i <= 5; ++i)
                n[i] = rot[(s + i - 1) % 5];
            if (g.degree(n[2]) != 6 || g.degree(n[3]) != 6)
                continue;
            // the corner of u between n[i] and n[i+1] lies on the face of dart u -> n[i+1]
            if (! corner_is_triangle(n[2]) || ! corner_is_triangle(n[3]) || ! corner_is_triangle(n[4]))
                continue;
            auto p2 = others_in_rotation(e, n[2], u, {u, n[1], n[3]});
            auto p3 = others_in_rotation(e, n[3], u, {u, n[2], n[4]});
            if (p2.size() != 3 || p3.size() != 3)
                continue;
            ConfigSite site{Lemma::L3, {u}};
            site.roles.insert(site.roles.end(), n.begin() + 1, n.end());
            site.roles.insert(site.roles.end(), p2.begin(), p2.end());
            site.roles.insert(site.roles.end(), p3.begin(), p3.end());
            sites.push_back(std::move(site));
        }
        return sites;
    }

    auto l7_site_at(const EmbeddedGraph& e, const FaceSet& faces, Vertex u) -> std::optional<ConfigSite>
    {
        if (! is_special6(e, faces, u))
            return std::nullopt;
        Figure1 f;
        f.center = u;
        auto rot = e.rotation(u);
        for (int i = 1; i <= 6; ++i)
            f.ring[i] = rot[i - 1];

        std::array<std::optional<Vertex>, 13> outer{};
        for (int i = 1; i <= 6; ++i) {
            Vertex ui = f.ring[i];
            if (! is_special6(e, faces, ui))
                return std::nullopt;
            auto r = e.rotation(ui);
            int p = e.position(ui, u);
            // around ui: u, u_{i-1}, three outer vertices, u_{i+1}
            if (r[(p + 1) % 6] != f.at(i - 1) || r[(p + 5) % 6] != f.at(i + 1))
                return std::nullopt;
            for (int t = 0; t < 3; ++t) {
                int j = outer_index(2 * i - 2 + t);
                Vertex w = r[(p + 2 + t) % 6];
                if (outer[j] && *outer[j] != w)
                    return std::nullopt;
                outer[j] = w;
            }
        }
        std::set<Vertex> inner(f.ring.begin() + 1, f.ring.end());
        inner.insert(u);
        for (int j = 1; j <= 12; ++j) {
            f.outer[j] = *outer[j];
            if (inner.contains(f.outer[j]) || ! is_special6(e, faces, f.outer[j]))
                return std::nullopt;
        }
        ConfigSite site{Lemma::L7, {u}};
        site.roles.insert(site.roles.end(), f.ring.begin() + 1, f.ring.end());
        site.roles.insert(site.roles.end(), f.outer.begin() + 1, f.outer.end());
        return site;
    }
}

auto detect_sites(const Graph& g, Lemma lemma) -> std::vector<ConfigSite>
{
    switch (lemma) {
    case Lemma::L1: return l1_sites(g, nullptr);
    case Lemma::L2: return l2_sites(g);
    case Lemma::L3:
    case Lemma::L7: throw Error(ErrorCode::NeedsEmbedding, std::string(to_string(lemma)) + " needs face information");
    }
    return {};
}

auto detect_sites(const EmbeddedGraph& e, Lemma lemma) -> std::vector<ConfigSite>
{
    switch (lemma) {
    case Lemma::L1: return l1_sites(e.graph(), &e);
    case Lemma::L2: return l2_sites(e.graph());
    case Lemma::L3: {
        auto faces = trace_faces(e);
        std::vector<ConfigSite> sites;
        for (Vertex u = 0; u < e.order(); ++u)
            for (auto& s : l3_sites_at(e, faces, u))
                sites.push_back(std::move(s));
        return sites;
    }
    case Lemma::L7: {
        auto faces = trace_faces(e);
        std::vector<ConfigSite> sites;
        for (Vertex u = 0; u < e.order(); ++u)
            if (auto s = l7_site_at(e, faces, u))
                sites.push_back(std::move(*s));
        return sites;
    }
    }
    return {};
}

auto validate_site(const Graph& g, const ConfigSite& site) -> void
{
    const auto& r = site.roles;
    for (Vertex v : r)
        if (v < 0 || v >= g.order())
            throw stale("role vertex " + std::to_string(v) + " no longer exists");

    switch (site.lemma) {
    case Lemma::L1: {
        if (r.empty() || g.degree(r[0]) > 4 || ! same_set({r.begin() + 1, r.end()}, g.neighbours(r[0])))
            throw stale("L1 centre degree or neighbourhood changed");
        return;
    }
    case Lemma::L2: {
        if (r.size() != 2 || ! g.adjacent(r[0], r[1]) || g.degree(r[0]) % 2 == 0 || g.degree(r[1]) % 2 == 0)
            throw stale("L2 edge missing or an endpoint has even degree");
        return;
    }
    case Lemma::L3: {
        if (r.size() != 12 || g.degree(r[0]) != 5 || ! same_set({r.begin() + 1, r.begin() + 6}, g.neighbours(r[0])))
            throw stale("L3 centre changed");
        if (g.degree(r[2]) != 6 || g.degree(r[3]) != 6 || ! g.adjacent(r[1], r[2]) || ! g.adjacent(r[2], r[3])
                || ! g.adjacent(r[3], r[4]))
            throw stale("L3 ring changed");
        auto others = [&](Vertex x, std::initializer_list<Vertex> skip) {
            std::vector<Vertex> out;
            for (Vertex w : g.neighbours(x))
                if (std::find(skip.begin(), skip.end(), w) == skip.end())
                    out.push_back(w);
            return out;
        };
        if (! same_set(others(r[2], {r[0], r[1], r[3]}), std::span(r).subspan(6, 3))
                || ! same_set(others(r[3], {r[0], r[2], r[4]}), std::span(r).subspan(9, 3)))
            throw stale("L3 primed neighbours changed");
        return;
    }
    case Lemma::L7: {
        if (r.size() != 19)
            throw stale("L7 site must have 19 roles");
        auto model = figure1_model();
        for (auto [a, b] : model.edges())
            if (r[a] == r[b] || ! g.adjacent(r[a], r[b]))
                throw stale("L7 cluster adjacency changed");
        for (Vertex v : r)
            if (g.degree(v) != 6)
                throw stale("L7 cluster vertex no longer has degree 6");
        std::set<Vertex> inner(r.begin(), r.begin() + 7);
        if (inner.size() != 7)
            throw stale("L7 inner vertices not distinct");
        for (int j = 7; j < 19; ++j)
            if (inner.contains(r[j]))
                throw stale("L7 outer vertex inside the inner hexagon");
        return;
    }
    }
}

auto validate_site(const EmbeddedGraph& e, const ConfigSite& site) -> void
{
    validate_site(e.graph(), site);
    auto faces = trace_faces(e);
    switch (site.lemma) {
    case Lemma::L1:
    case Lemma::L2: return;
    case Lemma::L3: {
        auto sites = l3_sites_at(e, faces, site.roles[0]);
        if (std::find(sites.begin(), sites.end(), site) == sites.end())
            throw stale("L3 face conditions no longer hold");
        return;
    }
    case Lemma::L7: {
        auto found = l7_site_at(e, faces, site.roles[0]);
        if (! found || *found != site)
            throw stale("L7 cluster is no longer a cluster of special 6-vertices");
        return;
    }
    }
}

namespace {
    struct Surgery {
        std::vector<Vertex> removed_vertices;
        std::vector<Edge> removed_edges;
        /// Each new vertex is joined to the listed original vertices.
        std::vector<std::vector<Vertex>> new_vertices;
        std::vector<Edge> added_edges;
    };

    auto apply(const Graph& g, const Surgery& s) -> AuxiliaryReduction
    {
        AuxiliaryReduction aux;
        int n = g.order();
        std::vector<char> gone(n, 0);
        for (Vertex v : s.removed_vertices)
            gone[v] = 1;
        aux.to_reduced.assign(n, -1);
        for (Vertex v = 0; v < n; ++v)
            if (! gone[v]) {
                aux.to_reduced[v] = static_cast<Vertex>(aux.to_original.size());
                aux.to_original.push_back(v);
            }

        std::set<Edge> dropped;
        for (auto [a, b] : s.removed_edges)
            dropped.emplace(std::min(a, b), std::max(a, b));

        std::vector<Edge> edges;
        for (auto [a, b] : g.edges())
            if (! gone[a] && ! gone[b] && ! dropped.contains({a, b}))
                edges.emplace_back(aux.to_reduced[a], aux.to_reduced[b]);
        for (auto [a, b] : s.added_edges)
            edges.emplace_back(aux.to_reduced[a], aux.to_reduced[b]);
        for (const auto& attach : s.new_vertices) {
            Vertex x = static_cast<Vertex>(aux.to_original.size());
            aux.to_original.push_back(-1);
            aux.added.push_back(x);
            for (Vertex a : attach)
                edges.emplace_back(x, aux.to_reduced[a]);
        }
        aux.reduced = build_graph(static_cast<int>(aux.to_original.size()), edges);
        return aux;
    }

    auto surgery_for(const Graph& g, const ConfigSite& site) -> Surgery
    {
        const auto& r = site.roles;
        Surgery s;
        switch (site.lemma) {
        case Lemma::L1: {
            s.removed_vertices = {r[0]};
            int d = static_cast<int>(r.size()) - 1;
            // paths v1-v2, v2-v3, v3-v1, trimmed for smaller degree
            if (d >= 2)
                s.new_vertices.push_back({r[1], r[2]});
            if (d >= 3)
                s.new_vertices.push_back({r[2], r[3]});
            if (d >= 4)
                s.new_vertices.push_back({r[3], r[1]});
            break;
        }
        case Lemma::L2:
            s.removed_edges = {{r[0], r[1]}};
            s.new_vertices.push_back({r[0], r[1]});
            break;
        case Lemma::L3: {
            s.removed_vertices = {r[2], r[3]};
            for (int base : {6, 9})
                for (int a = 0; a < 3; ++a)
                    for (int b = a + 1; b < 3; ++b) {
                        Vertex x = r[base + a], y = r[base + b];
                        if (x != r[2] && x != r[3] && y != r[2] && y != r[3] && x != y && ! g.adjacent(x, y))
                            s.added_edges.emplace_back(x, y);
                    }
            break;
        }
        case Lemma::L7:
            s.removed_vertices = {r[0]};
            for (int target : {3, 4, 5})
                s.new_vertices.push_back({r[1], r[target]});
            break;
        }
        return s;
    }
}

auto build_reduction(const Graph& g, const ConfigSite& site) -> AuxiliaryReduction
{
    validate_site(g, site);
    return apply(g, surgery_for(g, site));
}

auto build_reduction(const EmbeddedGraph& e, const ConfigSite& site) -> AuxiliaryReduction
{
    validate_site(e, site);
    return apply(e.graph(), surgery_for(e.graph(), site));
}

auto neighbor_statuses(const Graph& g, std::span<const Color> colors, const Figure1& roles)
    -> std::array<NeighborStatus, 6>
{
    std::vector<Color> without(colors.begin(), colors.end());
    without[roles.center] = 0;
    std::array<NeighborStatus, 6> out{};
    for (int i = 1; i <= 6; ++i) {
        Vertex ui = roles.ring[i];
        auto odd = odd_colors(g, without, ui);
        auto& s = out[i - 1];
        s.color = without[ui];
        if (odd.size() >= 3)
            s.kind = NeighborStatus::Kind::Free;
        else if (odd.size() == 1) {
            s.kind = NeighborStatus::Kind::Unique;
            s.unique_color = odd.front();
        }
    }
    return out;
}

auto evaluate_claim(std::span<const NeighborStatus, 6> statuses) -> ClaimResult
{
    std::set<Color> ring_colors, unique_colors;
    for (const auto& s : statuses) {
        ring_colors.insert(s.color);
        if (s.kind == NeighborStatus::Kind::Unique)
            unique_colors.insert(s.unique_color);
    }
    int k = static_cast<int>(ring_colors.size());
    int good = 0;
    for (const auto& s : statuses)
        if (s.kind == NeighborStatus::Kind::Free
                || (s.kind == NeighborStatus::Kind::Unique && ring_colors.contains(s.unique_color)))
            ++good;

    ClaimResult result;
    result.distinct_colors = k;
    result.first_condition = good >= k - 2;
    result.second_condition = static_cast<int>(unique_colors.size()) < reduction_palette - k;
    result.holds = result.first_condition || result.second_condition;
    std::set<Color> blocked = ring_colors;
    blocked.insert(unique_colors.begin(), unique_colors.end());
    result.centre_colour_left = static_cast<int>(blocked.size()) < reduction_palette;
    return result;
}

auto check_claim(std::span<const NeighborStatus, 6> statuses) -> bool
{
    return evaluate_claim(statuses).holds;
}

auto recolor_32123(const Graph& g, std::span<const Color> colors, const Figure1& roles) -> Color
{
    std::vector<Color> c(colors.begin(), colors.end());
    c[roles.center] = 0;
    auto col = [&](int i) { return c[roles.ring[i]]; };
    auto fail = [](const std::string& why) { return Error(ErrorCode::HypothesisViolated, why); };

    if (col(1) == col(2) || col(2) == col(3) || col(1) == col(3))
        throw fail("c(u1), c(u2), c(u3) are not pairwise distinct");
    if (col(2) != col(6))
        throw fail("c(u2) != c(u6)");
    if (col(3) != col(5))
        throw fail("c(u3) != c(u5)");

    std::array<Color, 7> unique{};
    for (int i : {1, 2, 6}) {
        auto odd = odd_colors(g, c, roles.ring[i]);
        if (odd.size() != 1)
            throw fail("u" + std::to_string(i) + " does not have exactly one odd colour");
        unique[i] = odd.front();
    }
    if (unique[1] == unique[2] || unique[2] == unique[6] || unique[1] == unique[6])
        throw fail("unique odd colours of u1, u2, u6 are not pairwise distinct");
    for (int i : {1, 2, 6})
        for (int j = 1; j <= 4; ++j)
            if (unique[i] == col(j))
                throw fail("a unique odd colour lies in {c(u1), ..., c(u4)}");

    Vertex v1 = roles.outer[1];
    std::set<Color> forbidden{col(1), col(2), col(3), col(4), c[v1], unique[2], unique[6]};
    std::vector<Color> without_u1 = c;
    without_u1[roles.ring[1]] = 0;
    auto odd_v1 = odd_colors(g, without_u1, v1);
    if (! odd_v1.empty())
        forbidden.insert(odd_v1.front());

    for (Color x = 1; x <= reduction_palette; ++x)
        if (! forbidden.contains(x))
            return x;
    throw Error(ErrorCode::EmptyChoiceSet, "all nine colours forbidden for u1");
}

}  // namespace oddcol
