#include "support.hpp"

#include "oddcol/error.hpp"
#include "oddcol/reductions.hpp"

#include <doctest.h>

#include <set>
#include <tuple>

using namespace oddcol;

namespace {
auto count_4plus(const Graph& g) -> int
{
    int n = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        n += g.degree(v) >= 4;
    return n;
}

/// Brute-force L7 matcher: search for maps of the 19-vertex model into e
/// that send model edges to edges, with the ring following the centre's
/// rotation from its first entry, inner images distinct, outer images
/// outside the inner ones, and every image special.
auto brute_force_l7(const EmbeddedGraph& e) -> std::set<std::vector<Vertex>>
{
    auto model = figure1_model();
    auto faces = trace_faces(e);
    std::set<std::vector<Vertex>> found;
    for (Vertex u = 0; u < e.order(); ++u) {
        if (! is_special6(e, faces, u))
            continue;
        std::vector<Vertex> img(19, -1);
        img[0] = u;
        for (int i = 1; i <= 6; ++i)
            img[i] = e.rotation(u)[i - 1];
        auto extend = [&](auto&& self, int x) -> void {
            if (x == 19) {
                found.insert(img);
                return;
            }
            for (Vertex cand = 0; cand < e.order(); ++cand) {
                if (std::find(img.begin(), img.begin() + 7, cand) != img.begin() + 7)
                    continue;
                if (! is_special6(e, faces, cand))
                    continue;
                bool ok = true;
                for (Vertex y : model.neighbours(x))
                    if (y < x && ! e.graph().adjacent(img[y], cand))
                        ok = false;
                if (! ok)
                    continue;
                img[x] = cand;
                self(self, x + 1);
            }
            img[x] = -1;
        };
        bool inner_ok = true;
        for (int i = 1; i <= 6; ++i)
            inner_ok = inner_ok && is_special6(e, faces, img[i]);
        if (inner_ok)
            extend(extend, 7);
    }
    return found;
}
}

TEST_SUITE("reductions")
{
    TEST_CASE("special 6-vertices")
    {
        auto t = torus_triangulation(5, 5);
        for (Vertex v = 0; v < t.order(); ++v)
            CHECK(is_special6(t, v));
        auto c4 = cycle_graph(4);
        for (Vertex v = 0; v < 4; ++v)
            CHECK(! is_special6(c4, v));
        auto t44 = torus_triangulation(4, 4);
        auto sub = subdivide_edge(t44, 0, 1);
        CHECK(! is_special6(sub, 0));
        CHECK(! is_special6(sub, 1));
        CHECK(! is_special6(sub, 16));
        // the apexes of the subdivided edge now sit on a 4-face
        CHECK(! is_special6(sub, t44.successor(1, 0)));
        CHECK(is_special6(sub, torus_vertex(4, 4, 2, 2)));
    }

    TEST_CASE("site counts")
    {
        CHECK(detect_sites(torus_triangulation(4, 4), Lemma::L7).size() == 16);
        CHECK(detect_sites(torus_triangulation(5, 5), Lemma::L7).size() == 25);
        CHECK(detect_sites(torus_triangulation(3, 3), Lemma::L7).empty());
        CHECK(detect_sites(complete_graph(7), Lemma::L1).empty());
        CHECK(detect_sites(cycle_graph(5).graph(), Lemma::L2).empty());
        CHECK(detect_sites(complete_graph(2), Lemma::L2).size() == 1);
        CHECK(detect_sites(k7_torus(), Lemma::L3).empty());
        CHECK_THROWS_AS(detect_sites(torus_triangulation(4, 4).graph(), Lemma::L7), Error);
        CHECK_THROWS_AS(detect_sites(torus_triangulation(4, 4).graph(), Lemma::L3), Error);
    }

    TEST_CASE("L7 detection matches the brute-force matcher")
    {
        std::vector<EmbeddedGraph> hosts{torus_triangulation(5, 5), torus_triangulation(5, 6),
            flip_edge(torus_triangulation(6, 6), 0, 1), remove_edge(torus_triangulation(5, 7), 0, 8)};
        for (const auto& e : hosts) {
            std::set<std::vector<Vertex>> detected;
            for (const auto& s : detect_sites(e, Lemma::L7))
                detected.insert(s.roles);
            CHECK(detected == brute_force_l7(e));
        }
    }

    TEST_CASE("L7 role layout")
    {
        auto t = torus_triangulation(5, 5);
        auto faces = trace_faces(t);
        for (const auto& s : detect_sites(t, Lemma::L7)) {
            auto f = Figure1::from_site(s);
            for (int i = 1; i <= 6; ++i) {
                CHECK(t.graph().adjacent(f.center, f.ring[i]));
                CHECK(t.graph().adjacent(f.ring[i], f.at(i + 1)));
                for (Vertex w : f.outer_of(i))
                    CHECK(t.graph().adjacent(f.ring[i], w));
            }
            auto r = f.reflected();
            CHECK(r.ring[2] == f.ring[6]);
            CHECK(r.outer[1] == f.outer[1]);
            CHECK(r.outer[2] == f.outer[12]);
            CHECK(r.reflected().ring == f.ring);
            CHECK(r.reflected().outer == f.outer);
        }
    }

    TEST_CASE("L3 sites on a torus with one diagonal removed")
    {
        auto t = torus_triangulation(5, 5);
        Vertex a = torus_vertex(5, 5, 2, 2), b = torus_vertex(5, 5, 3, 3);
        auto cut = remove_edge(t, a, b);
        auto sites = detect_sites(cut, Lemma::L3);
        REQUIRE(! sites.empty());
        auto faces = trace_faces(cut);
        for (const auto& s : sites) {
            const auto& r = s.roles;
            CHECK((r[0] == a || r[0] == b));
            CHECK(cut.graph().degree(r[2]) == 6);
            CHECK(cut.graph().degree(r[3]) == 6);
            for (int i : {2, 3, 4})
                CHECK(faces.degree(faces.face_of_dart(cut.dart(r[0], r[i]))) == 3);
            for (int p = 6; p < 9; ++p)
                CHECK(cut.graph().adjacent(r[2], r[p]));
            for (int p = 9; p < 12; ++p)
                CHECK(cut.graph().adjacent(r[3], r[p]));
            CHECK_NOTHROW(validate_site(cut, s));
        }
        CHECK(sites.size() == 4);
    }

    TEST_CASE("stale sites are rejected")
    {
        auto t = torus_triangulation(5, 5);
        auto site = detect_sites(t, Lemma::L7).front();
        auto changed = subdivide_edge(t, site.roles[7], site.roles[8]);
        CHECK_THROWS_AS(build_reduction(changed, site), Error);
        try {
            validate_site(changed, site);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::StaleSite);
        }
        auto k2 = complete_graph(2);
        ConfigSite wrong{Lemma::L2, {0, 5}};
        CHECK_THROWS_AS(build_reduction(k2, wrong), Error);
    }

    TEST_CASE("auxiliary graphs")
    {
        auto k2 = complete_graph(2);
        auto l2 = build_reduction(k2, detect_sites(k2, Lemma::L2).front());
        CHECK(l2.reduced.order() == 3);
        CHECK(l2.reduced.size() == 2);
        CHECK(! l2.reduced.adjacent(0, 1));
        CHECK(l2.added == std::vector<Vertex>{2});
        CHECK(l2.reduced.degree(2) == 2);

        // wheel with four spokes
        auto wheel = build_graph(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
        ConfigSite hub{Lemma::L1, {0, 1, 2, 3, 4}};
        auto l1 = build_reduction(wheel, hub);
        CHECK(l1.reduced.order() == 7);
        CHECK(l1.reduced.size() == 10);
        CHECK(l1.to_reduced[0] == -1);
        for (Vertex x : l1.added)
            CHECK(l1.reduced.degree(x) == 2);
        auto rr = [&](Vertex v) { return l1.to_reduced[v]; };
        std::set<std::set<Vertex>> attach;
        for (Vertex x : l1.added) {
            auto nb = l1.reduced.neighbours(x);
            attach.insert({nb.begin(), nb.end()});
        }
        CHECK(attach == std::set<std::set<Vertex>>{{rr(1), rr(2)}, {rr(2), rr(3)}, {rr(3), rr(1)}});

        auto t = torus_triangulation(4, 4);
        auto site = detect_sites(t, Lemma::L7).front();
        auto l7 = build_reduction(t, site);
        CHECK(l7.reduced.order() == 18);
        CHECK(l7.added.size() == 3);
        for (Vertex x : l7.added)
            CHECK(l7.reduced.degree(x) == 2);
        for (Vertex v = 0; v < t.order(); ++v)
            if (l7.to_reduced[v] >= 0)
                CHECK(l7.to_original[l7.to_reduced[v]] == v);
        CHECK(count_4plus(l7.reduced) <= count_4plus(t.graph()));
    }

    TEST_CASE("L1 on degree 2 and 3 centres")
    {
        auto path = build_graph(3, std::vector<Edge>{{0, 1}, {1, 2}});
        auto aux = build_reduction(path, ConfigSite{Lemma::L1, {1, 0, 2}});
        CHECK(aux.added.size() == 1);
        auto star = build_graph(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
        CHECK(build_reduction(star, ConfigSite{Lemma::L1, {0, 1, 2, 3}}).added.size() == 2);
        auto k2 = complete_graph(2);
        CHECK(build_reduction(k2, ConfigSite{Lemma::L1, {0, 1}}).added.empty());
    }

    TEST_CASE("4+-vertex count does not grow")
    {
        std::mt19937 rng(17);
        for (int t = 0; t < 60; ++t) {
            auto g = testing::random_graph(14, 0.45, rng);
            for (const auto& s : detect_sites(g, Lemma::L2))
                CHECK(count_4plus(build_reduction(g, s).reduced) <= count_4plus(g));
            for (const auto& s : detect_sites(g, Lemma::L1)) {
                bool big_neighbours = true;
                for (std::size_t i = 1; i < s.roles.size() && i <= 3; ++i)
                    big_neighbours = big_neighbours && g.degree(s.roles[i]) >= 4;
                if (big_neighbours)
                    CHECK(count_4plus(build_reduction(g, s).reduced) <= count_4plus(g));
            }
        }
        auto t = torus_triangulation(6, 5);
        for (const auto& s : detect_sites(t, Lemma::L7))
            CHECK(count_4plus(build_reduction(t, s).reduced) <= count_4plus(t.graph()));
    }

    TEST_CASE("L3 reduction adds the missing prime edges")
    {
        auto t = torus_triangulation(5, 5);
        auto cut = remove_edge(t, torus_vertex(5, 5, 2, 2), torus_vertex(5, 5, 3, 3));
        for (const auto& s : detect_sites(cut, Lemma::L3)) {
            auto aux = build_reduction(cut, s);
            CHECK(aux.reduced.order() == cut.order() - 2);
            CHECK(aux.added.empty());
            for (int base : {6, 9})
                for (int a = 0; a < 3; ++a)
                    for (int b = a + 1; b < 3; ++b)
                        CHECK(aux.reduced.adjacent(aux.to_reduced[s.roles[base + a]], aux.to_reduced[s.roles[base + b]]));
        }
    }
}

TEST_SUITE("claim")
{
    using Kind = NeighborStatus::Kind;
    auto status(Color c, Kind k, Color u = 0) { return NeighborStatus{c, k, u}; }

    TEST_CASE("all free")
    {
        std::array<NeighborStatus, 6> s;
        for (int i = 0; i < 6; ++i)
            s[i] = status(i + 1, Kind::Free);
        auto r = evaluate_claim(s);
        CHECK(r.holds);
        CHECK(r.first_condition);
        CHECK(r.distinct_colors == 6);
    }

    TEST_CASE("six distinct colours sharing one unique odd colour")
    {
        std::array<NeighborStatus, 6> s;
        for (int i = 0; i < 6; ++i)
            s[i] = status(i + 1, Kind::Unique, 9);
        auto r = evaluate_claim(s);
        CHECK(r.holds);
        CHECK(! r.first_condition);
        CHECK(r.second_condition);
    }

    TEST_CASE("both conditions fail")
    {
        std::array<NeighborStatus, 6> s{status(1, Kind::Unique, 5), status(2, Kind::Unique, 6),
            status(3, Kind::Unique, 7), status(2, Kind::Unique, 8), status(3, Kind::Unique, 9),
            status(4, Kind::Unique, 5)};
        auto r = evaluate_claim(s);
        CHECK(r.distinct_colors == 4);
        CHECK(! r.first_condition);
        CHECK(! r.second_condition);
        CHECK(! check_claim(s));
    }

    TEST_CASE("unique colours inside the ring palette still count for the literal claim")
    {
        // ring 1,2,3,2,4,2 with unique colours 6,9,8,9,5,1: colour 7 is still open
        std::array<NeighborStatus, 6> s{status(1, Kind::Unique, 6), status(2, Kind::Unique, 9),
            status(3, Kind::Unique, 8), status(2, Kind::Unique, 9), status(4, Kind::Unique, 5),
            status(2, Kind::Unique, 1)};
        auto r = evaluate_claim(s);
        CHECK(! r.first_condition);
        CHECK(! r.second_condition);
        CHECK(! r.holds);
        CHECK(r.centre_colour_left);
    }

    TEST_CASE("open colour for the centre")
    {
        std::mt19937 rng(8);
        std::uniform_int_distribution<int> colour(1, 9), kind(0, 1);
        for (int t = 0; t < 5000; ++t) {
            std::array<NeighborStatus, 6> s;
            std::set<Color> blocked;
            for (auto& x : s) {
                x = kind(rng) ? status(colour(rng), Kind::Free) : status(colour(rng), Kind::Unique, colour(rng));
                blocked.insert(x.color);
            }
            for (const auto& x : s)
                if (x.kind == Kind::Unique)
                    blocked.insert(x.unique_color);
            auto r = evaluate_claim(s);
            CHECK(r.centre_colour_left == (blocked.size() < 9));
            if (r.holds)
                CHECK(r.centre_colour_left);
        }
    }

    TEST_CASE("threshold of the first condition")
    {
        // k = 4 needs two good neighbours
        std::array<NeighborStatus, 6> s{status(1, Kind::Free), status(2, Kind::Unique, 1),
            status(3, Kind::Unique, 5), status(2, Kind::Unique, 6), status(3, Kind::Unique, 7),
            status(4, Kind::Unique, 8)};
        CHECK(evaluate_claim(s).first_condition);
        s[1] = status(2, Kind::Other);
        CHECK(! evaluate_claim(s).first_condition);
    }

    TEST_CASE("statuses are computed without the centre")
    {
        auto t = torus_triangulation(5, 5);
        auto f = Figure1::from_site(detect_sites(t, Lemma::L7).front());
        auto c = decide(t.graph(), 9).coloring;
        REQUIRE(c);
        auto st = neighbor_statuses(t.graph(), c->colors, f);
        auto without = c->colors;
        without[f.center] = 0;
        for (int i = 1; i <= 6; ++i) {
            auto odd = odd_colors(t.graph(), without, f.ring[i]);
            CHECK(st[i - 1].color == c->colors[f.ring[i]]);
            if (odd.size() >= 3)
                CHECK(st[i - 1].kind == Kind::Free);
            else if (odd.size() == 1)
                CHECK(st[i - 1].unique_color == odd.front());
            else
                CHECK(st[i - 1].kind == Kind::Other);
        }
    }
}

TEST_SUITE("recolor_32123")
{
    /// A colouring of G - u shaped for the lemma, completed by the solver.
    auto context() -> std::tuple<Graph, std::vector<Color>, Figure1>
    {
        auto t = torus_triangulation(5, 5);
        auto f = Figure1::from_site(detect_sites(t, Lemma::L7).front());
        std::vector<Edge> edges;
        for (auto [a, b] : t.graph().edges())
            if (a != f.center && b != f.center)
                edges.emplace_back(a, b);
        auto g = build_graph(t.order(), edges);
        SolveOptions options;
        options.fixed.assign(g.order(), 0);
        options.fixed[f.center] = 1;
        auto set = [&](Vertex v, Color c) { options.fixed[v] = c; };
        set(f.ring[1], 1);
        set(f.ring[2], 2);
        set(f.ring[6], 2);
        set(f.ring[3], 3);
        set(f.ring[5], 3);
        set(f.ring[4], 2);
        set(f.outer[1], 4);
        set(f.outer[2], 3);
        set(f.outer[12], 3);
        set(f.outer[3], 5);
        set(f.outer[4], 1);
        set(f.outer[11], 6);
        set(f.outer[10], 1);
        auto r = decide(g, 9, {}, options);
        REQUIRE(r.coloring);
        return {g, r.coloring->colors, f};
    }

    TEST_CASE("choice makes u2 and u6 free")
    {
        auto [g, colors, f] = context();
        Color x = recolor_32123(g, colors, f);
        std::set<Color> forbidden{1, 2, 3, colors[f.outer[1]], 5, 6};
        CHECK(! forbidden.contains(x));
        colors[f.ring[1]] = x;
        colors[f.center] = 0;
        CHECK(odd_colors(g, colors, f.ring[2]).size() >= 3);
        CHECK(odd_colors(g, colors, f.ring[6]).size() >= 3);
        for (Vertex v : {f.outer[1], f.outer[2], f.outer[12]}) {
            CHECK(! odd_colors(g, colors, v).empty());
            for (Vertex w : g.neighbours(v))
                CHECK(colors[w] != colors[v]);
        }
    }

    TEST_CASE("hypothesis violations")
    {
        auto [g, colors, f] = context();
        auto broken = colors;
        broken[f.ring[6]] = 7;
        CHECK_THROWS_AS(recolor_32123(g, broken, f), Error);
        try {
            recolor_32123(g, broken, f);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::HypothesisViolated);
        }
        broken = colors;
        broken[f.ring[5]] = 8;
        CHECK_THROWS_AS(recolor_32123(g, broken, f), Error);
    }
}

TEST_SUITE("patterns")
{
    TEST_CASE("renaming and reflection")
    {
        CHECK(rename_by_first_use({4, 7, 4, 2, 7, 9}) == HexPattern{1, 2, 1, 3, 2, 4});
        CHECK(reflect({1, 2, 3, 4, 5, 6}) == HexPattern{1, 6, 5, 4, 3, 2});
        CHECK(canonical_pattern({1, 2, 3, 4, 3, 4}) == HexPattern{1, 2, 3, 2, 3, 4});
    }

    TEST_CASE("headers match their own case")
    {
        for (const auto& h : case_headers()) {
            auto m = match_cases(h.pattern);
            REQUIRE(! m.empty());
            CHECK(std::any_of(m.begin(), m.end(), [&](const CaseMatch& x) { return x.case_id == h.case_id; }));
        }
        auto one = match_cases({1, 2, 3, 2, 3, 2});
        REQUIRE(one.size() == 1);
        CHECK(one[0].case_id == 1);
        auto nine = match_cases({1, 2, 3, 4, 5, 6});
        REQUIRE(nine.size() == 1);
        CHECK(nine[0].case_id == 9);
        auto mirrored = match_cases({1, 2, 3, 2, 4, 5});
        REQUIRE(mirrored.size() == 1);
        CHECK(mirrored[0].reflected);
        CHECK(mirrored[0].case_id == 8);
    }

    TEST_CASE("coverage table")
    {
        // independent count: proper hexagon colourings with c(u1) off u3, u4, u5,
        // colours renamed by first use, then merged under reflection
        std::set<HexPattern> raw;
        for (int code = 0; code < 46656; ++code) {
            HexPattern p{};
            for (int i = 0, x = code; i < 6; ++i, x /= 6)
                p[i] = x % 6 + 1;
            bool proper = true;
            for (int i = 0; i < 6; ++i)
                proper = proper && p[i] != p[(i + 1) % 6];
            if (proper && p[0] != p[2] && p[0] != p[3] && p[0] != p[4])
                raw.insert(rename_by_first_use(p));
        }
        CHECK(raw.size() == 15);
        std::set<HexPattern> orbits;
        for (const auto& p : raw)
            orbits.insert(std::min(p, rename_by_first_use(reflect(p))));
        CHECK(orbits.size() == 11);

        auto v = case_coverage();
        CHECK(v.table.size() == orbits.size());
        CHECK(v.ambiguous.empty());
        CHECK(v.uncovered == std::vector<HexPattern>{{1, 2, 3, 2, 3, 4}});
        CHECK(! v.covered);
    }
}
