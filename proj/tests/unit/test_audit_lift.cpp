#include "support.hpp"

#include "oddcol/error.hpp"
#include "oddcol/reductions.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace oddcol;

namespace {
/// Restricted-growth enumeration of every colouring of the listed model
/// vertices with no pruning; returns (states meeting the hypotheses,
/// counterexamples).
struct BruteResult {
    long states = 0;
    long counterexamples = 0;
};

auto brute_audit(const std::vector<int>& vs, const std::vector<std::pair<int, int>>& equal,
    const std::vector<int>& distinct, const std::vector<int>& unique, const std::vector<int>& excluded, int limit)
    -> BruteResult
{
    auto model = figure1_model();
    std::map<int, int> slot;
    for (std::size_t i = 0; i < vs.size(); ++i)
        slot[vs[i]] = static_cast<int>(i);
    std::vector<Color> c(vs.size(), 0);
    BruteResult out;
    auto unique_odd = [&](int x) -> Color {
        std::map<Color, int> count;
        for (Vertex y : model.neighbours(x))
            if (y != 0)
                ++count[c[slot.at(y)]];
        std::vector<Color> odd;
        for (auto [col, k] : count)
            if (k % 2)
                odd.push_back(col);
        return odd.size() == 1 ? odd[0] : 0;
    };
    auto leaf = [&] {
        for (auto [a, b] : model.edges())
            if (a != 0 && slot.contains(a) && slot.contains(b) && c[slot[a]] == c[slot[b]])
                return;
        for (auto [a, b] : equal)
            if (c[slot[a]] != c[slot[b]])
                return;
        for (std::size_t i = 0; i < distinct.size(); ++i)
            for (std::size_t j = i + 1; j < distinct.size(); ++j)
                if (c[slot[distinct[i]]] == c[slot[distinct[j]]])
                    return;
        std::set<Color> bars;
        for (int x : unique) {
            Color b = unique_odd(x);
            if (b == 0)
                return;
            bars.insert(b);
        }
        ++out.states;
        for (int x : excluded)
            bars.erase(c[slot[x]]);
        if (static_cast<int>(bars.size()) > limit)
            ++out.counterexamples;
    };
    auto rec = [&](auto&& self, std::size_t i, Color used) -> void {
        if (i == c.size()) {
            leaf();
            return;
        }
        for (Color x = 1; x <= std::min(used + 1, 9); ++x) {
            c[i] = x;
            self(self, i + 1, std::max(used, x));
        }
    };
    rec(rec, 0, 0);
    return out;
}
}

TEST_SUITE("audit")
{
    TEST_CASE("L1234 holds and agrees with plain enumeration")
    {
        auto v = audit_abstract(AbstractLemma::L1234);
        CHECK(v.verdict == Verdict::Holds);
        CHECK(v.witness.empty());
        auto brute = brute_audit({1, 2, 3, 6, 18, 7, 8, 9, 10}, {}, {1, 2, 3, 6}, {1, 2}, {1, 2, 3, 6}, 1);
        CHECK(brute.counterexamples == 0);
        CHECK(v.states == brute.states);
    }

    TEST_CASE("L42123 holds and agrees with plain enumeration")
    {
        auto v = audit_abstract(AbstractLemma::L42123);
        CHECK(v.verdict == Verdict::Holds);
        auto brute = brute_audit(
            {1, 2, 3, 5, 6, 18, 7, 8, 9, 10, 16, 17}, {{2, 6}}, {1, 2, 3, 5}, {1, 2, 6}, {1, 2, 3, 5}, 2);
        CHECK(brute.counterexamples == 0);
        CHECK(v.states == brute.states);
    }

    TEST_CASE("negated conclusions are refuted")
    {
        for (auto lemma : {AbstractLemma::L1234, AbstractLemma::L42123}) {
            auto v = audit_abstract(lemma, {}, {true});
            CHECK(v.verdict == Verdict::Counterexample);
            CHECK(! v.witness.empty());
            CHECK(v.witness.front().first == "u1");
            CHECK(v.witness.front().second == 1);
        }
    }

    TEST_CASE("budget")
    {
        auto v = audit_abstract(AbstractLemma::L42123, SearchBudget{100, 60.0});
        CHECK(v.verdict == Verdict::Budget);
    }

    TEST_CASE("names")
    {
        CHECK(parse_abstract_lemma("L1234") == AbstractLemma::L1234);
        CHECK(parse_abstract_lemma("L42123") == AbstractLemma::L42123);
        CHECK(! parse_abstract_lemma("L7"));
        CHECK(parse_lemma("L7") == Lemma::L7);
        CHECK(! parse_lemma("L4"));
    }
}

TEST_SUITE("lift")
{
    auto solve_and_lift(const Graph& g, const ConfigSite& site, const AuxiliaryReduction& aux) -> LiftReport
    {
        auto solved = decide(aux.reduced, 9);
        REQUIRE(solved.coloring);
        return lift(g, site, aux, *solved.coloring);
    }

    TEST_CASE("L2 restriction")
    {
        auto k2 = complete_graph(2);
        auto site = detect_sites(k2, Lemma::L2).front();
        auto aux = build_reduction(k2, site);
        auto r = lift(k2, site, aux, Coloring::make(9, {1, 2, 3}));
        CHECK(r.path == "restriction");
        CHECK(r.valid);
        CHECK(r.by_procedure);
        CHECK(r.coloring.colors == std::vector<Color>{1, 2});
    }

    TEST_CASE("L2 restriction keeps endpoints odd on random hosts")
    {
        std::mt19937 rng(5);
        int checked = 0;
        for (int t = 0; t < 40; ++t) {
            auto g = testing::random_graph(12, 0.4, rng);
            for (const auto& site : detect_sites(g, Lemma::L2)) {
                auto aux = build_reduction(g, site);
                auto r = solve_and_lift(g, site, aux);
                CHECK(r.valid);
                CHECK(r.path == "restriction");
                ++checked;
            }
        }
        CHECK(checked > 0);
    }

    TEST_CASE("L1 rule on a wheel hub")
    {
        auto wheel = build_graph(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
        ConfigSite hub{Lemma::L1, {0, 1, 2, 3, 4}};
        auto aux = build_reduction(wheel, hub);
        auto r = solve_and_lift(wheel, hub, aux);
        CHECK(r.valid);
        CHECK(validate_odd(wheel, r.coloring).valid);
    }

    TEST_CASE("L7 on torus hosts")
    {
        for (auto [m, n] : {std::pair{4, 4}, {5, 5}, {4, 6}}) {
            auto t = torus_triangulation(m, n);
            for (const auto& site : detect_sites(t, Lemma::L7)) {
                auto r = solve_and_lift(t.graph(), site, build_reduction(t, site));
                CHECK(r.valid);
                CHECK(validate_odd(t.graph(), r.coloring).valid);
            }
        }
    }

    TEST_CASE("claim-breaking colourings go through the case analysis")
    {
        std::mt19937 rng(12);
        int lifted = 0;
        for (int m : {6, 7, 8}) {
            auto t = torus_triangulation(m, m);
            for (const auto& site : detect_sites(t, Lemma::L7)) {
                auto aux = build_reduction(t, site);
                SolveOptions options;
                options.fixed = testing::claim_breaking_fixing(site, aux, testing::random_relabel(rng));
                auto solved = decide(aux.reduced, 9, {}, options);
                REQUIRE(solved.coloring);
                auto r = lift(t.graph(), site, aux, *solved.coloring);
                CHECK(r.valid);
                CHECK(r.by_procedure);
                CHECK(r.path == "case-9");
                CHECK(validate_odd(t.graph(), r.coloring).valid);
                ++lifted;
            }
        }
        CHECK(lifted == 36 + 49 + 64);
    }

    TEST_CASE("L3 on cut tori")
    {
        auto t = torus_triangulation(5, 6);
        auto cut = remove_edge(t, torus_vertex(5, 6, 1, 1), torus_vertex(5, 6, 2, 2));
        for (const auto& site : detect_sites(cut, Lemma::L3)) {
            auto r = solve_and_lift(cut.graph(), site, build_reduction(cut, site));
            CHECK(r.valid);
            CHECK(r.procedure.rfind("case-", 0) == 0);
            CHECK(validate_odd(cut.graph(), r.coloring).valid);
        }
    }

    TEST_CASE("Claim path colours the centre outside ring and unique colours")
    {
        auto t = torus_triangulation(5, 5);
        auto site = detect_sites(t, Lemma::L7).front();
        auto aux = build_reduction(t, site);
        auto r = solve_and_lift(t.graph(), site, aux);
        if (r.path == "claim") {
            auto f = Figure1::from_site(site);
            auto st = neighbor_statuses(t.graph(), r.coloring.colors, f);
            for (const auto& s : st) {
                CHECK(s.color != r.coloring.colors[f.center]);
                if (s.kind == NeighborStatus::Kind::Unique)
                    CHECK(s.unique_color != r.coloring.colors[f.center]);
            }
        }
    }

    TEST_CASE("preconditions")
    {
        auto k2 = complete_graph(2);
        auto site = detect_sites(k2, Lemma::L2).front();
        auto aux = build_reduction(k2, site);
        CHECK_THROWS_AS(lift(k2, site, aux, Coloring::make(9, {1, 1, 2})), Error);
        CHECK_THROWS_AS(lift(k2, site, aux, Coloring::make(9, {1, 2})), Error);
        CHECK_THROWS_AS(lift(k2, site, aux, Coloring{12, {1, 2, 12}}), Error);
        try {
            lift(k2, site, aux, Coloring::make(9, {1, 1, 2}));
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::PreconditionViolated);
        }
    }

    TEST_CASE("fallback takes over when the rule fails")
    {
        // C5 with its L1 site at 0: G' is C4 plus two 2-vertex chords, and
        // the odd set of a neighbour can be emptied by the rule's colour
        auto c5 = cycle_graph(5).graph();
        int fallbacks = 0, total = 0;
        for (const auto& site : detect_sites(c5, Lemma::L1)) {
            auto r = solve_and_lift(c5, site, build_reduction(c5, site));
            CHECK(r.valid);
            fallbacks += ! r.by_procedure;
            ++total;
        }
        CHECK(total == 5);
        MESSAGE("C5 L1 sites resolved by fallback: " << fallbacks);
    }
}
