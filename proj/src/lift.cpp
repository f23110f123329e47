#include "oddcol/reductions.hpp"

#include "oddcol/error.hpp"

#include <algorithm>
#include <initializer_list>
#include <set>

namespace oddcol {

namespace {
    constexpr int K = reduction_palette;

    struct Work {
        const Graph& g;
        std::vector<Color> c;

        /// Designated odd colour of x under the current partial colouring, 0 if none.
        [[nodiscard]] auto co(Vertex x) const -> Color
        {
            auto odd = odd_colors(g, c, x);
            return odd.empty() ? 0 : odd.front();
        }
        /// Unique odd colour of x, 0 unless |C_o(x)| == 1.
        [[nodiscard]] auto bar(Vertex x) const -> Color
        {
            auto odd = odd_colors(g, c, x);
            return odd.size() == 1 ? odd.front() : 0;
        }
        [[nodiscard]] auto pick(std::initializer_list<Color> forbidden) const -> std::optional<Color>
        {
            return pick(std::set<Color>(forbidden));
        }
        [[nodiscard]] static auto pick(const std::set<Color>& forbidden) -> std::optional<Color>
        {
            for (Color x = 1; x <= K; ++x)
                if (! forbidden.contains(x))
                    return x;
            return std::nullopt;
        }
        [[nodiscard]] auto valid() const -> bool { return is_odd_coloring(g, c); }
    };

    // ---- L1 and L2

    auto lift_l1(Work& w, const ConfigSite& site) -> bool
    {
        std::set<Color> forbidden;
        for (std::size_t i = 1; i < site.roles.size(); ++i) {
            forbidden.insert(w.c[site.roles[i]]);
            forbidden.insert(w.co(site.roles[i]));
        }
        auto x = Work::pick(forbidden);
        if (! x)
            return false;
        w.c[site.roles[0]] = *x;
        return true;
    }

    // ---- L3

    struct L3Roles {
        Vertex u;
        std::array<Vertex, 6> n;  // n[1..5]
        std::array<Vertex, 3> p2, p3;

        [[nodiscard]] auto mirrored() const -> L3Roles
        {
            return {u, {-1, n[4], n[3], n[2], n[1], n[5]}, p3, p2};
        }
    };

    auto l3_roles(const ConfigSite& site) -> L3Roles
    {
        const auto& r = site.roles;
        return {r[0], {-1, r[1], r[2], r[3], r[4], r[5]}, {r[6], r[7], r[8]}, {r[9], r[10], r[11]}};
    }

    auto colours_of(const Work& w, std::span<const Vertex> vs) -> std::set<Color>
    {
        std::set<Color> out;
        for (Vertex v : vs)
            out.insert(w.c[v]);
        return out;
    }

    auto odd_of(const Work& w, std::span<const Vertex> vs) -> std::set<Color>
    {
        std::set<Color> out;
        for (Vertex v : vs)
            if (Color x = w.co(v))
                out.insert(x);
        return out;
    }

    auto set_plus(std::set<Color> s, std::initializer_list<Color> extra) -> std::set<Color>
    {
        s.insert(extra.begin(), extra.end());
        s.erase(0);
        return s;
    }

    auto set_union(std::set<Color> a, const std::set<Color>& b) -> std::set<Color>
    {
        a.insert(b.begin(), b.end());
        a.erase(0);
        return a;
    }

    /// Final recolouring of u once u2 and u3 are coloured.
    auto l3_color_centre(Work& w, const L3Roles& r) -> bool
    {
        w.c[r.u] = 0;
        auto x = w.pick({w.c[r.n[1]], w.co(r.n[1]), w.c[r.n[2]], w.c[r.n[3]], w.c[r.n[4]], w.co(r.n[4]),
            w.c[r.n[5]], w.co(r.n[5])});
        if (! x)
            return false;
        w.c[r.u] = *x;
        return true;
    }

    /// Branch for c(u1) outside the colours of u2's primes.
    auto l3_first(Work& w, const L3Roles& r, std::string& branch) -> bool
    {
        const Vertex u2 = r.n[2], u3 = r.n[3], u4 = r.n[4];
        auto p2 = colours_of(w, r.p2);
        auto x2 = Work::pick(set_plus(set_union(p2, odd_of(w, r.p2)), {w.c[r.n[1]]}));
        if (! x2)
            return false;
        w.c[u2] = *x2;

        auto p3 = colours_of(w, r.p3);
        bool inside = p3.contains(w.c[u2]) && p3.contains(w.c[u4]);
        if (! inside || w.c[u2] == w.c[u4]) {
            branch = "1a";
            auto x3 = Work::pick(set_plus(set_union(p3, odd_of(w, r.p3)), {w.c[u2], w.c[u4]}));
            if (! x3)
                return false;
            w.c[u3] = *x3;
            return l3_color_centre(w, r);
        }

        branch = "1b";
        Vertex spare = -1;
        for (Vertex p : r.p3)
            if (w.c[p] != w.c[u2] && w.c[p] != w.c[u4])
                spare = p;
        if (spare < 0)
            return false;
        w.c[r.u] = 0;
        auto xu = w.pick({w.c[r.n[1]], w.co(r.n[1]), w.c[u2], w.c[u4], w.c[r.n[5]], w.co(r.n[5]), w.c[spare]});
        if (! xu)
            return false;
        w.c[r.u] = *xu;
        auto x3 = Work::pick(set_plus(set_union(p3, odd_of(w, r.p3)), {w.c[r.u], w.co(u4)}));
        if (! x3)
            return false;
        w.c[u3] = *x3;
        return true;
    }

    /// Branch for c(u1) among u2's primes and c(u4) among u3's primes.
    auto l3_second(Work& w, const L3Roles& r, std::string& branch) -> bool
    {
        const Vertex u1 = r.n[1], u2 = r.n[2], u3 = r.n[3], u4 = r.n[4];
        // order the primes so the first carries c(u1) (resp. c(u4))
        auto lead = [&](std::array<Vertex, 3> p, Color first) {
            std::stable_partition(p.begin(), p.end(), [&](Vertex x) { return w.c[x] == first; });
            return p;
        };
        auto q2 = lead(r.p2, w.c[u1]);
        auto q3 = lead(r.p3, w.c[u4]);

        auto p2 = colours_of(w, q2), p3 = colours_of(w, q3);
        auto o2 = odd_of(w, q2), o3 = odd_of(w, q3);
        auto s8 = set_plus(set_union(p2, o2), {w.c[q3[1]], w.c[q3[2]]});
        auto avoid3 = set_union(p3, o3);

        if (s8.size() <= 7) {
            branch = "2a";
            auto x3 = Work::pick(set_plus(avoid3, {w.c[q2[1]], w.c[q2[2]]}));
            if (! x3)
                return false;
            w.c[u3] = *x3;
            auto x2 = Work::pick(set_plus(s8, {w.c[u3]}));
            if (! x2)
                return false;
            w.c[u2] = *x2;
            return l3_color_centre(w, r);
        }

        auto x2 = Work::pick(s8);
        if (! x2)
            return false;
        w.c[u2] = *x2;
        std::vector<Color> options;
        for (Color x = 1; x <= K && options.size() < 2; ++x)
            if (! set_plus(avoid3, {w.c[u2]}).contains(x))
                options.push_back(x);
        if (options.size() < 2)
            return false;

        std::set<Color> primes2{w.c[q2[1]], w.c[q2[2]]};
        for (Color x : options)
            if (! primes2.contains(x)) {
                branch = "2b-i";
                w.c[u3] = x;
                return l3_color_centre(w, r);
            }

        w.c[u3] = options[0];
        Color c2 = options[1];
        w.c[r.u] = 0;
        std::set<Color> centre_avoid{w.c[u1], w.co(u1), w.c[u2], w.c[u3], w.c[u4], w.co(u4), w.c[r.n[5]],
            w.co(r.n[5])};
        centre_avoid.erase(0);
        std::vector<Color> centre_options;
        for (Color x = 1; x <= K; ++x)
            if (! centre_avoid.contains(x))
                centre_options.push_back(x);
        if (centre_options != std::vector<Color>{c2}) {
            branch = "2b-ii";
            for (Color x : centre_options)
                if (x != c2) {
                    w.c[r.u] = x;
                    return true;
                }
            return false;
        }

        branch = "2b-iii";
        Color old_u2 = w.c[u2];
        w.c[r.u] = old_u2;
        for (Vertex p : {q3[1], q3[2]}) {
            w.c[u2] = w.c[p];
            if (w.valid())
                return true;
        }
        return false;
    }

    auto lift_l3(Work& w, const ConfigSite& site, std::string& branch) -> bool
    {
        auto r = l3_roles(site);
        w.c[r.u] = 0;
        auto p2 = colours_of(w, r.p2), p3 = colours_of(w, r.p3);
        if (! p2.contains(w.c[r.n[1]]))
            return l3_first(w, r, branch);
        if (! p3.contains(w.c[r.n[4]])) {
            bool ok = l3_first(w, r.mirrored(), branch);
            branch += "-mirror";
            return ok;
        }
        return l3_second(w, r, branch);
    }

    // ---- L7

    auto ring_pattern(const Work& w, const Figure1& f) -> HexPattern
    {
        HexPattern p{};
        for (int i = 1; i <= 6; ++i)
            p[i - 1] = w.c[f.ring[i]];
        return p;
    }

    auto l7_claim(Work& w, const Figure1& f) -> bool
    {
        std::set<Color> forbidden;
        for (int i = 1; i <= 6; ++i) {
            forbidden.insert(w.c[f.ring[i]]);
            forbidden.insert(w.bar(f.ring[i]));
        }
        forbidden.erase(0);
        auto x = Work::pick(forbidden);
        if (! x)
            return false;
        w.c[f.center] = *x;
        return true;
    }

    auto l7_case1(Work& w, const Figure1& f) -> bool
    {
        Color x;
        try {
            x = recolor_32123(w.g, w.c, f);
        } catch (const Error&) {
            return false;
        }
        w.c[f.ring[1]] = x;
        auto col = [&](int i) { return w.c[f.ring[i]]; };
        auto bar = [&](int i) { return w.bar(f.ring[i]); };
        auto y = Work::pick(set_plus({}, {bar(1), bar(3), bar(4), bar(5), col(1), col(2), col(3), col(4)}));
        if (! y)
            return false;
        w.c[f.center] = *y;
        return true;
    }

    auto l7_case6(Work& w, const Figure1& f) -> bool
    {
        const Vertex u2 = f.ring[2];
        Color old = w.c[u2];
        Color bar1 = w.bar(f.ring[1]), bar2 = w.bar(u2);
        w.c[u2] = 0;
        auto outer = f.outer_of(2);
        auto x = Work::pick(set_plus({}, {w.c[f.ring[1]], w.c[f.ring[3]], old, bar1, bar2, w.co(outer[0]),
                                             w.co(outer[1]), w.co(outer[2])}));
        if (! x)
            return false;
        w.c[u2] = *x;
        w.c[f.center] = old;
        return true;
    }

    /// Give the centre the colour of ring[i] and recolour ring[i].
    auto l7_pivot(Work& w, const Figure1& f, int i) -> bool
    {
        const Vertex ui = f.ring[i];
        Color old = w.c[ui];
        Color bar = w.bar(ui);
        w.c[ui] = 0;
        auto outer = f.outer_of(i);
        auto x = Work::pick(set_plus({}, {old, w.c[f.at(i - 1)], w.c[f.at(i + 1)], bar, w.co(outer[0]),
                                             w.co(outer[1]), w.co(outer[2])}));
        if (! x)
            return false;
        w.c[ui] = *x;
        w.c[f.center] = old;
        return true;
    }

    auto lift_l7(Work& w, const ConfigSite& site, std::string& procedure) -> std::optional<std::string>
    {
        auto f = Figure1::from_site(site);
        w.c[f.center] = 0;
        const auto start = w.c;

        auto claim = evaluate_claim(neighbor_statuses(w.g, w.c, f));
        if (claim.holds || claim.centre_colour_left) {
            procedure = "claim";
            if (l7_claim(w, f) && w.valid())
                return claim.holds ? "claim" : "claim-open-colour";
            w.c = start;
        }

        auto matches = match_cases(ring_pattern(w, f));
        if (matches.empty()) {
            procedure = "no-case";
            return std::nullopt;
        }
        const auto& m = matches.front();
        const Figure1 view = m.reflected ? f.reflected() : f;
        procedure = "case-" + std::to_string(m.case_id);
        switch (m.case_id) {
        case 1:
            if (l7_case1(w, view) && w.valid())
                return procedure;
            break;
        case 6:
            if (l7_case6(w, view) && w.valid())
                return procedure;
            break;
        case 9:
            for (int i = 1; i <= 6; ++i) {
                w.c = start;
                if (l7_pivot(w, view, i) && w.valid())
                    return procedure;
            }
            break;
        default: break;
        }
        return std::nullopt;
    }

    // ---- fallback

    auto interior(const ConfigSite& site) -> std::vector<Vertex>
    {
        const auto& r = site.roles;
        switch (site.lemma) {
        case Lemma::L1: return {r[0]};
        case Lemma::L2: return {r[0], r[1]};
        case Lemma::L3: return {r[0], r[2], r[3]};
        case Lemma::L7: return {r[0]};
        }
        return {};
    }

    auto cluster(const Graph& g, const ConfigSite& site) -> std::vector<Vertex>
    {
        if (site.lemma == Lemma::L7 || site.lemma == Lemma::L3)
            return site.roles;
        std::vector<Vertex> out;
        for (Vertex v : site.roles) {
            out.push_back(v);
            for (Vertex w : g.neighbours(v))
                out.push_back(w);
        }
        return out;
    }

    auto recolour_region(const Graph& g, std::vector<Color> base, std::span<const Vertex> region,
        const SearchBudget& budget) -> std::optional<Coloring>
    {
        for (Vertex v : region)
            base[v] = 0;
        SolveOptions options;
        options.symmetry_breaking = false;
        options.fixed = std::move(base);
        auto outcome = decide(g, K, budget, options);
        if (outcome.status == SolveStatus::Sat)
            return outcome.coloring;
        return std::nullopt;
    }
}

auto lift(const Graph& g, const ConfigSite& site, const AuxiliaryReduction& aux, const Coloring& reduced_coloring,
    const LiftOptions& options) -> LiftReport
{
    if (static_cast<int>(aux.to_reduced.size()) != g.order()
            || static_cast<int>(reduced_coloring.colors.size()) != aux.reduced.order())
        throw Error(ErrorCode::PreconditionViolated, "colouring does not fit the auxiliary graph");
    for (Color x : reduced_coloring.colors)
        if (x < 1 || x > K)
            throw Error(ErrorCode::PreconditionViolated, "colours must lie in 1..9");
    if (! is_odd_coloring(aux.reduced, reduced_coloring.colors))
        throw Error(ErrorCode::PreconditionViolated, "not an odd colouring of the auxiliary graph");
    validate_site(g, site);

    Work w{g, std::vector<Color>(g.order(), 0)};
    for (Vertex v = 0; v < g.order(); ++v)
        if (aux.to_reduced[v] >= 0)
            w.c[v] = reduced_coloring.colors[aux.to_reduced[v]];
    const auto restricted = w.c;

    LiftReport report{site.lemma, "", "", false, false, {}};
    std::optional<std::string> path;
    switch (site.lemma) {
    case Lemma::L1:
        report.procedure = "rule";
        if (lift_l1(w, site) && w.valid())
            path = "rule";
        break;
    case Lemma::L2:
        report.procedure = "restriction";
        if (w.valid())
            path = "restriction";
        break;
    case Lemma::L3: {
        std::string branch;
        bool ok = lift_l3(w, site, branch);
        report.procedure = "case-" + branch;
        if (ok && w.valid())
            path = report.procedure;
        break;
    }
    case Lemma::L7: path = lift_l7(w, site, report.procedure); break;
    }

    if (path) {
        report.path = *path;
        report.by_procedure = true;
        report.valid = true;
        report.coloring = Coloring::make(K, w.c);
        return report;
    }

    if (auto c = recolour_region(g, restricted, interior(site), options.fallback_budget)) {
        report.path = "fallback-interior";
        report.valid = true;
        report.coloring = std::move(*c);
        return report;
    }
    if (auto c = recolour_region(g, restricted, cluster(g, site), options.fallback_budget)) {
        report.path = "fallback-cluster";
        report.valid = true;
        report.coloring = std::move(*c);
        return report;
    }
    report.path = "unliftable";
    report.coloring.k = K;
    report.coloring.colors = restricted;
    return report;
}

}  // namespace oddcol
