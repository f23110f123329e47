#include "oddcol/solver.hpp"

#include "oddcol/error.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <string>

namespace oddcol {

auto degeneracy_order(const Graph& g) -> std::vector<Vertex>
{
    int n = g.order();
    std::vector<int> degree(n);
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        queue.emplace(degree[v], v);
    }
    std::vector<char> removed(n, 0);
    std::vector<Vertex> elimination;
    elimination.reserve(n);
    while (! queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = 1;
        elimination.push_back(v);
        for (Vertex w : g.neighbours(v))
            if (! removed[w]) {
                queue.erase({degree[w], w});
                queue.emplace(--degree[w], w);
            }
    }
    std::reverse(elimination.begin(), elimination.end());
    return elimination;
}

namespace {
    using Clock = std::chrono::steady_clock;

    class Search {
    public:
        Search(const Graph& g, int k, long max_nodes, Clock::time_point deadline, bool symmetry_breaking) :
            g_(g), k_(k), max_nodes_(max_nodes), deadline_(deadline), symmetry_breaking_(symmetry_breaking),
            color_(g.order(), 0), count_(static_cast<std::size_t>(g.order()) * (k + 1), 0),
            odd_(g.order(), 0), uncoloured_(g.order(), 0)
        {
            for (Vertex v = 0; v < g.order(); ++v)
                uncoloured_[v] = g.degree(v);
        }

        // Returns false if the precolouring already violates a constraint.
        auto precolour(const std::vector<Color>& fixed) -> bool
        {
            bool ok = true;
            for (Vertex v = 0; v < g_.order(); ++v)
                if (fixed[v] != 0) {
                    if (fixed[v] < 1 || fixed[v] > k_)
                        throw Error(ErrorCode::BadPalette, "precoloured vertex " + std::to_string(v) + " outside palette");
                    if (count_[index(v, fixed[v])] != 0)
                        ok = false;
                    if (! assign(v, fixed[v]))
                        ok = false;
                }
            return ok;
        }

        auto run(std::vector<Vertex> order) -> SolveStatus
        {
            order.erase(std::remove_if(order.begin(), order.end(), [&](Vertex v) { return color_[v] != 0; }), order.end());
            order_ = std::move(order);
            for (Color c : color_)
                max_used_ = std::max(max_used_, c);
            try {
                return dfs(0) ? SolveStatus::Sat : SolveStatus::Unsat;
            }
            catch (const OutOfBudget&) {
                return SolveStatus::Budget;
            }
        }

        [[nodiscard]] auto colours() const -> const std::vector<Color>& { return color_; }
        [[nodiscard]] auto nodes() const -> long { return nodes_; }

    private:
        struct OutOfBudget {};

        auto index(Vertex v, Color c) const -> std::size_t { return static_cast<std::size_t>(v) * (k_ + 1) + c; }

        auto complete_and_even(Vertex w) const -> bool
        {
            return uncoloured_[w] == 0 && odd_[w] == 0 && g_.degree(w) > 0;
        }

        // Applies v := c and reports whether the odd-set prune stays quiet.
        auto assign(Vertex v, Color c) -> bool
        {
            color_[v] = c;
            bool ok = true;
            for (Vertex w : g_.neighbours(v)) {
                int& cnt = count_[index(w, c)];
                ++cnt;
                odd_[w] += (cnt % 2 == 1) ? 1 : -1;
                --uncoloured_[w];
                if (complete_and_even(w))
                    ok = false;
            }
            if (complete_and_even(v))
                ok = false;
            return ok;
        }

        auto unassign(Vertex v) -> void
        {
            Color c = color_[v];
            for (Vertex w : g_.neighbours(v)) {
                int& cnt = count_[index(w, c)];
                --cnt;
                odd_[w] += (cnt % 2 == 1) ? 1 : -1;
                ++uncoloured_[w];
            }
            color_[v] = 0;
        }

        auto tick() -> void
        {
            ++nodes_;
            if (nodes_ > max_nodes_)
                throw OutOfBudget{};
            if ((nodes_ & 4095) == 0 && Clock::now() > deadline_)
                throw OutOfBudget{};
        }

        auto dfs(std::size_t depth) -> bool
        {
            if (depth == order_.size())
                return true;
            Vertex v = order_[depth];
            int limit = symmetry_breaking_ ? std::min(k_, max_used_ + 1) : k_;
            for (Color c = 1; c <= limit; ++c) {
                if (count_[index(v, c)] != 0)
                    continue;
                tick();
                int saved_max = max_used_;
                max_used_ = std::max(max_used_, c);
                bool ok = assign(v, c);
                if (ok && dfs(depth + 1))
                    return true;
                unassign(v);
                max_used_ = saved_max;
            }
            return false;
        }

        const Graph& g_;
        int k_;
        long max_nodes_;
        Clock::time_point deadline_;
        bool symmetry_breaking_;
        std::vector<Color> color_;
        std::vector<int> count_;
        std::vector<int> odd_;
        std::vector<int> uncoloured_;
        std::vector<Vertex> order_;
        int max_used_ = 0;
        long nodes_ = 0;
    };

    auto deadline_for(const SearchBudget& budget) -> Clock::time_point
    {
        auto seconds = std::chrono::duration<double>(std::max(0.0, budget.max_seconds));
        return Clock::now() + std::chrono::duration_cast<Clock::duration>(seconds);
    }

    auto decide_until(const Graph& g, int k, long max_nodes, Clock::time_point deadline, const SolveOptions& options)
        -> SolveOutcome
    {
        if (k < 1)
            throw Error(ErrorCode::BadPalette, "palette size must be at least 1");
        bool has_fixed = ! options.fixed.empty();
        if (has_fixed && static_cast<int>(options.fixed.size()) != g.order())
            throw Error(ErrorCode::SizeMismatch, "precolouring size differs from the vertex count");

        Search search(g, k, max_nodes, deadline, options.symmetry_breaking && ! has_fixed);
        SolveOutcome outcome;
        if (has_fixed && ! search.precolour(options.fixed)) {
            outcome.status = SolveStatus::Unsat;
            return outcome;
        }
        outcome.status = search.run(degeneracy_order(g));
        outcome.nodes = search.nodes();
        if (outcome.status == SolveStatus::Sat)
            outcome.coloring = Coloring::make(k, search.colours());
        return outcome;
    }
}

auto decide(const Graph& g, int k, const SearchBudget& budget, const SolveOptions& options) -> SolveOutcome
{
    return decide_until(g, k, budget.max_nodes, deadline_for(budget), options);
}

auto chi_odd(const Graph& g, const SearchBudget& budget) -> ChiOutcome
{
    ChiOutcome result;
    if (g.order() == 0) {
        result.chi = 0;
        return result;
    }
    auto deadline = deadline_for(budget);
    for (int k = 1; k <= g.order(); ++k) {
        auto outcome = decide_until(g, k, budget.max_nodes - result.nodes, deadline, {});
        result.nodes += outcome.nodes;
        if (outcome.status == SolveStatus::Budget)
            return result;
        if (outcome.status == SolveStatus::Sat) {
            result.chi = k;
            result.witness = std::move(outcome.coloring);
            return result;
        }
    }
    // Unreachable: n distinct colours always form an odd colouring.
    throw Error(ErrorCode::PreconditionViolated, "no odd colouring with n colours");
}

auto oracle_decide(const Graph& g, int k) -> bool
{
    if (k < 1)
        throw Error(ErrorCode::BadPalette, "palette size must be at least 1");
    if (g.order() > 8)
        throw Error(ErrorCode::TooLarge, "oracle limited to 8 vertices");

    int n = g.order();
    std::vector<Color> colors(n, 0);
    // Iterative odometer over all k^n assignments in vertex-id order.
    auto consistent = [&](Vertex v) {
        for (Vertex u : g.neighbours(v))
            if (u < v && colors[u] == colors[v])
                return false;
        return true;
    };
    Vertex v = 0;
    while (v >= 0) {
        if (v == n) {
            if (is_odd_coloring(g, colors))
                return true;
            --v;
            continue;
        }
        if (colors[v] == k) {
            colors[v] = 0;
            --v;
            continue;
        }
        ++colors[v];
        if (consistent(v))
            ++v;
    }
    return false;
}

namespace {
    auto even_vertex(const Graph& g, const std::vector<Color>& colors, Vertex v) -> bool
    {
        return g.degree(v) > 0 && odd_colors(g, colors, v).empty();
    }
}

auto greedy_bound(const Graph& g) -> GreedyOutcome
{
    int n = g.order();
    if (n == 0)
        return {0, Coloring{0, {}}};

    std::vector<Color> colors(n, 0);
    for (Vertex v : degeneracy_order(g)) {
        std::set<Color> forbidden;
        for (Vertex u : g.neighbours(v)) {
            if (colors[u] == 0)
                continue;
            forbidden.insert(colors[u]);
            auto odd = odd_colors(g, colors, u);
            if (odd.size() == 1)
                forbidden.insert(odd.front());
        }
        Color c = 1;
        while (forbidden.contains(c))
            ++c;
        colors[v] = c;
    }

    // Repair: every step fixes the chosen even vertex and breaks nothing,
    // since only the neighbours of the recoloured vertex are re-examined.
    for (;;) {
        Vertex bad = -1;
        for (Vertex v = 0; v < n && bad == -1; ++v)
            if (even_vertex(g, colors, v))
                bad = v;
        if (bad == -1)
            break;

        Color max_colour = *std::max_element(colors.begin(), colors.end());
        bool repaired = false;
        for (Vertex w : g.neighbours(bad)) {
            Color original = colors[w];
            for (Color c = 1; c <= max_colour && ! repaired; ++c) {
                if (c == original)
                    continue;
                bool proper = std::none_of(g.neighbours(w).begin(), g.neighbours(w).end(),
                    [&](Vertex x) { return colors[x] == c; });
                if (! proper)
                    continue;
                colors[w] = c;
                repaired = std::none_of(g.neighbours(w).begin(), g.neighbours(w).end(),
                    [&](Vertex x) { return even_vertex(g, colors, x); });
                if (! repaired)
                    colors[w] = original;
            }
            if (repaired)
                break;
        }
        if (! repaired)
            colors[g.neighbours(bad).front()] = max_colour + 1;
    }

    // Relabel to 1..k by first appearance.
    std::vector<Color> relabel(*std::max_element(colors.begin(), colors.end()) + 1, 0);
    int k = 0;
    for (Color& c : colors) {
        if (relabel[c] == 0)
            relabel[c] = ++k;
        c = relabel[c];
    }
    return {k, Coloring::make(k, std::move(colors))};
}

}  // namespace oddcol
