#include "oddcol/reductions.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace oddcol {

auto to_string(AbstractLemma lemma) -> std::string_view
{
    return lemma == AbstractLemma::L1234 ? "L1234" : "L42123";
}

auto parse_abstract_lemma(std::string_view text) -> std::optional<AbstractLemma>
{
    if (text == "L1234")
        return AbstractLemma::L1234;
    if (text == "L42123")
        return AbstractLemma::L42123;
    return std::nullopt;
}

namespace {
    // Model ids: 0 = u, i = u_i, 6 + j = v_j.
    auto ring(int i) -> int { return i; }
    auto outer(int j) -> int { return 6 + j; }

    auto model_name(int id) -> std::string
    {
        return id <= 6 ? "u" + std::to_string(id) : "v" + std::to_string(id - 6);
    }

    struct Statement {
        std::vector<int> order;               // model ids in enumeration order
        std::vector<std::pair<int, int>> equal;
        std::vector<int> distinct;            // pairwise distinct colours
        std::vector<int> unique_odd;          // vertices with exactly one odd colour in G - u
        std::vector<int> unique_of_interest;  // whose unique odd colour the conclusion counts
        std::vector<int> excluded;            // colours the conclusion removes
        int limit;                            // at most this many distinct survivors
    };

    auto statement(AbstractLemma lemma) -> Statement
    {
        if (lemma == AbstractLemma::L1234)
            return {{ring(1), ring(2), ring(3), ring(6), outer(12), outer(1), outer(2), outer(3), outer(4)},
                {},
                {ring(1), ring(2), ring(3), ring(6)},
                {ring(1), ring(2)},
                {ring(1), ring(2)},
                {ring(1), ring(2), ring(3), ring(6)},
                1};
        return {{ring(1), ring(2), ring(3), ring(5), ring(6), outer(12), outer(1), outer(2), outer(3), outer(4),
                    outer(10), outer(11)},
            {{ring(2), ring(6)}},
            {ring(1), ring(2), ring(3), ring(5)},
            {ring(1), ring(2), ring(6)},
            {ring(1), ring(2), ring(6)},
            {ring(1), ring(2), ring(3), ring(5)},
            2};
    }

    struct OutOfBudget {};

    class Auditor {
    public:
        Auditor(const Statement& s, const SearchBudget& budget, bool negate)
            : s_(s), budget_(budget), negate_(negate), start_(std::chrono::steady_clock::now())
        {
            auto model = figure1_model();
            const int m = static_cast<int>(s.order.size());
            std::vector<int> slot(19, -1);
            for (int i = 0; i < m; ++i)
                slot[s.order[i]] = i;
            nbrs_.resize(m);
            checks_at_.resize(m);
            for (int i = 0; i < m; ++i) {
                int a = s.order[i];
                for (Vertex b : model.neighbours(a))
                    if (b != 0 && slot[b] >= 0)
                        nbrs_[i].push_back(slot[b]);
            }
            for (int x : s.unique_odd) {
                // every G - u neighbour of x must be enumerated
                int last = slot[x];
                for (Vertex b : model.neighbours(x))
                    if (b != 0)
                        last = std::max(last, slot[b]);
                checks_at_[last].push_back(slot[x]);
            }
            for (auto [a, b] : s.equal)
                equal_.emplace_back(slot[a], slot[b]);
            for (int x : s.distinct)
                distinct_.push_back(slot[x]);
            for (int x : s.unique_of_interest)
                interest_.push_back(slot[x]);
            for (int x : s.excluded)
                excluded_.push_back(slot[x]);
            colors_.assign(m, 0);
        }

        auto run() -> AuditVerdict
        {
            AuditVerdict v{};
            try {
                found_ = search(0, 0);
                v.verdict = found_ ? Verdict::Counterexample : Verdict::Holds;
            } catch (const OutOfBudget&) {
                v.verdict = Verdict::Budget;
            }
            if (found_)
                for (std::size_t i = 0; i < colors_.size(); ++i)
                    v.witness.emplace_back(model_name(s_.order[i]), colors_[i]);
            v.states = leaves_;
            return v;
        }

    private:
        auto unique_odd(int i) const -> Color
        {
            std::array<int, reduction_palette + 1> count{};
            for (int j : nbrs_[i])
                ++count[colors_[j]];
            Color found = 0;
            int odd = 0;
            for (Color c = 1; c <= reduction_palette; ++c)
                if (count[c] % 2 == 1) {
                    ++odd;
                    found = c;
                }
            return odd == 1 ? found : 0;
        }

        auto consistent(int i) const -> bool
        {
            for (int j : nbrs_[i])
                if (j < i && colors_[j] == colors_[i])
                    return false;
            for (auto [a, b] : equal_)
                if (std::max(a, b) == i && colors_[a] != colors_[b])
                    return false;
            for (int a : distinct_)
                if (a < i && std::find(distinct_.begin(), distinct_.end(), i) != distinct_.end()
                        && colors_[a] == colors_[i])
                    return false;
            for (int x : checks_at_[i])
                if (unique_odd(x) == 0)
                    return false;
            return true;
        }

        auto conclusion() const -> bool
        {
            std::set<Color> survivors;
            for (int x : interest_)
                survivors.insert(unique_odd(x));
            for (int x : excluded_)
                survivors.erase(colors_[x]);
            bool holds = static_cast<int>(survivors.size()) <= s_.limit;
            return negate_ ? ! holds : holds;
        }

        void tick()
        {
            ++nodes_;
            if (nodes_ > budget_.max_nodes)
                throw OutOfBudget{};
            if ((nodes_ & 0xFFF) == 0) {
                std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
                if (elapsed.count() > budget_.max_seconds)
                    throw OutOfBudget{};
            }
        }

        /// True once a counterexample sits in colors_.
        auto search(int i, Color used) -> bool
        {
            if (i == static_cast<int>(colors_.size())) {
                ++leaves_;
                return ! conclusion();
            }
            Color top = std::min(used + 1, reduction_palette);
            for (Color c = 1; c <= top; ++c) {
                tick();
                colors_[i] = c;
                if (consistent(i) && search(i + 1, std::max(used, c)))
                    return true;
            }
            colors_[i] = 0;
            return false;
        }

        const Statement& s_;
        SearchBudget budget_;
        bool negate_;
        std::chrono::steady_clock::time_point start_;
        std::vector<std::vector<int>> nbrs_;
        std::vector<std::vector<int>> checks_at_;
        std::vector<std::pair<int, int>> equal_;
        std::vector<int> distinct_, interest_, excluded_;
        std::vector<Color> colors_;
        long nodes_ = 0;
        long leaves_ = 0;
        bool found_ = false;
    };
}

auto audit_abstract(AbstractLemma lemma, const SearchBudget& budget, const AuditOptions& options) -> AuditVerdict
{
    auto s = statement(lemma);
    Auditor auditor(s, budget, options.negate_conclusion);
    auto verdict = auditor.run();
    verdict.lemma = lemma;
    return verdict;
}

}  // namespace oddcol
