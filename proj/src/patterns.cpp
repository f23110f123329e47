#include "oddcol/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace oddcol {

auto rename_by_first_use(const HexPattern& p) -> HexPattern
{
    std::map<Color, Color> names;
    HexPattern out{};
    for (int i = 0; i < 6; ++i) {
        auto [it, fresh] = names.try_emplace(p[i], static_cast<Color>(names.size()) + 1);
        out[i] = it->second;
    }
    return out;
}

auto reflect(const HexPattern& p) -> HexPattern
{
    return {p[0], p[5], p[4], p[3], p[2], p[1]};
}

auto canonical_pattern(const HexPattern& p) -> HexPattern
{
    return std::min(rename_by_first_use(p), rename_by_first_use(reflect(p)));
}

auto case_headers() -> std::span<const CaseHeader>
{
    static const std::array<CaseHeader, 10> headers{{
        {1, {1, 2, 3, 2, 3, 2}},
        {2, {1, 2, 3, 4, 3, 2}},
        {2, {1, 3, 2, 4, 3, 2}},
        {3, {1, 2, 3, 2, 4, 2}},
        {4, {1, 3, 2, 3, 4, 2}},
        {5, {1, 2, 3, 5, 4, 2}},
        {6, {1, 3, 2, 5, 4, 2}},
        {7, {1, 3, 4, 5, 4, 2}},
        {8, {1, 3, 4, 2, 5, 2}},
        {9, {1, 2, 3, 4, 5, 6}},
    }};
    return headers;
}

auto match_cases(const HexPattern& p) -> std::vector<CaseMatch>
{
    auto direct = rename_by_first_use(p);
    auto mirrored = rename_by_first_use(reflect(p));
    std::vector<CaseMatch> out;
    for (const auto& h : case_headers()) {
        auto target = rename_by_first_use(h.pattern);
        if (direct == target)
            out.push_back({h.case_id, h.pattern, false});
        else if (mirrored == target)
            out.push_back({h.case_id, h.pattern, true});
    }
    return out;
}

auto case_coverage() -> CoverageVerdict
{
    std::set<HexPattern> canonical;
    HexPattern p{};
    p[0] = 1;
    // first-use colourings of u2..u6; colour of u_i is at most 1 + max so far
    auto extend = [&](auto&& self, int i, Color used) -> void {
        if (i == 6) {
            if (p[5] != p[0] && p[0] != p[2] && p[0] != p[3] && p[0] != p[4])
                canonical.insert(canonical_pattern(p));
            return;
        }
        for (Color c = 1; c <= used + 1; ++c) {
            if (c == p[i - 1])
                continue;
            p[i] = c;
            self(self, i + 1, std::max(used, c));
        }
    };
    extend(extend, 1, 1);

    CoverageVerdict verdict;
    for (const auto& pattern : canonical) {
        std::set<int> ids;
        for (const auto& m : match_cases(pattern))
            ids.insert(m.case_id);
        verdict.table.emplace_back(pattern, std::vector<int>(ids.begin(), ids.end()));
        if (ids.empty())
            verdict.uncovered.push_back(pattern);
        else if (ids.size() > 1)
            verdict.ambiguous.push_back(pattern);
    }
    verdict.covered = verdict.uncovered.empty() && verdict.ambiguous.empty();
    return verdict;
}

}  // namespace oddcol
