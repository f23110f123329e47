#pragma once

#include "oddcol/coloring.hpp"
#include "oddcol/graph.hpp"

#include <optional>
#include <vector>

namespace oddcol {

/// Limits on a search; exceeding either yields SolveStatus::Budget.
struct SearchBudget {
    long max_nodes = 2'000'000'000L;
    double max_seconds = 3600.0;
};

enum class SolveStatus { Sat, Unsat, Budget };

struct SolveOutcome {
    SolveStatus status = SolveStatus::Budget;
    std::optional<Coloring> coloring;
    long nodes = 0;
};

struct SolveOptions {
    /// Colour j+1 may only be introduced after colour j has been used.
    bool symmetry_breaking = true;
    /// Optional precolouring, one entry per vertex, 0 meaning free. A
    /// non-empty precolouring switches symmetry breaking off.
    std::vector<Color> fixed;
};

/// Exact decision: does g have an odd colouring with at most k colours?
///
/// Depth-first search over vertices in degeneracy order (smallest-last,
/// ties by id), colours ascending. Prunes a branch when an assignment is
/// improper or when some non-isolated vertex has its whole neighbourhood
/// coloured with every colour appearing an even number of times.
/// Deterministic for fixed inputs. Throws BadPalette when k < 1.
auto decide(const Graph& g, int k, const SearchBudget& budget = {}, const SolveOptions& options = {}) -> SolveOutcome;

/// Order used by `decide`.
auto degeneracy_order(const Graph& g) -> std::vector<Vertex>;

struct ChiOutcome {
    /// Empty when the budget ran out.
    std::optional<int> chi;
    std::optional<Coloring> witness;
    long nodes = 0;
};

/// Smallest k with an odd k-colouring, trying k = 1, 2, ... in turn. The
/// budget covers the whole run. The null graph has chi = 0.
auto chi_odd(const Graph& g, const SearchBudget& budget = {}) -> ChiOutcome;

/// Plain enumeration of all k^n assignments (rejecting a partial
/// assignment only once it is improper). Independent check for `decide`.
/// Throws TooLarge for n > 8 and BadPalette for k < 1.
auto oracle_decide(const Graph& g, int k) -> bool;

struct GreedyOutcome {
    int k = 0;
    Coloring coloring;
};

/// Cheap upper bound: greedy colouring avoiding neighbour colours and
/// neighbours' unique odd colours, then repaired until it validates. The
/// returned colouring is always a valid odd colouring with colours 1..k.
auto greedy_bound(const Graph& g) -> GreedyOutcome;

}  // namespace oddcol
