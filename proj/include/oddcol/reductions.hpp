#pragma once

#include "oddcol/coloring.hpp"
#include "oddcol/embedding.hpp"
#include "oddcol/graph.hpp"
#include "oddcol/solver.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oddcol {

/// Palette the reducible configurations are stated for.
inline constexpr int reduction_palette = 9;

enum class Lemma {
    L1,  ///< vertex of degree <= 4
    L2,  ///< two adjacent odd-degree vertices
    L3,  ///< 5-vertex with two consecutive 6-neighbours on triangles
    L7,  ///< cluster of 19 special 6-vertices
};

auto to_string(Lemma lemma) -> std::string_view;
auto parse_lemma(std::string_view text) -> std::optional<Lemma>;

/// A located configuration. Role layout of `roles` per lemma:
///   L1: [v, v1, ..., vd] (neighbours in rotation order, or ascending ids
///       for a plain graph)
///   L2: [u, v] with u < v
///   L3: [u, u1..u5, u2', u2'', u2''', u3', u3'', u3''']
///   L7: [u, u1..u6, v1..v12]
struct ConfigSite {
    Lemma lemma;
    std::vector<Vertex> roles;

    friend auto operator==(const ConfigSite&, const ConfigSite&) -> bool = default;
};

/// Named view of an L7 site. Indices are 1-based to match the figure:
/// ring[1..6] are the neighbours of the centre in rotation order and
/// outer[1..12] the second ring, outer[2i] shared by ring[i] and ring[i+1].
struct Figure1 {
    Vertex center = -1;
    std::array<Vertex, 7> ring{};
    std::array<Vertex, 13> outer{};

    static auto from_site(const ConfigSite& site) -> Figure1;
    /// Reflection fixing ring[1]: ring[i] <-> ring[8-i], outer[j] <-> outer[2-j mod 12].
    [[nodiscard]] auto reflected() const -> Figure1;
    /// ring index taken cyclically (0 -> 6, 7 -> 1).
    [[nodiscard]] auto at(int i) const -> Vertex { return ring[((i - 1) % 6 + 6) % 6 + 1]; }
    /// The three outer neighbours of ring[i]: outer[2i-2], outer[2i-1], outer[2i].
    [[nodiscard]] auto outer_of(int i) const -> std::array<Vertex, 3>;
};

/// The abstract 19-vertex cluster: 0 = centre, 1..6 = ring, 7..18 = v1..v12.
auto figure1_model() -> Graph;

/// Degree 6 and all six incident faces triangles.
auto is_special6(const EmbeddedGraph& e, const FaceSet& faces, Vertex v) -> bool;
auto is_special6(const EmbeddedGraph& e, Vertex v) -> bool;

/// All sites of the given lemma. L3 and L7 need face information and throw
/// NeedsEmbedding on a plain graph. L7 sites take ring[1] as the first
/// entry of the centre's rotation, so there is at most one site per centre.
auto detect_sites(const Graph& g, Lemma lemma) -> std::vector<ConfigSite>;
auto detect_sites(const EmbeddedGraph& e, Lemma lemma) -> std::vector<ConfigSite>;

/// Throws StaleSite unless `site` still describes the graph.
auto validate_site(const Graph& g, const ConfigSite& site) -> void;
auto validate_site(const EmbeddedGraph& e, const ConfigSite& site) -> void;

struct AuxiliaryReduction {
    Graph reduced;
    /// Ids (in `reduced`) of the new degree-2 vertices.
    std::vector<Vertex> added;
    /// original id -> reduced id, -1 for deleted vertices
    std::vector<Vertex> to_reduced;
    /// reduced id -> original id, -1 for added vertices
    std::vector<Vertex> to_original;
};

/// Builds the auxiliary graph G' of the site's lemma:
///   L1: G - v plus 2-vertices on v1v2, v2v3, v3v1 (fewer for degree < 4)
///   L2: edge uv subdivided by a 2-vertex w
///   L3: G - {u2, u3} plus the missing edges inside each primed triple
///   L7: G - u plus 2-vertex paths u1-u3, u1-u4, u1-u5
/// Validates the site first (StaleSite).
auto build_reduction(const Graph& g, const ConfigSite& site) -> AuxiliaryReduction;
auto build_reduction(const EmbeddedGraph& e, const ConfigSite& site) -> AuxiliaryReduction;

/// Status of a ring neighbour of the centre, computed with the centre uncoloured.
struct NeighborStatus {
    enum class Kind { Free, Unique, Other };
    Color color = 0;
    Kind kind = Kind::Other;
    /// Valid when kind == Unique.
    Color unique_color = 0;
};

auto neighbor_statuses(const Graph& g, std::span<const Color> colors, const Figure1& roles) -> std::array<NeighborStatus, 6>;

struct ClaimResult {
    bool holds = false;
    bool first_condition = false;
    bool second_condition = false;
    /// Number of distinct ring colours.
    int distinct_colors = 0;
    /// Some colour avoids every ring colour and every unique odd colour.
    /// Implied by `holds`; its negation is what the case analysis assumes.
    bool centre_colour_left = false;
};

/// With k distinct ring colours: holds if at least k-2 ring vertices are
/// free or have their unique odd colour among the ring colours, or if
/// fewer than 9-k distinct unique odd colours occur on the ring.
auto evaluate_claim(std::span<const NeighborStatus, 6> statuses) -> ClaimResult;
auto check_claim(std::span<const NeighborStatus, 6> statuses) -> bool;

/// New colour for ring[1] making ring[2] and ring[6] free, for a colouring
/// of G - centre (the centre's entry is ignored). Throws HypothesisViolated
/// when the colouring does not have the required shape and EmptyChoiceSet
/// if all nine colours are forbidden.
auto recolor_32123(const Graph& g, std::span<const Color> colors, const Figure1& roles) -> Color;

// Hexagon patterns and the case table of the cluster argument.

using HexPattern = std::array<Color, 6>;

/// Rename colours by first occurrence.
auto rename_by_first_use(const HexPattern& p) -> HexPattern;
/// p read with ring[2] <-> ring[6], ring[3] <-> ring[5] swapped.
auto reflect(const HexPattern& p) -> HexPattern;
/// Lexicographically least of the renamed pattern and its renamed reflection.
auto canonical_pattern(const HexPattern& p) -> HexPattern;

struct CaseHeader {
    int case_id;
    HexPattern pattern;
};

/// Case headers as written, colours of ring[1..6] (Case 2 has two).
auto case_headers() -> std::span<const CaseHeader>;

struct CaseMatch {
    int case_id;
    HexPattern header;
    /// True when the ring must be read reflected to line up with the header.
    bool reflected;
};

/// Every header that `p` matches up to reflection and renaming.
auto match_cases(const HexPattern& p) -> std::vector<CaseMatch>;

struct CoverageVerdict {
    bool covered = false;
    /// Canonical patterns and the case ids matching them.
    std::vector<std::pair<HexPattern, std::vector<int>>> table;
    std::vector<HexPattern> uncovered;
    std::vector<HexPattern> ambiguous;
};

/// Enumerates proper hexagon colourings with c(u1) outside {c(u3), c(u4),
/// c(u5)} up to reflection and renaming, and matches each to the cases.
auto case_coverage() -> CoverageVerdict;

// Lifting colourings of G' back to G.

struct LiftOptions {
    /// Budget for each fallback stage.
    SearchBudget fallback_budget{20'000'000L, 120.0};
};

struct LiftReport {
    Lemma lemma;
    /// Step that produced the colouring: "rule", "restriction", "claim",
    /// "case-1", "case-6", "case-9", "case-1a", ..., "fallback-interior",
    /// "fallback-cluster" or "unliftable".
    std::string path;
    /// Procedure branch attempted before any fallback.
    std::string procedure;
    /// True when the procedure alone gave a valid colouring.
    bool by_procedure = false;
    bool valid = false;
    Coloring coloring;
};

/// Turns an odd 9-colouring of G' into one of G. Throws
/// PreconditionViolated when `reduced_coloring` is not a valid odd
/// colouring of G' with colours in 1..9. An instance even the fallback
/// cannot colour is reported with path "unliftable" and valid == false.
auto lift(const Graph& g, const ConfigSite& site, const AuxiliaryReduction& aux, const Coloring& reduced_coloring,
    const LiftOptions& options = {}) -> LiftReport;

// Exhaustive audits of the colour-combinatorics lemmas.

enum class AbstractLemma { L1234, L42123 };

auto to_string(AbstractLemma lemma) -> std::string_view;
auto parse_abstract_lemma(std::string_view text) -> std::optional<AbstractLemma>;

enum class Verdict { Holds, Counterexample, Budget };

struct AuditVerdict {
    AbstractLemma lemma;
    Verdict verdict = Verdict::Budget;
    /// Role name -> colour for the lexicographically least counterexample.
    std::vector<std::pair<std::string, Color>> witness;
    long states = 0;
};

struct AuditOptions {
    /// Test harness mode: check the negated conclusion instead.
    bool negate_conclusion = false;
};

auto audit_abstract(AbstractLemma lemma, const SearchBudget& budget = {600'000'000'000L, 600.0},
    const AuditOptions& options = {}) -> AuditVerdict;

}  // namespace oddcol
