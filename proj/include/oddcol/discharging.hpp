#pragma once

#include "oddcol/embedding.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace oddcol {

/// Charges are integers counted in eighths.
inline constexpr long charge_unit = 8;

enum class Rule { R1, R2 };

auto to_string(Rule rule) -> std::string_view;

/// R1 moves charge from a face to a vertex, R2 from a vertex to a vertex.
struct Transfer {
    Rule rule;
    int from;
    Vertex to;
    long amount;

    friend auto operator==(const Transfer&, const Transfer&) -> bool = default;
    friend auto operator<=>(const Transfer&, const Transfer&) = default;
};

struct ChargeLedger {
    std::vector<long> vertices;
    std::vector<long> faces;
    /// Sorted by rule, then source, then target.
    std::vector<Transfer> transfers;

    [[nodiscard]] auto sum() const -> long;

    friend auto operator==(const ChargeLedger&, const ChargeLedger&) -> bool = default;
};

/// 8(d(v) - 6) per vertex and 8(2d(f) - 6) per face, no transfers.
auto initial_charges(const EmbeddedGraph& e, const FaceSet& faces) -> ChargeLedger;
auto initial_charges(const EmbeddedGraph& e) -> ChargeLedger;

/// Applies R1 (each 4+-face pays 8 to each incident 5-vertex, once per
/// boundary occurrence) and R2 (each 8+-vertex pays 3 to each adjacent
/// 5-vertex whose shared edge lies on two 3-faces) to `initial`.
auto fire_rules(const EmbeddedGraph& e, const FaceSet& faces, const ChargeLedger& initial) -> ChargeLedger;
auto fire_rules(const EmbeddedGraph& e, const ChargeLedger& initial) -> ChargeLedger;

/// Applies `transfers` to the charges of `initial`.
auto replay(const ChargeLedger& initial, const std::vector<Transfer>& transfers) -> ChargeLedger;

struct ElementRef {
    enum class Kind { Vertex, Face };
    Kind kind;
    int id;
    long charge;

    friend auto operator==(const ElementRef&, const ElementRef&) -> bool = default;
};

struct StructureProfile {
    bool has_5_vertex = false;
    bool has_7plus_vertex = false;
    bool has_4plus_face = false;
    /// degree -> count
    std::map<int, int> vertex_degrees;
    std::map<int, int> face_degrees;
    bool only_6_vertices_and_3_faces = false;
};

struct AuditReport {
    long initial_sum = 0;
    long final_sum = 0;
    /// -48 (V + F - E), the value the Euler formula predicts in eighths.
    long euler_sum = 0;
    bool sum_ok = false;
    std::vector<ElementRef> negative;
    std::vector<ElementRef> positive;
    StructureProfile profile;
    /// Minimum degree at least 5, no two adjacent odd-degree vertices and
    /// no L3 site.
    bool lemma_regime = false;
    std::vector<std::string> findings;
};

auto structure_profile(const EmbeddedGraph& e, const FaceSet& faces) -> StructureProfile;

/// Reports on a final ledger. Never throws on odd-looking ledgers; anything
/// unexpected goes to `findings`.
auto audit(const EmbeddedGraph& e, const ChargeLedger& final_ledger) -> AuditReport;

}  // namespace oddcol
