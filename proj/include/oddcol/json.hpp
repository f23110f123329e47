#pragma once

#include "oddcol/coloring.hpp"
#include "oddcol/discharging.hpp"
#include "oddcol/embedding.hpp"
#include "oddcol/reductions.hpp"
#include "oddcol/solver.hpp"

#include <json.hpp>

namespace oddcol {

using Json = nlohmann::ordered_json;

auto to_json(const Coloring& c) -> Json;
auto to_json(const ValidationReport& r) -> Json;
auto to_json(const SolveOutcome& o) -> Json;
auto to_json(const LiftReport& r) -> Json;
auto to_json(const AuditVerdict& v) -> Json;
auto to_json(const ChargeLedger& ledger) -> Json;
auto to_json(const AuditReport& r) -> Json;
auto to_json(const CoverageVerdict& v) -> Json;
auto to_json(const EmbeddedGraph& e, const FaceSet& faces) -> Json;

/// Reads {"n", "k", "colors"} or a bare array of colours. Throws
/// MalformedInput on anything else.
auto coloring_from_json(std::string_view text) -> Coloring;

}  // namespace oddcol
