#include "oddcol/json.hpp"

#include "oddcol/error.hpp"

#include <algorithm>

namespace oddcol {

namespace {
    auto status_name(SolveStatus s) -> const char*
    {
        switch (s) {
        case SolveStatus::Sat: return "sat";
        case SolveStatus::Unsat: return "unsat";
        case SolveStatus::Budget: return "budget";
        }
        return "?";
    }

    auto verdict_name(Verdict v) -> const char*
    {
        switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Counterexample: return "counterexample";
        case Verdict::Budget: return "budget";
        }
        return "?";
    }

    auto element(const ElementRef& x) -> Json
    {
        return {{"kind", x.kind == ElementRef::Kind::Vertex ? "vertex" : "face"}, {"id", x.id}, {"charge", x.charge}};
    }

    auto census(const std::map<int, int>& m) -> Json
    {
        Json out = Json::object();
        for (auto [degree, count] : m)
            out[std::to_string(degree)] = count;
        return out;
    }
}

auto to_json(const Coloring& c) -> Json
{
    return {{"n", c.colors.size()}, {"k", c.k}, {"colors", c.colors}};
}

auto to_json(const ValidationReport& r) -> Json
{
    Json edges = Json::array();
    for (auto [u, v] : r.improper_edges)
        edges.push_back({u, v});
    return {{"valid", r.valid}, {"improper_edges", edges}, {"even_vertices", r.even_vertices}};
}

auto to_json(const SolveOutcome& o) -> Json
{
    return {{"status", status_name(o.status)}, {"coloring", o.coloring ? to_json(*o.coloring) : Json(nullptr)},
        {"nodes", o.nodes}};
}

auto to_json(const LiftReport& r) -> Json
{
    return {{"lemma", to_string(r.lemma)}, {"path", r.path}, {"procedure", r.procedure},
        {"by_procedure", r.by_procedure}, {"valid", r.valid}, {"coloring", to_json(r.coloring)}};
}

auto to_json(const AuditVerdict& v) -> Json
{
    Json witness = nullptr;
    if (v.verdict == Verdict::Counterexample) {
        witness = Json::object();
        for (const auto& [name, colour] : v.witness)
            witness[name] = colour;
    }
    return {{"lemma", to_string(v.lemma)}, {"verdict", verdict_name(v.verdict)}, {"witness", witness},
        {"states_enumerated", v.states}};
}

auto to_json(const ChargeLedger& ledger) -> Json
{
    Json transfers = Json::array();
    for (const auto& t : ledger.transfers)
        transfers.push_back({{"rule", to_string(t.rule)}, {"from", t.from}, {"to", t.to}, {"amount", t.amount}});
    return {{"unit", "1/8"}, {"vertices", ledger.vertices}, {"faces", ledger.faces}, {"transfers", transfers},
        {"sum", ledger.sum()}};
}

auto to_json(const AuditReport& r) -> Json
{
    Json negative = Json::array(), positive = Json::array();
    for (const auto& x : r.negative)
        negative.push_back(element(x));
    for (const auto& x : r.positive)
        positive.push_back(element(x));
    const auto& p = r.profile;
    Json profile = {{"has_5_vertex", p.has_5_vertex}, {"has_7plus_vertex", p.has_7plus_vertex},
        {"has_4plus_face", p.has_4plus_face}, {"vertex_degrees", census(p.vertex_degrees)},
        {"face_degrees", census(p.face_degrees)}, {"only_6_vertices_and_3_faces", p.only_6_vertices_and_3_faces}};
    return {{"initial_sum", r.initial_sum}, {"final_sum", r.final_sum}, {"euler_sum", r.euler_sum},
        {"sum_ok", r.sum_ok}, {"negative", negative}, {"positive", positive}, {"profile", profile},
        {"lemma_regime", r.lemma_regime}, {"findings", r.findings}};
}

auto to_json(const CoverageVerdict& v) -> Json
{
    Json table = Json::array();
    for (const auto& [pattern, ids] : v.table)
        table.push_back({{"pattern", pattern}, {"cases", ids}});
    return {{"covered", v.covered}, {"patterns", table}, {"uncovered", v.uncovered}, {"ambiguous", v.ambiguous}};
}

auto to_json(const EmbeddedGraph& e, const FaceSet& faces) -> Json
{
    Json list = Json::array();
    for (int f = 0; f < faces.count(); ++f) {
        auto b = faces.boundary(f);
        list.push_back(std::vector<Vertex>(b.begin(), b.end()));
    }
    return {{"n", e.order()}, {"m", e.graph().size()}, {"faces", list},
        {"euler_characteristic", euler_characteristic(e, faces)},
        {"genus", e.graph().is_connected() ? Json(euler_genus(e, faces)) : Json(nullptr)}};
}

auto coloring_from_json(std::string_view text) -> Coloring
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& ex) {
        throw Error(ErrorCode::MalformedInput, std::string("colouring is not JSON: ") + ex.what());
    }
    auto read_colors = [](const Json& a) {
        if (! a.is_array() || ! std::all_of(a.begin(), a.end(), [](const Json& x) { return x.is_number_integer(); }))
            throw Error(ErrorCode::MalformedInput, "\"colors\" must be an array of integers");
        return a.get<std::vector<Color>>();
    };
    if (doc.is_array()) {
        auto colors = read_colors(doc);
        int k = colors.empty() ? 1 : std::max(1, *std::max_element(colors.begin(), colors.end()));
        return Coloring{k, std::move(colors)};
    }
    if (! doc.is_object() || ! doc.contains("colors"))
        throw Error(ErrorCode::MalformedInput, "colouring object needs a \"colors\" member");
    Coloring c;
    c.colors = read_colors(doc["colors"]);
    c.k = doc.value("k", c.colors.empty() ? 1 : *std::max_element(c.colors.begin(), c.colors.end()));
    if (doc.contains("n") && doc["n"] != c.colors.size())
        throw Error(ErrorCode::SizeMismatch, "\"n\" disagrees with the length of \"colors\"");
    return c;
}

}  // namespace oddcol
