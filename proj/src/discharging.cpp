#include "oddcol/discharging.hpp"

#include "oddcol/reductions.hpp"

#include <algorithm>
#include <numeric>

namespace oddcol {

auto to_string(Rule rule) -> std::string_view
{
    return rule == Rule::R1 ? "R1" : "R2";
}

auto ChargeLedger::sum() const -> long
{
    return std::accumulate(vertices.begin(), vertices.end(), 0L) + std::accumulate(faces.begin(), faces.end(), 0L);
}

auto initial_charges(const EmbeddedGraph& e, const FaceSet& faces) -> ChargeLedger
{
    ChargeLedger ledger;
    for (Vertex v = 0; v < e.order(); ++v)
        ledger.vertices.push_back(charge_unit * (e.graph().degree(v) - 6));
    for (int f = 0; f < faces.count(); ++f)
        ledger.faces.push_back(charge_unit * (2L * faces.degree(f) - 6));
    return ledger;
}

auto initial_charges(const EmbeddedGraph& e) -> ChargeLedger
{
    return initial_charges(e, trace_faces(e));
}

auto replay(const ChargeLedger& initial, const std::vector<Transfer>& transfers) -> ChargeLedger
{
    ChargeLedger out = initial;
    for (const auto& t : transfers) {
        if (t.rule == Rule::R1)
            out.faces[t.from] -= t.amount;
        else
            out.vertices[t.from] -= t.amount;
        out.vertices[t.to] += t.amount;
    }
    out.transfers = initial.transfers;
    out.transfers.insert(out.transfers.end(), transfers.begin(), transfers.end());
    std::sort(out.transfers.begin(), out.transfers.end());
    return out;
}

auto fire_rules(const EmbeddedGraph& e, const FaceSet& faces, const ChargeLedger& initial) -> ChargeLedger
{
    const auto& g = e.graph();
    std::vector<Transfer> transfers;
    for (int f = 0; f < faces.count(); ++f)
        if (faces.degree(f) >= 4)
            for (Vertex v : faces.boundary(f))
                if (g.degree(v) == 5)
                    transfers.push_back({Rule::R1, f, v, charge_unit});
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 8)
            for (Vertex w : g.neighbours(v))
                if (g.degree(w) == 5) {
                    auto [f1, f2] = faces.edge_faces(e, v, w);
                    if (faces.degree(f1) == 3 && faces.degree(f2) == 3)
                        transfers.push_back({Rule::R2, v, w, 3});
                }
    return replay(initial, transfers);
}

auto fire_rules(const EmbeddedGraph& e, const ChargeLedger& initial) -> ChargeLedger
{
    return fire_rules(e, trace_faces(e), initial);
}

auto structure_profile(const EmbeddedGraph& e, const FaceSet& faces) -> StructureProfile
{
    StructureProfile p;
    for (Vertex v = 0; v < e.order(); ++v)
        ++p.vertex_degrees[e.graph().degree(v)];
    for (int f = 0; f < faces.count(); ++f)
        ++p.face_degrees[faces.degree(f)];
    p.has_5_vertex = p.vertex_degrees.contains(5);
    p.has_7plus_vertex = ! p.vertex_degrees.empty() && p.vertex_degrees.rbegin()->first >= 7;
    p.has_4plus_face = ! p.face_degrees.empty() && p.face_degrees.rbegin()->first >= 4;
    p.only_6_vertices_and_3_faces = e.order() > 0 && p.vertex_degrees.size() == 1 && p.vertex_degrees.contains(6)
        && p.face_degrees.size() == 1 && p.face_degrees.contains(3);
    return p;
}

namespace {
    auto in_lemma_regime(const EmbeddedGraph& e) -> bool
    {
        const auto& g = e.graph();
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) < 5)
                return false;
        if (! detect_sites(g, Lemma::L2).empty())
            return false;
        return detect_sites(e, Lemma::L3).empty();
    }
}

auto audit(const EmbeddedGraph& e, const ChargeLedger& final_ledger) -> AuditReport
{
    auto faces = trace_faces(e);
    AuditReport r;
    r.initial_sum = initial_charges(e, faces).sum();
    r.final_sum = final_ledger.sum();
    r.euler_sum = -6 * charge_unit * euler_characteristic(e, faces);
    r.sum_ok = r.initial_sum == r.final_sum && r.initial_sum == r.euler_sum;
    if (r.initial_sum != r.final_sum)
        r.findings.push_back("final sum " + std::to_string(r.final_sum) + " differs from initial sum "
            + std::to_string(r.initial_sum));

    for (std::size_t v = 0; v < final_ledger.vertices.size(); ++v) {
        long q = final_ledger.vertices[v];
        if (q != 0)
            (q < 0 ? r.negative : r.positive).push_back({ElementRef::Kind::Vertex, static_cast<int>(v), q});
    }
    for (std::size_t f = 0; f < final_ledger.faces.size(); ++f) {
        long q = final_ledger.faces[f];
        if (q != 0)
            (q < 0 ? r.negative : r.positive).push_back({ElementRef::Kind::Face, static_cast<int>(f), q});
    }

    r.profile = structure_profile(e, faces);
    r.lemma_regime = e.order() > 0 && e.graph().is_connected() && in_lemma_regime(e);
    if (r.lemma_regime)
        for (const auto& x : r.negative)
            r.findings.push_back(std::string(x.kind == ElementRef::Kind::Vertex ? "vertex " : "face ")
                + std::to_string(x.id) + " ends negative (" + std::to_string(x.charge) + "/8) inside the lemma regime");
    return r;
}

}  // namespace oddcol
