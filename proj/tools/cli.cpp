#include "cli.hpp"

#include "oddcol/error.hpp"
#include "oddcol/generators.hpp"
#include "oddcol/graph6.hpp"
#include "oddcol/io.hpp"
#include "oddcol/json.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace oddcol::cli {

namespace {
    struct Options {
        std::string input;
        std::string format;
        std::string coloring_path;
        std::string lemma;
        std::vector<std::string> generator;
        int k = 9;
        long budget_seconds = 0;
        long budget_nodes = 0;
        int vertex = -1;
        bool json = false;
    };

    struct Loaded {
        Graph graph;
        std::optional<EmbeddedGraph> embedding;
    };

    auto read_text(const std::string& path, std::istream& in) -> std::string
    {
        std::ostringstream buf;
        if (path == "-") {
            buf << in.rdbuf();
            return buf.str();
        }
        std::ifstream file(path, std::ios::binary);
        if (! file)
            throw Error(ErrorCode::MalformedInput, "cannot open " + path);
        buf << file.rdbuf();
        return buf.str();
    }

    auto ends_with(std::string_view s, std::string_view suffix) -> bool
    {
        return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
    }

    /// Format from the extension, or sniffed from the text for stdin.
    auto detect_format(const Options& o, std::string_view text) -> std::string
    {
        if (! o.format.empty())
            return o.format;
        if (ends_with(o.input, ".g6"))
            return "graph6";
        if (ends_with(o.input, ".edges"))
            return "edges";
        if (ends_with(o.input, ".rot"))
            return "rot";
        if (text.find(':') != std::string_view::npos)
            return "rot";
        std::istringstream first{std::string(text.substr(0, text.find('\n')))};
        int a = 0, b = 0;
        if (first >> a >> b)
            return "edges";
        return "graph6";
    }

    auto load(const Options& o, std::istream& in) -> Loaded
    {
        auto text = read_text(o.input, in);
        auto format = detect_format(o, text);
        if (format == "rot") {
            auto e = parse_rotation(text);
            return {e.graph(), e};
        }
        if (format == "edges")
            return {parse_edge_list(text), std::nullopt};
        return {parse_graph6(text), std::nullopt};
    }

    auto budget_of(const Options& o) -> SearchBudget
    {
        SearchBudget b;
        if (o.budget_nodes > 0)
            b.max_nodes = o.budget_nodes;
        if (o.budget_seconds > 0)
            b.max_seconds = static_cast<double>(o.budget_seconds);
        return b;
    }

    auto colors_line(const std::vector<Color>& colors) -> std::string
    {
        std::string s;
        for (std::size_t i = 0; i < colors.size(); ++i)
            s += (i ? " " : "") + std::to_string(colors[i]);
        return s;
    }

    auto cmd_gen(const Options& o, std::ostream& out) -> int
    {
        auto gen = generate(parse_generator_spec(o.generator));
        std::string format = o.format.empty() ? (gen.embedding ? "rot" : "edges") : o.format;
        if (format == "rot" && ! gen.embedding)
            throw Error(ErrorCode::NeedsEmbedding, "this family has no stored embedding");
        if (o.json) {
            Json edges = Json::array();
            for (auto [u, v] : gen.graph.edges())
                edges.push_back({u, v});
            out << Json{{"n", gen.graph.order()}, {"m", gen.graph.size()}, {"edges", edges},
                           {"rotation", gen.embedding ? Json(gen.embedding->rotations()) : Json(nullptr)}}
                       .dump()
                << '\n';
            return Ok;
        }
        if (format == "rot")
            out << emit_rotation(*gen.embedding);
        else if (format == "edges")
            out << emit_edge_list(gen.graph);
        else
            out << emit_graph6(gen.graph) << '\n';
        return Ok;
    }

    auto cmd_chi(const Options& o, std::istream& in, std::ostream& out) -> int
    {
        auto g = load(o, in).graph;
        auto r = chi_odd(g, budget_of(o));
        if (o.json)
            out << Json{{"chi", r.chi ? Json(*r.chi) : Json(nullptr)},
                           {"coloring", r.witness ? to_json(*r.witness) : Json(nullptr)}, {"nodes", r.nodes}}
                       .dump()
                << '\n';
        else if (r.chi)
            out << "chi_o = " << *r.chi << "\ncolors: " << colors_line(r.witness->colors) << "\nnodes: " << r.nodes
                << '\n';
        else
            out << "budget exhausted after " << r.nodes << " nodes\n";
        return r.chi ? Ok : OutOfBudget;
    }

    auto cmd_decide(const Options& o, std::istream& in, std::ostream& out) -> int
    {
        auto g = load(o, in).graph;
        auto r = decide(g, o.k, budget_of(o));
        if (o.json)
            out << to_json(r).dump() << '\n';
        else {
            static const char* names[] = {"SAT", "UNSAT", "BUDGET"};
            out << names[static_cast<int>(r.status)] << " (k=" << o.k << ", nodes " << r.nodes << ")\n";
            if (r.coloring)
                out << "colors: " << colors_line(r.coloring->colors) << '\n';
        }
        switch (r.status) {
        case SolveStatus::Sat: return Ok;
        case SolveStatus::Unsat: return Refuted;
        case SolveStatus::Budget: return OutOfBudget;
        }
        return Usage;
    }

    auto cmd_verify(const Options& o, std::istream& in, std::ostream& out) -> int
    {
        auto g = load(o, in).graph;
        auto c = coloring_from_json(read_text(o.coloring_path, in));
        if (static_cast<int>(c.colors.size()) != g.order())
            throw Error(ErrorCode::SizeMismatch, "colouring has " + std::to_string(c.colors.size())
                    + " entries for " + std::to_string(g.order()) + " vertices");
        std::vector<Vertex> out_of_range;
        for (Vertex v = 0; v < g.order(); ++v)
            if (c.colors[v] < 1 || c.colors[v] > o.k)
                out_of_range.push_back(v);
        c.k = o.k;
        auto report = validate_odd(g, c);
        bool valid = report.valid && out_of_range.empty();
        if (o.json) {
            auto j = to_json(report);
            j["valid"] = valid;
            j["k"] = o.k;
            j["out_of_palette"] = out_of_range;
            out << j.dump() << '\n';
        } else {
            out << (valid ? "valid" : "invalid") << " odd " << o.k << "-colouring\n";
            for (auto [u, v] : report.improper_edges)
                out << "improper edge " << u << " " << v << '\n';
            for (Vertex v : report.even_vertices)
                out << "no odd colour at " << v << '\n';
            for (Vertex v : out_of_range)
                out << "colour outside 1.." << o.k << " at " << v << '\n';
        }
        return valid ? Ok : Refuted;
    }

    auto need_embedding(const Loaded& l) -> const EmbeddedGraph&
    {
        if (! l.embedding)
            throw Error(ErrorCode::NeedsEmbedding, "this command needs a rotation file");
        return *l.embedding;
    }

    auto cmd_faces(const Options& o, std::istream& in, std::ostream& out) -> int
    {
        auto loaded = load(o, in);
        const auto& e = need_embedding(loaded);
        auto faces = trace_faces(e);
        auto j = to_json(e, faces);
        if (o.json)
            out << j.dump() << '\n';
        else {
            out << faces.count() << " faces, V+F-E = " << j["euler_characteristic"];
            if (! j["genus"].is_null())
                out << ", genus " << j["genus"];
            out << '\n';
            for (int f = 0; f < faces.count(); ++f) {
                auto b = faces.boundary(f);
                out << "f" << f << " (" << b.size() << "):";
                for (Vertex v : b)
                    out << ' ' << v;
                out << '\n';
            }
        }
        return Ok;
    }

    auto cmd_discharge(const Options& o, std::istream& in, std::ostream& out) -> int
    {
        auto loaded = load(o, in);
        const auto& e = need_embedding(loaded);
        auto faces = trace_faces(e);
        auto ledger = fire_rules(e, faces, initial_charges(e, faces));
        auto report = audit(e, ledger);
        if (o.json) {
            auto j = to_json(ledger);
            j["audit"] = to_json(report);
            out << j.dump() << '\n';
        } else {
            out << "sum " << report.final_sum << "/8 (initial " << report.initial_sum << "/8, Euler "
                << report.euler_sum << "/8)\n";
            out << ledger.transfers.size() << " transfers, " << report.negative.size() << " negative, "
                << report.positive.size() << " positive\n";
            out << "profile: "
                << (report.profile.only_6_vertices_and_3_faces ? "only 6-vertices and 3-faces" : "mixed") << '\n';
            for (const auto& f : report.findings)
                out << "finding: " << f << '\n';
        }
        return report.sum_ok && report.findings.empty() ? Ok : Refuted;
    }

    auto cmd_reduce(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) -> int
    {
        auto lemma = parse_lemma(o.lemma);
        if (! lemma)
            throw Error(ErrorCode::BadParameters, "reduce needs --lemma L1|L2|L3|L7");
        auto loaded = load(o, in);
        auto sites = loaded.embedding ? detect_sites(*loaded.embedding, *lemma) : detect_sites(loaded.graph, *lemma);
        auto chosen = std::find_if(sites.begin(), sites.end(), [&](const ConfigSite& s) {
            return o.vertex < 0 || s.roles[0] == o.vertex || (s.lemma == Lemma::L2 && s.roles[1] == o.vertex);
        });
        if (chosen == sites.end()) {
            err << "no " << o.lemma << " site" << (o.vertex >= 0 ? " at vertex " + std::to_string(o.vertex) : "")
                << '\n';
            return Refuted;
        }
        auto aux = loaded.embedding ? build_reduction(*loaded.embedding, *chosen) : build_reduction(loaded.graph, *chosen);
        auto solved = decide(aux.reduced, reduction_palette, budget_of(o));
        if (solved.status == SolveStatus::Budget) {
            err << "budget exhausted colouring the reduced graph\n";
            return OutOfBudget;
        }
        if (! solved.coloring) {
            err << "reduced graph has no odd 9-colouring\n";
            return Refuted;
        }
        LiftOptions lift_options;
        lift_options.fallback_budget = budget_of(o);
        auto report = lift(loaded.graph, *chosen, aux, *solved.coloring, lift_options);
        if (o.json) {
            auto j = to_json(report);
            j["site"] = chosen->roles;
            out << j.dump() << '\n';
        } else {
            out << o.lemma << " site at " << chosen->roles[0] << ": " << report.path
                << (report.by_procedure ? "" : " (procedure " + report.procedure + " fell through)") << '\n';
            out << (report.valid ? "valid" : "INVALID") << "\ncolors: " << colors_line(report.coloring.colors) << '\n';
        }
        return report.valid ? Ok : Refuted;
    }

    auto cmd_audit(const Options& o, std::ostream& out) -> int
    {
        auto lemma = parse_abstract_lemma(o.lemma);
        if (! lemma)
            throw Error(ErrorCode::BadParameters, "audit-lemma needs --lemma L1234|L42123");
        SearchBudget budget{600'000'000'000L, 600.0};
        if (o.budget_nodes > 0)
            budget.max_nodes = o.budget_nodes;
        if (o.budget_seconds > 0)
            budget.max_seconds = static_cast<double>(o.budget_seconds);
        auto v = audit_abstract(*lemma, budget);
        if (o.json)
            out << to_json(v).dump() << '\n';
        else {
            out << o.lemma << ": " << to_json(v)["verdict"].get<std::string>() << " (" << v.states << " states)\n";
            for (const auto& [name, colour] : v.witness)
                out << "  " << name << " = " << colour << '\n';
        }
        switch (v.verdict) {
        case Verdict::Holds: return Ok;
        case Verdict::Counterexample: return Refuted;
        case Verdict::Budget: return OutOfBudget;
        }
        return Usage;
    }

    auto cmd_coverage(const Options& o, std::ostream& out) -> int
    {
        auto v = case_coverage();
        if (o.json)
            out << to_json(v).dump() << '\n';
        else {
            for (const auto& [pattern, ids] : v.table) {
                for (Color c : pattern)
                    out << c;
                out << " ->";
                if (ids.empty())
                    out << " none";
                for (int id : ids)
                    out << " case " << id;
                out << '\n';
            }
            out << (v.covered ? "covered" : "NOT covered") << '\n';
        }
        return v.covered ? Ok : Refuted;
    }
}

auto run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) -> int
{
    CLI::App app{"Odd colouring toolkit for toroidal graphs", "oddcol"};
    app.require_subcommand(1);
    Options o;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", o.input, "Graph file (.g6, .edges, .rot) or - for stdin")->required();
        sub->add_option("--format", o.format, "Input format")->check(CLI::IsMember({"graph6", "edges", "rot"}));
    };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget-seconds", o.budget_seconds, "Wall-clock limit")->check(CLI::PositiveNumber);
        sub->add_option("--budget-nodes", o.budget_nodes, "Search node limit")->check(CLI::PositiveNumber);
    };
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Machine-readable output"); };

    auto* gen = app.add_subcommand("gen", "Generate a graph family");
    gen->add_option("spec", o.generator, "cycle N | path N | complete N | torus-tri M N | k7-torus")->required();
    gen->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"graph6", "edges", "rot"}));
    add_json(gen);

    auto* chi = app.add_subcommand("chi", "Odd chromatic number");
    add_input(chi);
    add_budget(chi);
    add_json(chi);

    auto* dec = app.add_subcommand("decide", "Decide odd k-colourability");
    add_input(dec);
    add_budget(dec);
    add_json(dec);
    dec->add_option("--k", o.k, "Palette size")->check(CLI::PositiveNumber);

    auto* ver = app.add_subcommand("verify", "Check an odd colouring");
    add_input(ver);
    add_json(ver);
    ver->add_option("--k", o.k, "Palette size")->check(CLI::PositiveNumber);
    ver->add_option("--coloring", o.coloring_path, "Colouring JSON file")->required();

    auto* fac = app.add_subcommand("faces", "Trace faces of a rotation system");
    add_input(fac);
    add_json(fac);

    auto* dis = app.add_subcommand("discharge", "Run the discharging rules and audit the ledger");
    add_input(dis);
    add_json(dis);

    auto* red = app.add_subcommand("reduce", "Reduce a configuration, colour G' and lift back");
    add_input(red);
    add_budget(red);
    add_json(red);
    red->add_option("--lemma", o.lemma, "L1 | L2 | L3 | L7")->required();
    red->add_option("--vertex", o.vertex, "Centre vertex of the site");

    auto* aud = app.add_subcommand("audit-lemma", "Exhaustively audit a colour lemma");
    aud->add_option("--lemma", o.lemma, "L1234 | L42123")->required();
    add_budget(aud);
    add_json(aud);

    auto* cov = app.add_subcommand("case-coverage", "Match hexagon colour patterns to the case table");
    add_json(cov);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << app.help();
        return Usage;
    }

    try {
        if (gen->parsed())
            return cmd_gen(o, out);
        if (chi->parsed())
            return cmd_chi(o, in, out);
        if (dec->parsed())
            return cmd_decide(o, in, out);
        if (ver->parsed())
            return cmd_verify(o, in, out);
        if (fac->parsed())
            return cmd_faces(o, in, out);
        if (dis->parsed())
            return cmd_discharge(o, in, out);
        if (red->parsed())
            return cmd_reduce(o, in, out, err);
        if (aud->parsed())
            return cmd_audit(o, out);
        if (cov->parsed())
            return cmd_coverage(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    }
    return Usage;
}

}  // namespace oddcol::cli
