#include "reltilt/cli.hpp"

#include <algorithm>
#include <fstream>

#include <CLI11.hpp>

#include "reltilt/io.hpp"
#include "reltilt/polygon.hpp"
#include "reltilt/report.hpp"
#include "reltilt/torsion.hpp"

namespace reltilt {

namespace {

using io::json;

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << text;
}

struct Options {
    std::string algebra;
    std::string subcat;
    std::string json_path;
    std::string dot_path;
    std::string format = "toml";
    std::string file;
    std::string theorem;
    std::string at;
    std::string action;
    std::string rigid;
    std::string arcs;
    std::size_t atlas_budget = 256;
    std::size_t graph_budget = 4096;
    std::size_t sample = 24;
    int n = 0;
    bool exhaustive = false;
};

std::unique_ptr<Workbench> open_workbench(const Options& o) {
    return std::make_unique<Workbench>(io::load_algebra(o.algebra), o.atlas_budget);
}

ObjSet load_subcat(const Workbench& wb, const std::string& path) {
    return io::subcategory_from_json(wb, io::parse_document(io::read_file(path), true));
}

json pair_json(const Atlas& atlas, const TauPair& p) {
    json mods = json::array();
    for (auto i : p.modules) mods.push_back(atlas.labels[i]);
    return {{"modules", mods}, {"e", p.e}};
}

std::string pair_text(const Workbench& wb, const TauPair& p) {
    std::string s = "U = {";
    for (std::size_t k = 0; k < p.modules.size(); ++k) s += (k ? ", " : "") + wb.atlas().labels[p.modules[k]];
    s += "}  E = {";
    for (std::size_t k = 0; k < p.e.size(); ++k) s += (k ? ", " : "") + wb.algebra().quiver().vertices[std::size_t(p.e[k])];
    return s + "}";
}

json triangles_json(const Workbench& wb, const Completion& c) {
    json out = json::array();
    for (const auto& t : c.triangles) {
        ObjSet a = make_set(t.approx), b = make_set(t.third);
        out.push_back({{"vertex", wb.algebra().quiver().vertices[std::size_t(t.vertex)]},
                       {"approximation", io::subcategory_to_json(wb, a)},
                       {"third", io::subcategory_to_json(wb, b)}});
    }
    return out;
}

int cmd_algebra_check(const Options& o, std::ostream& out) {
    auto alg = io::load_algebra(o.file);
    out << "ok: " << alg->vertex_count() << " vertices, " << alg->quiver().arrows.size() << " arrows, "
        << alg->relations().size() << " relations, dim " << alg->dim() << ", p = " << fp::prime() << "\n";
    return kPass;
}

int cmd_algebra_dump(const Options& o, std::ostream& out) {
    auto alg = io::load_algebra(o.file);
    std::string text;
    if (o.format == "json") text = io::dump_json(io::algebra_to_json(*alg));
    else if (o.format == "toml") text = io::algebra_to_toml(*alg);
    else throw InputError("unknown dump format '" + o.format + "'");
    write_output(o.json_path.empty() ? "-" : o.json_path, text, out);
    return kPass;
}

int cmd_module_check(const Options& o, std::ostream& out) {
    auto wb = open_workbench(o);
    auto m = io::module_from_json(wb->alg(), io::parse_document(io::read_file(o.file), true));
    out << "module of dimension vector " << dim_vector_label(m.dims) << "\n";
    if (!wb->complete()) throw CapError("atlas incomplete after " + std::to_string(o.atlas_budget) + " modules");
    out << "summands:";
    for (auto i : wb->atlas().locate_summands(m)) out << " " << wb->atlas().labels[i];
    out << "\n";
    return kPass;
}

int cmd_atlas(const Options& o, std::ostream& out) {
    auto wb = open_workbench(o);
    const Atlas& at = wb->atlas();
    json j{{"schema", 1}, {"command", "atlas"}, {"complete", at.complete}, {"algebra", algebra_summary(wb->algebra())}};
    j["modules"] = json::array();
    for (std::size_t i = 0; i < at.size(); ++i) {
        j["modules"].push_back({{"label", at.labels[i]}, {"dims", at.modules[i].dims}});
        out << at.labels[i] << "\n";
    }
    out << at.size() << " indecomposables" << (at.complete ? "" : " (incomplete)") << "\n";
    if (!o.json_path.empty()) write_output(o.json_path, io::dump_json(j), out);
    if (!at.complete)
        throw CapError("atlas knitting stopped at the budget of " + std::to_string(o.atlas_budget) + " modules");
    return kPass;
}

int cmd_sttilt(const Options& o, std::ostream& out) {
    auto wb = open_workbench(o);
    auto pairs = support_tau_tilting_pairs(*wb);
    json j{{"schema", 1}, {"command", "sttilt enumerate"}, {"algebra", algebra_summary(wb->algebra())}};
    j["pairs"] = json::array();
    for (const auto& p : pairs) {
        if (!support_tau_tilting_test(wb->atlas(), p))
            throw InvariantError("weak cluster tilting set fails the module-side test: " + pair_text(*wb, p));
        out << pair_text(*wb, p) << "\n";
        j["pairs"].push_back(pair_json(wb->atlas(), p));
    }
    j["count"] = pairs.size();
    out << pairs.size() << " support tau-tilting pairs\n";
    if (!o.json_path.empty()) write_output(o.json_path, io::dump_json(j), out);
    return kPass;
}

int cmd_completions(const Options& o, std::ostream& out) {
    auto wb = open_workbench(o);
    ObjSet x = load_subcat(*wb, o.subcat);
    auto c = completions(*wb, x, o.exhaustive);
    out << "X   = " << wb->describe(x) << "\n";
    out << "M_X = " << wb->describe(c.m_x.set) << "\n";
    out << "N_X = " << wb->describe(c.n_x.set) << "\n";
    json j{{"schema", 1},
           {"command", "completions"},
           {"x", io::subcategory_to_json(*wb, x)},
           {"m_x", {{"objects", io::subcategory_to_json(*wb, c.m_x.set)}, {"triangles", triangles_json(*wb, c.m_x)}}},
           {"n_x", {{"objects", io::subcategory_to_json(*wb, c.n_x.set)}, {"triangles", triangles_json(*wb, c.n_x)}}},
           {"almost_complete", c.almost_complete}};
    int code = kPass;
    if (o.exhaustive) {
        j["all_completions"] = json::array();
        for (const auto& s : c.all_completions) j["all_completions"].push_back(io::subcategory_to_json(*wb, s));
        j["exactly_two"] = c.exactly_two;
        if (c.almost_complete) {
            out << "completions: " << c.all_completions.size() << (c.exactly_two ? " (exactly M_X and N_X)" : "") << "\n";
            if (!c.exactly_two) code = kFalsified;
        }
    }
    if (!o.json_path.empty()) write_output(o.json_path, io::dump_json(j), out);
    return code;
}

int cmd_mutate(const Options& o, std::ostream& out) {
    auto wb = open_workbench(o);
    ObjSet m = load_subcat(*wb, o.subcat);
    std::optional<std::size_t> at;
    for (auto id : m)
        if (wb->label(id) == o.at) at = id;
    if (!at) throw InputError("'" + o.at + "' is not a summand of " + wb->describe(m));
    ObjSet mu = mutate(*wb, m, *at);
    out << wb->describe(m) << " --" << o.at << "--> " << wb->describe(mu) << "\n";
    if (!o.json_path.empty())
        write_output(o.json_path,
                     io::dump_json({{"schema", 1},
                                    {"command", "mutate"},
                                    {"from", io::subcategory_to_json(*wb, m)},
                                    {"at", o.at},
                                    {"to", io::subcategory_to_json(*wb, mu)}}),
                     out);
    return kPass;
}

int emit_graph(const ExchangeGraph& g, const SetLabeler& label, const Options& o, std::ostream& out) {
    if (!o.dot_path.empty()) write_output(o.dot_path, emit_dot(g, label), out);
    if (!o.json_path.empty()) write_output(o.json_path, io::dump_json(graph_to_json(g, label)), out);
    if (o.dot_path != "-" && o.json_path != "-")
        out << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
    if (!g.complete)
        throw CapError("exchange graph stopped at the budget of " + std::to_string(o.graph_budget) + " vertices");
    return kPass;
}

int cmd_exchange_graph(const Options& o, std::ostream& out) {
    auto wb = open_workbench(o);
    auto g = exchange_graph(*wb, o.graph_budget);
    return emit_graph(g, [&](const ObjSet& s) { return wb->describe(s); }, o, out);
}

int cmd_torsion(const Options& o, std::ostream& out) {
    auto wb = open_workbench(o);
    const Atlas& at = wb->atlas();
    auto classes = enumerate_torsion_classes(at);
    json j{{"schema", 1}, {"command", "torsion"}, {"algebra", algebra_summary(wb->algebra())}};
    j["torsion_classes"] = json::array();
    for (const auto& t : classes) {
        json labels = json::array();
        out << "{";
        for (std::size_t k = 0; k < t.size(); ++k) {
            out << (k ? ", " : "") << at.labels[t[k]];
            labels.push_back(at.labels[t[k]]);
        }
        out << "}\n";
        j["torsion_classes"].push_back(labels);
    }
    auto b = verify_bijections(*wb);
    out << classes.size() << " torsion classes, " << b.pairs << " support tau-tilting pairs, "
        << b.tau_cotorsion_torsion << " tau-cotorsion torsion pairs, " << b.left_weak_cotorsion_torsion
        << " left weak cotorsion torsion pairs\n";
    j["bijections"] = {{"pairs", b.pairs},
                       {"torsion_classes", b.torsion_classes},
                       {"tau_cotorsion_torsion", b.tau_cotorsion_torsion},
                       {"left_weak_cotorsion_torsion", b.left_weak_cotorsion_torsion},
                       {"ok", b.ok()},
                       {"failures", b.failures}};
    for (const auto& f : b.failures) out << "FAIL " << f << "\n";
    if (!o.json_path.empty()) write_output(o.json_path, io::dump_json(j), out);
    return b.ok() ? kPass : kFalsified;
}

int cmd_verify(const Options& o, std::ostream& out) {
    auto wb = open_workbench(o);
    auto r = verify_theorem(*wb, o.theorem, o.exhaustive, o.sample);
    std::string text = io::dump_json(r.to_json());
    if (o.json_path.empty() || o.json_path == "-") {
        out << text;
    } else {
        write_output(o.json_path, text, out);
        out << o.theorem << ": " << (r.pass() ? "pass" : "FAIL") << " (" << r.checked << " of " << r.instances_total
            << " instances)\n";
    }
    return r.pass() ? kPass : kFalsified;
}

int cmd_polygon(const Options& o, std::ostream& out) {
    Polygon poly(o.n);
    auto r = parse_arcs(o.rigid);
    auto x = parse_arcs(o.arcs);
    auto p = realize_relative_problem(poly, r, x);
    const Workbench& wb = *p.wb;
    auto label = [&](const ObjSet& s) { return arcs_to_string(arcs_of(p, s)); };
    if (o.action == "exchange-graph") return emit_graph(exchange_graph(wb, o.graph_budget), label, o, out);
    if (o.action == "arcs") {
        for (const auto& [id, a] : p.arc_of_id) out << arc_to_string(a) << "  " << wb.label(id) << "\n";
        return kPass;
    }
    if (o.action != "completions") throw InputError("unknown polygon action '" + o.action + "'");
    auto c = completions(wb, p.x_ids, true);
    out << "R   = " << arcs_to_string(r) << "\n";
    out << "X   = " << label(p.x_ids) << "\n";
    out << "M_X = " << label(c.m_x.set) << "\n";
    out << "N_X = " << label(c.n_x.set) << "\n";
    json j{{"schema", 1},
           {"command", "polygon completions"},
           {"n", o.n},
           {"rigid", arcs_to_string(r)},
           {"x", label(p.x_ids)},
           {"m_x", label(c.m_x.set)},
           {"n_x", label(c.n_x.set)},
           {"almost_complete", c.almost_complete},
           {"exactly_two", c.exactly_two}};
    if (c.almost_complete) out << "completions: " << c.all_completions.size() << "\n";
    if (!o.json_path.empty()) write_output(o.json_path, io::dump_json(j), out);
    return c.almost_complete && !c.exactly_two ? kFalsified : kPass;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Relative tilting and two-term completions over bound quiver algebras", "reltilt"};
    app.require_subcommand(1);

    auto add_algebra = [&](CLI::App* s) {
        s->add_option("--algebra", o.algebra, "algebra file (TOML or JSON)")->required();
        s->add_option("--atlas-budget", o.atlas_budget, "cap on the number of indecomposables");
    };

    auto* algebra = app.add_subcommand("algebra", "check or dump an algebra file");
    algebra->require_subcommand(1);
    auto* check = algebra->add_subcommand("check", "build the algebra and report its size");
    check->add_option("file", o.file)->required();
    auto* dump = algebra->add_subcommand("dump", "write the canonical form");
    dump->add_option("file", o.file)->required();
    dump->add_option("--format", o.format, "toml or json");
    dump->add_option("-o,--output", o.json_path, "output path, - for stdout");

    auto* module = app.add_subcommand("module", "module literals");
    module->require_subcommand(1);
    auto* mcheck = module->add_subcommand("check", "validate a module literal and decompose it");
    mcheck->add_option("file", o.file)->required();
    add_algebra(mcheck);

    auto* atlas = app.add_subcommand("atlas", "list the indecomposable modules");
    add_algebra(atlas);
    atlas->add_option("--json", o.json_path);

    auto* sttilt = app.add_subcommand("sttilt", "support tau-tilting pairs");
    sttilt->require_subcommand(1);
    auto* enumerate = sttilt->add_subcommand("enumerate", "list every support tau-tilting pair");
    add_algebra(enumerate);
    enumerate->add_option("--json", o.json_path);

    auto* comp = app.add_subcommand("completions", "co-Bongartz and Bongartz completions of a rigid X");
    add_algebra(comp);
    comp->add_option("--subcat", o.subcat, "subcategory JSON")->required();
    comp->add_flag("--exhaustive", o.exhaustive, "search every completion");
    comp->add_option("--json", o.json_path);

    auto* mut = app.add_subcommand("mutate", "mutate a weak cluster tilting set at one summand");
    add_algebra(mut);
    mut->add_option("--subcat", o.subcat)->required();
    mut->add_option("--at", o.at, "label of the summand")->required();
    mut->add_option("--json", o.json_path);

    auto* graph = app.add_subcommand("exchange-graph", "mutation graph of weak cluster tilting sets");
    add_algebra(graph);
    graph->add_option("--dot", o.dot_path);
    graph->add_option("--json", o.json_path);
    graph->add_option("--budget", o.graph_budget, "cap on the number of vertices");

    auto* tors = app.add_subcommand("torsion", "torsion classes and the bijections");
    add_algebra(tors);
    tors->add_option("--json", o.json_path);

    auto* verify = app.add_subcommand("verify", "run a theorem verifier");
    verify->add_option("theorem", o.theorem)->required();
    add_algebra(verify);
    verify->add_flag("--exhaustive", o.exhaustive);
    verify->add_option("--sample", o.sample, "instances checked without --exhaustive");
    verify->add_option("--json", o.json_path);

    auto* poly = app.add_subcommand("polygon", "type A polygon model");
    poly->add_option("action", o.action, "completions, exchange-graph or arcs")->required();
    poly->add_option("--n", o.n, "the polygon has n+3 vertices")->required();
    poly->add_option("--rigid", o.rigid, "arcs of R, e.g. \"0-2,0-3\"")->required();
    poly->add_option("--subcat", o.arcs, "arcs of X");
    poly->add_option("--dot", o.dot_path);
    poly->add_option("--json", o.json_path);
    poly->add_option("--budget", o.graph_budget);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kPass : kInputError;
    }

    try {
        if (check->parsed()) return cmd_algebra_check(o, out);
        if (dump->parsed()) return cmd_algebra_dump(o, out);
        if (mcheck->parsed()) return cmd_module_check(o, out);
        if (atlas->parsed()) return cmd_atlas(o, out);
        if (enumerate->parsed()) return cmd_sttilt(o, out);
        if (comp->parsed()) return cmd_completions(o, out);
        if (mut->parsed()) return cmd_mutate(o, out);
        if (graph->parsed()) return cmd_exchange_graph(o, out);
        if (tors->parsed()) return cmd_torsion(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (poly->parsed()) return cmd_polygon(o, out);
    } catch (const CapError& e) {
        err << "refused: " << e.what() << "\n";
        return kCapRefusal;
    } catch (const InvariantError& e) {
        err << "invariant violated: " << e.what() << "\n";
        return kFalsified;
    } catch (const AlgebraError& e) {
        err << "algebra error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    err << "error: no command\n";
    return kInputError;
}

}  // namespace reltilt
