#include "rydmis/io.hpp"
#include "rydmis/series.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace rydmis;
using nlohmann::json;

namespace {

struct Globals {
    std::string out;
    bool timings = false;
    int threads = 0;
    double tol = series::kDefaultTol;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw StageError("io", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.out, std::ios::binary);
    if (!out) throw StageError("io", "cannot write " + g.out);
    out << text;
}

struct Run {
    RunManifest manifest;

    void input(const std::string& path, const std::string& text) {
        manifest.inputs.push_back(path + " " + sha256_hex(text));
    }
    std::string read(const std::string& path) {
        auto text = read_file(path);
        input(path, text);
        return text;
    }
    // Adds the manifest and its hash to a JSON document.
    std::string emit(json j) const {
        json m = manifest.to_json();
        m["sha256"] = manifest.hash();
        j["manifest"] = m;
        return j.dump(1) + "\n";
    }
};

int threads_from_env() {
    const char* v = std::getenv("RYDMIS_THREADS");
    return v ? std::atoi(v) : 0;
}

std::string fmt_row(const std::string& a, const std::string& b, const std::string& c, const std::string& d,
                    const std::string& e) {
    std::ostringstream os;
    os << std::left;
    os.width(20);
    os << a;
    os.width(16);
    os << b;
    os.width(12);
    os << c;
    os.width(12);
    os << d;
    os << e << "\n";
    return os.str();
}

std::string num(double v, int prec = 9) {
    std::ostringstream os;
    os.precision(prec);
    os << v;
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rydberg MIS encoding toolkit: embed, arrange, compile, solve, decode, verify"};
    app.require_subcommand(1);
    Globals g;
    g.threads = threads_from_env();
    app.add_option("--out", g.out, "Write output to this file instead of stdout");
    app.add_flag("--timings", g.timings, "Include stage timings in reports");
    app.add_option("--threads", g.threads, "Worker threads (default: RYDMIS_THREADS or hardware)");
    app.add_option("--tol", g.tol, "Series truncation tolerance");

    // constants
    auto* c_constants = app.add_subcommand("constants", "Print the series constants table");
    int c_q = 1, c_phi = 1;
    bool c_json = false;
    c_constants->add_option("--q", c_q, "Finite q for the structure sums")->check(CLI::PositiveNumber);
    c_constants->add_option("--phi", c_phi, "phi for the irregular structure sum")->check(CLI::PositiveNumber);
    c_constants->add_flag("--json", c_json, "Emit JSON");

    auto* c_embed = app.add_subcommand("embed", "Grid drawing of a planar degree-3 graph");
    std::string graph_path;
    c_embed->add_option("GRAPH", graph_path, "Graph file (JSON or edge list)")->required();

    auto* c_arrange = app.add_subcommand("arrange", "Atom layout of a grid drawing");
    std::string drawing_path;
    int a_k = 8, a_phi = 1, a_q = -1;
    c_arrange->add_option("DRAWING", drawing_path, "Drawing JSON")->required();
    c_arrange->add_option("--k", a_k, "Ancillas per half segment")->check(CLI::PositiveNumber);
    c_arrange->add_option("--phi", a_phi, "Irregular block parameter")->check(CLI::PositiveNumber);
    c_arrange->add_option("--q", a_q, "Override q = floor(k/8)")->check(CLI::NonNegativeNumber);

    auto* c_compile = app.add_subcommand("compile", "Assign detunings and compute the effective model");
    std::string layout_path;
    Targets targets;
    bool allow_infeasible = false;
    c_compile->add_option("LAYOUT", layout_path, "Layout JSON")->required();
    auto add_targets = [&](CLI::App* sc) {
        sc->add_option("--delta-eff", targets.delta_eff, "Target effective detuning (units of U)");
        sc->add_option("--delta-b", targets.delta_b, "Segment detuning (units of U)");
        sc->add_option("--delta-inf", targets.delta_inf, "Leg baseline detuning (units of U)");
    };
    add_targets(c_compile);
    c_compile->add_flag("--allow-infeasible", allow_infeasible, "Emit the instance even if a window fails");

    auto* c_solve = app.add_subcommand("solve", "Ground state of a compiled instance");
    std::string instance_path, strategy = "full";
    SolveOptions solve;
    c_solve->add_option("INSTANCE", instance_path, "Instance JSON")->required();
    auto add_solve = [&](CLI::App* sc) {
        sc->add_option("--strategy", strategy, "full | is | sample")->check(CLI::IsMember({"full", "is", "sample"}));
        sc->add_option("--samples", solve.samples, "Samples for the sample strategy");
        sc->add_option("--seed", solve.seed, "Seed for the sample strategy");
        sc->add_option("--max-full", solve.max_full, "Largest atom count for full enumeration");
    };
    add_solve(c_solve);

    auto* c_decode = app.add_subcommand("decode", "Pseudo-spins and MIS witness of a configuration");
    std::string config_arg;
    c_decode->add_option("INSTANCE", instance_path, "Instance or layout JSON")->required();
    c_decode->add_option("CONFIG", config_arg, "0/1 string, or a file holding one (or solve output)")->required();

    auto* c_verify = app.add_subcommand("verify", "End-to-end check of the encoding on a graph");
    std::string v_drawing;
    c_verify->add_option("GRAPH", graph_path, "Graph file")->required();
    c_verify->add_option("--k", a_k, "Ancillas per half segment")->check(CLI::PositiveNumber);
    c_verify->add_option("--phi", a_phi, "Irregular block parameter")->check(CLI::PositiveNumber);
    c_verify->add_option("--q", a_q, "Override q")->check(CLI::NonNegativeNumber);
    c_verify->add_option("--drawing", v_drawing, "Use this drawing instead of embedding");
    add_targets(c_verify);
    auto* v_strategy = c_verify->add_option("--strategy", strategy, "full | is | sample (default: by size)")
                           ->check(CLI::IsMember({"full", "is", "sample"}));
    c_verify->add_option("--samples", solve.samples, "Samples for the sample strategy");
    c_verify->add_option("--seed", solve.seed, "Seed for the sample strategy");

    auto* c_render = app.add_subcommand("render", "SVG of a layout or instance");
    std::string r_kind, r_input, r_svg;
    bool r_blockade = false;
    c_render->add_option("KIND", r_kind, "layout | instance")->required()->check(CLI::IsMember({"layout", "instance"}));
    c_render->add_option("INPUT", r_input, "Layout or instance JSON")->required();
    c_render->add_option("--svg", r_svg, "Output SVG path")->required();
    c_render->add_flag("--blockade", r_blockade, "Draw blockade-radius circles");

    auto* c_oracle = app.add_subcommand("oracle-mis", "Exact maximum independent set");
    c_oracle->add_option("GRAPH", graph_path, "Graph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    auto layout_params = [&] {
        LayoutParams p(a_k, a_phi);
        if (a_q >= 0) p.q_override = a_q;
        return p;
    };

    try {
        Run run;
        solve.threads = g.threads;
        const std::string cmd = app.get_subcommands().front()->get_name();
        run.manifest.subcommand = cmd;

        if (cmd == "constants") {
            auto t = series::structure_constants(c_q, c_phi, g.tol);
            run.manifest.params = {{"q", c_q}, {"phi", c_phi}, {"tol", g.tol}};
            if (c_json) {
                json rows = json::array();
                for (const auto& c : t.entries()) {
                    json r = {{"name", c.name}, {"value", c.v.value}, {"tail_bound", c.v.tail_bound}, {"formula", c.formula}};
                    if (c.printed) {
                        r["printed"] = *c.printed;
                        r["match"] = std::abs(c.v.value - *c.printed) <= 1e-5;
                    }
                    if (c.limit_gap) r["limit_gap"] = *c.limit_gap;
                    rows.push_back(r);
                }
                write_output(g, run.emit({{"constants", rows}}));
            } else {
                std::string text = fmt_row("name", "value", "printed", "status", "formula");
                for (const auto& c : t.entries()) {
                    std::string status = "-";
                    if (c.printed) status = std::abs(c.v.value - *c.printed) <= 1e-5 ? "match" : "MISMATCH";
                    text += fmt_row(c.name, num(c.v.value), c.printed ? num(*c.printed, 6) : "", status, c.formula);
                }
                text += "# manifest sha256 " + run.manifest.hash() + "\n";
                write_output(g, text);
            }
            return 0;
        }
        if (cmd == "embed") {
            auto pg = parse_graph(run.read(graph_path));
            auto valid = validate_planar_deg3(pg);
            if (!valid.ok()) throw StageError("embed", "input graph rejected: " + valid.violations.front());
            auto d = grid_embed(pg);
            auto st = drawing_stats(d);
            json j = json::parse(drawing_to_json(d));
            j["stats"] = {{"width", st.width}, {"height", st.height}, {"area", st.area},
                          {"area_per_vertex", st.area_per_vertex}, {"bends", st.bends}, {"total_length", st.total_length}};
            write_output(g, run.emit(j));
            return 0;
        }
        if (cmd == "arrange") {
            auto d = ingest_drawing_checked(run.read(drawing_path));
            auto L = arrange_atoms(d, layout_params());
            run.manifest.params = {{"k", a_k}, {"phi", a_phi}, {"q", L.params.q()}};
            write_output(g, run.emit(json::parse(layout_to_json(L))));
            return 0;
        }
        if (cmd == "compile") {
            auto L = parse_layout_json(run.read(layout_path));
            run.manifest.params = {{"delta_eff", targets.delta_eff}, {"delta_b", targets.delta_b},
                                   {"delta_inf", targets.delta_inf}, {"allow_infeasible", allow_infeasible}};
            auto ci = allow_infeasible ? compile_unchecked(L, targets) : compile(L, targets);
            write_output(g, run.emit(json::parse(instance_to_json(ci))));
            return 0;
        }
        if (cmd == "solve") {
            auto ci = parse_instance_json(run.read(instance_path));
            solve.strategy = parse_strategy(strategy);
            run.manifest.params = {{"strategy", strategy}, {"samples", solve.samples}, {"max_full", solve.max_full}};
            run.manifest.seed = solve.seed;
            auto gs = solve_instance(ci.instance, solve);
            json j = {{"config", config_to_string(gs.config)},
                      {"energy", gs.energy},
                      {"certificate",
                       {{"strategy", to_string(gs.cert.strategy)},
                        {"exhaustive", gs.cert.exhaustive},
                        {"justification", gs.cert.justification},
                        {"evaluated", gs.cert.evaluated}}}};
            write_output(g, run.emit(j));
            return 0;
        }
        if (cmd == "decode") {
            auto text = run.read(instance_path);
            auto j_in = json::parse(text, nullptr, false);
            AtomLayout L = (!j_in.is_discarded() && j_in.contains("C")) ? parse_instance_json(text).instance.layout
                                                                        : parse_layout_json(text);
            std::string cfg_text = config_arg;
            if (config_arg.find_first_not_of("01") != std::string::npos) {
                cfg_text = run.read(config_arg);
                auto cj = json::parse(cfg_text, nullptr, false);
                if (!cj.is_discarded() && cj.is_object() && cj.contains("config")) cfg_text = cj["config"].get<std::string>();
            }
            auto c = parse_config(cfg_text, L.atoms.size());
            auto d = decode(c, L);
            json j = {{"pseudo_spins", d.s}, {"witness", d.witness}, {"diagnostics", d.diagnostics}, {"clean", d.clean()}};
            write_output(g, run.emit(j));
            return d.clean() ? 0 : 1;
        }
        if (cmd == "verify") {
            auto pg = parse_graph(run.read(graph_path));
            VerifyOptions opt;
            opt.params = layout_params();
            opt.targets = targets;
            if (!v_drawing.empty()) opt.drawing = ingest_drawing_checked(run.read(v_drawing));
            if (v_strategy->count() > 0) opt.strategy = parse_strategy(strategy);
            opt.solve = solve;
            run.manifest.params = {{"k", a_k}, {"phi", a_phi}, {"q", opt.params.q()}, {"delta_eff", targets.delta_eff},
                                   {"delta_b", targets.delta_b}, {"delta_inf", targets.delta_inf},
                                   {"strategy", opt.strategy ? strategy : "auto"}};
            run.manifest.seed = solve.seed;
            auto r = verify_instance(pg, opt);
            write_output(g, run.emit(verify_report_json(r, g.timings)));
            return r.pass() ? 0 : 1;
        }
        if (cmd == "render") {
            auto text = run.read(r_input);
            run.manifest.params = {{"kind", r_kind}, {"blockade", r_blockade}};
            run.manifest.outputs = {r_svg};
            SvgOptions so;
            so.blockade = r_blockade;
            std::string svg;
            std::string note = "manifest sha256 " + run.manifest.hash();
            if (r_kind == "instance") {
                auto ci = parse_instance_json(text);
                svg = render_svg(ci.instance.layout, &ci.instance.delta, so, note);
            } else {
                svg = render_svg(parse_layout_json(text), nullptr, so, note);
            }
            std::ofstream out(r_svg, std::ios::binary);
            if (!out) throw StageError("io", "cannot write " + r_svg);
            out << svg;
            return 0;
        }
        if (cmd == "oracle-mis") {
            auto pg = parse_graph(run.read(graph_path));
            auto res = mis_exact(Graph::from_planar(pg), MisOptions{100000, true, 40});
            json j = {{"size", res.size}, {"witness", res.witness.members}};
            if (res.count) j["count"] = *res.count;
            write_output(g, run.emit(j));
            return 0;
        }
    } catch (const StageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: [internal] " << e.what() << "\n";
        return 1;
    }
    return 2;
}
