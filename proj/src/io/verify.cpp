#include "rydmis/io.hpp"

#include <algorithm>
#include <chrono>

namespace rydmis {

namespace {

class Stopwatch {
public:
    explicit Stopwatch(std::vector<StageTiming>& out) : out_(out) {}
    void lap(const std::string& stage) {
        auto now = std::chrono::steady_clock::now();
        out_.push_back({stage, std::chrono::duration<double>(now - last_).count()});
        last_ = now;
    }

private:
    std::vector<StageTiming>& out_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

VerifyReport verify_instance(const PlanarGraph& g, const VerifyOptions& opt) {
    VerifyReport r;
    Stopwatch clock(r.timings);
    auto valid = validate_planar_deg3(g);
    if (!valid.ok()) throw StageError("embed", "input graph rejected: " + valid.violations.front());
    Graph graph = Graph::from_planar(g);
    auto mis = mis_exact(graph);
    r.mis_size = mis.size;
    r.mis_witness = mis.witness.members;
    clock.lap("oracle");

    GridDrawing drawing;
    if (opt.drawing) {
        drawing = canonicalize(*opt.drawing);
        auto rep = validate_drawing(drawing, g);
        if (!rep.ok()) throw StageError("embed", "invalid drawing: " + rep.violations.front());
    } else {
        drawing = grid_embed(g);
    }
    clock.lap("embed");
    auto layout = arrange_atoms(drawing, opt.params);
    clock.lap("arrange");
    r.compiled = compile(layout, opt.targets);
    clock.lap("compile");

    SolveOptions so = opt.solve;
    so.strategy = opt.strategy ? *opt.strategy
                               : (layout.atoms.size() <= kAutoFullAtoms ? Strategy::full : Strategy::is);
    r.ground = solve_instance(r.compiled.instance, so);
    clock.lap("solve");
    r.decoded = decode(r.ground.config, r.compiled.instance.layout);
    clock.lap("decode");

    const auto& m = r.compiled.model;
    r.a_prime = m.eff.a_prime(r.mis_size);
    r.threshold_a = m.threshold(r.mis_size);
    r.threshold_a1 = m.threshold(r.mis_size + 1);
    r.predicted = m.predicted_ground(r.mis_size);
    const double E = r.ground.energy;

    const auto& w = r.decoded.witness;
    r.verdict_i = r.decoded.clean() && static_cast<int>(w.size()) == r.mis_size && is_independent(graph, w);
    r.witness_is_lex = w == r.mis_witness;
    r.verdict_ii = E <= r.threshold_a && E > r.threshold_a1;
    r.verdict_iii = std::abs(E - r.predicted) <= m.eta;
    return r;
}

nlohmann::json verify_report_json(const VerifyReport& r, bool timings) {
    using nlohmann::json;
    const auto& m = r.compiled.model;
    const auto& L = r.compiled.instance.layout;
    json j;
    j["verdict"] = r.pass() ? "PASS" : "FAIL";
    j["graph"] = {{"mis_size", r.mis_size}, {"mis_witness", r.mis_witness}};
    j["layout"] = {{"k", L.params.k}, {"phi", L.params.phi}, {"q", L.params.q()}, {"atoms", L.atoms.size()},
                   {"specials", L.specials.size()}, {"kappa_sum", m.eff.kappa_sum}};
    j["effective"] = {{"delta_eff", m.delta_eff}, {"u_eff", m.u_eff}, {"xi", m.xi}, {"eta", m.eta},
                      {"homogeneity", m.homogeneity()}, {"a_prime", r.a_prime}};
    j["ground_state"] = {{"energy", r.ground.energy},
                         {"config", config_to_string(r.ground.config)},
                         {"strategy", to_string(r.ground.cert.strategy)},
                         {"exhaustive", r.ground.cert.exhaustive},
                         {"justification", r.ground.cert.justification},
                         {"evaluated", r.ground.cert.evaluated}};
    j["decoded"] = {{"witness", r.decoded.witness}, {"pseudo_spins", r.decoded.s},
                    {"diagnostics", r.decoded.diagnostics}, {"equals_lex_witness", r.witness_is_lex}};
    j["checks"] = {
        {"i_witness_is_mis", r.verdict_i},
        {"ii_threshold", {{"ok", r.verdict_ii}, {"threshold_a", r.threshold_a}, {"threshold_a_plus_1", r.threshold_a1}}},
        {"iii_effective_model",
         {{"ok", r.verdict_iii}, {"predicted", r.predicted}, {"deviation", r.ground.energy - r.predicted}, {"eta", m.eta}}}};
    if (timings) {
        json t = json::object();
        for (const auto& s : r.timings) t[s.stage] = s.seconds;
        j["timings"] = t;
    }
    return j;
}

}  // namespace rydmis
