#include "rydmis/compiler.hpp"

#include "json.hpp"

namespace rydmis {

std::string instance_to_json(const CompiledInstance& ci) {
    using nlohmann::json;
    const auto& inst = ci.instance;
    const auto& m = ci.model;
    json j = json::parse(layout_to_json(inst.layout));
    j["C"] = inst.C;
    j["params"]["delta_eff"] = inst.targets.delta_eff;
    j["params"]["delta_b"] = inst.targets.delta_b;
    j["params"]["delta_inf"] = inst.targets.delta_inf;
    for (std::size_t v = 0; v < inst.delta.size(); ++v) j["atoms"][v]["detuning"] = inst.delta[v];
    json kappa = json::array();
    for (int k : m.eff.kappa) kappa.push_back(k);
    j["effective"] = {{"delta_eff", m.delta_eff},
                      {"u_eff", m.u_eff},
                      {"xi", m.xi},
                      {"xi_decomposed", m.xi_decomposed},
                      {"xi_shifted", m.xi_shifted},
                      {"eta", m.eta},
                      {"e_dist", m.e_dist},
                      {"kappa", kappa},
                      {"kappa_sum", m.eff.kappa_sum},
                      {"delta_eff_i", m.delta_eff_i},
                      {"u_eff_ij", m.u_eff_ij},
                      {"homogeneity", m.homogeneity()}};
    json checks = json::array();
    for (const auto& c : ci.report.checks)
        checks.push_back({{"name", c.name}, {"value", c.value}, {"lo", c.lo}, {"hi", c.hi}, {"ok", c.ok}, {"remedy", c.remedy}});
    j["report"] = {{"feasible", ci.report.feasible()},
                   {"binding", ci.report.binding()},
                   {"footnote", ci.report.footnote},
                   {"footnote_active", ci.report.footnote_active},
                   {"checks", checks}};
    return j.dump(1);
}

CompiledInstance parse_instance_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [l, c] = line_column(text, e.byte);
        throw StageError("parse", "instance JSON error at line " + std::to_string(l) + ", column " + std::to_string(c));
    }
    try {
        DetunedInstance inst;
        inst.layout = parse_layout_json(j.dump());
        inst.C = j.at("C").get<double>();
        if (!(inst.C > 0)) throw StageError("parse", "instance JSON: C must be positive");
        const auto& p = j.at("params");
        inst.targets.delta_eff = p.at("delta_eff").get<double>();
        inst.targets.delta_b = p.at("delta_b").get<double>();
        inst.targets.delta_inf = p.at("delta_inf").get<double>();
        for (const auto& a : j.at("atoms")) inst.delta.push_back(a.at("detuning").get<double>());
        return analyse(std::move(inst));
    } catch (const nlohmann::json::exception& e) {
        throw StageError("parse", std::string("instance JSON: ") + e.what());
    }
}

}  // namespace rydmis
