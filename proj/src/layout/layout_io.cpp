#include "rydmis/layout.hpp"

#include "json.hpp"

namespace rydmis {

std::string layout_to_json(const AtomLayout& L) {
    using nlohmann::json;
    json j;
    j["params"] = {{"k", L.params.k}, {"phi", L.params.phi}, {"q", L.params.q()}};
    j["drawing"] = json::parse(drawing_to_json(L.drawing));
    j["atoms"] = json::array();
    for (const auto& a : L.atoms)
        j["atoms"].push_back({{"x", rational_to_string(a.pos.x)},
                              {"y", rational_to_string(a.pos.y)},
                              {"role", to_string(a.role)},
                              {"region", a.region >= 0 ? L.regions[a.region].name : ""}});
    j["specials"] = json::array();
    for (const auto& s : L.specials)
        j["specials"].push_back({{"atom", s.atom}, {"kind", to_string(s.kind)}, {"legs", s.legs}, {"vertex", s.vertex}});
    j["regions"] = json::array();
    for (const auto& r : L.regions) j["regions"].push_back({{"name", r.name}, {"atoms", r.atoms}});
    j["kappa"] = json::array();
    for (const auto& e : L.edges)
        j["kappa"].push_back({{"u", e.u},
                              {"v", e.v},
                              {"length", e.length},
                              {"ancillas", e.ancillas},
                              {"irregular", e.irregular},
                              {"kappa", e.kappa}});
    return j.dump();
}

AtomLayout parse_layout_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [l, c] = line_column(text, e.byte);
        throw StageError("parse", "layout JSON error at line " + std::to_string(l) + ", column " + std::to_string(c));
    }
    try {
        LayoutParams p;
        p.k = j.at("params").at("k").get<int>();
        p.phi = j.at("params").at("phi").get<int>();
        if (j.at("params").contains("q")) {
            int q = j.at("params").at("q").get<int>();
            if (q != p.k / 8) p.q_override = q;
        }
        auto d = parse_drawing_json(j.at("drawing").dump());
        AtomLayout L = arrange_atoms(d, p);
        if (j.contains("atoms")) {
            const auto& atoms = j.at("atoms");
            if (atoms.size() != L.atoms.size())
                throw StageError("parse", "layout JSON: atom count does not match the embedded drawing");
            for (std::size_t i = 0; i < atoms.size(); ++i) {
                const auto& a = atoms[i];
                RationalPoint pos{parse_rational(a.at("x").get<std::string>()),
                                  parse_rational(a.at("y").get<std::string>())};
                if (!(pos == L.atoms[i].pos) || parse_role(a.at("role").get<std::string>()) != L.atoms[i].role)
                    throw StageError("parse", "layout JSON: atom " + std::to_string(i) +
                                                  " does not match the embedded drawing");
            }
        }
        return L;
    } catch (const nlohmann::json::exception& e) {
        throw StageError("parse", std::string("layout JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw StageError("parse", std::string("layout JSON: ") + e.what());
    }
}

}  // namespace rydmis
