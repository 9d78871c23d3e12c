#include "rydmis/energy.hpp"

#include <algorithm>
#include <set>

namespace rydmis {

DecodeResult decode(const SpinConfig& c, const AtomLayout& layout) {
    if (c.size() != layout.atoms.size())
        throw StageError("decode", "configuration has " + std::to_string(c.size()) + " entries, layout has " +
                                       std::to_string(layout.atoms.size()) + " atoms");
    DecodeResult r;
    for (std::size_t i = 0; i < layout.specials.size(); ++i) {
        const auto& sp = layout.specials[i];
        int s = c[sp.atom] ? 1 : 0;
        r.s.push_back(s);
        if (sp.vertex >= 0 && s) r.witness.push_back(sp.vertex);
        for (auto [atom, v] : a_region_config(layout, static_cast<int>(i), s))
            if ((c[atom] != 0) != (v != 0)) {
                r.diagnostics.push_back("domain wall inside " + layout.a_region(static_cast<int>(i)).name +
                                        " at atom " + std::to_string(atom));
                break;
            }
    }
    for (std::size_t j = 0; j < layout.eff_edges.size(); ++j) {
        const auto& ee = layout.eff_edges[j];
        std::vector<int> path{layout.specials[ee.a].atom};
        path.insert(path.end(), ee.chain.begin(), ee.chain.end());
        path.push_back(layout.specials[ee.b].atom);
        int walls = 0;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!c[path[i]] && !c[path[i + 1]]) ++walls;
        if (walls > 1)
            r.diagnostics.push_back(std::to_string(walls) + " domain walls in " +
                                    layout.b_region(static_cast<int>(j)).name);
    }
    auto ud = layout_udg(layout);
    for (auto [v, w] : ud.graph.edge_list())
        if (c[v] && c[w])
            r.diagnostics.push_back("excited neighbours " + std::to_string(v) + " and " + std::to_string(w));
    std::set<int> in(r.witness.begin(), r.witness.end());
    for (const auto& e : layout.edges)
        if (in.count(e.u) && in.count(e.v))
            r.diagnostics.push_back("witness contains edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    std::sort(r.witness.begin(), r.witness.end());
    return r;
}

}  // namespace rydmis
