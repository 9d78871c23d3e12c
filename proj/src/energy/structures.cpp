#include "rydmis/energy.hpp"

#include "rydmis/series.hpp"

#include <stdexcept>

namespace rydmis {

using series::CompensatedSum;

namespace {

void apply_a(const AtomLayout& layout, int special, int s, SpinConfig& c) {
    for (auto [atom, v] : a_region_config(layout, special, s)) c[atom] = v;
}

void apply_b(const AtomLayout& layout, int eff_edge, int sa, int sb, int shift, SpinConfig& c) {
    const auto& ee = layout.eff_edges[eff_edge];
    auto chain = chain_sector(layout, eff_edge, sa, sb, shift);
    for (int atom : layout.b_region(eff_edge).atoms) {
        for (std::size_t i = 0; i < ee.chain.size(); ++i)
            if (ee.chain[i] == atom) c[atom] = chain[i];
    }
}

}  // namespace

double region_energy(const DetunedInstance& inst, const std::vector<int>& atoms, const SpinConfig& c) {
    CompensatedSum s;
    const auto& at = inst.layout.atoms;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        int v = atoms[i];
        if (!c[v]) continue;
        s.add(-inst.delta[v]);
        for (std::size_t j = i + 1; j < atoms.size(); ++j)
            if (c[atoms[j]]) s.add(rydberg_pair(inst.C, to_point(at[v].pos), to_point(at[atoms[j]].pos)));
    }
    return s.value();
}

double cross_energy(const DetunedInstance& inst, const std::vector<int>& x, const std::vector<int>& y,
                    const SpinConfig& c) {
    CompensatedSum s;
    const auto& at = inst.layout.atoms;
    for (int v : x) {
        if (!c[v]) continue;
        for (int w : y)
            if (c[w]) s.add(rydberg_pair(inst.C, to_point(at[v].pos), to_point(at[w].pos)));
    }
    return s.value();
}

SpinConfig sector_config(const AtomLayout& layout, const std::vector<int>& s, int wall_shift) {
    if (s.size() != layout.specials.size()) throw std::invalid_argument("one pseudo-spin per special required");
    SpinConfig c(layout.atoms.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i) apply_a(layout, static_cast<int>(i), s[i], c);
    for (std::size_t j = 0; j < layout.eff_edges.size(); ++j) {
        const auto& ee = layout.eff_edges[j];
        apply_b(layout, static_cast<int>(j), s[ee.a], s[ee.b], wall_shift, c);
    }
    return c;
}

StructureEnergies structure_energies(const DetunedInstance& inst, int wall_shift) {
    const auto& L = inst.layout;
    StructureEnergies se;
    SpinConfig c(L.atoms.size(), 0);
    for (std::size_t i = 0; i < L.specials.size(); ++i) {
        std::array<double, 2> e{};
        for (int s = 0; s < 2; ++s) {
            apply_a(L, static_cast<int>(i), s, c);
            e[s] = region_energy(inst, L.a_region(static_cast<int>(i)).atoms, c);
        }
        se.a.push_back(e);
    }
    for (std::size_t j = 0; j < L.eff_edges.size(); ++j) {
        const auto& ee = L.eff_edges[j];
        const auto& B = L.b_region(static_cast<int>(j)).atoms;
        std::array<double, 4> eb{}, ea{}, ebb{};
        for (int sa = 0; sa < 2; ++sa)
            for (int sb = 0; sb < 2; ++sb) {
                std::fill(c.begin(), c.end(), 0);
                apply_a(L, ee.a, sa, c);
                apply_a(L, ee.b, sb, c);
                apply_b(L, static_cast<int>(j), sa, sb, wall_shift, c);
                int idx = 2 * sa + sb;
                eb[idx] = region_energy(inst, B, c);
                ea[idx] = cross_energy(inst, L.a_region(ee.a).atoms, B, c);
                ebb[idx] = cross_energy(inst, L.a_region(ee.b).atoms, B, c);
            }
        se.b.push_back(eb);
        se.ab_a.push_back(ea);
        se.ab_b.push_back(ebb);
    }
    return se;
}

double decomposed_energy(const DetunedInstance& inst, const StructureEnergies& se, const std::vector<int>& s) {
    const auto& L = inst.layout;
    CompensatedSum sum;
    for (std::size_t i = 0; i < L.specials.size(); ++i) sum.add(se.a[i][s[i]]);
    for (std::size_t j = 0; j < L.eff_edges.size(); ++j) {
        int idx = 2 * s[L.eff_edges[j].a] + s[L.eff_edges[j].b];
        sum.add(se.ab_a[j][idx]);
        sum.add(se.ab_b[j][idx]);
        sum.add(se.b[j][idx]);
    }
    return sum.value();
}

}  // namespace rydmis
