#include "rydmis/layout.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace rydmis {

namespace {

// Wall position inside B for the (0,0) sector: r atoms of B excited left of the wall.
int wall_left_count(int b, int shift) {
    if (b <= 0) return 0;
    return std::clamp((b + 1) / 2 + shift, 1, b);
}

}  // namespace

std::vector<char> chain_sector(const AtomLayout& layout, int eff_edge, int sa, int sb, int shift) {
    const auto& ee = layout.eff_edges.at(eff_edge);
    const int n = static_cast<int>(ee.chain.size());
    const int q = layout.params.q();
    const int b = (n - 4 * q) / 2;
    std::vector<char> out(n, 0);
    // dist = c + 1 is the distance (in atoms) from special a.
    if (sa == 1 && sb == 0) {
        for (int c = 0; c < n; ++c) out[c] = (c + 1) % 2 == 0;
    } else if (sa == 0 && sb == 1) {
        for (int c = 0; c < n; ++c) out[c] = (n - c) % 2 == 0;
    } else if (sa == 0 && sb == 0) {
        int e = 2 * q + 2 * wall_left_count(b, shift);  // wall pair at distances (e, e+1)
        for (int c = 0; c < n; ++c) {
            int dist = c + 1;
            out[c] = dist < e ? dist % 2 == 1 : (dist > e + 1 && (dist - e) % 2 == 0);
        }
    } else {
        int r = wall_left_count(b, shift);
        int e = 2 * q + 2 * r;  // last excited distance before the gap
        for (int c = 0; c < n; ++c) {
            int dist = c + 1;
            out[c] = dist <= e ? dist % 2 == 0 : (dist >= e + 3 && (dist - e - 3) % 2 == 0);
        }
    }
    return out;
}

std::vector<std::pair<int, char>> a_region_config(const AtomLayout& layout, int special, int s) {
    const int q = layout.params.q();
    std::vector<std::pair<int, char>> out;
    out.emplace_back(layout.specials.at(special).atom, static_cast<char>(s));
    for (const auto& ee : layout.eff_edges) {
        int n = static_cast<int>(ee.chain.size());
        for (int dist = 1; dist <= 2 * q; ++dist) {
            char on = static_cast<char>((dist % 2 == 0) == (s == 1));
            if (ee.a == special) out.emplace_back(ee.chain[dist - 1], on);
            if (ee.b == special) out.emplace_back(ee.chain[n - dist], on);
        }
    }
    return out;
}

SpinConfig encode_reference_config(const AtomLayout& layout, const std::vector<int>& mis, DomainWallPolicy policy) {
    std::set<int> in(mis.begin(), mis.end());
    for (int v : mis)
        if (v < 0 || v >= layout.vertex_count) throw std::invalid_argument("vertex out of range in independent set");
    for (const auto& e : layout.edges)
        if (in.count(e.u) && in.count(e.v)) throw std::invalid_argument("input set is not independent");

    const int q = layout.params.q();
    SpinConfig cfg(layout.atoms.size(), 0);
    for (int v = 0; v < layout.vertex_count; ++v) cfg[v] = in.count(v) ? 1 : 0;

    for (std::size_t ei = 0; ei < layout.edges.size(); ++ei) {
        const auto& e = layout.edges[ei];
        const auto& x = e.chain;
        const int M = e.ancillas;
        if (in.count(e.u)) {
            for (int c = 1; c <= M; ++c) cfg[x[c]] = c % 2 == 0;
            continue;
        }
        if (in.count(e.v)) {
            for (int c = 1; c <= M; ++c) cfg[x[c]] = c % 2 == 1;
            continue;
        }
        // Both ends unexcited: one wall at chain position e (pair e, e+1), e even.
        std::vector<int> pos(layout.atoms.size(), -1);
        for (int c = 0; c <= M + 1; ++c) pos[x[c]] = c;
        int best = -1;
        long best_len = -1;
        double best_off = 0;
        int wall = -1;
        for (std::size_t j = 0; j < layout.eff_edges.size(); ++j) {
            const auto& ee = layout.eff_edges[j];
            if (ee.edge != static_cast<int>(ei)) continue;
            int pa = pos[layout.specials[ee.a].atom];
            long len = static_cast<long>(ee.chain.size()) - 4 * q;
            if (len <= 0 || len % 2 != 0 || pa % 2 != 0) continue;
            double centre = pa + (ee.chain.size() + 1) / 2.0;
            double off = std::abs(centre - (M + 1) / 2.0);
            if (len > best_len || (len == best_len && off < best_off - 1e-9)) {
                best = static_cast<int>(j);
                best_len = len;
                best_off = off;
                int r = wall_left_count(static_cast<int>(len / 2), policy.shift);
                wall = pa + 2 * q + 2 * r;
            }
        }
        if (best < 0) {
            int mid = M / 2;
            if (mid % 2 != 0) --mid;
            wall = std::clamp(mid + 2 * policy.shift, 0, M);
        }
        for (int c = 1; c <= M; ++c) cfg[x[c]] = c < wall ? c % 2 == 1 : (c > wall + 1 && (c - wall) % 2 == 0);
    }
    return cfg;
}

}  // namespace rydmis
