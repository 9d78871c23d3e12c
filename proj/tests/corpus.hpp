#pragma once

#include "rydmis/graph.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

namespace rydmis::corpus {

struct NamedGraph {
    std::string name;
    PlanarGraph g;
};

inline PlanarGraph path(int n) {
    PlanarGraph g{n, {}};
    for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

inline PlanarGraph cycle(int n) {
    PlanarGraph g = path(n);
    g.edges.emplace_back(0, n - 1);
    return g;
}

inline PlanarGraph star3() { return {4, {{0, 1}, {0, 2}, {0, 3}}}; }

inline PlanarGraph k4() { return {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}}; }

inline PlanarGraph cube() {
    return {8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7}}};
}

inline PlanarGraph prism() { return {6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}}; }

inline PlanarGraph k33() {
    PlanarGraph g{6, {}};
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) g.edges.emplace_back(a, b);
    return g;
}

/// Random simple graph with max degree `max_deg`.
inline PlanarGraph random_graph(int n, int m, int max_deg, std::mt19937_64& rng) {
    PlanarGraph g{n, {}};
    std::set<std::pair<int, int>> seen;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int tries = 0; tries < 40 * m && static_cast<int>(g.edges.size()) < m; ++tries) {
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (seen.count({u, v}) || deg[static_cast<std::size_t>(u)] >= max_deg ||
            deg[static_cast<std::size_t>(v)] >= max_deg)
            continue;
        seen.insert({u, v});
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
        g.edges.emplace_back(u, v);
    }
    return g;
}

/// Planar max-degree-3 graphs with at most 8 vertices: named families plus seeded random ones.
inline std::vector<NamedGraph> small_planar() {
    std::vector<NamedGraph> out{
        {"empty", {0, {}}},
        {"K1", {1, {}}},
        {"K2", path(2)},
        {"P3", path(3)},
        {"P5", path(5)},
        {"C3", cycle(3)},
        {"C4", cycle(4)},
        {"C7", cycle(7)},
        {"K13", star3()},
        {"K4", k4()},
        {"diamond", {4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}}},
        {"prism", prism()},
        {"cube", cube()},
        {"K33-minus-edge", {6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}}}},
        {"two-triangles", {6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}}},
        {"spider", {7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}}},
        {"K2+K1", {3, {{0, 1}}}},
    };
    std::mt19937_64 rng(20240611);
    int made = 0;
    while (made < 14) {
        int n = 5 + made % 4;
        int m = n - 1 + made % 5;
        PlanarGraph g = random_graph(n, m, 3, rng);
        if (!validate_planar_deg3(g).ok()) continue;
        out.push_back({"random-" + std::to_string(made), g});
        ++made;
    }
    return out;
}

}  // namespace rydmis::corpus
