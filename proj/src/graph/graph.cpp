#include "rydmis/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace rydmis {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range");
        if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& a : g.adj_) {
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw std::invalid_argument("duplicate edge");
    }
    g.edge_count_ = static_cast<int>(edges.size());
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = neighbors(u);
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < size(); ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool is_independent(const Graph& g, const std::vector<int>& members) {
    std::vector<char> in(static_cast<std::size_t>(g.size()), 0);
    for (int v : members) {
        if (v < 0 || v >= g.size() || in[static_cast<std::size_t>(v)]) return false;
        in[static_cast<std::size_t>(v)] = 1;
    }
    for (int v : members)
        for (int w : g.neighbors(v))
            if (in[static_cast<std::size_t>(w)]) return false;
    return true;
}

bool is_maximal_independent(const Graph& g, const std::vector<int>& members) {
    if (!is_independent(g, members)) return false;
    std::vector<char> blocked(static_cast<std::size_t>(g.size()), 0);
    for (int v : members) {
        blocked[static_cast<std::size_t>(v)] = 1;
        for (int w : g.neighbors(v)) blocked[static_cast<std::size_t>(w)] = 1;
    }
    return std::all_of(blocked.begin(), blocked.end(), [](char b) { return b != 0; });
}

ValidationReport validate_planar_deg3(const PlanarGraph& g) {
    ValidationReport rep;
    if (g.n < 0) {
        rep.add("negative vertex count");
        return rep;
    }
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> clean;
    std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
    for (auto [u, v] : g.edges) {
        if (u < 0 || v < 0 || u >= g.n || v >= g.n) {
            rep.add("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
            continue;
        }
        if (u == v) {
            rep.add("self-loop at vertex " + std::to_string(u));
            continue;
        }
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) {
            rep.add("duplicate edge (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                    ")");
            continue;
        }
        clean.emplace_back(key.first, key.second);
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    for (int v = 0; v < g.n; ++v)
        if (deg[static_cast<std::size_t>(v)] > 3)
            rep.add("vertex " + std::to_string(v) + " has degree " +
                    std::to_string(deg[static_cast<std::size_t>(v)]) + " > 3");
    Graph h = Graph::from_edges(g.n, clean);
    if (!is_planar(h)) rep.add("graph is not planar");
    return rep;
}

}  // namespace rydmis
