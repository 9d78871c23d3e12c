#include "rydmis/graph.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include <numeric>

namespace rydmis {

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

// Components as vertex lists, lowest vertex first.
std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.size()), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.size(); ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        out.emplace_back();
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size()) - 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (int w : g.neighbors(v))
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = comp[static_cast<std::size_t>(s)];
                    stack.push_back(w);
                }
        }
    }
    return out;
}

// Number of faces traced by a rotation system restricted to one component.
int count_faces(const std::vector<int>& verts, const std::vector<std::vector<int>>& rot,
                const std::vector<int>& local) {
    // dart (v, slot) -> visited
    std::vector<std::vector<char>> seen(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
        seen[i].assign(rot[static_cast<std::size_t>(verts[i])].size(), 0);
    int faces = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t s = 0; s < seen[i].size(); ++s) {
            if (seen[i][s]) continue;
            ++faces;
            int v = verts[i];
            std::size_t slot = s;
            while (!seen[static_cast<std::size_t>(local[static_cast<std::size_t>(v)])][slot]) {
                seen[static_cast<std::size_t>(local[static_cast<std::size_t>(v)])][slot] = 1;
                int w = rot[static_cast<std::size_t>(v)][slot];
                const auto& rw = rot[static_cast<std::size_t>(w)];
                std::size_t back = 0;
                while (rw[back] != v) ++back;
                slot = (back + 1) % rw.size();
                v = w;
            }
        }
    }
    if (faces == 0) faces = 1;  // isolated vertex
    return faces;
}

}  // namespace

bool is_planar(const Graph& g, std::vector<std::vector<int>>* rotation) {
    const int n = g.size();
    const int m = g.edge_count();
    if (n >= 3 && m > 3 * n - 6) return false;
    if (n == 0) {
        if (rotation) rotation->clear();
        return true;
    }
    BGraph bg(static_cast<std::size_t>(n));
    int idx = 0;
    for (auto [u, v] : g.edge_list()) {
        auto e = boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), bg).first;
        boost::put(boost::edge_index, bg, e, idx++);
    }
    std::vector<std::vector<BEdge>> emb(static_cast<std::size_t>(n));
    bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                      boost::boyer_myrvold_params::embedding = &emb[0]);
    if (planar && rotation) {
        rotation->assign(static_cast<std::size_t>(n), {});
        for (int v = 0; v < n; ++v)
            for (const auto& e : emb[static_cast<std::size_t>(v)]) {
                int a = static_cast<int>(boost::source(e, bg));
                int b = static_cast<int>(boost::target(e, bg));
                (*rotation)[static_cast<std::size_t>(v)].push_back(a == v ? b : a);
            }
    }
    return planar;
}

std::optional<bool> is_planar_exhaustive(const Graph& g, std::uint64_t cap) {
    std::vector<int> local(static_cast<std::size_t>(g.size()), 0);
    for (const auto& verts : components(g)) {
        for (std::size_t i = 0; i < verts.size(); ++i) local[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
        int edges = 0;
        std::uint64_t space = 1;
        for (int v : verts) {
            edges += g.degree(v);
            for (int f = 2; f < g.degree(v); ++f) {
                space *= static_cast<std::uint64_t>(f);
                if (space > cap) return std::nullopt;
            }
        }
        edges /= 2;
        const int target = 2 - static_cast<int>(verts.size()) + edges;
        // Enumerate cyclic orders: fix first neighbor, permute the rest.
        std::vector<std::vector<int>> rot(static_cast<std::size_t>(g.size()));
        for (int v : verts) rot[static_cast<std::size_t>(v)] = g.neighbors(v);
        bool found = false;
        while (true) {
            if (count_faces(verts, rot, local) == target) {
                found = true;
                break;
            }
            // odometer over next_permutation of rot[v][1..]
            std::size_t i = 0;
            for (; i < verts.size(); ++i) {
                auto& r = rot[static_cast<std::size_t>(verts[i])];
                if (r.size() > 2 && std::next_permutation(r.begin() + 1, r.end())) break;
            }
            if (i == verts.size()) break;
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace rydmis
