// Orthogonal drawing by st-ordering: one row per vertex, one column per open edge.
// Dummy edges (added to reach biconnectivity) keep a column but are never drawn.
#include "rydmis/grid_drawing.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/make_biconnected_planar.hpp>
#include <boost/graph/make_connected.hpp>
#include <boost/property_map/property_map.hpp>

#include <algorithm>
#include <list>
#include <map>
#include <set>
#include <stdexcept>

namespace rydmis::detail {

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;
using EmbeddingStorage = std::vector<std::vector<BEdge>>;
using Embedding = boost::iterator_property_map<EmbeddingStorage::iterator,
                                               boost::property_map<BGraph, boost::vertex_index_t>::type>;

struct Augmented {
    Graph h;
    std::set<std::pair<int, int>> real;
    std::vector<std::vector<int>> rotation;
};

void reindex(BGraph& bg) {
    int i = 0;
    boost::graph_traits<BGraph>::edge_iterator ei, ee;
    for (std::tie(ei, ee) = boost::edges(bg); ei != ee; ++ei) boost::put(boost::edge_index, bg, *ei, i++);
}

Augmented augment(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.size());
    BGraph bg(n);
    for (auto [u, v] : g.edge_list()) boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), bg);
    reindex(bg);
    boost::make_connected(bg);
    reindex(bg);
    EmbeddingStorage storage(n);
    Embedding emb(storage.begin(), boost::get(boost::vertex_index, bg));
    if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                             boost::boyer_myrvold_params::embedding = emb))
        throw std::runtime_error("graph is not planar");
    boost::make_biconnected_planar(bg, emb);
    reindex(bg);

    std::set<std::pair<int, int>> all;
    boost::graph_traits<BGraph>::edge_iterator ei, ee;
    for (std::tie(ei, ee) = boost::edges(bg); ei != ee; ++ei) {
        int a = static_cast<int>(boost::source(*ei, bg)), b = static_cast<int>(boost::target(*ei, bg));
        if (a != b) all.insert(std::minmax(a, b));
    }
    Augmented out;
    out.h = Graph::from_edges(g.size(), std::vector<std::pair<int, int>>(all.begin(), all.end()));
    for (auto e : g.edge_list()) out.real.insert(e);
    if (!is_planar(out.h, &out.rotation)) throw std::runtime_error("augmentation lost planarity");
    return out;
}

}  // namespace

std::vector<int> st_numbering(const Graph& g, int s, int t) {
    const int n = g.size();
    auto ix = [](int v) { return static_cast<std::size_t>(v); };
    if (!g.adjacent(s, t)) throw std::runtime_error("st-numbering needs an edge {s,t}");
    std::vector<int> pre(ix(n), -1), parent(ix(n), -1), low(ix(n));
    std::vector<int> preorder;
    // iterative DFS from s; t is the first child
    std::vector<std::pair<int, std::size_t>> stack;
    auto nbrs = [&](int v) {
        std::vector<int> a = g.neighbors(v);
        if (v == s) {
            a.erase(std::find(a.begin(), a.end(), t));
            a.insert(a.begin(), t);
        }
        return a;
    };
    std::vector<std::vector<int>> order_nb(ix(n));
    for (int v = 0; v < n; ++v) order_nb[ix(v)] = nbrs(v);
    pre[ix(s)] = 0;
    low[ix(s)] = s;
    preorder.push_back(s);
    stack.emplace_back(s, 0);
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i < order_nb[ix(v)].size()) {
            int w = order_nb[ix(v)][i++];
            if (pre[ix(w)] < 0) {
                pre[ix(w)] = static_cast<int>(preorder.size());
                preorder.push_back(w);
                parent[ix(w)] = v;
                low[ix(w)] = w;
                stack.emplace_back(w, 0);
            } else if (w != parent[ix(v)] && pre[ix(w)] < pre[ix(low[ix(v)])]) {
                low[ix(v)] = w;
            }
        } else {
            int done = v;
            stack.pop_back();
            if (!stack.empty()) {
                int p = stack.back().first;
                if (pre[ix(low[ix(done)])] < pre[ix(low[ix(p)])]) low[ix(p)] = low[ix(done)];
            }
        }
    }
    if (static_cast<int>(preorder.size()) != n) throw std::runtime_error("st-numbering: graph not connected");
    if (preorder[1] != t) throw std::runtime_error("st-numbering: t is not the first child");

    std::list<int> L{s, t};
    std::vector<std::list<int>::iterator> pos(ix(n));
    pos[ix(s)] = L.begin();
    pos[ix(t)] = std::next(L.begin());
    std::vector<char> minus(ix(n), 0);
    minus[ix(s)] = 1;
    for (std::size_t k = 2; k < preorder.size(); ++k) {
        int v = preorder[k];
        int p = parent[ix(v)];
        if (minus[ix(low[ix(v)])]) {
            pos[ix(v)] = L.insert(pos[ix(p)], v);
            minus[ix(p)] = 0;
        } else {
            pos[ix(v)] = L.insert(std::next(pos[ix(p)]), v);
            minus[ix(p)] = 1;
        }
    }
    return {L.begin(), L.end()};
}

std::vector<StChoice> st_choices(const Graph& g) {
    std::vector<StChoice> out;
    if (g.size() < 3) return out;
    Augmented aug = augment(g);
    for (auto [u, v] : aug.h.edge_list())
        for (auto [s, t] : {std::make_pair(u, v), std::make_pair(v, u)})
            for (bool m : {false, true}) out.push_back({s, t, m});
    // the exhaustive sweep is the fallback for small graphs only
    if (g.size() > 8 && out.size() > 8) out.resize(8);
    return out;
}

GridDrawing st_drawing(const Graph& g, const StChoice& choice) {
    Augmented aug = augment(g);
    const Graph& h = aug.h;
    const int n = h.size();
    auto ix = [](int v) { return static_cast<std::size_t>(v); };
    auto rot = aug.rotation;
    if (choice.mirror)
        for (auto& r : rot) std::reverse(r.begin(), r.end());

    std::vector<int> order = st_numbering(h, choice.s, choice.t);
    std::vector<int> num(ix(n));
    for (int i = 0; i < n; ++i) num[ix(order[ix(i)])] = i;

    // edges keyed by (lo, hi) in st-order
    std::map<std::pair<int, int>, int> eid;
    struct E {
        int from, to;
        bool real;
        int col = -1;
    };
    std::vector<E> edges;
    for (auto [u, v] : h.edge_list()) {
        int a = num[ix(u)] < num[ix(v)] ? u : v, b = a == u ? v : u;
        eid[{a, b}] = static_cast<int>(edges.size());
        edges.push_back({a, b, aug.real.count({std::min(u, v), std::max(u, v)}) > 0});
    }
    auto edge_of = [&](int v, int w) {
        return num[ix(v)] < num[ix(w)] ? eid.at({v, w}) : eid.at({w, v});
    };

    std::list<int> columns;
    std::vector<std::list<int>::iterator> col_pos;
    auto new_col = [&](std::list<int>::iterator before) {
        int c = static_cast<int>(col_pos.size());
        col_pos.push_back(columns.insert(before, c));
        return c;
    };
    std::vector<int> vcol(ix(n), -1);
    std::vector<int> open;

    for (int i = 0; i < n; ++i) {
        const int v = order[ix(i)];
        std::vector<int> outs;  // neighbor vertices, left to right
        std::size_t a = 0, b = 0;
        std::vector<int> ins;   // edge ids, left to right
        if (i == 0) {
            auto r = rot[ix(v)];
            std::rotate(r.begin(), std::find(r.begin(), r.end(), choice.t), r.end());
            outs = r;
        } else {
            std::vector<std::size_t> at;
            for (std::size_t k = 0; k < open.size(); ++k)
                if (edges[ix(open[k])].to == v) at.push_back(k);
            if (at.empty()) throw std::runtime_error("vertex without incoming edge");
            a = at.front();
            b = at.back();
            if (b - a + 1 != at.size()) throw std::runtime_error("incoming edges not consecutive");
            for (std::size_t k = a; k <= b; ++k) ins.push_back(open[k]);
            auto r = rot[ix(v)];
            int left = edges[ix(ins.front())].from;
            std::rotate(r.begin(), std::find(r.begin(), r.end(), left), r.end());
            std::size_t k = 1;
            while (k < r.size() && num[ix(r[k])] > i) outs.push_back(r[k++]);
            for (std::size_t m = ins.size() - 1; m >= 1; --m, ++k)
                if (k >= r.size() || r[k] != edges[ix(ins[m])].from)
                    throw std::runtime_error("rotation inconsistent with upward order");
            if (k != r.size()) throw std::runtime_error("rotation inconsistent with upward order");
        }

        std::vector<int> real_in;
        for (int e : ins)
            if (edges[ix(e)].real) real_in.push_back(e);
        if (real_in.size() > 3) throw std::runtime_error("degree above 3");
        bool west_free = real_in.size() <= 2, east_free = real_in.size() <= 1;
        if (real_in.empty()) {
            if (i == 0)
                vcol[ix(v)] = new_col(columns.end());
            else
                vcol[ix(v)] = new_col(std::next(col_pos[ix(edges[ix(ins.front())].col)]));
        } else {
            vcol[ix(v)] = edges[ix(real_in[real_in.size() == 3 ? 1 : 0])].col;
        }

        std::vector<int> out_ids;
        for (int w : outs) out_ids.push_back(edge_of(v, w));
        std::vector<std::size_t> real_out;
        for (std::size_t k = 0; k < out_ids.size(); ++k)
            if (edges[ix(out_ids[k])].real) real_out.push_back(k);
        // which out edge continues straight up (north port)
        long north = -1;
        if (real_out.size() == 1) {
            north = static_cast<long>(real_out[0]);
        } else if (real_out.size() == 2) {
            if (west_free)
                north = static_cast<long>(real_out[1]);
            else if (east_free)
                north = static_cast<long>(real_out[0]);
            else
                throw std::runtime_error("no free port");
        } else if (real_out.size() == 3) {
            if (!west_free || !east_free) throw std::runtime_error("no free port");
            north = static_cast<long>(real_out[1]);
        }
        auto cv = col_pos[ix(vcol[ix(v)])];
        auto after = cv;
        for (std::size_t k = 0; k < out_ids.size(); ++k) {
            E& e = edges[ix(out_ids[k])];
            if (static_cast<long>(k) == north) {
                e.col = vcol[ix(v)];
            } else if (north >= 0 && static_cast<long>(k) < north) {
                e.col = new_col(cv);
            } else {
                e.col = new_col(std::next(after));
                after = col_pos[ix(e.col)];
            }
        }
        if (i == 0) {
            open = out_ids;
        } else {
            open.erase(open.begin() + static_cast<long>(a), open.begin() + static_cast<long>(b) + 1);
            open.insert(open.begin() + static_cast<long>(a), out_ids.begin(), out_ids.end());
        }
    }
    if (!open.empty()) throw std::runtime_error("open edges left after the sink");

    std::vector<long> xcol(col_pos.size());
    long rank = 0;
    for (int c : columns) xcol[ix(c)] = rank++;

    GridDrawing d;
    d.vertices.resize(ix(n));
    for (int v = 0; v < n; ++v) d.vertices[ix(v)] = {xcol[ix(vcol[ix(v)])], num[ix(v)]};
    for (const E& e : edges) {
        if (!e.real) continue;
        const GridPoint pu = d.vertices[ix(e.from)], pv = d.vertices[ix(e.to)];
        const long xe = xcol[ix(e.col)];
        std::vector<GridPoint> path{pu};
        if (xe != pu.x) path.push_back({xe, pu.y});
        if (pv.y != pu.y) path.push_back({xe, pv.y});
        if (xe != pv.x) path.push_back(pv);
        d.edges.push_back({e.from, e.to, unit_steps(path)});
    }

    // drop columns that carry no grid point
    std::set<long> used;
    for (const auto& p : d.vertices) used.insert(p.x);
    for (const auto& e : d.edges)
        for (const auto& p : e.path) used.insert(p.x);
    std::map<long, long> remap;
    for (long x : used) remap.emplace(x, static_cast<long>(remap.size()));
    for (auto& p : d.vertices) p.x = remap.at(p.x);
    for (auto& e : d.edges)
        for (auto& p : e.path) p.x = remap.at(p.x);
    return d;
}

}  // namespace rydmis::detail
