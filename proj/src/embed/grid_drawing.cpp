#include "rydmis/grid_drawing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace rydmis {

namespace {

std::string pt(const GridPoint& p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

std::string edge_name(int u, int v) { return "{" + std::to_string(u) + "," + std::to_string(v) + "}"; }

// Paths: every component is a simple path (or isolated vertex); drawn on one row.
bool is_path_forest(const Graph& g) {
    if (g.edge_count() >= g.size() && g.size() > 0) return false;
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) > 2) return false;
    // acyclic: edges = vertices - components
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    int comps = 0;
    for (int s = 0; s < g.size(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++comps;
        std::vector<int> st{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            for (int w : g.neighbors(v))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    st.push_back(w);
                }
        }
    }
    return g.edge_count() == g.size() - comps;
}

GridDrawing path_forest_drawing(const Graph& g) {
    GridDrawing d;
    d.vertices.resize(static_cast<std::size_t>(g.size()));
    std::vector<char> placed(static_cast<std::size_t>(g.size()), 0);
    long x = 0;
    for (int s = 0; s < g.size(); ++s) {
        if (placed[static_cast<std::size_t>(s)] || g.degree(s) > 1) continue;
        // walk from endpoint s
        int prev = -1, v = s;
        while (v >= 0) {
            placed[static_cast<std::size_t>(v)] = 1;
            d.vertices[static_cast<std::size_t>(v)] = {x, 0};
            if (prev >= 0) d.edges.push_back({prev, v, {{x - 1, 0}, {x, 0}}});
            int next = -1;
            for (int w : g.neighbors(v))
                if (w != prev) next = w;
            prev = v;
            v = next;
            ++x;
        }
        ++x;  // gap between components
    }
    return canonicalize(std::move(d));
}

}  // namespace

std::vector<GridPoint> unit_steps(const std::vector<GridPoint>& path) {
    std::vector<GridPoint> out;
    if (path.empty()) return out;
    out.push_back(path.front());
    for (std::size_t i = 1; i < path.size(); ++i) {
        const GridPoint a = path[i - 1], b = path[i];
        if (a.x != b.x && a.y != b.y) throw std::invalid_argument("non-orthogonal step " + pt(a) + "->" + pt(b));
        if (a == b) throw std::invalid_argument("zero-length step at " + pt(a));
        long dx = (b.x > a.x) - (b.x < a.x), dy = (b.y > a.y) - (b.y < a.y);
        GridPoint c = a;
        while (c != b) {
            c.x += dx;
            c.y += dy;
            out.push_back(c);
        }
    }
    return out;
}

int path_length(const std::vector<GridPoint>& path) { return static_cast<int>(unit_steps(path).size()) - 1; }

ValidationReport validate_drawing(const GridDrawing& d, const PlanarGraph& g) {
    ValidationReport rep;
    if (static_cast<int>(d.vertices.size()) != g.n)
        rep.add("drawing has " + std::to_string(d.vertices.size()) + " vertices, graph has " + std::to_string(g.n));

    std::map<GridPoint, int> at_vertex;
    for (std::size_t v = 0; v < d.vertices.size(); ++v) {
        auto [it, fresh] = at_vertex.emplace(d.vertices[v], static_cast<int>(v));
        if (!fresh)
            rep.add("vertices " + std::to_string(it->second) + " and " + std::to_string(v) + " share coordinate " +
                    pt(d.vertices[v]));
    }

    std::set<std::pair<int, int>> want, have;
    for (auto [u, v] : g.edges) want.insert(std::minmax(u, v));

    std::map<GridPoint, std::string> owner;  // interior grid points
    std::map<int, std::set<std::pair<long, long>>> ports;
    const int nv = static_cast<int>(d.vertices.size());
    for (const auto& e : d.edges) {
        const std::string name = edge_name(e.u, e.v);
        if (e.u < 0 || e.v < 0 || e.u >= nv || e.v >= nv || e.u == e.v) {
            rep.add("edge " + name + " has invalid endpoints");
            continue;
        }
        if (!have.insert(std::minmax(e.u, e.v)).second) rep.add("edge " + name + " drawn twice");
        std::vector<GridPoint> steps;
        try {
            steps = unit_steps(e.path);
        } catch (const std::invalid_argument& ex) {
            rep.add("edge " + name + ": " + ex.what());
            continue;
        }
        if (steps.size() < 2) {
            rep.add("edge " + name + " has an empty path");
            continue;
        }
        if (steps.front() != d.vertices[static_cast<std::size_t>(e.u)] ||
            steps.back() != d.vertices[static_cast<std::size_t>(e.v)]) {
            rep.add("edge " + name + " path does not join its endpoint vertices");
            continue;
        }
        std::set<GridPoint> own;
        for (std::size_t i = 0; i < steps.size(); ++i) {
            if (!own.insert(steps[i]).second) rep.add("edge " + name + " revisits grid point " + pt(steps[i]));
            if (i == 0 || i + 1 == steps.size()) continue;
            auto hit = at_vertex.find(steps[i]);
            if (hit != at_vertex.end())
                rep.add("edge " + name + " passes through vertex " + std::to_string(hit->second) + " at " +
                        pt(steps[i]));
            auto [it, fresh] = owner.emplace(steps[i], name);
            if (!fresh) rep.add("edges " + it->second + " and " + name + " share grid point " + pt(steps[i]));
        }
        auto dir = [](GridPoint a, GridPoint b) { return std::make_pair(b.x - a.x, b.y - a.y); };
        if (!ports[e.u].insert(dir(steps[0], steps[1])).second)
            rep.add("vertex " + std::to_string(e.u) + " has two edges leaving in the same direction");
        if (!ports[e.v].insert(dir(steps[steps.size() - 1], steps[steps.size() - 2])).second)
            rep.add("vertex " + std::to_string(e.v) + " has two edges leaving in the same direction");
    }
    for (const auto& e : want)
        if (!have.count(e)) rep.add("edge " + edge_name(e.first, e.second) + " missing from drawing");
    for (const auto& e : have)
        if (!want.count(e)) rep.add("edge " + edge_name(e.first, e.second) + " not in graph");
    return rep;
}

DrawingStats drawing_stats(const GridDrawing& d) {
    DrawingStats s;
    if (d.vertices.empty()) return s;
    long x0 = d.vertices[0].x, x1 = x0, y0 = d.vertices[0].y, y1 = y0;
    auto grow = [&](const GridPoint& p) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    };
    for (const auto& p : d.vertices) grow(p);
    for (const auto& e : d.edges) {
        auto steps = unit_steps(e.path);
        for (const auto& p : steps) grow(p);
        s.total_length += static_cast<int>(steps.size()) - 1;
        for (std::size_t i = 1; i + 1 < steps.size(); ++i) {
            bool h1 = steps[i].y == steps[i - 1].y, h2 = steps[i + 1].y == steps[i].y;
            if (h1 != h2) ++s.bends;
        }
    }
    s.width = x1 - x0;
    s.height = y1 - y0;
    s.area = (s.width + 1) * (s.height + 1);
    s.area_per_vertex = static_cast<double>(s.area) / static_cast<double>(d.vertices.size());
    return s;
}

PlanarGraph drawing_graph(const GridDrawing& d) {
    PlanarGraph g;
    g.n = static_cast<int>(d.vertices.size());
    for (const auto& e : d.edges) g.edges.emplace_back(e.u, e.v);
    return g;
}

GridDrawing canonicalize(GridDrawing d) {
    for (auto& e : d.edges) {
        e.path = unit_steps(e.path);
        if (e.u > e.v) {
            std::swap(e.u, e.v);
            std::reverse(e.path.begin(), e.path.end());
        }
    }
    std::sort(d.edges.begin(), d.edges.end(),
              [](const DrawnEdge& a, const DrawnEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    return d;
}

GridDrawing grid_embed(const PlanarGraph& g) {
    auto rep = validate_planar_deg3(g);
    if (!rep.ok()) throw StageError("embed", "input graph invalid: " + rep.violations.front());
    Graph h = Graph::from_planar(g);
    if (is_path_forest(h)) return path_forest_drawing(h);
    std::string last;
    for (const auto& choice : detail::st_choices(h)) {
        try {
            GridDrawing d = canonicalize(detail::st_drawing(h, choice));
            if (validate_drawing(d, g).ok()) return d;
            last = "construction produced an invalid drawing";
        } catch (const std::exception& ex) {
            last = ex.what();
        }
    }
    throw StageError("embed", "embedding failure: " + last);
}

}  // namespace rydmis
