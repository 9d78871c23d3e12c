#include "rydmis/energy.hpp"

#include <cctype>
#include "rydmis/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rydmis {

using series::CompensatedSum;

double QuadraticModel::energy(const SpinConfig& c) const {
    CompensatedSum s;
    for (int v = 0; v < n; ++v) {
        if (!c[v]) continue;
        s.add(linear[v]);
        for (int w = v + 1; w < n; ++w)
            if (c[w]) s.add(J(v, w));
    }
    return s.value();
}

bool lex_less(const SpinConfig& a, const SpinConfig& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == b[i]) continue;
        const SpinConfig& other = a[i] ? b : a;
        bool other_continues = std::any_of(other.begin() + static_cast<long>(i) + 1, other.end(),
                                           [](char x) { return x != 0; });
        // The list holding i is smaller unless the other list ends here.
        bool a_smaller = other_continues;
        return a[i] ? a_smaller : !a_smaller;
    }
    return false;
}

double energy_ud(const SpinConfig& c, const Graph& g, const std::vector<double>& delta, double U) {
    CompensatedSum s;
    for (int v = 0; v < g.size(); ++v)
        if (c[v]) s.add(-delta[v]);
    for (auto [u, v] : g.edge_list())
        if (c[u] && c[v]) s.add(U);
    return s.value();
}

double energy_ud(const SpinConfig& c, const Graph& g, double delta, double U) {
    return energy_ud(c, g, std::vector<double>(static_cast<std::size_t>(g.size()), delta), U);
}

ValidationReport ToyParams::check() const {
    ValidationReport r;
    if (!(W < U)) r.add("toy parameters need W < U");
    if (!(std::sqrt(2.0) * this->r < R && R < 2 * this->r)) r.add("toy parameters need sqrt(2) r < R < 2 r");
    if (!(eps > 0)) r.add("toy parameters need eps > 0");
    if (!(delta + W + 3 * eps < U)) r.add("toy parameters need delta + W + 3 eps < U");
    return r;
}

double toy_interaction(double dist, const ToyParams& p) {
    const double tol = 1e-9;
    if (dist <= p.r + tol) return p.U;
    if (dist <= p.R + tol) return p.W;
    return 0.0;
}

namespace {

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

QuadraticModel toy_model(const std::vector<Point>& pts, const std::vector<double>& delta, const ToyParams& p) {
    QuadraticModel m;
    m.n = static_cast<int>(pts.size());
    m.linear.resize(pts.size());
    m.pair.assign(pts.size() * pts.size(), 0.0);
    for (int v = 0; v < m.n; ++v) {
        m.linear[v] = -delta[v];
        for (int w = 0; w < m.n; ++w)
            if (v != w) m.pair[static_cast<std::size_t>(v) * m.n + w] = toy_interaction(distance(pts[v], pts[w]), p);
    }
    return m;
}

double energy_toy(const SpinConfig& c, const std::vector<Point>& pts, const std::vector<double>& delta,
                  const ToyParams& p) {
    CompensatedSum s;
    for (std::size_t v = 0; v < pts.size(); ++v) {
        if (!c[v]) continue;
        s.add(-delta[v]);
        for (std::size_t w = v + 1; w < pts.size(); ++w)
            if (c[w]) s.add(toy_interaction(distance(pts[v], pts[w]), p));
    }
    return s.value();
}

ToyInstance toy_corner_junction(int left, int right, int up, int arm) {
    if (left < 1 || right < 1 || up < 1 || arm < 1) throw std::invalid_argument("toy legs must be non-empty");
    ToyInstance t;
    t.points.push_back({0, 0});
    for (int i = 1; i <= left; ++i) t.points.push_back({-double(i), 0});
    for (int i = 1; i <= right; ++i) t.points.push_back({double(i), 0});
    for (int i = 1; i <= up; ++i) t.points.push_back({0, double(i)});
    t.corner = static_cast<int>(t.points.size());
    t.points.push_back({0, double(up + 1)});
    for (int i = 1; i <= arm; ++i) t.points.push_back({double(i), double(up + 1)});
    t.junction = 0;
    for (int v = 0; v < static_cast<int>(t.points.size()); ++v) {
        double dj = distance(t.points[v], t.points[t.junction]);
        double dc = distance(t.points[v], t.points[t.corner]);
        if (std::abs(dj - 1) < 1e-9) t.junction_neighbors.push_back(v);
        if (std::abs(dc - 1) < 1e-9) t.corner_neighbors.push_back(v);
    }
    return t;
}

std::vector<double> toy_uniform_detunings(const ToyInstance& t, const ToyParams& p) {
    return std::vector<double>(t.points.size(), p.delta);
}

std::vector<double> toy_repaired_detunings(const ToyInstance& t, const ToyParams& p) {
    auto d = toy_uniform_detunings(t, p);
    d[t.junction] = p.delta + p.W + 3 * p.eps;
    d[t.corner] = p.delta + p.W + 2 * p.eps;
    for (int v : t.junction_neighbors) d[v] = p.delta + p.W + p.eps;
    for (int v : t.corner_neighbors) d[v] = p.delta + p.W + p.eps;
    return d;
}

double rydberg_pair(double C, const Point& a, const Point& b) {
    double dx = a.x - b.x, dy = a.y - b.y;
    double r2 = dx * dx + dy * dy;
    return C / (r2 * r2 * r2);
}

double energy_ryd(const SpinConfig& c, const DetunedInstance& inst) {
    auto pts = inst.layout.points();
    CompensatedSum s;
    for (std::size_t v = 0; v < pts.size(); ++v) {
        if (!c[v]) continue;
        s.add(-inst.delta[v]);
        for (std::size_t w = v + 1; w < pts.size(); ++w)
            if (c[w]) s.add(rydberg_pair(inst.C, pts[v], pts[w]));
    }
    return s.value();
}

QuadraticModel rydberg_model(const DetunedInstance& inst) {
    auto pts = inst.layout.points();
    QuadraticModel m;
    m.n = static_cast<int>(pts.size());
    m.linear.resize(pts.size());
    m.pair.assign(pts.size() * pts.size(), 0.0);
    for (int v = 0; v < m.n; ++v) {
        m.linear[v] = -inst.delta[v];
        for (int w = 0; w < m.n; ++w)
            if (v != w) m.pair[static_cast<std::size_t>(v) * m.n + w] = rydberg_pair(inst.C, pts[v], pts[w]);
    }
    return m;
}

double nn_spacing_max(const AtomLayout& layout) {
    double best = 0;
    for (const auto& e : layout.edges)
        for (std::size_t c = 0; c + 1 < e.chain.size(); ++c)
            best = std::max(best, distance(to_point(layout.atoms[e.chain[c]].pos),
                                           to_point(layout.atoms[e.chain[c + 1]].pos)));
    return best > 0 ? best : 1.0;
}

double delta_max(const DetunedInstance& inst) { return inst.C / std::pow(nn_spacing_max(inst.layout), 6); }

std::string config_to_string(const SpinConfig& c) {
    std::string s;
    s.reserve(c.size());
    for (char x : c) s.push_back(x ? '1' : '0');
    return s;
}

SpinConfig parse_config(const std::string& text, std::size_t n) {
    SpinConfig c;
    for (char ch : text) {
        if (ch == '0' || ch == '1')
            c.push_back(static_cast<char>(ch - '0'));
        else if (!std::isspace(static_cast<unsigned char>(ch)))
            throw StageError("parse", std::string("config: unexpected character '") + ch + "'");
    }
    if (c.size() != n)
        throw StageError("parse", "config has " + std::to_string(c.size()) + " entries, expected " + std::to_string(n));
    return c;
}

}  // namespace rydmis
