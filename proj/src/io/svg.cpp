#include "rydmis/io.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>

namespace rydmis {

namespace {

using Rgb = std::array<int, 3>;

// Five-stop ramp from dark blue through teal to yellow.
Rgb ramp(double t) {
    static const std::array<Rgb, 5> stops{{{68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};
    t = std::clamp(t, 0.0, 1.0) * (stops.size() - 1);
    std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(t), stops.size() - 2);
    double f = t - static_cast<double>(i);
    Rgb c;
    for (int k = 0; k < 3; ++k) c[k] = static_cast<int>(std::lround(stops[i][k] + f * (stops[i + 1][k] - stops[i][k])));
    return c;
}

std::string hex(const Rgb& c) { return fmt::format("#{:02x}{:02x}{:02x}", c[0], c[1], c[2]); }

std::string role_colour(AtomRole r) {
    switch (r) {
        case AtomRole::original_vertex: return "#d62728";
        case AtomRole::grid_ancilla: return "#1f77b4";
        case AtomRole::irregular_vertex: return "#9467bd";
        case AtomRole::leg_ancilla:
        case AtomRole::segment_ancilla: return "#7f7f7f";
    }
    return "#000000";
}

}  // namespace

std::string render_svg(const AtomLayout& layout, const std::vector<double>* detunings, const SvgOptions& opt,
                       const std::string& note) {
    const double s = opt.scale, margin = 2 * s;
    auto pts = layout.points();
    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    if (!pts.empty()) {
        minx = maxx = pts[0].x;
        miny = maxy = pts[0].y;
        for (const auto& p : pts) {
            minx = std::min(minx, p.x), maxx = std::max(maxx, p.x);
            miny = std::min(miny, p.y), maxy = std::max(maxy, p.y);
        }
    }
    const double legend = detunings && !pts.empty() ? 70 : 0;
    const double width = (maxx - minx) * s + 2 * margin;
    const double height = (maxy - miny) * s + 2 * margin + legend;
    auto X = [&](double x) { return (x - minx) * s + margin; };
    auto Y = [&](double y) { return (maxy - y) * s + margin; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.2f}\" height=\"{:.2f}\" viewBox=\"0 0 {:.2f} {:.2f}\">\n",
                       width, height, width, height);
    if (!note.empty()) out += fmt::format("<!-- {} -->\n", note);
    out += "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    out += "<g id=\"regions\" fill=\"#4f8fd8\" fill-opacity=\"0.18\" stroke=\"none\">\n";
    for (const auto& r : layout.regions) {
        if (!r.is_a) continue;
        for (int a : r.atoms)
            out += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\"/>\n",
                               X(pts[a].x) - 0.45 * s, Y(pts[a].y) - 0.45 * s, 0.9 * s, 0.9 * s);
    }
    out += "</g>\n";

    auto ud = layout_udg(layout);
    out += "<g id=\"links\" stroke=\"#9a9a9a\" stroke-width=\"2\">\n";
    for (auto [v, w] : ud.graph.edge_list())
        out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", X(pts[v].x), Y(pts[v].y),
                           X(pts[w].x), Y(pts[w].y));
    out += "</g>\n";

    if (opt.blockade) {
        out += "<g id=\"blockade\" fill=\"none\" stroke=\"#c0c0c0\" stroke-dasharray=\"3,3\">\n";
        for (const auto& p : pts)
            out += fmt::format("<ellipse cx=\"{:.2f}\" cy=\"{:.2f}\" rx=\"{:.2f}\" ry=\"{:.2f}\"/>\n", X(p.x), Y(p.y),
                               kLayoutRadius * s / 2, kLayoutRadius * s / 2);
        out += "</g>\n";
    }

    double lo = 0, hi = 1;
    if (detunings && !detunings->empty()) {
        auto [a, b] = std::minmax_element(detunings->begin(), detunings->end());
        lo = *a, hi = *b;
    }
    auto t_of = [&](double v) { return hi > lo ? (v - lo) / (hi - lo) : 0.5; };
    out += "<g id=\"atoms\" stroke=\"black\" stroke-width=\"1\">\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& a = layout.atoms[i];
        std::string fill = detunings ? hex(ramp(t_of((*detunings)[i]))) : role_colour(a.role);
        double r = (a.special >= 0 ? 0.22 : 0.16) * s;
        out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"{:.2f}\" fill=\"{}\"/>\n", X(pts[i].x), Y(pts[i].y),
                           r, fill);
    }
    out += "</g>\n";

    if (detunings && !pts.empty()) {
        const int steps = 10;
        const double x0 = margin, y0 = height - legend + 15, w = std::max(width - 2 * margin, 200.0) / steps;
        out += "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
        for (int k = 0; k < steps; ++k)
            out += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"14\" fill=\"{}\"/>\n",
                               x0 + k * w, y0, w, hex(ramp((k + 0.5) / steps)));
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\">{:.6f}</text>\n", x0, y0 + 30, lo);
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">{:.6f}</text>\n", x0 + steps * w, y0 + 30, hi);
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">detuning</text>\n", x0 + steps * w / 2,
                           y0 + 30);
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace rydmis
