#include "rydmis/layout.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rydmis {

Point to_point(const RationalPoint& p) {
    return {boost::rational_cast<double>(p.x), boost::rational_cast<double>(p.y)};
}

std::string rational_to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    std::size_t used = 0;
    try {
        if (slash == std::string::npos) {
            long long n = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return Rational(n);
        }
        std::string a = s.substr(0, slash), b = s.substr(slash + 1);
        std::size_t ua = 0, ub = 0;
        long long n = std::stoll(a, &ua), d = std::stoll(b, &ub);
        if (ua != a.size() || ub != b.size() || d == 0) throw std::invalid_argument(s);
        return Rational(n, d);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

std::string to_string(AtomRole r) {
    switch (r) {
        case AtomRole::original_vertex: return "original-vertex";
        case AtomRole::grid_ancilla: return "grid-ancilla";
        case AtomRole::leg_ancilla: return "leg-ancilla";
        case AtomRole::irregular_vertex: return "irregular-vertex";
        case AtomRole::segment_ancilla: return "segment-ancilla";
    }
    return "?";
}

std::string to_string(SpecialKind k) {
    switch (k) {
        case SpecialKind::corner: return "corner";
        case SpecialKind::junction: return "junction";
        case SpecialKind::open_end: return "open-end";
        case SpecialKind::straight: return "straight";
        case SpecialKind::irregular: return "irregular";
        case SpecialKind::isolated: return "isolated";
    }
    return "?";
}

AtomRole parse_role(const std::string& s) {
    for (auto r : {AtomRole::original_vertex, AtomRole::grid_ancilla, AtomRole::leg_ancilla,
                   AtomRole::irregular_vertex, AtomRole::segment_ancilla})
        if (to_string(r) == s) return r;
    throw std::invalid_argument("unknown atom role: " + s);
}

SpecialKind parse_kind(const std::string& s) {
    for (auto k : {SpecialKind::corner, SpecialKind::junction, SpecialKind::open_end, SpecialKind::straight,
                   SpecialKind::irregular, SpecialKind::isolated})
        if (to_string(k) == s) return k;
    throw std::invalid_argument("unknown special kind: " + s);
}

int AtomLayout::kappa_sum() const {
    int s = 0;
    for (const auto& e : edges) s += e.kappa;
    return s;
}

std::vector<Point> AtomLayout::points() const {
    std::vector<Point> out;
    out.reserve(atoms.size());
    for (const auto& a : atoms) out.push_back(to_point(a.pos));
    return out;
}

void check_params(const LayoutParams& p) {
    if (p.k < 2) throw StageError("arrange", "k must be >= 2 (got " + std::to_string(p.k) + ")");
    if (p.phi < 1) throw StageError("arrange", "phi must be >= 1 (got " + std::to_string(p.phi) + ")");
    if (p.k > 100000 || p.phi > 100000) throw StageError("arrange", "k or phi too large");
    if (p.q() < 0) throw StageError("arrange", "q must be >= 0");
    if (4 * p.q() > 2 * p.k) throw StageError("arrange", "q too large for k: need 4q <= 2k");
}

namespace {

struct Step {
    long dx = 0;
    long dy = 0;
};

Step direction(const GridPoint& a, const GridPoint& b) { return {b.x - a.x, b.y - a.y}; }

RationalPoint along(const GridPoint& p, const Step& s, long g, const Rational& t) {
    return {Rational(p.x * g) + t * Rational(s.dx), Rational(p.y * g) + t * Rational(s.dy)};
}

SpecialKind kind_from_legs(const std::vector<Step>& legs) {
    switch (legs.size()) {
        case 0: return SpecialKind::isolated;
        case 1: return SpecialKind::open_end;
        case 2:
            return (legs[0].dx == -legs[1].dx && legs[0].dy == -legs[1].dy) ? SpecialKind::straight
                                                                          : SpecialKind::corner;
        case 3: return SpecialKind::junction;
        default: throw StageError("arrange", "degree-4 geometry at a special vertex (corrupt drawing)");
    }
}

}  // namespace

AtomLayout arrange_atoms(const GridDrawing& input, const LayoutParams& p) {
    check_params(p);
    GridDrawing d;
    try {
        d = canonicalize(input);
    } catch (const std::exception& e) {
        throw StageError("arrange", std::string("invalid drawing: ") + e.what());
    }
    auto report = validate_drawing(d, drawing_graph(d));
    if (!report.ok()) throw StageError("arrange", "invalid drawing: " + report.violations.front());

    const long g = p.g();
    const int q = p.q();
    AtomLayout L;
    L.params = p;
    L.drawing = d;
    L.vertex_count = static_cast<int>(d.vertices.size());

    std::vector<std::vector<Step>> legs(d.vertices.size());
    for (std::size_t v = 0; v < d.vertices.size(); ++v) {
        Atom a;
        a.pos = {Rational(d.vertices[v].x * g), Rational(d.vertices[v].y * g)};
        a.role = AtomRole::original_vertex;
        a.vertex = static_cast<int>(v);
        L.atoms.push_back(a);
    }
    // Kinds for grid-point specials, from drawing geometry.
    std::map<int, SpecialKind> kind_of;
    std::map<int, int> legs_of;

    for (std::size_t ei = 0; ei < d.edges.size(); ++ei) {
        const auto& e = d.edges[ei];
        auto pts = unit_steps(e.path);
        int ell = static_cast<int>(pts.size()) - 1;
        int irr_seg = ell % 2 == 0 ? ell / 2 - 1 : -1;
        if (irr_seg >= 0 && 2 * p.phi > p.k)
            throw StageError("arrange", "irregular block does not fit: need 2*phi <= k (phi=" +
                                            std::to_string(p.phi) + ", k=" + std::to_string(p.k) + ")");
        EdgeInfo info;
        info.u = e.u;
        info.v = e.v;
        info.length = ell;
        info.irregular = irr_seg >= 0;
        info.chain.push_back(e.u);
        legs[e.u].push_back(direction(pts[0], pts[1]));
        legs[e.v].push_back(direction(pts[ell], pts[ell - 1]));
        auto push = [&](RationalPoint pos, AtomRole role) {
            Atom a;
            a.pos = pos;
            a.role = role;
            a.edge = static_cast<int>(ei);
            L.atoms.push_back(a);
            info.chain.push_back(static_cast<int>(L.atoms.size()) - 1);
        };
        for (int s = 0; s < ell; ++s) {
            Step dir = direction(pts[s], pts[s + 1]);
            if (s != irr_seg) {
                for (int t = 1; t <= 2 * p.k; ++t) push(along(pts[s], dir, g, Rational(t)), AtomRole::segment_ancilla);
            } else {
                int lo = p.k - 2 * p.phi;
                for (int t = 1; t < lo; ++t) push(along(pts[s], dir, g, Rational(t)), AtomRole::segment_ancilla);
                Rational D = p.D();
                for (int j = 0; j <= 4 * p.phi; ++j) {
                    Rational t = Rational(lo) + D * Rational(j);
                    if (t == Rational(0) || t == Rational(g)) continue;
                    push(along(pts[s], dir, g, t), j == 2 * p.phi ? AtomRole::irregular_vertex : AtomRole::segment_ancilla);
                }
                for (int t = p.k + 2 * p.phi + 2; t <= 2 * p.k; ++t)
                    push(along(pts[s], dir, g, Rational(t)), AtomRole::segment_ancilla);
            }
            if (s + 1 < ell) {
                push(along(pts[s + 1], {0, 0}, g, Rational(0)), AtomRole::grid_ancilla);
                int atom = info.chain.back();
                std::vector<Step> l2{direction(pts[s + 1], pts[s]), direction(pts[s + 1], pts[s + 2])};
                kind_of[atom] = kind_from_legs(l2);
                legs_of[atom] = 2;
            }
        }
        info.chain.push_back(e.v);
        info.ancillas = static_cast<int>(info.chain.size()) - 2;
        L.edges.push_back(std::move(info));
    }
    for (std::size_t v = 0; v < d.vertices.size(); ++v) {
        kind_of[static_cast<int>(v)] = kind_from_legs(legs[v]);
        legs_of[static_cast<int>(v)] = static_cast<int>(legs[v].size());
    }

    // Specials in atom order.
    for (std::size_t i = 0; i < L.atoms.size(); ++i) {
        auto& a = L.atoms[i];
        bool special = a.role == AtomRole::original_vertex || a.role == AtomRole::grid_ancilla ||
                       a.role == AtomRole::irregular_vertex;
        if (!special) continue;
        Special s;
        s.atom = static_cast<int>(i);
        s.vertex = a.vertex;
        if (a.role == AtomRole::irregular_vertex) {
            s.kind = SpecialKind::irregular;
            s.legs = 2;
        } else {
            s.kind = kind_of.at(static_cast<int>(i));
            s.legs = legs_of.at(static_cast<int>(i));
        }
        a.special = static_cast<int>(L.specials.size());
        L.specials.push_back(s);
    }

    // Effective edges between consecutive specials.
    for (std::size_t ei = 0; ei < L.edges.size(); ++ei) {
        auto& info = L.edges[ei];
        int interior = 0;
        int last = 0;
        for (std::size_t c = 1; c < info.chain.size(); ++c) {
            int atom = info.chain[c];
            if (L.atoms[atom].special < 0) continue;
            if (c + 1 < info.chain.size()) ++interior;
            EffectiveEdge ee;
            ee.a = L.atoms[info.chain[last]].special;
            ee.b = L.atoms[atom].special;
            ee.edge = static_cast<int>(ei);
            ee.chain.assign(info.chain.begin() + last + 1, info.chain.begin() + static_cast<long>(c));
            if (static_cast<int>(ee.chain.size()) < 4 * q)
                throw StageError("arrange", "segment of " + std::to_string(ee.chain.size()) +
                                                " atoms is too short for q=" + std::to_string(q));
            L.eff_edges.push_back(std::move(ee));
            last = static_cast<int>(c);
        }
        info.kappa = interior / 2;
    }

    // Regions: A_i first, then B_j.
    for (std::size_t i = 0; i < L.specials.size(); ++i) {
        Region r;
        r.name = "A" + std::to_string(i);
        r.is_a = true;
        r.owner = static_cast<int>(i);
        r.atoms.push_back(L.specials[i].atom);
        L.regions.push_back(r);
    }
    for (std::size_t j = 0; j < L.eff_edges.size(); ++j) {
        const auto& ee = L.eff_edges[j];
        Region r;
        r.name = "B" + std::to_string(j);
        r.is_a = false;
        r.owner = static_cast<int>(j);
        int n = static_cast<int>(ee.chain.size());
        for (int c = 0; c < n; ++c) {
            int atom = ee.chain[c];
            if (c < 2 * q)
                L.regions[ee.a].atoms.push_back(atom);
            else if (c >= n - 2 * q)
                L.regions[ee.b].atoms.push_back(atom);
            else
                r.atoms.push_back(atom);
        }
        L.regions.push_back(r);
    }
    for (std::size_t r = 0; r < L.regions.size(); ++r)
        for (int atom : L.regions[r].atoms) {
            auto& a = L.atoms[atom];
            a.region = static_cast<int>(r);
            if (a.role == AtomRole::segment_ancilla && L.regions[r].is_a) a.role = AtomRole::leg_ancilla;
        }
    return L;
}

std::vector<SpecialInfo> classify_specials(const AtomLayout& layout) {
    auto ud = layout_udg(layout);
    std::vector<SpecialInfo> out;
    for (std::size_t i = 0; i < layout.atoms.size(); ++i) {
        const auto& a = layout.atoms[i];
        if (a.role != AtomRole::original_vertex && a.role != AtomRole::grid_ancilla &&
            a.role != AtomRole::irregular_vertex)
            continue;
        SpecialInfo s;
        s.atom = static_cast<int>(i);
        const auto& nb = ud.graph.neighbors(static_cast<int>(i));
        s.legs = static_cast<int>(nb.size());
        if (a.role == AtomRole::irregular_vertex) {
            s.kind = SpecialKind::irregular;
        } else {
            std::vector<Step> legs;
            for (int w : nb) {
                Rational dx = layout.atoms[w].pos.x - a.pos.x, dy = layout.atoms[w].pos.y - a.pos.y;
                auto sign = [](const Rational& r) { return r > Rational(0) ? 1L : (r < Rational(0) ? -1L : 0L); };
                legs.push_back({sign(dx), sign(dy)});
            }
            try {
                s.kind = kind_from_legs(legs);
            } catch (const StageError&) {
                throw StageError("classify", "degree-4 geometry at atom " + std::to_string(i) + " (corrupt layout)");
            }
        }
        out.push_back(s);
    }
    return out;
}

SpecialCensus census(const AtomLayout& layout) {
    SpecialCensus c;
    for (const auto& s : layout.specials) {
        switch (s.kind) {
            case SpecialKind::corner: ++c.corners; break;
            case SpecialKind::junction: ++c.junctions; break;
            case SpecialKind::open_end: ++c.open_ends; break;
            case SpecialKind::straight: ++c.straight; break;
            case SpecialKind::irregular: ++c.irregular; break;
            case SpecialKind::isolated: ++c.isolated; break;
        }
    }
    return c;
}

EffectiveGraph effective_graph(const AtomLayout& layout) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : layout.eff_edges) edges.emplace_back(e.a, e.b);
    EffectiveGraph eg{Graph::from_edges(static_cast<int>(layout.specials.size()), edges), {}, 0};
    for (const auto& e : layout.edges) eg.kappa.push_back(e.kappa);
    eg.kappa_sum = layout.kappa_sum();
    return eg;
}

UnitDiskGraph layout_udg(const AtomLayout& layout) { return unit_disk_graph(layout.points(), kLayoutRadius); }

std::vector<int> odd_segments(const AtomLayout& layout) {
    std::vector<int> out;
    for (std::size_t j = 0; j < layout.eff_edges.size(); ++j)
        if (layout.b_region(static_cast<int>(j)).atoms.size() % 2 != 0) out.push_back(static_cast<int>(j));
    return out;
}

namespace {

Rational dist2(const RationalPoint& a, const RationalPoint& b) {
    Rational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

}  // namespace

ValidationReport audit_layout(const AtomLayout& layout) {
    ValidationReport rep;
    const auto& p = layout.params;
    Rational D = p.D();
    for (std::size_t ei = 0; ei < layout.edges.size(); ++ei) {
        const auto& e = layout.edges[ei];
        std::string tag = "edge " + std::to_string(e.u) + "-" + std::to_string(e.v);
        int expected = (e.length - 1) + 2 * p.k * e.length - (e.length % 2 == 0 ? 1 : 0);
        if (e.ancillas != expected) rep.add(tag + ": ancilla count " + std::to_string(e.ancillas));
        if (e.ancillas % 2 != 0) rep.add(tag + ": odd ancilla count");
        int d_gaps = 0;
        for (std::size_t c = 0; c + 1 < e.chain.size(); ++c) {
            Rational s = dist2(layout.atoms[e.chain[c]].pos, layout.atoms[e.chain[c + 1]].pos);
            if (s == Rational(1)) continue;
            if (s == D * D && e.irregular) {
                ++d_gaps;
                continue;
            }
            rep.add(tag + ": bad spacing at chain position " + std::to_string(c));
        }
        if (d_gaps != (e.irregular ? 4 * p.phi : 0)) rep.add(tag + ": " + std::to_string(d_gaps) + " D-gaps");
    }
    std::vector<int> seen(layout.atoms.size(), 0);
    for (const auto& r : layout.regions)
        for (int a : r.atoms) ++seen[a];
    for (std::size_t a = 0; a < seen.size(); ++a)
        if (seen[a] != 1) rep.add("atom " + std::to_string(a) + " is in " + std::to_string(seen[a]) + " regions");
    for (std::size_t i = 0; i < layout.specials.size(); ++i) {
        std::size_t want = static_cast<std::size_t>(2 * p.q() * layout.specials[i].legs + 1);
        if (layout.regions[i].atoms.size() != want) rep.add("A" + std::to_string(i) + " has wrong size");
    }
    for (int j : odd_segments(layout)) rep.add("B" + std::to_string(j) + " has odd length");
    // The unit-disk graph must be exactly the subdivided drawing.
    auto ud = layout_udg(layout);
    std::set<std::pair<int, int>> chain_edges;
    for (const auto& e : layout.edges)
        for (std::size_t c = 0; c + 1 < e.chain.size(); ++c)
            chain_edges.insert(std::minmax(e.chain[c], e.chain[c + 1]));
    auto ud_edges = ud.graph.edge_list();
    std::set<std::pair<int, int>> ud_set(ud_edges.begin(), ud_edges.end());
    if (ud_set != chain_edges) rep.add("unit-disk graph differs from the subdivided drawing");
    return rep;
}

}  // namespace rydmis
