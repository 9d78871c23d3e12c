#include "rydmis/compiler.hpp"

#include "rydmis/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rydmis {

namespace {

struct Leg {
    std::vector<int> atoms;  // ordered outward from the special, 2q atoms
    int dx = 0;
    int dy = 0;
};

int sgn(const Rational& r) { return r > Rational(0) ? 1 : (r < Rational(0) ? -1 : 0); }

std::vector<Leg> legs_of(const AtomLayout& L, int special) {
    const int q = L.params.q();
    const auto& centre = L.atoms[L.specials[special].atom].pos;
    std::vector<Leg> out;
    for (const auto& ee : L.eff_edges) {
        for (int side = 0; side < 2; ++side) {
            if ((side == 0 ? ee.a : ee.b) != special) continue;
            Leg leg;
            const int n = static_cast<int>(ee.chain.size());
            for (int x = 0; x < 2 * q && x < n; ++x) leg.atoms.push_back(side == 0 ? ee.chain[x] : ee.chain[n - 1 - x]);
            if (!leg.atoms.empty()) {
                const auto& p = L.atoms[leg.atoms.front()].pos;
                leg.dx = sgn(p.x - centre.x);
                leg.dy = sgn(p.y - centre.y);
            }
            out.push_back(std::move(leg));
        }
    }
    return out;
}

std::string fmt_num(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

void assign_legs(const AtomLayout& L, const Targets& t, double C, std::vector<double>& delta) {
    const int q = L.params.q();
    auto corner = leg_offsets_corner(q);
    auto junction = leg_offsets_junction(q);
    for (std::size_t i = 0; i < L.specials.size(); ++i) {
        auto legs = legs_of(L, static_cast<int>(i));
        auto kind = L.specials[i].kind;
        for (std::size_t l = 0; l < legs.size(); ++l) {
            const std::vector<double>* offs = nullptr;
            if (kind == SpecialKind::corner) offs = &corner;
            if (kind == SpecialKind::junction) {
                bool collinear = false;
                for (std::size_t o = 0; o < legs.size(); ++o)
                    if (o != l && legs[o].dx == -legs[l].dx && legs[o].dy == -legs[l].dy) collinear = true;
                offs = collinear ? &junction.x : &junction.y;
            }
            for (std::size_t x = 0; x < legs[l].atoms.size(); ++x)
                delta[legs[l].atoms[x]] = C * t.delta_inf + (offs ? C * (*offs)[x] : 0.0);
        }
    }
}

// Segment energy per sector; with_cross adds E_{A_a,B} + E_{A_b,B}.
double segment(const StructureEnergies& se, std::size_t j, int idx, bool with_cross) {
    return se.b[j][idx] + (with_cross ? se.ab_a[j][idx] + se.ab_b[j][idx] : 0.0);
}

// Δ^eff_i per special; the special's own detuning enters E¹_A linearly.
std::vector<double> delta_eff_parts(const DetunedInstance& inst, const StructureEnergies& se, bool with_cross) {
    const auto& L = inst.layout;
    std::vector<double> out(L.specials.size());
    for (std::size_t i = 0; i < L.specials.size(); ++i) out[i] = se.a[i][0] - se.a[i][1];
    for (std::size_t j = 0; j < L.eff_edges.size(); ++j) {
        const auto& ee = L.eff_edges[j];
        out[ee.a] -= segment(se, j, 2, with_cross) - segment(se, j, 0, with_cross);
        out[ee.b] -= segment(se, j, 1, with_cross) - segment(se, j, 0, with_cross);
    }
    return out;
}

std::vector<double> u_eff_parts(const StructureEnergies& se, bool with_cross) {
    std::vector<double> out;
    for (std::size_t j = 0; j < se.b.size(); ++j)
        out.push_back(segment(se, j, 3, with_cross) + segment(se, j, 0, with_cross) - segment(se, j, 2, with_cross) -
                      segment(se, j, 1, with_cross));
    return out;
}

WindowCheck check(std::string name, double value, double lo, double hi, bool ok, std::string remedy) {
    return {std::move(name), value, lo, hi, ok, ok ? std::string() : std::move(remedy)};
}

}  // namespace

bool CompileReport::feasible() const {
    return std::all_of(checks.begin(), checks.end(), [](const WindowCheck& c) { return c.ok; });
}

std::string CompileReport::binding() const {
    for (const auto& c : checks)
        if (!c.ok) {
            std::string s = c.name + " = " + fmt_num(c.value) + " outside [" + fmt_num(c.lo) + ", " + fmt_num(c.hi) + "]";
            if (!c.remedy.empty()) s += " (remedy: " + c.remedy + ")";
            return s;
        }
    return {};
}

double EffectiveModel::homogeneity() const {
    if (delta_eff_i.empty()) return 0;
    auto [lo, hi] = std::minmax_element(delta_eff_i.begin(), delta_eff_i.end());
    return *hi - *lo;
}

double EffectiveModel::threshold(int a) const { return -(eff.a_prime(a) - 0.5) * delta_eff + xi; }

double EffectiveModel::predicted_ground(int a) const { return xi - eff.a_prime(a) * delta_eff; }

double threshold(int a, const EffectiveModel& m) { return m.threshold(a); }

CompiledInstance analyse(DetunedInstance inst) {
    const auto& L = inst.layout;
    const double C = inst.C;
    const auto& t = inst.targets;
    CompiledInstance ci;
    auto& m = ci.model;
    m.eff = effective_graph(L);
    m.delta_eff = C * t.delta_eff;

    auto se = structure_energies(inst);
    m.delta_eff_i = delta_eff_parts(inst, se, true);
    m.u_eff_ij = u_eff_parts(se, true);
    m.delta_eff_region = delta_eff_parts(inst, se, false);
    m.u_eff_region = u_eff_parts(se, false);
    m.u_eff = m.u_eff_ij.empty() ? 0.0 : *std::min_element(m.u_eff_ij.begin(), m.u_eff_ij.end());

    std::vector<int> zeros(L.specials.size(), 0);
    m.xi = energy_ryd(sector_config(L, zeros, 0), inst);
    m.xi_shifted = energy_ryd(sector_config(L, zeros, 1), inst);
    series::CompensatedSum xd;
    for (const auto& a : se.a) xd.add(a[0]);
    for (std::size_t j = 0; j < L.eff_edges.size(); ++j) {
        xd.add(se.ab_a[j][0]);
        xd.add(se.ab_b[j][0]);
        xd.add(se.b[j][0]);
    }
    m.xi_decomposed = xd.value();
    m.e_dist = C * series::e_dist_bound(L.params.k).value;
    m.eta = static_cast<double>(L.atoms.size()) * m.e_dist;

    // Windows.
    auto& r = ci.report;
    const int q = L.params.q();
    const double dmax = delta_max(inst);
    const double maxi = C * series::maximality_bound().value;
    const double dmin = C * series::domain_wall_merge_bound().value;
    const bool has_irregular = census(L).irregular > 0;
    const bool has_junction = census(L).junctions > 0;
    r.checks.push_back(check("q", q, 1, 1e9, q >= 1, "larger k (q = floor(k/8))"));
    auto odd = odd_segments(L);
    r.checks.push_back(check("odd B segments", static_cast<double>(odd.size()), 0, 0, odd.empty(),
                             "irregular segments need odd k"));
    int arg_hi = 0, arg_lo = 0, arg_min = -1;
    double lo_chain = 1e300;
    for (std::size_t v = 0; v < inst.delta.size(); ++v) {
        if (inst.delta[v] > inst.delta[arg_hi]) arg_hi = static_cast<int>(v);
        if (inst.delta[v] < inst.delta[arg_lo]) arg_lo = static_cast<int>(v);
        if (L.atoms[v].special < 0 && inst.delta[v] < lo_chain) {
            lo_chain = inst.delta[v];
            arg_min = static_cast<int>(v);
        }
    }
    if (!inst.delta.empty()) {
        double hi = inst.delta[arg_hi], lo = inst.delta[arg_lo];
        r.checks.push_back(check("max detuning (atom " + std::to_string(arg_hi) + ") < delta_max", hi, maxi, dmax,
                                 hi < dmax, has_irregular ? "larger phi" : "lower delta_inf or delta_eff"));
        r.checks.push_back(check("min detuning (atom " + std::to_string(arg_lo) + ") >= maximality bound", lo, maxi,
                                 dmax, lo >= maxi, "larger delta_eff"));
        if (arg_min >= 0)
            r.checks.push_back(check("min segment/leg detuning (atom " + std::to_string(arg_min) + ") >= delta_min",
                                     lo_chain, dmin, dmax, lo_chain >= dmin, "larger delta_b"));
    }
    r.checks.push_back(check("delta_b > delta_min", C * t.delta_b, dmin, C * t.delta_inf, C * t.delta_b > dmin,
                             "larger delta_b"));
    bool inf_ok = has_junction ? t.delta_inf > t.delta_b : t.delta_inf >= t.delta_b;
    r.checks.push_back(check(has_junction ? "delta_inf > delta_b" : "delta_inf >= delta_b", C * t.delta_inf,
                             C * t.delta_b, dmax, inf_ok, "larger delta_inf"));
    r.checks.push_back(check("delta_eff > 0", m.delta_eff, 0, m.u_eff, m.delta_eff > 0, "positive delta_eff"));
    if (!m.u_eff_ij.empty())
        r.checks.push_back(check("delta_eff < u_eff", m.delta_eff, 0, m.u_eff, m.delta_eff < m.u_eff,
                                 "smaller delta_eff or larger delta_b"));
    r.checks.push_back(check("homogeneity of delta_eff_i", m.homogeneity(), 0, 1e-9 * C, m.homogeneity() <= 1e-9 * C,
                             "recompile"));
    r.checks.push_back(check("eta < delta_eff/2", m.eta, 0, m.delta_eff / 2, m.eta < m.delta_eff / 2, "larger k"));

    const int k = L.params.k, phi = L.params.phi;
    r.footnote_active = 2 * phi < 2 * q && 4 * 2 * q <= k;
    r.footnote = "2*phi < 2*q <= k/4 " + std::string(r.footnote_active ? "holds" : "does not hold") + " (phi = " +
                 std::to_string(phi) + ", q = " + std::to_string(q) + ", k = " + std::to_string(k) + "); advisory";
    ci.instance = std::move(inst);
    return ci;
}

CompiledInstance compile_unchecked(const AtomLayout& layout, const Targets& targets) {
    if (layout.params.q() < 1)
        throw StageError("compile", "compiled detunings need q >= 1 (k >= 8 or an explicit q)");
    DetunedInstance inst{layout, 1.0, std::vector<double>(layout.atoms.size(), 0.0), targets};
    const double C = inst.C;
    std::fill(inst.delta.begin(), inst.delta.end(), C * targets.delta_b);
    assign_legs(layout, targets, C, inst.delta);
    for (const auto& s : layout.specials) inst.delta[s.atom] = 0;
    // E¹_A is linear in the special's own detuning, so one pass fixes Δ^eff_i exactly.
    auto parts = delta_eff_parts(inst, structure_energies(inst), true);
    for (std::size_t i = 0; i < layout.specials.size(); ++i) inst.delta[layout.specials[i].atom] = C * targets.delta_eff - parts[i];
    return analyse(std::move(inst));
}

CompiledInstance compile(const AtomLayout& layout, const Targets& targets) {
    auto ci = compile_unchecked(layout, targets);
    if (!ci.report.feasible()) throw StageError("compile", "window infeasible: " + ci.report.binding());
    return ci;
}

std::optional<int> feasible_phi(const GridDrawing& d, int k, const Targets& targets, int phi_max) {
    for (int phi = 1; phi <= phi_max; ++phi) {
        AtomLayout L;
        try {
            L = arrange_atoms(d, {k, phi});
        } catch (const StageError&) {
            continue;
        }
        if (compile_unchecked(L, targets).report.feasible()) return phi;
    }
    return std::nullopt;
}

long estimated_atoms(int n, int k) {
    long m = std::max(1, 3 * n / 2);
    long ell = 2L * std::max(1, n);
    return n + m * ell * (2L * k + 1);
}

int recommend_k(int n, double delta_eff, double safety) {
    if (n < 1 || delta_eff <= 0 || safety <= 0) throw std::invalid_argument("recommend_k needs positive inputs");
    for (int k = 2;; ++k)
        if (static_cast<double>(estimated_atoms(n, k)) * series::e_dist_bound(k).value <= delta_eff / (2 * safety))
            return k;
}

}  // namespace rydmis
