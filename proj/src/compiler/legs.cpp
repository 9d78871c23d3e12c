#include "rydmis/compiler.hpp"

#include "rydmis/series.hpp"

#include <stdexcept>

namespace rydmis {

namespace {

// Built outward-in from the tail so that Δ_{2p−1} − Δ_{2p} = F0(p) and Δ_{2p} − Δ_{2p+1} = F1(p)
// hold up to one rounding each.
std::vector<double> leg_offsets(int q, double scale) {
    if (q < 1) throw std::invalid_argument("leg detunings need q >= 1");
    std::vector<double> out(static_cast<std::size_t>(2 * q));
    double v = scale * series::sum_F0F1_from(q + 1).value;  // Δ_{2q+1} − Δ_∞
    for (int p = q; p >= 1; --p) {
        v += scale * series::F1(p).value;
        out[2 * p - 1] = v;  // Δ_{2p}
        v += scale * series::F0(p).value;
        out[2 * p - 2] = v;  // Δ_{2p−1}
    }
    return out;
}

}  // namespace

std::vector<double> leg_offsets_corner(int q) { return leg_offsets(q, 1.0); }

JunctionLegs leg_offsets_junction(int q) {
    JunctionLegs j;
    j.x = leg_offsets(q, 1.0);
    j.y = leg_offsets(q, 2.0);
    j.z = j.x;
    return j;
}

double corner_leg_max() { return series::sum_F0F1_from(1).value; }

SpecialDetunings special_vertex_detunings(double delta_eff, int q, int phi, int b) {
    if (q < 1) throw std::invalid_argument("special detunings need q >= 1");
    double bseg = b > 0 ? series::b_segment_diff(b) : series::b_segment_limit().value;
    double f0 = 0;
    for (int p = 1; p <= q; ++p) f0 += series::F0(p).value;
    SpecialDetunings s;
    s.corner = delta_eff + 2 * f0 - series::I_C(q) + 2 * bseg;
    s.junction = delta_eff + 4 * f0 - series::I_J(q) + 3 * bseg;
    s.open_end = delta_eff + series::open_sum(q) + bseg;
    s.straight = delta_eff + series::straight_sum(q) + 2 * bseg;
    s.irregular = delta_eff + series::irregular_interaction_diff(q, phi) + 2 * bseg;
    return s;
}

SpecialDetunings limit_offsets() {
    auto t = series::structure_constants(1, 1);
    SpecialDetunings s;
    s.corner = t.at("offset_C").v.value;
    s.junction = t.at("offset_J").v.value;
    s.open_end = t.at("offset_O").v.value;
    s.straight = t.at("offset_S").v.value;
    s.irregular = s.straight;
    return s;
}

}  // namespace rydmis
