#include "rydmis/series.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rydmis::series {

namespace {

constexpr double kZeta5 = 1.0369277551433699263;
constexpr double kPi = std::numbers::pi;

double inv6(double x) {
    double x2 = x * x;
    return 1.0 / (x2 * x2 * x2);
}

// ((a² + b²))⁻³
double g(double a, double b) {
    double s = a * a + b * b;
    return 1.0 / (s * s * s);
}

// Σ_{a ≥ A, a ≡ A mod 2} a^-s ≤ A^-s + A^{1-s} / (2(s-1))
double stride2_tail(double A, int s) {
    return std::pow(A, -s) + std::pow(A, 1 - s) / (2.0 * (s - 1));
}

// Σ_{j≥1} g(a, 2j-1) ≤ a^-6 + (3π/32) a^-5, summed over odd a ≥ A.
double odd_row_tail(double A) {
    return stride2_tail(A, 6) + (3 * kPi / 32) * stride2_tail(A, 5);
}

long terms_for(double tol, double (*bound)(long)) {
    long n = 1;
    while (bound(n) >= tol) n *= 2;
    long lo = n / 2, hi = n;
    while (lo + 1 < hi) {
        long mid = (lo + hi) / 2;
        (bound(mid) < tol ? hi : lo) = mid;
    }
    return hi;
}

double f0_tail(long I) { return stride2_tail(2.0 * I + 1, 6); }
double f1_tail(long I) { return stride2_tail(2.0 * I, 6); }

void check_p(int p) {
    if (p < 1) throw std::invalid_argument("series index p must be >= 1");
}

void check_tol(double tol) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
}

}  // namespace

void CompensatedSum::add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
        comp_ += (sum_ - t) + x;
    else
        comp_ += (x - t) + sum_;
    sum_ = t;
}

SeriesValue F0_terms(int p, long terms) {
    check_p(p);
    CompensatedSum s;
    double a = 2.0 * p - 1, b = 2.0 * p;
    for (long i = 0; i < terms; ++i) {
        double o = 2.0 * i + 1;
        s.add(g(o, a) - g(o, b));
    }
    return {s.value(), f0_tail(std::max(terms, 1L)), terms};
}

SeriesValue F1_terms(int p, long terms) {
    check_p(p);
    CompensatedSum s;
    double a = 2.0 * p, b = 2.0 * p + 1;
    for (long i = 0; i < terms; ++i) {
        double e = 2.0 * i;
        s.add(g(e, a) - g(e, b));
    }
    return {s.value(), f1_tail(std::max(terms, 1L)), terms};
}

SeriesValue F0(int p, double tol) {
    check_tol(tol);
    return F0_terms(p, terms_for(tol, f0_tail));
}

SeriesValue F1(int p, double tol) {
    check_tol(tol);
    return F1_terms(p, terms_for(tol, f1_tail));
}

namespace {

// Σ_{p>P} F0(p) ≤ Y^-6 + (3π/32) Y^-5 with Y = 2P+1; F1 uses Y = 2P+2.
double outer_tail(double Y) { return inv6(Y) + (3 * kPi / 32) * std::pow(Y, -5); }

SeriesValue outer_sum(int from, double tol, bool use_f0, bool use_f1, int f0_shift) {
    check_p(from);
    check_tol(tol);
    // Choose the last index P so the outer tail uses half the budget.
    long P = from;
    auto tail_at = [&](long P) {
        double t = 0;
        if (use_f0) t += outer_tail(2.0 * (P + f0_shift) + 1);
        if (use_f1) t += outer_tail(2.0 * P + 2);
        return t;
    };
    while (tail_at(P) >= tol / 2) P = P * 2;
    long count = P - from + 1;
    double inner_tol = tol / (4.0 * static_cast<double>(count));
    long i0 = terms_for(inner_tol, f0_tail), i1 = terms_for(inner_tol, f1_tail);
    CompensatedSum s;
    double tail = tail_at(P);
    long terms = 0;
    for (long p = from; p <= P; ++p) {
        if (use_f0) {
            auto v = F0_terms(static_cast<int>(p + f0_shift), i0);
            s.add(v.value);
            tail += v.tail_bound;
            terms += v.terms_used;
        }
        if (use_f1) {
            auto v = F1_terms(static_cast<int>(p), i1);
            s.add(v.value);
            tail += v.tail_bound;
            terms += v.terms_used;
        }
    }
    return {s.value(), tail, terms};
}

}  // namespace

SeriesValue sum_F0_from(int from, double tol) { return outer_sum(from, tol, true, false, 0); }

SeriesValue sum_F0F1_from(int from, double tol) { return outer_sum(from, tol, true, true, 0); }

SeriesValue sum_F1F0next_from(int from, double tol) { return outer_sum(from, tol, true, true, 1); }

SeriesValue e_dist_bound(int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    double gg = 2.0 * k + 1;
    double v = (3 * kPi * kZeta5 / 2 + 0.8 + 4 / gg) * std::pow(gg, -5);
    return {v, 0.0, 0};
}

SeriesValue e_dist_raw(int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const long I = 4000, J = 64;
    double gg = 2.0 * k + 1;
    CompensatedSum s;
    for (long j = 1; j <= J; ++j) {
        double G = gg * j;
        for (long i = 1; i <= I; ++i) s.add(8 * g(double(i), G));
    }
    for (long i = 0; i < I; ++i) s.add(4 * inv6(i + gg));
    double tail = J * 8.0 / (5 * std::pow(double(I), 5)) +
                  (3 * kPi / 8) * std::pow(gg, -5) * std::pow(double(J), -4) +
                  0.8 * std::pow(I - 1 + gg, -5);
    return {s.value(), tail, I * J + I};
}

SeriesValue maximality_bound_terms(long terms) {
    CompensatedSum s;
    for (long i = 1; i <= terms; ++i) {
        s.add(inv6(2.0 * i));
        s.add(2 * g(2.0 * i - 1, 1));
    }
    double tail = stride2_tail(2.0 * terms + 2, 6) + 2 * stride2_tail(2.0 * terms + 1, 6);
    return {s.value(), tail, 2 * terms};
}

SeriesValue maximality_bound(double tol) {
    check_tol(tol);
    long n = 1;
    while (maximality_bound_terms(n).tail_bound >= tol) n *= 2;
    return maximality_bound_terms(n);
}

double zeta6_over_64() { return std::pow(kPi, 6) / 945.0 / 64.0; }

namespace {

// Σ_{j≥1} [g(a,2j-1) - g(a,2j)] truncated at J pairs.
double merge_row(double a, long J) {
    CompensatedSum s;
    for (long j = 1; j <= J; ++j) s.add(g(a, 2.0 * j - 1) - g(a, 2.0 * j));
    return s.value();
}

}  // namespace

SeriesValue domain_wall_merge_bound_terms(long terms) {
    CompensatedSum s;
    for (long i = 1; i <= terms; ++i) s.add(4 * merge_row(2.0 * i - 1, terms));
    s.add(zeta6_over_64());
    // Row truncation: alternating tail ≤ g(a, 2J+1) ≤ (2J+1)^-6 per row.
    // Dropped rows: the row sum is ≤ g(a,1) ≤ a^-6.
    double tail = 4.0 * terms * inv6(2.0 * terms + 1) + 4 * stride2_tail(2.0 * terms + 1, 6);
    return {s.value(), tail, terms * terms};
}

SeriesValue domain_wall_merge_bound(double tol) {
    check_tol(tol);
    long n = 1;
    while (domain_wall_merge_bound_terms(n).tail_bound >= tol) n *= 2;
    return domain_wall_merge_bound_terms(n);
}

std::vector<double> merge_bound_partials(int n) {
    std::vector<double> out;
    CompensatedSum s;
    s.add(zeta6_over_64());
    for (int i = 1; i <= n; ++i) {
        s.add(4 * merge_row(2.0 * i - 1, 4096));
        out.push_back(s.value());
    }
    return out;
}

namespace {

double corner_double(int q) {
    CompensatedSum s;
    for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= q; ++j) s.add(g(2.0 * i - 1, 2.0 * j - 1) - g(2.0 * i, 2.0 * j));
    return s.value();
}

double even_power_sum(int n) {
    CompensatedSum s;
    for (int i = 1; i <= n; ++i) s.add(inv6(2.0 * i));
    return s.value();
}

// Certified |limit − finite(q)| for the corner double sum.
double corner_double_gap(int q) { return 4 * odd_row_tail(2.0 * q + 1); }

double collinear_double_gap(int q) {
    // Σ over max(i,j) > q of (2i+2j-2)^-6 (and the shifted copy), bounded by
    // 2 Σ_{i>q} Σ_{j≥1} (2i+2j-2)^-6 ≤ 2 Σ_{m ≥ 2q} m^-6 · (m/2) on even m.
    double A = 2.0 * q;
    return 2 * (stride2_tail(A, 5) + stride2_tail(A, 6));
}

}  // namespace

double I_C(int q) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    return corner_double(q) - 2 * even_power_sum(q);
}

double I_J(int q) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    CompensatedSum s;
    for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= q; ++j) s.add(inv6(2.0 * i - 2 + 2 * j) - inv6(2.0 * i + 2 * j));
    s.add(-3 * even_power_sum(q));
    s.add(2 * corner_double(q));
    return s.value();
}

double open_sum(int q) { return even_power_sum(q); }

double straight_sum(int q) { return even_power_sum(2 * q); }

double b_segment_diff(int b) {
    if (b < 1) throw std::invalid_argument("b must be >= 1");
    int left = (b + 1) / 2, right = b / 2;
    CompensatedSum s;
    for (int r = 1; r <= left; ++r)
        for (int t = 1; t <= right; ++t)
            s.add(inv6(2.0 * r + 2 * t - 2) - inv6(2.0 * r + 2 * t - 1));
    return s.value();
}

double irregular_interaction_diff(int q, int phi) {
    if (q < 1 || phi < 1) throw std::invalid_argument("q and phi must be >= 1");
    double D = 1 + 1 / (4.0 * phi);
    std::vector<double> leg;
    for (int m = 1; m <= 2 * q; ++m)
        leg.push_back(m <= 2 * phi ? m * D : 2 * phi * D + (m - 2 * phi));
    auto energy = [&](bool centre) {
        std::vector<double> xs;
        if (centre) xs.push_back(0);
        for (int m = 1; m <= 2 * q; ++m) {
            if ((m % 2 == 0) != centre) continue;
            xs.push_back(leg[m - 1]);
            xs.push_back(-leg[m - 1]);
        }
        CompensatedSum s;
        for (std::size_t a = 0; a < xs.size(); ++a)
            for (std::size_t b = a + 1; b < xs.size(); ++b) s.add(inv6(std::abs(xs[a] - xs[b])));
        return s.value();
    };
    return energy(true) - energy(false);
}

SeriesValue I_C_limit() {
    const int Q = 400;
    double gap = corner_double_gap(Q) + 2 * stride2_tail(2.0 * Q + 2, 6);
    return {I_C(Q), gap, long(Q) * Q};
}

SeriesValue I_J_limit() {
    const int Q = 400;
    double gap = collinear_double_gap(Q) + 3 * stride2_tail(2.0 * Q + 2, 6) + 2 * corner_double_gap(Q);
    return {I_J(Q), gap, long(Q) * Q};
}

SeriesValue b_segment_limit() {
    // Σ_{n≥1} n [(2n)^-6 − (2n+1)^-6]; the summand is ≤ 6n(2n)^-7.
    const long N = 20000;
    CompensatedSum s;
    for (long n = 1; n <= N; ++n) s.add(n * (inv6(2.0 * n) - inv6(2.0 * n + 1)));
    double tail = 6.0 / 128.0 * std::pow(double(N), -5) / 5.0;
    return {s.value(), tail, N};
}

void ConstantsTable::add(Constant c) {
    index_[c.name] = entries_.size();
    entries_.push_back(std::move(c));
}

const Constant& ConstantsTable::at(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::out_of_range("unknown constant: " + name);
    return entries_[it->second];
}

ConstantsTable structure_constants(int q, int phi, double tol) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    if (phi < 1) throw std::invalid_argument("phi must be >= 1");
    check_tol(tol);
    ConstantsTable t;
    auto exact = [](double v) { return SeriesValue{v, 0.0, 0}; };
    auto plus = [](SeriesValue a, SeriesValue b, double sa = 1, double sb = 1) {
        return SeriesValue{sa * a.value + sb * b.value, std::abs(sa) * a.tail_bound + std::abs(sb) * b.tail_bound,
                           a.terms_used + b.terms_used};
    };

    auto maxi = maximality_bound(tol);
    auto merge = domain_wall_merge_bound(tol);
    auto z6 = exact(zeta6_over_64());
    auto f0 = sum_F0_from(1, tol);
    auto f01 = sum_F0F1_from(1, tol);
    auto ic = I_C_limit();
    auto ij = I_J_limit();
    auto bseg = b_segment_limit();
    auto dc = plus(f0, f0);
    auto dj = plus(dc, dc);
    auto corner = plus(dc, ic, 1, -1);
    auto junction = plus(dj, ij, 1, -1);

    auto add_lim = [&](std::string name, SeriesValue v, std::string formula, std::optional<double> printed) {
        t.add({std::move(name), v, std::move(formula), printed, std::nullopt});
    };
    add_lim("maximality", maxi, "sum_i (2i)^-6 + 2 sum_i ((2i-1)^2+1)^-3", 0.268031);
    add_lim("delta_min", merge, "4 sum_ij [((2i-1)^2+(2j-1)^2)^-3 - ((2i-1)^2+(2j)^2)^-3] + sum_i (2i)^-6",
           0.490084);
    add_lim("sum_F0", f0, "sum_p F0(p)", std::nullopt);
    add_lim("corner_leg_max", f01, "sum_p [F0(p)+F1(p)]", 0.134682);
    add_lim("junction_leg_max", plus(f01, f01), "2 sum_p [F0(p)+F1(p)]", 0.269364);
    add_lim("I_C", ic, "corner interaction sum, q -> inf", 0.0932973);
    add_lim("D_C_offset", dc, "2 sum_p F0(p)", 0.237094);
    add_lim("corner_diff", corner, "D_C_offset - I_C", 0.143797);
    add_lim("I_J", ij, "junction interaction sum, q -> inf", 0.218387);
    add_lim("D_J_offset", dj, "4 sum_p F0(p)", 0.474188);
    add_lim("junction_diff", junction, "D_J_offset - I_J", 0.255801);
    add_lim("open_straight", z6, "sum_i (2i)^-6 = zeta(6)/64", 0.015896);
    add_lim("B_segment", bseg, "E_B^{10} - E_B^{00} = sum_n n [(2n)^-6 - (2n+1)^-6]", 0.0146637);
    add_lim("offset_C", plus(corner, bseg, 1, 2), "corner_diff + 2 B_segment", 0.173124);
    add_lim("offset_J", plus(junction, bseg, 1, 3), "junction_diff + 3 B_segment", 0.299792);
    add_lim("offset_O", plus(z6, bseg, 1, 1), "open_straight + B_segment", 0.0305597);
    add_lim("offset_S", plus(z6, bseg, 1, 2), "open_straight + 2 B_segment", 0.0452234);
    // U^eff = Δ_B − c; c from E^{11}−E^{10} = E^{00}−E^{10} + Δ_B − ζ(6)/64.
    add_lim("u_eff_offset", plus(z6, bseg, 1, 2), "zeta(6)/64 + 2 B_segment", 0.0134313);

    double f0q = 0;
    for (int p = 1; p <= q; ++p) f0q += F0(p, tol).value;
    double icq = I_C(q), ijq = I_J(q);
    double even_gap = stride2_tail(2.0 * q + 2, 6);
    double ic_gap = corner_double_gap(q) + 2 * even_gap;
    double ij_gap = collinear_double_gap(q) + 3 * even_gap + 2 * corner_double_gap(q);
    double f0_gap = outer_tail(2.0 * q + 1);
    auto add_q = [&](std::string name, double v, std::string formula, double gap) {
        t.add({std::move(name), exact(v), std::move(formula), std::nullopt, gap});
    };
    add_q("I_C_q", icq, "corner interaction sum at q", ic_gap);
    add_q("D_C_offset_q", 2 * f0q, "2 sum_{p<=q} F0(p)", 2 * f0_gap);
    add_q("corner_diff_q", 2 * f0q - icq, "D_C_offset_q - I_C_q", 2 * f0_gap + ic_gap);
    add_q("I_J_q", ijq, "junction interaction sum at q", ij_gap);
    add_q("D_J_offset_q", 4 * f0q, "4 sum_{p<=q} F0(p)", 4 * f0_gap);
    add_q("junction_diff_q", 4 * f0q - ijq, "D_J_offset_q - I_J_q", 4 * f0_gap + ij_gap);
    add_q("open_q", open_sum(q), "sum_{s<=q} (2s)^-6", even_gap);
    add_q("straight_q", straight_sum(q), "sum_{i<=2q} (2i)^-6", stride2_tail(4.0 * q + 2, 6));
    t.add({"irregular_q", exact(irregular_interaction_diff(q, phi)), "irregular interaction difference at q, phi",
           std::nullopt, std::nullopt});
    return t;
}

}  // namespace rydmis::series
