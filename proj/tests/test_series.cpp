#include <doctest.h>

#include <cmath>

#include "rydmis/series.hpp"

using namespace rydmis::series;

namespace {

double g3(double a, double b) { return std::pow(a * a + b * b, -3); }

// Brute lattice sum oracles, independent of the library's loop structure.
double corner_oracle(int q) {
    double s = 0;
    for (int i = 1; i <= q; ++i) {
        s -= 2 * std::pow(2.0 * i, -6);
        for (int j = 1; j <= q; ++j) s += g3(2 * i - 1, 2 * j - 1) - g3(2 * i, 2 * j);
    }
    return s;
}

}  // namespace

TEST_CASE("F0 and F1 values and monotonicity") {
    CHECK(F0(1).value == doctest::Approx(0.11756225064).epsilon(1e-10));
    CHECK(F1(1).value == doctest::Approx(0.01581763810).epsilon(1e-9));
    CHECK(F0(1).tail_bound < 1e-12);
    double prev0 = 1, prev1 = 1;
    for (int p = 1; p <= 50; ++p) {
        double f0 = F0(p).value, f1 = F1(p).value;
        CHECK(f0 > 0);
        CHECK(f1 > 0);
        CHECK(f0 < prev0);
        CHECK(f1 < prev1);
        prev0 = f0;
        prev1 = f1;
    }
    CHECK_THROWS(F0(0));
    CHECK_THROWS(F1(1, 0.0));
}

TEST_CASE("leg sums") {
    auto s0 = sum_F0_from(1);
    CHECK(s0.value == doctest::Approx(0.118547).epsilon(1e-5 / 0.118547));
    CHECK(s0.tail_bound < 1e-12);
    auto s01 = sum_F0F1_from(1);
    CHECK(std::abs(s01.value - 0.134682) < 1e-5);
    // Σ_{p≥1}[F1(p)+F0(p+1)] = Σ(F0+F1) − F0(1)
    CHECK(sum_F1F0next_from(1).value == doctest::Approx(s01.value - F0(1).value).epsilon(1e-11));
}

TEST_CASE("tail bounds hold against tenfold re-summation") {
    for (long n : {1L, 3L, 10L, 40L}) {
        for (int p : {1, 2, 7}) {
            auto a = F0_terms(p, n), b = F0_terms(p, 10 * n);
            CHECK(std::abs(a.value - b.value) <= a.tail_bound);
            auto c = F1_terms(p, n), d = F1_terms(p, 10 * n);
            CHECK(std::abs(c.value - d.value) <= c.tail_bound);
        }
        auto m = maximality_bound_terms(n), M = maximality_bound_terms(10 * n);
        CHECK(std::abs(m.value - M.value) <= m.tail_bound);
    }
    for (long n : {2L, 5L, 20L}) {
        auto e = domain_wall_merge_bound_terms(n), E = domain_wall_merge_bound_terms(10 * n);
        CHECK(std::abs(e.value - E.value) <= e.tail_bound);
    }
}

TEST_CASE("maximality and merge bounds") {
    auto m = maximality_bound();
    CHECK(std::abs(m.value - 0.268031) < 1e-5);
    CHECK(m.value - m.tail_bound > 0.268030);
    CHECK(zeta6_over_64() == doctest::Approx(0.015896).epsilon(1e-5 / 0.015896));
    auto e = domain_wall_merge_bound();
    CHECK(std::abs(e.value - 0.490084) < 1e-5);
    auto partials = merge_bound_partials(30);
    for (std::size_t i = 1; i < partials.size(); ++i) CHECK(partials[i] > partials[i - 1]);
    CHECK(partials.back() < e.value + e.tail_bound);
}

TEST_CASE("distant interaction bound") {
    CHECK(e_dist_bound(7).value == doctest::Approx(7.839438e-6).epsilon(1e-6));
    for (int k = 1; k < 40; ++k) CHECK(e_dist_bound(k + 1).value < e_dist_bound(k).value);
    for (int k : {3, 7, 15}) {
        auto raw = e_dist_raw(k);
        CHECK(raw.value + raw.tail_bound <= e_dist_bound(k).value);
    }
}

TEST_CASE("finite structure sums") {
    // q = 1: the corner sum has one odd-odd and one even-even pair and one collinear term.
    CHECK(I_C(1) == doctest::Approx(1.0 / 8 - 1.0 / 512 - 2.0 / 64).epsilon(1e-14));
    CHECK(I_C(1) == doctest::Approx(0.091796875).epsilon(1e-14));
    for (int q = 1; q <= 6; ++q) CHECK(I_C(q) == doctest::Approx(corner_oracle(q)).epsilon(1e-13));
    CHECK(I_J(1) == doctest::Approx(0.214599609375).epsilon(1e-13));
    CHECK(I_J(2) == doctest::Approx(0.2181121210).epsilon(1e-9));
    CHECK(b_segment_diff(1) == 0.0);
    CHECK(b_segment_diff(2) == doctest::Approx(std::pow(2.0, -6) - std::pow(3.0, -6)).epsilon(1e-14));
    CHECK(std::abs(b_segment_limit().value - 0.0146637) < 1e-6);
    CHECK(open_sum(1) == doctest::Approx(1.0 / 64));
    CHECK(straight_sum(1) == doctest::Approx(1.0 / 64 + 1.0 / 4096));
    // Irregular structures approach the straight value as q and phi grow.
    CHECK(std::abs(irregular_interaction_diff(20, 10) - zeta6_over_64()) < 2e-3);
}

TEST_CASE("constants table") {
    auto t = structure_constants(2, 1);
    int printed = 0;
    for (const auto& c : t.entries()) {
        CHECK(std::isfinite(c.v.value));
        if (!c.printed || c.name == "u_eff_offset") continue;
        ++printed;
        INFO(c.name);
        CHECK(std::abs(c.v.value - *c.printed) < 1e-5);
        CHECK(c.v.tail_bound < 1e-9);
    }
    CHECK(printed == 16);
    CHECK(t.at("corner_diff").v.value ==
          doctest::Approx(t.at("D_C_offset").v.value - t.at("I_C").v.value).epsilon(1e-14));
    CHECK(t.at("offset_J").v.value ==
          doctest::Approx(t.at("junction_diff").v.value + 3 * t.at("B_segment").v.value).epsilon(1e-14));
    // The printed U^eff coefficient disagrees with the value implied by the B-segment constant.
    CHECK(std::abs(t.at("u_eff_offset").v.value - 0.0452234) < 1e-6);
    CHECK(std::abs(t.at("u_eff_offset").v.value - *t.at("u_eff_offset").printed) > 0.03);
    for (int q : {1, 2, 3, 5}) {
        auto tq = structure_constants(q, 1);
        for (auto [fin, lim] : {std::pair{"I_C_q", "I_C"}, {"I_J_q", "I_J"}, {"corner_diff_q", "corner_diff"},
                                {"junction_diff_q", "junction_diff"}, {"open_q", "open_straight"}}) {
            INFO(fin << " q=" << q);
            const auto& f = tq.at(fin);
            REQUIRE(f.limit_gap);
            CHECK(std::abs(f.v.value - tq.at(lim).v.value) <= *f.limit_gap + 1e-12);
        }
    }
    CHECK_THROWS(t.at("nope"));
}

TEST_CASE("telescoping of the leg detuning sequence") {
    // Δ_{2p-1} − Δ_{2p} = F0(p), Δ_{2p} − Δ_{2p+1} = F1(p)
    for (int p = 1; p <= 5; ++p) {
        double d_odd = sum_F0F1_from(p).value;
        double d_even = sum_F1F0next_from(p).value;
        double d_next = sum_F0F1_from(p + 1).value;
        CHECK(d_odd - d_even == doctest::Approx(F0(p).value).epsilon(1e-9));
        CHECK(d_even - d_next == doctest::Approx(F1(p).value).epsilon(1e-9));
    }
}
