#include "doctest.h"

#include "rydmis/compiler.hpp"
#include "rydmis/series.hpp"

#include <cmath>
#include <numeric>
#include <random>

using namespace rydmis;

namespace {

GridDrawing straight_edge(int ell) {
    GridDrawing d;
    d.vertices = {{0, 0}, {ell, 0}};
    d.edges = {{0, 1, {{0, 0}, {ell, 0}}}};
    return d;
}

GridDrawing k13_short() {
    GridDrawing d;
    d.vertices = {{1, 1}, {0, 1}, {2, 1}, {1, 0}};
    d.edges = {{0, 1, {{1, 1}, {0, 1}}}, {0, 2, {{1, 1}, {2, 1}}}, {0, 3, {{1, 1}, {1, 0}}}};
    return d;
}

int excited(const SpinConfig& c) { return std::accumulate(c.begin(), c.end(), 0); }

DetunedInstance random_instance(const AtomLayout& L, double lo, double hi, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(lo, hi);
    DetunedInstance inst{L, 1.0, {}, {}};
    for (std::size_t v = 0; v < L.atoms.size(); ++v) inst.delta.push_back(u(rng));
    return inst;
}

QuadraticModel random_model(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1, 1);
    QuadraticModel m{n, std::vector<double>(n), std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
    for (int v = 0; v < n; ++v) m.linear[v] = u(rng);
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) m.pair[v * n + w] = m.pair[w * n + v] = u(rng);
    return m;
}

}  // namespace

TEST_CASE("toy corner-junction: uniform detuning misses the MIS, repaired detuning recovers it") {
    ToyParams p;
    CHECK(p.check().ok());
    CHECK(toy_interaction(1.0, p) == doctest::Approx(1.0));
    CHECK(toy_interaction(std::sqrt(2.0), p) == doctest::Approx(0.2));
    CHECK(toy_interaction(2.0, p) == 0.0);

    auto t = toy_corner_junction();
    REQUIRE(t.points.size() == 14);
    CHECK(t.junction_neighbors.size() == 3);
    CHECK(t.corner_neighbors.size() == 2);
    auto ud = unit_disk_graph(t.points, 1.0 + 1e-9);
    CHECK(mis_size(ud.graph) == 8);

    SolveOptions opt;
    auto uni = ground_state_exact(toy_model(t.points, toy_uniform_detunings(t, p), p), opt);
    CHECK(excited(uni.config) == 7);
    CHECK(uni.energy == doctest::Approx(-3.5));
    CHECK(energy_toy(uni.config, t.points, toy_uniform_detunings(t, p), p) == doctest::Approx(-3.5));

    auto rep = ground_state_exact(toy_model(t.points, toy_repaired_detunings(t, p), p), opt);
    CHECK(excited(rep.config) == 8);
    CHECK(rep.energy == doctest::Approx(-4.65));
    for (auto [v, w] : ud.graph.edge_list()) CHECK_FALSE((rep.config[v] && rep.config[w]));
}

TEST_CASE("energy_ud counts detuning and blockade penalties") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(energy_ud({1, 0, 1}, g, 1.0, 2.0) == doctest::Approx(-2.0));
    CHECK(energy_ud({1, 1, 1}, g, 1.0, 2.0) == doctest::Approx(1.0));
    CHECK(energy_ud({1, 1, 0}, g, std::vector<double>{0.5, 0.25, 3.0}, 2.0) == doctest::Approx(1.25));
}

TEST_CASE("Rydberg energy of an alternating chain matches a closed sum") {
    auto L = arrange_atoms(straight_edge(1), {8, 1});
    REQUIRE(L.atoms.size() == 18);
    DetunedInstance inst{L, 1.0, std::vector<double>(18, 0.5), {}};
    // Excite every other chain atom starting at vertex 0: nine atoms at spacing 2.
    SpinConfig c(18, 0);
    const auto& chain = L.edges[0].chain;
    for (std::size_t i = 0; i < chain.size(); i += 2) c[chain[i]] = 1;
    double oracle = -0.5 * 9;
    for (int m = 1; m < 9; ++m) oracle += (9 - m) / std::pow(2.0 * m, 6);
    CHECK(energy_ryd(c, inst) == doctest::Approx(oracle).epsilon(1e-14));
    CHECK(rydberg_model(inst).energy(c) == doctest::Approx(oracle).epsilon(1e-14));
    CHECK(nn_spacing_max(L) == doctest::Approx(1.0));
    CHECK(delta_max(inst) == doctest::Approx(1.0));
}

TEST_CASE("Gray-code enumeration matches brute force") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        auto m = random_model(13, seed);
        double best = 1e300;
        SpinConfig arg;
        for (int mask = 0; mask < (1 << 13); ++mask) {
            SpinConfig c(13);
            for (int i = 0; i < 13; ++i) c[i] = (mask >> i) & 1;
            double e = m.energy(c);
            if (e < best - 1e-12) best = e, arg = c;
        }
        for (int threads : {1, 4}) {
            SolveOptions opt;
            opt.threads = threads;
            auto gs = ground_state_exact(m, opt);
            CHECK(gs.energy == doctest::Approx(best).epsilon(1e-12));
            CHECK(gs.config == arg);
            CHECK(gs.cert.exhaustive);
        }
    }
    SolveOptions small;
    small.max_full = 10;
    CHECK_THROWS_AS(ground_state_exact(random_model(11, 4), small), StageError);
}

TEST_CASE("is branch and bound agrees with full enumeration") {
    for (auto [drawing, k] : {std::pair{straight_edge(1), 8}, std::pair{k13_short(), 2}, std::pair{straight_edge(2), 4}}) {
        auto L = arrange_atoms(drawing, {k, 1});
        REQUIRE(L.atoms.size() <= 26);
        for (std::uint64_t seed : {11u, 12u}) {
            auto inst = random_instance(L, 0.2, 0.9 * delta_max(DetunedInstance{L, 1.0, {}, {}}), seed);
            SolveOptions full, is;
            is.strategy = Strategy::is;
            auto a = solve_instance(inst, full);
            auto b = solve_instance(inst, is);
            CHECK(b.energy == doctest::Approx(a.energy).epsilon(1e-12));
            CHECK(a.config == b.config);
            CHECK(b.cert.exhaustive);
            CHECK_FALSE(b.cert.justification.empty());
        }
    }
}

TEST_CASE("is strategy is refused when a detuning reaches delta_max") {
    auto L = arrange_atoms(straight_edge(1), {2, 1});
    DetunedInstance inst{L, 1.0, std::vector<double>(L.atoms.size(), 0.5), {}};
    inst.delta[3] = 1.0;
    SolveOptions is;
    is.strategy = Strategy::is;
    CHECK_THROWS_AS(solve_instance(inst, is), StageError);
}

TEST_CASE("sample strategy is deterministic and never beats the exact energy") {
    auto L = arrange_atoms(k13_short(), {2, 1});
    auto inst = random_instance(L, 0.3, 0.8, 7);
    SolveOptions full, s;
    s.strategy = Strategy::sample;
    s.samples = 20000;
    auto exact = solve_instance(inst, full);
    auto a = solve_instance(inst, s);
    s.threads = 1;
    auto b = solve_instance(inst, s);
    CHECK(a.config == b.config);
    CHECK_FALSE(a.cert.exhaustive);
    CHECK(a.energy >= exact.energy - 1e-12);
}

TEST_CASE("sector decomposition tracks the full energy") {
    auto L = arrange_atoms(k13_short(), {8, 1});
    DetunedInstance inst{L, 1.0, std::vector<double>(L.atoms.size(), 0.5), {}};
    auto se = structure_energies(inst);
    REQUIRE(se.a.size() == L.specials.size());
    REQUIRE(se.b.size() == L.eff_edges.size());
    auto ud = layout_udg(L);
    int n = static_cast<int>(L.specials.size());
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> s(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
        auto c = sector_config(L, s);
        bool blockaded = false;
        for (auto [v, w] : ud.graph.edge_list()) blockaded |= c[v] && c[w];
        bool edge_in = false;
        for (const auto& e : L.edges) edge_in |= c[e.u] && c[e.v];
        auto d = decode(c, L);
        CHECK(d.s == s);
        // Sectors with adjacent excited specials are not independent sets.
        std::string first = d.diagnostics.empty() ? std::string() : d.diagnostics.front();
        INFO(first);
        CHECK(d.clean() == !(blockaded || edge_in));
        // The decomposition drops only couplings between non-adjacent regions.
        CHECK(std::abs(energy_ryd(c, inst) - decomposed_energy(inst, se, s)) < 0.01);
    }
}

TEST_CASE("decode flags a flipped atom and round-trips configs") {
    auto L = arrange_atoms(straight_edge(1), {8, 1});
    auto c = encode_reference_config(L, {0});
    auto d = decode(c, L);
    CHECK(d.clean());
    CHECK(d.witness == std::vector<int>{0});
    auto bad = c;
    int mid = L.edges[0].chain[9];
    bad[mid] ^= 1;
    CHECK_FALSE(decode(bad, L).clean());
    CHECK(parse_config(config_to_string(c), c.size()) == c);
    CHECK_THROWS_AS(parse_config("01x", 3), StageError);
    CHECK_THROWS_AS(parse_config("01", 3), StageError);
    CHECK_THROWS_AS(decode(SpinConfig(3, 0), L), StageError);
}

TEST_CASE("compiled ground states are maximal independent sets") {
    GridDrawing p3;
    p3.vertices = {{0, 0}, {1, 0}, {2, 0}};
    p3.edges = {{0, 1, {{0, 0}, {1, 0}}}, {1, 2, {{1, 0}, {2, 0}}}};
    for (const auto& d : {straight_edge(1), p3, k13_short()}) {
        auto L = arrange_atoms(d, {8, 1});
        auto ci = compile(L, Targets{});
        SolveOptions opt;
        opt.strategy = L.atoms.size() <= 20 ? Strategy::full : Strategy::is;
        auto gs = solve_instance(ci.instance, opt);
        auto ud = layout_udg(L);
        for (int v = 0; v < ud.graph.size(); ++v) {
            bool covered = gs.config[v];
            for (int w : ud.graph.neighbors(v)) {
                CHECK_FALSE((gs.config[v] && gs.config[w]));
                covered = covered || gs.config[w];
            }
            CHECK(covered);
        }
        CHECK(decode(gs.config, L).clean());
    }
}

TEST_CASE("merging two domain walls on an H-shaped segment costs at most delta_min") {
    // Bar atoms at x = 1..n between junctions at x = 0 and x = n+1, each junction with arms of m atoms
    // up and down. The left junction is excited; the zero-wall state excites even x.
    const double dmin = series::domain_wall_merge_bound().value;
    const int m = 4;
    double worst = 0;
    for (int n = 8; n <= 26; n += 2) {
        std::vector<Point> pts;
        for (int x = 0; x <= n + 1; ++x) pts.push_back({double(x), 0});
        for (int side : {0, n + 1})
            for (int y = 1; y <= m; ++y) {
                pts.push_back({double(side), double(y)});
                pts.push_back({double(side), -double(y)});
            }
        const int N = static_cast<int>(pts.size());
        REQUIRE(N <= 44);
        SpinConfig base(N, 0);
        for (int x = 0; x <= n + 1; ++x) base[x] = x % 2 == 0;
        for (int i = n + 2; i < N; ++i) {
            int x = static_cast<int>(pts[i].x), y = static_cast<int>(std::abs(pts[i].y));
            base[i] = (x == 0) ? y % 2 == 0 : y % 2 == 1;
        }
        auto interaction = [&](const SpinConfig& c) {
            double e = 0;
            for (int i = 0; i < N; ++i)
                for (int j = i + 1; j < N; ++j)
                    if (c[i] && c[j]) e += std::pow(std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y), -6);
            return e;
        };
        double e0 = interaction(base);
        // Two walls: bar atoms strictly between them shift by one site.
        for (int p = 1; p <= n; p += 2)
            for (int r = p + 2; r <= n; r += 2) {
                SpinConfig c = base;
                for (int x = 1; x <= n; ++x) c[x] = x < p ? x % 2 == 0 : (x <= r ? x % 2 == 1 && x > p : x % 2 == 0 && x > r + 1);
                int excited_bar = 0, base_bar = 0;
                for (int x = 1; x <= n; ++x) excited_bar += c[x], base_bar += base[x];
                if (excited_bar != base_bar - 1) continue;
                bool independent = true;
                for (int x = 0; x <= n; ++x) independent = independent && !(c[x] && c[x + 1]);
                if (!independent) continue;
                worst = std::max(worst, e0 - interaction(c));
            }
    }
    CHECK(worst > 0);
    CHECK(worst <= dmin);
}

TEST_CASE("34-atom L-shaped instance: is solver beats every sampled configuration") {
    GridDrawing d;
    d.vertices = {{0, 0}, {1, 1}};
    d.edges = {{0, 1, {{0, 0}, {1, 0}, {1, 1}}}};
    auto L = arrange_atoms(d, {8, 4});
    REQUIRE(L.atoms.size() == 34);
    auto ci = compile_unchecked(L, Targets{});
    SolveOptions is;
    is.strategy = Strategy::is;
    auto exact = solve_instance(ci.instance, is);
    CHECK(exact.cert.exhaustive);
    SolveOptions s;
    s.strategy = Strategy::sample;
    s.samples = 200000;
    auto sampled = solve_instance(ci.instance, s);
    CHECK(sampled.energy >= exact.energy - tie_tolerance(34));
    // Uniformly random configurations, not only maximal independent sets.
    auto model = rydberg_model(ci.instance);
    auto uniform = ground_state_exact(model, s, nullptr);
    CHECK(uniform.energy >= exact.energy - tie_tolerance(34));
}
