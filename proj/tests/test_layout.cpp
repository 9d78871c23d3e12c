#include "doctest.h"

#include "corpus.hpp"
#include "rydmis/layout.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace rydmis;

namespace {

GridDrawing straight_edge(int ell) {
    GridDrawing d;
    d.vertices = {{0, 0}, {ell, 0}};
    d.edges = {{0, 1, {{0, 0}, {ell, 0}}}};
    return d;
}

GridDrawing l_edge() {
    GridDrawing d;
    d.vertices = {{0, 0}, {1, 1}};
    d.edges = {{0, 1, {{0, 0}, {1, 0}, {1, 1}}}};
    return d;
}

GridDrawing k13_short() {
    GridDrawing d;
    d.vertices = {{1, 1}, {0, 1}, {2, 1}, {1, 0}};
    d.edges = {{0, 1, {{1, 1}, {0, 1}}}, {0, 2, {{1, 1}, {2, 1}}}, {0, 3, {{1, 1}, {1, 0}}}};
    return d;
}

// Three junctions, one open leg, four corners and six straight or irregular specials.
GridDrawing census_drawing() {
    GridDrawing d;
    d.vertices = {{1, 1}, {0, 2}, {2, 2}, {1, 0}, {2, 1}, {1, 4}};
    d.edges = {
        {0, 1, {{1, 1}, {0, 1}, {0, 2}}},
        {1, 2, {{0, 2}, {2, 2}}},
        {0, 3, {{1, 1}, {1, 0}}},
        {0, 4, {{1, 1}, {2, 1}}},
        {1, 5, {{0, 2}, {0, 4}, {1, 4}}},
        {2, 4, {{2, 2}, {2, 1}}},
        {2, 5, {{2, 2}, {2, 4}, {1, 4}}},
    };
    return d;
}

int excited(const SpinConfig& c) { return std::accumulate(c.begin(), c.end(), 0); }

bool config_independent(const Graph& g, const SpinConfig& c) {
    for (auto [u, v] : g.edge_list())
        if (c[u] && c[v]) return false;
    return true;
}

}  // namespace

TEST_CASE("arrange_atoms counts on single edges") {
    auto L = arrange_atoms(straight_edge(1), {8, 1});
    CHECK(L.atoms.size() == 18);
    REQUIRE(L.edges.size() == 1);
    CHECK(L.edges[0].ancillas == 16);
    CHECK(L.edges[0].kappa == 0);
    CHECK(audit_layout(L).ok());

    // Even length: one irregular segment of 4φ+1 atoms spaced D.
    CHECK_THROWS_AS(arrange_atoms(straight_edge(2), {8, 6}), StageError);
    auto L2 = arrange_atoms(straight_edge(2), {8, 3});
    CHECK(L2.atoms.size() == 34);
    CHECK(L2.edges[0].ancillas == 3 + 32 - 1 - 2);
    int d_atoms = 0;
    std::set<int> in_block;
    const auto& chain = L2.edges[0].chain;
    for (std::size_t c = 0; c + 1 < chain.size(); ++c) {
        auto a = L2.atoms[chain[c]].pos, b = L2.atoms[chain[c + 1]].pos;
        Rational dx = b.x - a.x;
        if (dx != Rational(1)) {
            CHECK(dx == Rational(13, 12));
            in_block.insert(chain[c]);
            in_block.insert(chain[c + 1]);
        }
    }
    d_atoms = static_cast<int>(in_block.size());
    CHECK(d_atoms == 13);
    auto irr = std::count_if(L2.atoms.begin(), L2.atoms.end(),
                             [](const Atom& a) { return a.role == AtomRole::irregular_vertex; });
    CHECK(irr == 1);
    // The irregular centre sits at the middle of the first segment, offset by half a lattice unit.
    for (const auto& a : L2.atoms)
        if (a.role == AtomRole::irregular_vertex) CHECK(a.pos.x == Rational(17, 2));

    CHECK_THROWS_AS(arrange_atoms(straight_edge(1), {1, 1}), StageError);
    CHECK_THROWS_AS(arrange_atoms(straight_edge(1), {8, 0}), StageError);
}

TEST_CASE("parity and spacing invariants over lengths and parameters") {
    for (int ell = 1; ell <= 6; ++ell)
        for (int k = 2; k <= 9; ++k)
            for (int phi = 1; 2 * phi <= k && phi <= 4; ++phi) {
                LayoutParams p{k, phi};
                auto L = arrange_atoms(straight_edge(ell), p);
                const auto& e = L.edges[0];
                int expected = (ell - 1) + 2 * k * ell - (ell % 2 == 0 ? 1 : 0);
                INFO("ell=" << ell << " k=" << k << " phi=" << phi);
                CHECK(e.ancillas == expected);
                CHECK(e.ancillas % 2 == 0);
                auto rep = audit_layout(L);
                // Odd B segments appear only for even k with an irregular segment.
                bool odd_expected = ell % 2 == 0 && k % 2 == 0;
                CHECK(odd_segments(L).empty() == !odd_expected);
                for (const auto& v : rep.violations) CHECK(v.find("odd length") != std::string::npos);
                std::size_t total = 0;
                for (const auto& r : L.regions) total += r.atoms.size();
                CHECK(total == L.atoms.size());
            }
}

TEST_CASE("classify_specials on small layouts") {
    auto single = arrange_atoms(straight_edge(1), {8, 1});
    auto c1 = census(single);
    CHECK(c1.open_ends == 2);
    CHECK(c1.corners + c1.junctions + c1.straight + c1.irregular == 0);

    auto l = arrange_atoms(l_edge(), {8, 1});
    auto cl = census(l);
    CHECK(cl.open_ends == 2);
    CHECK(cl.corners == 1);
    CHECK(cl.irregular == 1);

    auto star = arrange_atoms(k13_short(), {8, 1});
    auto cs = census(star);
    CHECK(cs.junctions == 1);
    CHECK(cs.open_ends == 3);
    CHECK(cs.straight == 0);
    for (const auto& s : star.specials)
        if (s.kind == SpecialKind::junction) CHECK(s.legs == 3);

    auto longer = arrange_atoms(straight_edge(3), {8, 1});
    CHECK(census(longer).straight == 2);

    // Geometry-based classification agrees with the construction.
    for (const auto* L : {&single, &l, &star, &longer}) {
        auto info = classify_specials(*L);
        REQUIRE(info.size() == L->specials.size());
        for (std::size_t i = 0; i < info.size(); ++i) {
            CHECK(info[i].atom == L->specials[i].atom);
            CHECK(info[i].kind == L->specials[i].kind);
            CHECK(info[i].legs == L->specials[i].legs);
        }
    }
}

TEST_CASE("special census of the three-junction drawing") {
    auto L = arrange_atoms(census_drawing(), {7, 1, 1});
    CHECK(audit_layout(L).ok());
    auto c = census(L);
    CHECK(c.corners == 4);
    CHECK(c.junctions == 3);
    CHECK(c.open_ends == 1);
    CHECK(c.straight + c.irregular == 6);
    CHECK(c.irregular == 2);
    auto eg = effective_graph(L);
    CHECK(eg.graph.size() == 14);
    // Each drawn edge becomes a string of 2κ pseudo-spins.
    CHECK(eg.graph.edge_count() == 7 + 2 * eg.kappa_sum);
    Graph g = Graph::from_planar(drawing_graph(L.drawing));
    CHECK(mis_exact(eg.graph).size == mis_exact(g).size + eg.kappa_sum);
    auto mis = mis_exact(g);
    auto cfg = encode_reference_config(L, mis.witness.members);
    int ksum = 0;
    for (const auto& e : L.edges) ksum += e.ancillas / 2;
    CHECK(excited(cfg) == mis.size + ksum);
    MisOptions opt;
    opt.vertex_budget = 100000;
    CHECK(mis_exact(layout_udg(L).graph, opt).size == excited(cfg));
}

TEST_CASE("regions partition the layout") {
    auto L = arrange_atoms(k13_short(), {8, 1});
    CHECK(audit_layout(L).ok());
    for (std::size_t i = 0; i < L.specials.size(); ++i)
        CHECK(L.a_region(static_cast<int>(i)).atoms.size() == static_cast<std::size_t>(2 * L.specials[i].legs + 1));
    for (std::size_t j = 0; j < L.eff_edges.size(); ++j)
        CHECK(L.b_region(static_cast<int>(j)).atoms.size() == 12);
    for (const auto& a : L.atoms) {
        if (a.role == AtomRole::leg_ancilla) CHECK(L.regions[a.region].is_a);
        if (a.role == AtomRole::segment_ancilla) CHECK_FALSE(L.regions[a.region].is_a);
    }
}

TEST_CASE("effective graph and kappa") {
    auto single = arrange_atoms(straight_edge(1), {8, 1});
    auto eg = effective_graph(single);
    CHECK(eg.graph.size() == 2);
    CHECK(eg.graph.edge_count() == 1);
    CHECK(eg.kappa_sum == 0);
    CHECK(eg.a_prime(1) == 1);

    auto two = arrange_atoms(straight_edge(2), {9, 1});
    auto eg2 = effective_graph(two);
    CHECK(eg2.graph.size() == 4);
    CHECK(eg2.graph.edge_count() == 3);
    CHECK(eg2.kappa_sum == 1);
    CHECK(census(two).straight == 1);
    CHECK(census(two).irregular == 1);
    // MIS of the effective path = MIS(G) + kappa
    CHECK(mis_exact(eg2.graph).size == 1 + 1);
}

TEST_CASE("encode_reference_config") {
    auto L = arrange_atoms(straight_edge(1), {8, 1});
    auto ud = layout_udg(L);
    auto c = encode_reference_config(L, {0});
    CHECK(excited(c) == 9);
    CHECK(c[0] == 1);
    CHECK(c[1] == 0);
    CHECK(config_independent(ud.graph, c));
    MisOptions opt;
    opt.vertex_budget = 100000;
    CHECK(mis_exact(ud.graph, opt).size == 9);

    auto empty = encode_reference_config(L, {});
    CHECK(excited(empty) == 8);
    CHECK(config_independent(ud.graph, empty));
    CHECK_THROWS_AS(encode_reference_config(L, {0, 1}), std::invalid_argument);
}

TEST_CASE("reference configurations attain the unit-disk MIS on the corpus") {
    MisOptions opt;
    opt.vertex_budget = 100000;
    for (const auto& [name, g] : corpus::small_planar()) {
        if (g.n > 8) continue;
        auto d = grid_embed(g);
        Graph gg = Graph::from_planar(g);
        auto mis = mis_exact(gg);
        for (int k : {2, 3}) {
            INFO(name << " k=" << k);
            auto L = arrange_atoms(d, {k, 1});
            auto ud = layout_udg(L);
            auto c = encode_reference_config(L, mis.witness.members);
            int ksum = 0;
            for (const auto& e : L.edges) ksum += e.ancillas / 2;
            CHECK(config_independent(ud.graph, c));
            CHECK(excited(c) == mis.size + ksum);
            CHECK(mis_exact(ud.graph, opt).size == excited(c));
        }
    }
}

TEST_CASE("chain sectors have the expected excitation counts") {
    auto L = arrange_atoms(straight_edge(3), {9, 1});
    const int q = L.params.q();
    for (std::size_t j = 0; j < L.eff_edges.size(); ++j) {
        int n = static_cast<int>(L.eff_edges[j].chain.size());
        int b = (n - 4 * q) / 2;
        auto count = [](const std::vector<char>& v) { return std::accumulate(v.begin(), v.end(), 0); };
        CHECK(count(chain_sector(L, static_cast<int>(j), 1, 0)) == n / 2);
        CHECK(count(chain_sector(L, static_cast<int>(j), 0, 1)) == n / 2);
        CHECK(count(chain_sector(L, static_cast<int>(j), 0, 0)) == n / 2);
        CHECK(count(chain_sector(L, static_cast<int>(j), 1, 1)) == n / 2 - 1);
        // Legs are ordered: the wall stays inside B.
        auto z = chain_sector(L, static_cast<int>(j), 0, 0);
        for (int c = 0; c < 2 * q; ++c) CHECK(z[c] == (c % 2 == 0));
        CHECK(b > 0);
    }
}

TEST_CASE("layout JSON round trip") {
    auto L = arrange_atoms(l_edge(), {8, 2});
    auto text = layout_to_json(L);
    auto back = parse_layout_json(text);
    CHECK(layout_to_json(back) == text);
    CHECK(back.atoms.size() == L.atoms.size());
    CHECK_THROWS_AS(parse_layout_json("{\"params\": "), StageError);
    auto broken = text;
    broken.replace(broken.find("\"role\":\"segment-ancilla\""), 24, "\"role\":\"grid-ancilla\"   ");
    CHECK_THROWS_AS(parse_layout_json(broken), StageError);
}
