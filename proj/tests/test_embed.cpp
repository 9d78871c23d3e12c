#include "doctest.h"

#include "corpus.hpp"
#include "rydmis/grid_drawing.hpp"

#include <algorithm>
#include <set>

using namespace rydmis;

namespace {

bool mentions(const ValidationReport& r, const std::string& needle) {
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [&](const std::string& v) { return v.find(needle) != std::string::npos; });
}

// Hand-entered drawing: a square with one subdivided side and a bent edge.
GridDrawing manual_drawing() {
    GridDrawing d;
    d.vertices = {{0, 0}, {2, 0}, {2, 2}, {0, 2}, {4, 2}};
    d.edges = {
        {0, 1, {{0, 0}, {2, 0}}},
        {1, 2, {{2, 0}, {2, 2}}},
        {2, 3, {{2, 2}, {0, 2}}},
        {0, 3, {{0, 0}, {0, 2}}},
        {2, 4, {{2, 2}, {4, 2}}},
        {1, 4, {{2, 0}, {4, 0}, {4, 2}}},
    };
    return d;
}

}  // namespace

TEST_CASE("grid_embed canonical small drawings") {
    auto k2 = grid_embed(corpus::path(2));
    CHECK(k2.vertices == std::vector<GridPoint>{{0, 0}, {1, 0}});
    REQUIRE(k2.edges.size() == 1);
    CHECK(k2.edges[0].path == std::vector<GridPoint>{{0, 0}, {1, 0}});

    auto p3 = grid_embed(corpus::path(3));
    CHECK(p3.vertices == std::vector<GridPoint>{{0, 0}, {1, 0}, {2, 0}});
    for (const auto& e : p3.edges) CHECK(path_length(e.path) == 1);

    auto k4 = grid_embed(corpus::k4());
    CHECK(validate_drawing(k4, corpus::k4()).ok());
    CHECK(drawing_stats(k4).bends >= 1);
}

TEST_CASE("validate_drawing reports constructed violations") {
    PlanarGraph k2 = corpus::path(2);
    CHECK(validate_drawing(grid_embed(k2), k2).ok());

    GridDrawing cross;
    cross.vertices = {{0, 1}, {2, 1}, {1, 0}, {1, 2}};
    cross.edges = {{0, 1, {{0, 1}, {2, 1}}}, {2, 3, {{1, 0}, {1, 2}}}};
    auto r = validate_drawing(cross, {4, {{0, 1}, {2, 3}}});
    CHECK(mentions(r, "share grid point (1,1)"));

    GridDrawing diag;
    diag.vertices = {{0, 0}, {1, 1}};
    diag.edges = {{0, 1, {{0, 0}, {1, 1}}}};
    CHECK(mentions(validate_drawing(diag, k2), "non-orthogonal step"));

    GridDrawing through;
    through.vertices = {{0, 0}, {1, 0}, {2, 0}};
    through.edges = {{0, 2, {{0, 0}, {2, 0}}}};
    CHECK(mentions(validate_drawing(through, {3, {{0, 2}}}), "passes through vertex 1"));

    GridDrawing missing = grid_embed(corpus::path(3));
    missing.edges.pop_back();
    CHECK(mentions(validate_drawing(missing, corpus::path(3)), "missing"));
}

TEST_CASE("ingest_drawing round trips and rejects bad files") {
    auto k2 = grid_embed(corpus::path(2));
    CHECK(ingest_drawing_checked(drawing_to_json(k2)) == k2);
    CHECK(ingest_drawing(R"({"vertices": {"0": [0,0], "1": [1,0]}, "edges": [{"u":0,"v":1,"path":[[0,0],[1,0]]}]})")
              .drawing == k2);

    auto dup = ingest_drawing(R"({"vertices": {"0": [0,0], "1": [0,0]}, "edges": []})");
    CHECK_FALSE(dup.report.ok());
    CHECK_THROWS_AS(ingest_drawing_checked(R"({"vertices": {"0": [0,0], "1": [0,0]}, "edges": []})"), StageError);

    try {
        ingest_drawing("{\"vertices\": {\"0\": [0,0]},\n  \"edges\": [ oops ]}");
        FAIL("expected parse error");
    } catch (const StageError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    GridDrawing m = manual_drawing();
    auto in = ingest_drawing(drawing_to_json(m));
    CHECK(in.report.ok());
    CHECK(in.drawing == m);
}

TEST_CASE("st_numbering gives every inner vertex a lower and a higher neighbor") {
    for (const auto& g : {corpus::k4(), corpus::cube(), corpus::prism(), corpus::cycle(7)}) {
        Graph h = Graph::from_planar(g);
        auto order = detail::st_numbering(h, 0, h.neighbors(0).front());
        REQUIRE(static_cast<int>(order.size()) == h.size());
        std::vector<int> num(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) num[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
        CHECK(order.front() == 0);
        CHECK(order.back() == h.neighbors(0).front());
        for (std::size_t i = 1; i + 1 < order.size(); ++i) {
            int v = order[i];
            bool lo = false, hi = false;
            for (int w : h.neighbors(v)) (num[static_cast<std::size_t>(w)] < static_cast<int>(i) ? lo : hi) = true;
            CHECK(lo);
            CHECK(hi);
        }
    }
}

TEST_CASE("property: every construction choice yields a valid drawing") {
    for (const auto& ng : corpus::small_planar()) {
        Graph h = Graph::from_planar(ng.g);
        for (const auto& ch : detail::st_choices(h)) {
            CAPTURE(ng.name);
            CAPTURE(ch.s);
            CAPTURE(ch.t);
            CAPTURE(ch.mirror);
            auto d = canonicalize(detail::st_drawing(h, ch));
            CHECK(validate_drawing(d, ng.g).ok());
        }
    }
}

TEST_CASE("property: corpus drawings are valid, faithful, deterministic and area-bounded") {
    for (const auto& ng : corpus::small_planar()) {
        CAPTURE(ng.name);
        auto d = grid_embed(ng.g);
        auto rep = validate_drawing(d, ng.g);
        CHECK(rep.ok());
        std::multiset<std::pair<int, int>> a, b;
        for (auto [u, v] : ng.g.edges) a.insert(std::minmax(u, v));
        for (const auto& e : d.edges) b.insert({e.u, e.v});
        CHECK(a == b);
        CHECK(grid_embed(ng.g) == d);
        CHECK(ingest_drawing_checked(drawing_to_json(d)) == d);
        if (ng.g.n > 0) CHECK(drawing_stats(d).area_per_vertex <= kAreaConstant);
        for (const auto& e : d.edges) CHECK(e.u < e.v);
    }
}
