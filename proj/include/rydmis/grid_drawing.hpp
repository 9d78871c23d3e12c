#pragma once

#include "rydmis/graph.hpp"

#include <compare>
#include <string>
#include <vector>

namespace rydmis {

struct GridPoint {
    long x = 0;
    long y = 0;

    auto operator<=>(const GridPoint&) const = default;
};

struct DrawnEdge {
    int u = 0;
    int v = 0;
    std::vector<GridPoint> path;  // from u to v

    bool operator==(const DrawnEdge&) const = default;
};

/// Orthogonal grid drawing; vertex i sits at vertices[i].
struct GridDrawing {
    std::vector<GridPoint> vertices;
    std::vector<DrawnEdge> edges;

    bool operator==(const GridDrawing&) const = default;
};

struct DrawingStats {
    long width = 0;   // bounding box, in grid units
    long height = 0;
    long area = 0;    // (width+1)*(height+1) grid points
    double area_per_vertex = 0;
    int bends = 0;
    int total_length = 0;
};

/// Upper bound on area_per_vertex over the test corpus.
inline constexpr double kAreaConstant = 12.0;

/// Expands corner-only polylines into unit steps; throws std::invalid_argument on diagonal steps.
std::vector<GridPoint> unit_steps(const std::vector<GridPoint>& path);

/// Number of unit segments of a path.
int path_length(const std::vector<GridPoint>& path);

ValidationReport validate_drawing(const GridDrawing& d, const PlanarGraph& g);
DrawingStats drawing_stats(const GridDrawing& d);

/// Graph spelled out by the drawing's vertex and edge lists.
PlanarGraph drawing_graph(const GridDrawing& d);

/// Paths start at the lower vertex index, use unit steps; edges sorted by (u, v).
GridDrawing canonicalize(GridDrawing d);

GridDrawing grid_embed(const PlanarGraph& g);

std::string drawing_to_json(const GridDrawing& d);
/// Throws StageError("parse", ...) with line/column on malformed input.
GridDrawing parse_drawing_json(const std::string& text);

struct IngestedDrawing {
    GridDrawing drawing;
    ValidationReport report;
};

IngestedDrawing ingest_drawing(const std::string& text);
/// Throws StageError("embed", ...) if the drawing is invalid.
GridDrawing ingest_drawing_checked(const std::string& text);

namespace detail {

struct StChoice {
    int s = 0;
    int t = 0;
    bool mirror = false;
};

/// One run of the st-ordering construction; throws std::runtime_error on failure.
GridDrawing st_drawing(const Graph& g, const StChoice& choice);

/// All (s, t, mirror) choices of the construction, in a fixed order.
std::vector<StChoice> st_choices(const Graph& g);

/// st-numbering of a biconnected graph containing edge {s, t}; order[i] is the i-th vertex.
std::vector<int> st_numbering(const Graph& g, int s, int t);

}  // namespace detail

}  // namespace rydmis
