#include "rydmis/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace rydmis {

UnitDiskGraph unit_disk_graph(const std::vector<Point>& points, double radius) {
    if (!(radius > 0)) throw std::invalid_argument("unit_disk_graph: radius must be positive");
    const double r2 = radius * radius * (1.0 + 1e-9);
    // Bucket points into cells of side `radius`; only neighboring cells can hold partners.
    std::map<std::pair<long, long>, std::vector<int>> cells;
    auto cell_of = [&](const Point& p) {
        return std::make_pair(static_cast<long>(std::floor(p.x / radius)),
                              static_cast<long>(std::floor(p.y / radius)));
    };
    for (std::size_t i = 0; i < points.size(); ++i) cells[cell_of(points[i])].push_back(static_cast<int>(i));

    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto [cx, cy] = cell_of(points[i]);
        for (long dx = -1; dx <= 1; ++dx)
            for (long dy = -1; dy <= 1; ++dy) {
                auto it = cells.find({cx + dx, cy + dy});
                if (it == cells.end()) continue;
                for (int j : it->second) {
                    if (j <= static_cast<int>(i)) continue;
                    double ddx = points[i].x - points[static_cast<std::size_t>(j)].x;
                    double ddy = points[i].y - points[static_cast<std::size_t>(j)].y;
                    double d2 = ddx * ddx + ddy * ddy;
                    if (d2 == 0)
                        throw std::invalid_argument("unit_disk_graph: duplicate points " + std::to_string(i) +
                                                    " and " + std::to_string(j));
                    if (d2 <= r2) edges.emplace_back(static_cast<int>(i), j);
                }
            }
    }
    std::sort(edges.begin(), edges.end());
    UnitDiskGraph out;
    out.points = points;
    out.radius = radius;
    out.graph = Graph::from_edges(static_cast<int>(points.size()), edges);
    return out;
}

}  // namespace rydmis
