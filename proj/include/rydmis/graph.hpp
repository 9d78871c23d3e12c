#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rydmis {

/// Error raised by a pipeline stage; the tag names the stage.
class StageError : public std::runtime_error {
public:
    StageError(std::string stage, const std::string& msg)
        : std::runtime_error("[" + stage + "] " + msg), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string v) { violations.push_back(std::move(v)); }
};

/// Raw input graph; may be invalid until validate_planar_deg3 accepts it.
struct PlanarGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Simple undirected graph with sorted adjacency lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

    /// Throws std::invalid_argument on loops, duplicates or bad indices.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph from_planar(const PlanarGraph& g) { return from_edges(g.n, g.edges); }

    int size() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int u, int v) const;
    std::vector<std::pair<int, int>> edge_list() const;

private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

struct IndependentSet {
    std::vector<int> members;  // sorted

    int size() const { return static_cast<int>(members.size()); }
};

bool is_independent(const Graph& g, const std::vector<int>& members);
bool is_maximal_independent(const Graph& g, const std::vector<int>& members);

ValidationReport validate_planar_deg3(const PlanarGraph& g);

/// Combinatorial planarity; optionally returns a rotation system (clockwise neighbor order).
bool is_planar(const Graph& g, std::vector<std::vector<int>>* rotation = nullptr);

/// Exhaustive rotation-system search; nullopt when the search space exceeds the cap.
std::optional<bool> is_planar_exhaustive(const Graph& g, std::uint64_t cap = 10000000);

struct MisOptions {
    int vertex_budget = 64;
    bool count = false;
    int count_budget = 40;
};

struct MisResult {
    int size = 0;
    IndependentSet witness;
    std::optional<std::uint64_t> count;
};

MisResult mis_exact(const Graph& g, const MisOptions& opt = {});

/// Size only (no witness search); same budget rule.
int mis_size(const Graph& g, int vertex_budget = 64);

/// Exhaustive 2^n oracle, n <= 20.
MisResult mis_exhaustive(const Graph& g);

struct Point {
    double x = 0;
    double y = 0;
};

struct UnitDiskGraph {
    std::vector<Point> points;
    double radius = 0;
    Graph graph;
};

/// Closed-disk adjacency with relative guard band 1e-9 on squared distances.
UnitDiskGraph unit_disk_graph(const std::vector<Point>& points, double radius);

/// |MIS(G)| == |MIS(𝒢)| + Σ k_uv.
bool check_mis_correspondence(const Graph& original, const Graph& ud, const std::vector<int>& k_uv,
                              int vertex_budget = 100000);

// graph I/O
PlanarGraph parse_graph_json(const std::string& text);
PlanarGraph parse_edge_list(const std::string& text);
/// Dispatches on the first non-blank character ('{' means JSON).
PlanarGraph parse_graph(const std::string& text);
std::string graph_to_json(const PlanarGraph& g);

/// Line/column (1-based) of a byte offset in text.
std::pair<int, int> line_column(const std::string& text, std::size_t byte);

}  // namespace rydmis
