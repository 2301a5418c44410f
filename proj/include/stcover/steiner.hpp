#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stcover/geom.hpp"

namespace stcover {

struct SteinerError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Labeled terminal set p_1..p_m in cyclic order. Index 0 holds p_1.
struct PointConfig {
    std::vector<Point2> points;

    int m() const { return (int)points.size(); }
    void validate() const;
    bool convex_ccw() const { return convex_position_ccw(points); }
    Point2 centroid() const;
    double diameter() const;
};

// Embedded straight-line network over terminals plus optional Steiner points.
// Vertex indices: 0..m-1 terminals, then Steiner points.
struct Network {
    std::vector<Point2> terminals;
    std::vector<Point2> steiner_points;
    std::vector<std::pair<int, int>> edges;

    int terminal_count() const { return (int)terminals.size(); }
    int vertex_count() const { return (int)(terminals.size() + steiner_points.size()); }
    Point2 vertex(int i) const {
        return i < terminal_count() ? terminals[i] : steiner_points[i - terminal_count()];
    }
    std::vector<Point2> vertex_positions() const;
    double length() const;
    int degree(int v) const;
    bool connected() const;
    bool acyclic() const;
    // Connected, loop-free, spanning all terminals.
    void require_class_T() const;
    // Edges may only meet at shared endpoints.
    void require_noncrossing(double tol = kGeoTol) const;
    // Merge vertices closer than tol and drop the resulting zero-length edges.
    Network contracted(double tol = 1e-9) const;
    // Geometry key for deduplicating co-minimizers (sorted rounded edge set).
    std::string geometry_key(double tol = 1e-7) const;
};

// Abstract tree on m terminal labels plus k Steiner labels (degree exactly 3).
struct SteinerTopology {
    int m = 0;
    int k = 0;
    std::vector<std::pair<int, int>> edges;  // labels 0..m-1 terminals, m..m+k-1 Steiner

    int vertex_count() const { return m + k; }
    // For terminals in convex cyclic order: each tree edge splits the terminals
    // in two; planar embeddability requires every split to be a cyclic interval.
    bool planar_compatible() const;
    // Unordered label pairs (1-based) of the sector interfaces the embedded
    // tree induces, one per edge; requires planar_compatible().
    std::vector<std::pair<int, int>> interface_pattern() const;
};

// All tree topologies with Steiner labels of degree exactly 3 and terminals of
// any degree >= 1, for k = 0..m-2 Steiner labels, up to relabeling of the
// Steiner labels. 2 <= m <= 8.
std::vector<SteinerTopology> enumerate_topologies(int m);

struct OptimizedTopology {
    Network network;      // contracted embedding
    double length = 0;
    bool degenerate = false;  // some Steiner point collapsed
    int sweeps = 0;
};

// Coordinates minimizing total length for the fixed topology, by iterated
// closed-form Fermat-point replacement. Throws SteinerError on non-convergence.
OptimizedTopology optimize_topology(const SteinerTopology& top, const PointConfig& config);

// Fermat point of a triangle: the interior point minimizing the sum of
// distances, or the vertex whose angle is >= 120 degrees.
Point2 fermat_point(Point2 a, Point2 b, Point2 c);

struct SteinerSolution {
    double length = 0;
    std::vector<Network> minimizers;  // all co-optimal networks within tie_tol
    int topologies_tried = 0;
};

// Exact small-instance solver: minimum over all enumerated topologies.
SteinerSolution steiner_tree(const PointConfig& config, double tie_tol = 1e-9);

// Shared enumeration + optimization cache so the family machinery and the
// solver run one optimization pass per configuration.
struct TopologyAtlas {
    PointConfig config;
    std::vector<SteinerTopology> topologies;        // planar-compatible only
    std::vector<std::vector<std::pair<int, int>>> patterns;
    std::vector<OptimizedTopology> optimized;
    int skipped_nonplanar = 0;
};
TopologyAtlas build_topology_atlas(const PointConfig& config);

double minimum_spanning_tree_length(const PointConfig& config);

}  // namespace stcover
