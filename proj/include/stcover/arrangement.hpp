#pragma once

#include <memory>

#include "stcover/geom.hpp"

namespace stcover {

// Provenance of an arrangement edge; merged when input segments coincide.
struct EdgeTag {
    bool network = false;        // edge of the network being represented
    bool hull = false;           // edge of the terminal convex hull / domain
    int sigma_band = -1;         // index i (1-based) if the edge lies on cut polyline Σ_i
    int sigma_prime_band = -1;   // index i if the edge lies on cut polyline Σ'_i
    bool window = false;         // outer window boundary (never checked)

    void merge(const EdgeTag& o) {
        network |= o.network;
        hull |= o.hull;
        window |= o.window;
        if (o.sigma_band >= 0) sigma_band = o.sigma_band;
        if (o.sigma_prime_band >= 0) sigma_prime_band = o.sigma_prime_band;
    }
};

struct SegInput {
    Segment seg;
    EdgeTag tag;
};

// Planar subdivision induced by a set of segments. Segments may share
// endpoints, cross, or partially overlap; they are split at all incidences.
class Arrangement {
public:
    struct Edge {
        int a = -1, b = -1;          // vertex indices
        double len = 0;
        EdgeTag tag;
        int face_left = -1;          // face on the left of a->b
        int face_right = -1;
    };

    struct Face {
        std::vector<int> outer;          // vertex cycle, counterclockwise (empty for the unbounded face)
        std::vector<std::vector<int>> holes;  // clockwise vertex cycles
        double area = 0;                 // outer area minus holes; 0 for unbounded
        bool bounded = false;
        Point2 rep{};                    // a point strictly inside the face (bounded only)
        std::vector<int> edges;          // incident edge ids
        std::vector<int> neighbors;      // adjacent face ids (via shared edges)
    };

    std::vector<Point2> vertices;
    std::vector<Edge> edges;
    std::vector<Face> faces;
    int unbounded_face = -1;

    int vertex_count() const { return (int)vertices.size(); }
    int edge_count() const { return (int)edges.size(); }
    int face_count() const { return (int)faces.size(); }

    Point2 edge_midpoint(int e) const {
        return (vertices[edges[e].a] + vertices[edges[e].b]) / 2;
    }
    Vec2 edge_unit(int e) const {
        return (vertices[edges[e].b] - vertices[edges[e].a]).normalized();
    }
    // Unit normal pointing into face_left of the edge.
    Vec2 edge_normal_into_left(int e) const { return edge_unit(e).perp(); }

    // Face containing p; the unbounded face if outside everything.
    // Points within tol of an edge resolve to an arbitrary incident face.
    int locate(Point2 p) const;

    // Index of the vertex within tol of p, or -1.
    int find_vertex(Point2 p, double tol = kGeoTol) const;

    // Euler characteristic V - E + F (should be 1 + #components).
    int euler() const { return vertex_count() - edge_count() + face_count(); }
    int component_count() const;

    double bounded_area() const {
        double s = 0;
        for (const Face& f : faces)
            if (f.bounded) s += f.area;
        return s;
    }
};

// Builds the subdivision. Throws GeomError on degenerate input.
Arrangement build_arrangement_from_segments(const std::vector<SegInput>& segs,
                                            double tol = kGeoTol);

struct Network;  // steiner.hpp

// Faces of domain \ network plus the unbounded face. Network vertices must lie
// inside or on the domain; crossing network edges are rejected.
Arrangement build_arrangement(const std::vector<Point2>& domain, const Network& net,
                              double tol = kGeoTol);

}  // namespace stcover
