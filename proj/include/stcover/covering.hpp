#pragma once

#include "stcover/geom.hpp"
#include "stcover/steiner.hpp"

namespace stcover {

struct CutError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two chains of cut polylines joining consecutive terminals, plus the convex
// polygon containing them.
struct CutSystem {
    std::vector<Polyline> sigma;        // Σ_i from p_i to p_{i+1}, i = 1..m-1
    std::vector<Polyline> sigma_prime;  // Σ'_i likewise
    std::vector<Point2> omega;          // convex polygon, contains Conv(S) and all cuts
};

struct CutValidation {
    bool a_simple = true;        // each curve simple, correct endpoints
    bool b_consecutive = true;   // consecutive curves meet only at the shared terminal
    bool c_disjoint = true;      // non-adjacent curves disjoint
    bool i_meet_only_at_terminals = true;  // Σ ∩ Σ' = S
    bool ii_arc_order = true;    // at interior terminals the two Σ arcs are adjacent
    bool inside_omega = true;
    std::vector<std::string> failures;

    bool pass() const {
        return a_simple && b_consecutive && c_disjoint && i_meet_only_at_terminals &&
               ii_arc_order && inside_omega;
    }
};

CutValidation validate_cuts(const PointConfig& config, const CutSystem& cuts);

// Σ'_i = straight segment p_i p_{i+1}; Σ_i = two-segment polyline bulged
// outward over the edge. bulge < 0 selects an automatic height that keeps the
// flux-discharge strips of the field extension within the size bound.
// Requires the points in convex position, counterclockwise (m >= 3); m = 2 is
// handled with the segment chord and an upward bulge.
CutSystem canonical_cuts(const PointConfig& config, double bulge = -1.0);

// The m-sheeted covering as a finite identification table.
//
// Sheet bookkeeping: a path crossing Σ_i from the band region I_i into O
// continues on D-sheet j+i (mod m); entering I_i across Σ_i lands on sheet
// j-i. Crossing Σ'_i never changes the D-sheet index. The bands carry the
// shift table {I_i -> i, O -> 0}.
struct CoveringSpace {
    PointConfig config;
    CutSystem cuts;
    std::vector<std::vector<Point2>> bands;  // polygon of I_i, i = 1..m-1 (index 0 = I_1)
    int m = 0;

    bool in_band(int band_1based, Point2 p) const {
        return point_in_polygon(p, bands[band_1based - 1], kGeoTol);
    }
    // Band containing p, or 0 for the outer region O.
    int band_of_point(Point2 p) const {
        for (int i = 1; i < m; ++i)
            if (in_band(i, p)) return i;
        return 0;
    }
};

CoveringSpace build_covering(const PointConfig& config, const CutSystem& cuts);

struct SheetPermutation {
    std::vector<int> map;  // 0-based images: sheet s -> map[s]

    static SheetPermutation identity(int m) {
        SheetPermutation p;
        p.map.resize(m);
        for (int i = 0; i < m; ++i) p.map[i] = i;
        return p;
    }
    static SheetPermutation cyclic_shift(int m, int delta) {
        SheetPermutation p;
        p.map.resize(m);
        for (int i = 0; i < m; ++i) p.map[i] = ((i + delta) % m + m) % m;
        return p;
    }
    int size() const { return (int)map.size(); }
    // (this ∘ other)(x) = this(other(x)).
    SheetPermutation compose(const SheetPermutation& other) const {
        SheetPermutation p;
        p.map.resize(map.size());
        for (size_t i = 0; i < map.size(); ++i) p.map[i] = map[other.map[i]];
        return p;
    }
    bool is_identity() const {
        for (size_t i = 0; i < map.size(); ++i)
            if (map[i] != (int)i) return false;
        return true;
    }
    // Single cycle through all sheets.
    bool transitive() const;
    bool valid() const;
};

// Composition of the signed sheet shifts along the loop, one per transversal
// crossing of a Σ cut. The loop must avoid terminals and cut vertices and
// cross cuts transversally; otherwise a CutError is thrown.
SheetPermutation monodromy(const CoveringSpace& cov, const Polyline& loop);

}  // namespace stcover
