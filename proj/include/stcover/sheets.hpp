#pragma once

#include <memory>
#include <set>

#include "stcover/arrangement.hpp"
#include "stcover/covering.hpp"

namespace stcover {

struct SheetsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Face-labeled arrangement of hull ∪ cuts ∪ network: the runtime image of a
// constrained set on the covering. label[f] in 1..m is the D-sheet whose copy
// of face f belongs to the set; the unbounded face carries label 1.
//
// A non-network arrangement edge is genuine boundary only when the labels on
// its two sides disagree under the covering identification: equal labels
// across ordinary edges and Σ' cuts, labels differing by the band shift across
// Σ cuts (band side ≡ outer side − i mod m) are seams, not boundary.
struct SheetedSet {
    std::shared_ptr<const Arrangement> arr;
    int m = 0;
    std::vector<int> label;         // per face, 1..m
    std::vector<int> band_of_face;  // 0 = outside all bands, else band index 1..m-1

    int label_of(Point2 p) const { return label[arr->locate(p)]; }
};

struct InterfaceSet {
    int i = 0, j = 0;  // unordered label pair, i < j
    std::vector<int> edge_ids;
    double length = 0;
};

// True if edge e of E.arr carries boundary of the represented set.
bool edge_is_boundary(const SheetedSet& E, int e);

// Twice the total length of boundary edges.
double perimeter(const SheetedSet& E);

// Twice the boundary length inside a convex window polygon.
double perimeter_localized(const SheetedSet& E, const std::vector<Point2>& window);

// One set per unordered label pair with positive boundary length.
std::vector<InterfaceSet> interfaces(const SheetedSet& E);

struct ConstraintReport {
    bool labels_total = true;          // one label in 1..m per face
    bool unbounded_is_one = true;      // sheet 1 at infinity
    bool terminals_on_boundary = true; // every terminal touches a boundary edge
    bool terminals_connected = true;   // all terminals in one boundary component
    std::vector<std::string> failures;
    bool pass() const {
        return labels_total && unbounded_is_one && terminals_on_boundary && terminals_connected;
    }
};

ConstraintReport check_constraints(const SheetedSet& E, const PointConfig& config);

// Arrangement of hull ∪ cuts ∪ network shared by sets over one covering.
Arrangement sheet_arrangement(const CoveringSpace& cov, const Network& net);

// The constrained set whose boundary projects exactly onto the network: the
// region bounded by Σ_j and the network path from p_j to p_{j+1} carries label
// m+1-j, everything else label 1. Terminals of the network are matched to the
// covering's labeling (cyclic relabeling applied if needed).
SheetedSet network_to_sheeted_set(const Network& net, const CoveringSpace& cov);

// Relabel a set's faces arbitrarily (used by competitor sampling); labels are
// clamped to 1..m and the unbounded face forced to 1.
SheetedSet with_labels(const SheetedSet& base, std::vector<int> labels);

// The covering-constant set "sheet one everywhere": label 1 outside the bands
// and the shift-aligned label 1-i (mod m) inside band I_i. Has no boundary.
SheetedSet constant_set(const SheetedSet& base);

}  // namespace stcover
