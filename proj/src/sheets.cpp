#include "stcover/sheets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace stcover {

namespace {

// Seam test at a cut edge: outer-side label a matches band-side label b when
// b ≡ a - i (mod m).
bool sigma_seam_aligned(int label_outer, int label_band, int band, int m) {
    return ((label_outer - band - label_band) % m + m) % m == 0;
}

}  // namespace

bool edge_is_boundary(const SheetedSet& E, int e) {
    const auto& ed = E.arr->edges[e];
    int la = E.label[ed.face_left], lb = E.label[ed.face_right];
    if (ed.tag.sigma_band >= 1) {
        int band = ed.tag.sigma_band;
        int bl = E.band_of_face[ed.face_left], br = E.band_of_face[ed.face_right];
        if ((bl == band) != (br == band)) {
            int label_band = bl == band ? la : lb;
            int label_outer = bl == band ? lb : la;
            return !sigma_seam_aligned(label_outer, label_band, band, E.m);
        }
        // Degenerate: both sides in (or out of) the band; fall through.
    }
    return la != lb;
}

double perimeter(const SheetedSet& E) {
    double L = 0;
    for (int e = 0; e < E.arr->edge_count(); ++e)
        if (edge_is_boundary(E, e)) L += E.arr->edges[e].len;
    return 2 * L;
}

double perimeter_localized(const SheetedSet& E, const std::vector<Point2>& window) {
    double L = 0;
    for (int e = 0; e < E.arr->edge_count(); ++e) {
        if (!edge_is_boundary(E, e)) continue;
        Point2 a = E.arr->vertices[E.arr->edges[e].a];
        Point2 b = E.arr->vertices[E.arr->edges[e].b];
        // Clip the segment to the convex window.
        double t0 = 0, t1 = 1;
        size_t n = window.size();
        bool gone = false;
        for (size_t i = 0; i < n && !gone; ++i) {
            Vec2 nrm = (window[(i + 1) % n] - window[i]).perp();  // inward for CCW
            double da = nrm.dot(a - window[i]);
            double db = nrm.dot(b - window[i]);
            if (da < 0 && db < 0) gone = true;
            else if (da < 0) t0 = std::max(t0, da / (da - db));
            else if (db < 0) t1 = std::min(t1, da / (da - db));
        }
        if (!gone && t1 > t0) L += (t1 - t0) * dist(a, b);
    }
    return 2 * L;
}

std::vector<InterfaceSet> interfaces(const SheetedSet& E) {
    std::map<std::pair<int, int>, InterfaceSet> by_pair;
    for (int e = 0; e < E.arr->edge_count(); ++e) {
        if (!edge_is_boundary(E, e)) continue;
        const auto& ed = E.arr->edges[e];
        auto key = std::minmax(E.label[ed.face_left], E.label[ed.face_right]);
        auto& s = by_pair[key];
        s.i = key.first;
        s.j = key.second;
        s.edge_ids.push_back(e);
        s.length += ed.len;
    }
    std::vector<InterfaceSet> out;
    for (auto& [k, v] : by_pair) out.push_back(std::move(v));
    return out;
}

ConstraintReport check_constraints(const SheetedSet& E, const PointConfig& config) {
    ConstraintReport r;
    auto fail = [&](bool& flag, const std::string& msg) {
        flag = false;
        r.failures.push_back(msg);
    };
    if ((int)E.label.size() != E.arr->face_count()) {
        fail(r.labels_total, "label array does not cover all faces");
        return r;
    }
    for (int l : E.label)
        if (l < 1 || l > E.m) fail(r.labels_total, "label out of range");
    if (E.label[E.arr->unbounded_face] != 1)
        fail(r.unbounded_is_one, "unbounded face not labeled 1");

    std::vector<int> bedges;
    for (int e = 0; e < E.arr->edge_count(); ++e)
        if (edge_is_boundary(E, e)) bedges.push_back(e);

    for (int t = 0; t < config.m(); ++t) {
        bool touched = false;
        for (int e : bedges) {
            if (approx_eq(E.arr->vertices[E.arr->edges[e].a], config.points[t], kGeoTol * 10) ||
                approx_eq(E.arr->vertices[E.arr->edges[e].b], config.points[t], kGeoTol * 10))
                touched = true;
        }
        if (!touched)
            fail(r.terminals_on_boundary,
                 "terminal " + std::to_string(t + 1) + " not on any boundary edge");
    }

    if (!bedges.empty()) {
        std::vector<int> parent(E.arr->vertex_count());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int e : bedges) parent[find(E.arr->edges[e].a)] = find(E.arr->edges[e].b);
        int root = -1;
        bool split = false;
        for (int t = 0; t < config.m(); ++t) {
            int v = E.arr->find_vertex(config.points[t], kGeoTol * 10);
            if (v < 0) continue;
            if (root < 0) root = find(v);
            else if (find(v) != root) split = true;
        }
        if (split) fail(r.terminals_connected, "terminals split across boundary components");
    } else if (config.m() > 0) {
        fail(r.terminals_connected, "no boundary at all");
    }
    return r;
}

Arrangement sheet_arrangement(const CoveringSpace& cov, const Network& net) {
    net.require_noncrossing();
    std::vector<SegInput> segs;
    const auto& pts = cov.config.points;
    int m = cov.m;
    if (m >= 3)
        for (int i = 0; i < m; ++i) {
            EdgeTag t;
            t.hull = true;
            segs.push_back({{pts[i], pts[(i + 1) % m]}, t});
        }
    for (int i = 0; i < m - 1; ++i) {
        for (size_t k = 0; k + 1 < cov.cuts.sigma[i].pts.size(); ++k) {
            EdgeTag t;
            t.sigma_band = i + 1;
            segs.push_back({cov.cuts.sigma[i].segment(k), t});
        }
        for (size_t k = 0; k + 1 < cov.cuts.sigma_prime[i].pts.size(); ++k) {
            EdgeTag t;
            t.sigma_prime_band = i + 1;
            segs.push_back({cov.cuts.sigma_prime[i].segment(k), t});
        }
    }
    for (auto [a, b] : net.edges) {
        EdgeTag t;
        t.network = true;
        segs.push_back({{net.vertex(a), net.vertex(b)}, t});
    }
    return build_arrangement_from_segments(segs);
}

namespace {

std::vector<int> band_per_face(const Arrangement& arr, const CoveringSpace& cov) {
    std::vector<int> band(arr.face_count(), 0);
    for (int f = 0; f < arr.face_count(); ++f) {
        if (!arr.faces[f].bounded) continue;
        band[f] = cov.band_of_point(arr.faces[f].rep);
    }
    return band;
}

// Bijection with cov.points[i] = net.terminals[r[i]] (within tolerance).
std::vector<int> terminal_matching(const Network& net, const PointConfig& cfg) {
    int m = cfg.m();
    if (net.terminal_count() != m)
        throw SheetsError("network_to_sheeted_set: terminal count mismatch");
    std::vector<int> r(m, -1);
    std::vector<char> used(m, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j)
            if (!used[j] && approx_eq(cfg.points[i], net.terminals[j], 1e-7)) {
                r[i] = j;
                used[j] = 1;
                break;
            }
        if (r[i] < 0)
            throw SheetsError("network_to_sheeted_set: terminals do not match the covering");
    }
    return r;
}

}  // namespace

SheetedSet network_to_sheeted_set(const Network& net_in, const CoveringSpace& cov) {
    net_in.require_class_T();
    for (auto [a, b] : net_in.edges)
        if (a == b) throw SheetsError("network_to_sheeted_set: self-loop");

    Network net = net_in;
    std::vector<int> match = terminal_matching(net_in, cov.config);
    bool identity = true;
    for (int i = 0; i < cov.m; ++i) identity &= (match[i] == i);
    if (!identity) {
        std::vector<int> inv(cov.m);
        for (int i = 0; i < cov.m; ++i) inv[match[i]] = i;
        net.terminals = cov.config.points;
        for (auto& [a, b] : net.edges) {
            if (a < cov.m) a = inv[a];
            if (b < cov.m) b = inv[b];
        }
    }

    SheetedSet E;
    E.arr = std::make_shared<Arrangement>(sheet_arrangement(cov, net));
    E.m = cov.m;
    E.band_of_face = band_per_face(*E.arr, cov);
    E.label.assign(E.arr->face_count(), 0);
    E.label[E.arr->unbounded_face] = 1;

    const Arrangement& arr = *E.arr;
    for (int j = 1; j < cov.m; ++j) {
        // Flood from the faces of band I_j across everything except network and
        // Σ edges; the flooded region is bounded by Σ_j and the network path.
        std::vector<int> stack;
        for (int f = 0; f < arr.face_count(); ++f)
            if (E.band_of_face[f] == j) stack.push_back(f);
        if (stack.empty()) throw SheetsError("network_to_sheeted_set: cut band has no face");
        int lab = cov.m + 1 - j;
        std::vector<char> in_region(arr.face_count(), 0);
        for (int f : stack) in_region[f] = 1;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            if (E.label[f] != 0 && E.label[f] != lab)
                throw SheetsError("network_to_sheeted_set: overlapping regions");
            E.label[f] = lab;
            for (int e : arr.faces[f].edges) {
                const auto& ed = arr.edges[e];
                if (ed.tag.network || ed.tag.sigma_band >= 1) continue;
                int g = ed.face_left == f ? ed.face_right : ed.face_left;
                if (g == f || in_region[g]) continue;
                if (g == arr.unbounded_face)
                    throw SheetsError("network_to_sheeted_set: region leaked to infinity");
                if (E.band_of_face[g] != 0 && E.band_of_face[g] != j)
                    throw SheetsError("network_to_sheeted_set: region leaked into another band");
                in_region[g] = 1;
                stack.push_back(g);
            }
        }
    }
    for (int f = 0; f < arr.face_count(); ++f)
        if (E.label[f] == 0) E.label[f] = 1;
    return E;
}

SheetedSet constant_set(const SheetedSet& base) {
    SheetedSet out = base;
    for (int f = 0; f < base.arr->face_count(); ++f) {
        int b = base.band_of_face[f];
        out.label[f] = ((1 - b - 1) % base.m + base.m) % base.m + 1;
    }
    out.label[base.arr->unbounded_face] = 1;
    return out;
}

SheetedSet with_labels(const SheetedSet& base, std::vector<int> labels) {
    SheetedSet out = base;
    if ((int)labels.size() != base.arr->face_count())
        throw SheetsError("with_labels: size mismatch");
    for (int& l : labels) l = std::clamp(l, 1, base.m);
    labels[base.arr->unbounded_face] = 1;
    out.label = std::move(labels);
    return out;
}

}  // namespace stcover
