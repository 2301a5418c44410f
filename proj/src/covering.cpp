#include "stcover/covering.hpp"

#include <algorithm>
#include <set>

namespace stcover {

namespace {

bool polylines_meet_only_at(const Polyline& u, const Polyline& v,
                            const std::vector<Point2>& allowed, double tol) {
    for (size_t i = 0; i + 1 < u.pts.size(); ++i)
        for (size_t j = 0; j + 1 < v.pts.size(); ++j) {
            SegX x = segment_intersect(u.segment(i), v.segment(j), tol);
            if (x.kind == SegXKind::None) continue;
            if (x.kind == SegXKind::Overlap) return false;
            bool ok = false;
            for (const Point2& a : allowed)
                if (approx_eq(x.p, a, tol * 10)) ok = true;
            if (!ok) return false;
        }
    return true;
}

}  // namespace

CutValidation validate_cuts(const PointConfig& config, const CutSystem& cuts) {
    CutValidation r;
    config.validate();
    int m = config.m();
    auto fail = [&](bool& flag, const std::string& msg) {
        flag = false;
        r.failures.push_back(msg);
    };

    if ((int)cuts.sigma.size() != m - 1 || (int)cuts.sigma_prime.size() != m - 1) {
        fail(r.a_simple, "cut chains must have m-1 curves each");
        return r;
    }
    for (int chain = 0; chain < 2; ++chain) {
        const auto& C = chain == 0 ? cuts.sigma : cuts.sigma_prime;
        std::string name = chain == 0 ? "sigma" : "sigma_prime";
        for (int i = 0; i < m - 1; ++i) {
            if (C[i].pts.size() < 2 || !C[i].simple())
                fail(r.a_simple, name + "[" + std::to_string(i + 1) + "] not a simple curve");
            else if (!approx_eq(C[i].pts.front(), config.points[i]) ||
                     !approx_eq(C[i].pts.back(), config.points[i + 1]))
                fail(r.a_simple, name + "[" + std::to_string(i + 1) + "] endpoints mismatch");
        }
        for (int i = 0; i + 1 < m - 1; ++i)
            if (!polylines_meet_only_at(C[i], C[i + 1], {config.points[i + 1]}, kGeoTol))
                fail(r.b_consecutive,
                     name + " consecutive curves " + std::to_string(i + 1) + "," +
                         std::to_string(i + 2) + " share more than the terminal");
        for (int i = 0; i < m - 1; ++i)
            for (int l = i + 2; l < m - 1; ++l)
                if (!polylines_meet_only_at(C[i], C[l], {}, kGeoTol))
                    fail(r.c_disjoint, name + " curves " + std::to_string(i + 1) + "," +
                                           std::to_string(l + 1) + " intersect");
    }
    // (i) Σ ∩ Σ' = S.
    for (int i = 0; i < m - 1 && r.a_simple; ++i)
        for (int l = 0; l < m - 1; ++l)
            if (!polylines_meet_only_at(cuts.sigma[i], cuts.sigma_prime[l], config.points, kGeoTol))
                fail(r.i_meet_only_at_terminals, "sigma[" + std::to_string(i + 1) +
                                                     "] meets sigma_prime[" + std::to_string(l + 1) +
                                                     "] off the terminals");

    // (ii) Cyclic order of the four incident arcs at each interior terminal:
    // the two Σ arcs must be adjacent.
    if (r.a_simple)
        for (int i = 1; i < m - 1; ++i) {
            Point2 v = config.points[i];
            struct Arc {
                double angle;
                bool is_sigma;
            };
            std::vector<Arc> arcs;
            auto add = [&](const Polyline& c, bool at_start, bool is_sigma) {
                Vec2 d = at_start ? (c.pts[1] - c.pts[0]) : (c.pts[c.pts.size() - 2] - c.pts.back());
                arcs.push_back({std::atan2(d.y, d.x), is_sigma});
            };
            add(cuts.sigma[i], true, true);
            add(cuts.sigma[i - 1], false, true);
            add(cuts.sigma_prime[i], true, false);
            add(cuts.sigma_prime[i - 1], false, false);
            std::sort(arcs.begin(), arcs.end(),
                      [](const Arc& a, const Arc& b) { return a.angle < b.angle; });
            bool adjacent = false;
            for (int k = 0; k < 4; ++k)
                if (arcs[k].is_sigma && arcs[(k + 1) % 4].is_sigma) adjacent = true;
            if (!adjacent)
                fail(r.ii_arc_order, "sigma arcs not adjacent in the cyclic order at p_" +
                                         std::to_string(i + 1));
        }

    if (cuts.omega.size() >= 3) {
        for (int chain = 0; chain < 2; ++chain) {
            const auto& C = chain == 0 ? cuts.sigma : cuts.sigma_prime;
            for (const auto& c : C)
                for (const Point2& p : c.pts)
                    if (!point_in_polygon(p, cuts.omega))
                        fail(r.inside_omega, "cut vertex outside omega");
        }
        for (const Point2& p : config.points)
            if (!point_in_polygon(p, cuts.omega)) fail(r.inside_omega, "terminal outside omega");
    } else {
        fail(r.inside_omega, "omega polygon missing");
    }
    return r;
}

CutSystem canonical_cuts(const PointConfig& config, double bulge) {
    config.validate();
    int m = config.m();
    CutSystem cs;

    if (m == 2) {
        Point2 a = config.points[0], b = config.points[1];
        Vec2 n = (b - a).perp().normalized();
        double H = bulge > 0 ? bulge : dist(a, b);
        Point2 apex = (a + b) / 2 + n * H;
        cs.sigma.push_back(Polyline({a, apex, b}));
        cs.sigma_prime.push_back(Polyline({a, b}));
        double M = dist(a, b);
        Vec2 u = (b - a).normalized();
        cs.omega = {a - u * M - n * M, b + u * M - n * M, b + u * M + n * (H + M),
                    a - u * M + n * (H + M)};
        return cs;
    }

    if (!config.convex_ccw())
        throw CutError(
            "canonical_cuts: points not in convex position (counterclockwise); "
            "apply the network-compatible relabeling construction instead");

    Point2 c = config.centroid();
    double diam = config.diameter();
    std::vector<Point2> apexes;
    for (int i = 0; i < m - 1; ++i) {
        Point2 a = config.points[i], b = config.points[i + 1];
        Vec2 nu = (b - a).perp().normalized() * -1.0;  // outward for a CCW polygon
        double L = dist(a, b);
        double apothem = std::abs(nu.dot((a + b) / 2 - c));
        // Tall enough that discharge strips beyond the bulge keep pairwise
        // field differences within the size bound (see field extension).
        double H = bulge > 0 ? bulge : 2.0 * std::hypot(L / 2, apothem) - apothem + 0.05 * diam;
        Point2 apex = (a + b) / 2 + nu * H;
        apexes.push_back(apex);
        cs.sigma.push_back(Polyline({a, apex, b}));
        cs.sigma_prime.push_back(Polyline({a, b}));
    }

    // Shrink bulges until the chains are valid (irregular hulls can make tall
    // tents collide).
    for (int attempt = 0; attempt < 24; ++attempt) {
        cs.omega.clear();
        std::vector<Point2> all = config.points;
        all.insert(all.end(), apexes.begin(), apexes.end());
        std::vector<Point2> hull = convex_hull(all);
        Point2 hc{0, 0};
        for (const Point2& p : hull) hc += p;
        hc = hc / (double)hull.size();
        for (const Point2& p : hull) cs.omega.push_back(p + (p - hc) * 0.15);
        CutValidation v = validate_cuts(config, cs);
        if (v.pass()) return cs;
        for (int i = 0; i < m - 1; ++i) {
            Point2 a = config.points[i], b = config.points[i + 1];
            Point2 mid = (a + b) / 2;
            apexes[i] = mid + (apexes[i] - mid) * 0.7;
            cs.sigma[i] = Polyline({a, apexes[i], b});
        }
    }
    throw CutError("canonical_cuts: could not construct a valid bulged chain");
}

CoveringSpace build_covering(const PointConfig& config, const CutSystem& cuts) {
    CutValidation v = validate_cuts(config, cuts);
    if (!v.pass()) {
        std::string msg = "build_covering: invalid cuts:";
        for (const auto& f : v.failures) msg += " [" + f + "]";
        throw CutError(msg);
    }
    CoveringSpace cov;
    cov.config = config;
    cov.cuts = cuts;
    cov.m = config.m();
    for (int i = 0; i < cov.m - 1; ++i) {
        std::vector<Point2> poly(cuts.sigma[i].pts);
        const auto& sp = cuts.sigma_prime[i].pts;
        for (size_t k = sp.size() - 1; k-- > 1;) poly.push_back(sp[k]);
        cov.bands.push_back(std::move(poly));
    }
    return cov;
}

bool SheetPermutation::valid() const {
    std::vector<char> seen(map.size(), 0);
    for (int v : map) {
        if (v < 0 || v >= (int)map.size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool SheetPermutation::transitive() const {
    int n = size();
    if (n == 0) return false;
    int s = 0, steps = 0;
    do {
        s = map[s];
        ++steps;
    } while (s != 0 && steps <= n);
    return steps == n;
}

SheetPermutation monodromy(const CoveringSpace& cov, const Polyline& loop) {
    if (!loop.closed()) throw CutError("monodromy: loop not closed");
    for (const Point2& t : cov.config.points)
        for (size_t i = 0; i + 1 < loop.pts.size(); ++i)
            if (point_on_segment(t, loop.segment(i), kGeoTol * 10))
                throw CutError("monodromy: loop passes through a terminal");

    struct Crossing {
        double along;  // global parameter along the loop
        int band;      // 1-based
        int delta;     // signed shift applied to the tracked sheet index
    };
    std::vector<Crossing> xs;
    double walked = 0;
    for (size_t i = 0; i + 1 < loop.pts.size(); ++i) {
        Segment ls = loop.segment(i);
        double L = ls.length();
        if (L <= kGeoTol) continue;
        Vec2 u = ls.dir();
        for (int b = 1; b < cov.m; ++b) {
            const Polyline& sig = cov.cuts.sigma[b - 1];
            for (size_t k = 0; k + 1 < sig.pts.size(); ++k) {
                SegX x = segment_intersect(ls, sig.segment(k), kGeoTol);
                if (x.kind == SegXKind::None) continue;
                if (x.kind != SegXKind::Proper)
                    throw CutError("monodromy: loop not transversal to a cut (vertex touch)");
                double eps = std::max(1e-7 * L, 1e-7);
                Point2 before = x.p - u * eps, after = x.p + u * eps;
                bool bin = cov.in_band(b, before), ain = cov.in_band(b, after);
                if (bin == ain) throw CutError("monodromy: tangential cut crossing");
                // Leaving I_b adds +b to the tracked D-sheet index (mod m).
                int delta = ain ? -b : +b;
                xs.push_back({walked + (x.p - ls.a).dot(u), b, delta});
            }
        }
        walked += L;
    }
    std::sort(xs.begin(), xs.end(),
              [](const Crossing& a, const Crossing& b) { return a.along < b.along; });
    SheetPermutation perm = SheetPermutation::identity(cov.m);
    for (const Crossing& c : xs)
        perm = SheetPermutation::cyclic_shift(cov.m, c.delta).compose(perm);
    return perm;
}

}  // namespace stcover
