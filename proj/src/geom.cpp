#include "stcover/geom.hpp"

#include <algorithm>

namespace stcover {

double point_segment_distance(Point2 p, Segment s, double* t_out) {
    Vec2 d = s.b - s.a;
    double len2 = d.norm2();
    double t = len2 > 0 ? (p - s.a).dot(d) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    if (t_out) *t_out = t;
    return dist(p, s.a + d * t);
}

SegX segment_intersect(Segment s1, Segment s2, double tol) {
    if (s1.length() <= tol || s2.length() <= tol)
        throw GeomError("segment_intersect: degenerate (zero-length) segment");

    Vec2 r = s1.b - s1.a;
    Vec2 s = s2.b - s2.a;
    double denom = r.cross(s);
    double scale = std::max(r.norm(), s.norm());

    auto endpoint_touch = [&](SegX& out) -> bool {
        // Shared endpoint (within tol), used for both parallel and skew cases.
        for (Point2 p : {s1.a, s1.b})
            for (Point2 q : {s2.a, s2.b})
                if (approx_eq(p, q, tol)) {
                    out.kind = SegXKind::Endpoint;
                    out.p = (p + q) / 2;
                    return true;
                }
        return false;
    };

    if (std::abs(denom) <= tol * scale) {
        // Parallel. Check collinear overlap.
        if (point_segment_distance(s2.a, s1) > tol && point_segment_distance(s2.b, s1) > tol &&
            point_segment_distance(s1.a, s2) > tol && point_segment_distance(s1.b, s2) > tol) {
            SegX out;
            if (endpoint_touch(out)) return out;
            return {};
        }
        // Collinear-ish: project endpoints of s2 on s1.
        Vec2 u = r.normalized();
        double t0 = 0, t1 = r.norm();
        double ta = (s2.a - s1.a).dot(u);
        double tb = (s2.b - s1.a).dot(u);
        if (ta > tb) std::swap(ta, tb);
        double lo = std::max(t0, ta), hi = std::min(t1, tb);
        if (hi < lo - tol) return {};
        if (hi - lo <= tol) {
            SegX out;
            out.kind = SegXKind::Endpoint;
            out.p = s1.a + u * std::clamp((lo + hi) / 2, t0, t1);
            return out;
        }
        SegX out;
        out.kind = SegXKind::Overlap;
        out.p = s1.a + u * lo;
        out.q = s1.a + u * hi;
        return out;
    }

    double t = (s2.a - s1.a).cross(s) / denom;
    double u = (s2.a - s1.a).cross(r) / denom;
    double tt = tol / std::max(r.norm(), tol);
    double tu = tol / std::max(s.norm(), tol);
    if (t < -tt || t > 1 + tt || u < -tu || u > 1 + tu) return {};

    Point2 x = s1.a + r * t;
    SegX out;
    bool at1 = approx_eq(x, s1.a, tol) || approx_eq(x, s1.b, tol);
    bool at2 = approx_eq(x, s2.a, tol) || approx_eq(x, s2.b, tol);
    out.kind = (at1 && at2) ? SegXKind::Endpoint : SegXKind::Proper;
    out.p = x;
    return out;
}

bool Polyline::simple(double tol) const {
    if (pts.size() < 2) return false;
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (dist(pts[i], pts[i + 1]) <= tol) return false;
    bool isClosed = closed(tol);
    size_t n = pts.size() - 1;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            SegX x = segment_intersect(segment(i), segment(j), tol);
            if (x.kind == SegXKind::None) continue;
            bool adjacent = (j == i + 1) || (isClosed && i == 0 && j == n - 1);
            if (x.kind == SegXKind::Endpoint && adjacent) continue;
            return false;
        }
    }
    return true;
}

int winding_number(const Polyline& loop, Point2 p, double tol) {
    if (!loop.closed(tol)) throw GeomError("winding_number: loop not closed");
    for (size_t i = 0; i + 1 < loop.pts.size(); ++i)
        if (point_on_segment(p, loop.segment(i), tol))
            throw GeomError("winding_number: point on loop boundary");
    double total = 0;
    for (size_t i = 0; i + 1 < loop.pts.size(); ++i) {
        Vec2 a = loop.pts[i] - p;
        Vec2 b = loop.pts[i + 1] - p;
        total += std::atan2(a.cross(b), a.dot(b));
    }
    double w = total / (2 * M_PI);
    int wi = static_cast<int>(std::lround(w));
    if (std::abs(w - wi) > 1e-6) throw GeomError("winding_number: non-integer winding");
    return wi;
}

double polygon_area(const std::vector<Point2>& poly) {
    double a = 0;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) a += poly[i].cross(poly[(i + 1) % n]);
    return a / 2;
}

bool point_in_polygon(Point2 p, const std::vector<Point2>& poly, double tol) {
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i)
        if (point_on_segment(p, {poly[i], poly[(i + 1) % n]}, tol)) return true;
    std::vector<Point2> cl(poly);
    cl.push_back(poly.front());
    return winding_number(Polyline(cl), p, tol) != 0;
}

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Point2 a, Point2 b) { return approx_eq(a, b); }),
              pts.end());
    size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Point2> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && orient(h[k - 2], h[k - 1], pts[i]) <= kGeoTol) --k;
        h[k++] = pts[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && orient(h[k - 2], h[k - 1], pts[i]) <= kGeoTol) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

bool convex_position_ccw(const std::vector<Point2>& pts, double tol) {
    size_t n = pts.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i) {
        double o = orient(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]);
        if (o <= tol) return false;
    }
    return true;
}

std::vector<Point2> clip_convex(const std::vector<Point2>& poly, Vec2 n, double c) {
    std::vector<Point2> out;
    size_t m = poly.size();
    for (size_t i = 0; i < m; ++i) {
        Point2 a = poly[i], b = poly[(i + 1) % m];
        double da = n.dot(a) - c, db = n.dot(b) - c;
        if (da <= kGeoTol) out.push_back(a);
        if ((da < -kGeoTol && db > kGeoTol) || (da > kGeoTol && db < -kGeoTol)) {
            double t = da / (da - db);
            out.push_back(a + (b - a) * t);
        }
    }
    return out;
}

}  // namespace stcover
