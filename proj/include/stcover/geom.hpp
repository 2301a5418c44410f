#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stcover {

// Absolute snapping tolerance for geometric predicates. Fixture coordinates
// are O(1), so an absolute tolerance is appropriate.
inline constexpr double kGeoTol = 1e-9;

struct GeomError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double xx, double yy) : x(xx), y(yy) {}

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }

    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
    // Counterclockwise quarter turn.
    Vec2 perp() const { return {-y, x}; }
    Vec2 normalized() const {
        double n = norm();
        if (n == 0.0) throw GeomError("normalized: zero vector");
        return {x / n, y / n};
    }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

using Point2 = Vec2;

inline double dist(Point2 a, Point2 b) { return (a - b).norm(); }

inline bool approx_eq(Point2 a, Point2 b, double tol = kGeoTol) {
    return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol;
}

// Signed area of the triangle (a,b,c); > 0 for counterclockwise.
inline double orient(Point2 a, Point2 b, Point2 c) {
    return (b - a).cross(c - a);
}

struct Segment {
    Point2 a, b;
    double length() const { return dist(a, b); }
    Vec2 dir() const { return (b - a).normalized(); }
};

// Distance from p to the segment, and the clamped parameter of the closest point.
double point_segment_distance(Point2 p, Segment s, double* t_out = nullptr);

inline bool point_on_segment(Point2 p, Segment s, double tol = kGeoTol) {
    return point_segment_distance(p, s) <= tol;
}

enum class SegXKind { None, Proper, Endpoint, Overlap };

struct SegX {
    SegXKind kind = SegXKind::None;
    Point2 p{};       // intersection point (Proper/Endpoint) or overlap start
    Point2 q{};       // overlap end (Overlap only)
};

// Intersection of two segments with snapping tolerance. Endpoint means the
// segments meet at a shared endpoint (within tol) and nowhere else.
// Throws GeomError on zero-length input.
SegX segment_intersect(Segment s1, Segment s2, double tol = kGeoTol);

struct Polyline {
    std::vector<Point2> pts;

    Polyline() = default;
    explicit Polyline(std::vector<Point2> p) : pts(std::move(p)) {}

    bool closed(double tol = kGeoTol) const {
        return pts.size() >= 3 && approx_eq(pts.front(), pts.back(), tol);
    }
    double length() const {
        double L = 0;
        for (size_t i = 0; i + 1 < pts.size(); ++i) L += dist(pts[i], pts[i + 1]);
        return L;
    }
    size_t segment_count() const { return pts.empty() ? 0 : pts.size() - 1; }
    Segment segment(size_t i) const { return {pts[i], pts[i + 1]}; }
    // No repeated consecutive vertices, and simple (no self intersection
    // except consecutive shared endpoints).
    bool simple(double tol = kGeoTol) const;
};

// Winding number of a closed polyline around p. Throws GeomError if the loop
// is not closed or if p lies on the loop (within tol).
int winding_number(const Polyline& loop, Point2 p, double tol = kGeoTol);

// Signed polygon area (shoelace); vertices without repetition of the first.
double polygon_area(const std::vector<Point2>& poly);

// Strictly-inside test for a simple polygon (boundary counts as inside when
// within tol).
bool point_in_polygon(Point2 p, const std::vector<Point2>& poly, double tol = kGeoTol);

// Convex hull, counterclockwise, no repeated last point.
std::vector<Point2> convex_hull(std::vector<Point2> pts);

// True if pts (in the given cyclic order) are in strictly convex position,
// counterclockwise.
bool convex_position_ccw(const std::vector<Point2>& pts, double tol = kGeoTol);

// Clip a convex polygon by the half-plane n·x <= c. Result may be empty.
std::vector<Point2> clip_convex(const std::vector<Point2>& poly, Vec2 n, double c);

}  // namespace stcover
