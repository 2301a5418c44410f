#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "stcover/geom.hpp"

using namespace stcover;

TEST_CASE("segment intersections") {
    SegX x = segment_intersect({{0, 0}, {2, 0}}, {{1, -1}, {1, 1}});
    CHECK(x.kind == SegXKind::Proper);
    CHECK(approx_eq(x.p, {1, 0}));

    CHECK(segment_intersect({{0, 0}, {1, 0}}, {{2, 0}, {3, 0}}).kind == SegXKind::None);

    x = segment_intersect({{0, 0}, {1, 1}}, {{1, 1}, {2, 0}});
    CHECK(x.kind == SegXKind::Endpoint);
    CHECK(approx_eq(x.p, {1, 1}));

    x = segment_intersect({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}});
    CHECK(x.kind == SegXKind::Overlap);
    CHECK(approx_eq(x.p, {1, 0}));
    CHECK(approx_eq(x.q, {2, 0}));

    CHECK(segment_intersect({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}).kind == SegXKind::None);
    CHECK_THROWS_AS(segment_intersect({{0, 0}, {0, 0}}, {{0, 1}, {1, 1}}), GeomError);

    // Symmetry in the arguments.
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> U(-2, 2);
    for (int it = 0; it < 500; ++it) {
        Segment s1{{U(rng), U(rng)}, {U(rng), U(rng)}};
        Segment s2{{U(rng), U(rng)}, {U(rng), U(rng)}};
        if (s1.length() < 1e-6 || s2.length() < 1e-6) continue;
        SegX a = segment_intersect(s1, s2);
        SegX b = segment_intersect(s2, s1);
        CHECK(a.kind == b.kind);
        if (a.kind == SegXKind::Proper) CHECK(dist(a.p, b.p) < 1e-7);
    }
}

TEST_CASE("winding numbers") {
    Polyline sq({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});
    CHECK(winding_number(sq, {0.5, 0.5}) == 1);
    CHECK(winding_number(sq, {5, 5}) == 0);
    Polyline sq_cw({{0, 0}, {0, 1}, {1, 1}, {1, 0}, {0, 0}});
    CHECK(winding_number(sq_cw, {0.5, 0.5}) == -1);
    CHECK_THROWS_AS(winding_number(sq, {0.5, 0.0}), GeomError);

    // Additivity under concatenation: two loops sharing a base point.
    Polyline loopA({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {0, 0}});
    Polyline loopB({{0, 0}, {-2, 0}, {-2, -2}, {0, -2}, {0, 0}});
    std::vector<Point2> cat = loopA.pts;
    cat.insert(cat.end(), loopB.pts.begin() + 1, loopB.pts.end());
    Polyline loopAB(cat);
    for (Point2 p : {Point2{1, 1}, Point2{-1, -1}, Point2{3, 3}, Point2{1, -1}}) {
        CHECK(winding_number(loopAB, p) == winding_number(loopA, p) + winding_number(loopB, p));
    }
}

TEST_CASE("polygon helpers") {
    std::vector<Point2> tri{{0, 0}, {2, 0}, {0, 2}};
    CHECK(polygon_area(tri) == doctest::Approx(2.0));
    CHECK(point_in_polygon({0.5, 0.5}, tri));
    CHECK(!point_in_polygon({2, 2}, tri));
    CHECK(point_in_polygon({1, 0}, tri));  // boundary counts as inside

    auto hull = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}});
    CHECK(hull.size() == 4);
    CHECK(convex_position_ccw(hull));

    Polyline s({{0, 0}, {1, 0}, {1, 1}});
    CHECK(s.simple());
    Polyline x({{0, 0}, {1, 1}, {1, 0}, {0, 1}});
    CHECK(!x.simple());
}
