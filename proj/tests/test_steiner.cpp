#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "stcover/steiner.hpp"

using namespace stcover;

namespace {

PointConfig ngon(int n, double circumradius, double phase_deg) {
    PointConfig c;
    for (int i = 0; i < n; ++i) {
        double a = (phase_deg + 360.0 * i / n) * M_PI / 180.0;
        c.points.push_back({circumradius * std::cos(a), circumradius * std::sin(a)});
    }
    return c;
}

double unit_side_circumradius(int n) { return 0.5 / std::sin(M_PI / n); }

// Brute-force check of the tripod optimum by grid refinement around a point.
double refine_tripod(const PointConfig& cfg, Point2 start) {
    Point2 best = start;
    auto cost = [&](Point2 s) {
        double L = 0;
        for (auto& p : cfg.points) L += dist(s, p);
        return L;
    };
    double h = 0.5;
    for (int level = 0; level < 40; ++level) {
        Point2 improved = best;
        for (int dx = -2; dx <= 2; ++dx)
            for (int dy = -2; dy <= 2; ++dy) {
                Point2 cand = best + Vec2{dx * h, dy * h};
                if (cost(cand) < cost(improved)) improved = cand;
            }
        best = improved;
        h *= 0.5;
    }
    return cost(best);
}

}  // namespace

TEST_CASE("topology enumeration counts") {
    CHECK(enumerate_topologies(2).size() == 1);
    CHECK(enumerate_topologies(3).size() == 4);  // star + 3 paths
    auto t4 = enumerate_topologies(4);
    int full = 0;
    for (auto& t : t4) full += (t.k == 2);
    CHECK(full == 3);  // three full topologies on 4 terminals
    int full5 = 0;
    for (auto& t : enumerate_topologies(5)) full5 += (t.k == 3);
    CHECK(full5 == 15);
    CHECK_THROWS_AS(enumerate_topologies(9), SteinerError);
}

TEST_CASE("fermat point and tripod optimization") {
    // Equilateral triangle with circumradius 1: symmetry forces the center.
    PointConfig tri;
    tri.points = {{-std::sqrt(3) / 2, -0.5}, {std::sqrt(3) / 2, -0.5}, {0, 1}};
    Point2 f = fermat_point(tri.points[0], tri.points[1], tri.points[2]);
    CHECK(dist(f, {0, 0}) < 1e-12);

    SteinerTopology star;
    star.m = 3;
    star.k = 1;
    star.edges = {{0, 3}, {1, 3}, {2, 3}};
    OptimizedTopology o = optimize_topology(star, tri);
    CHECK(o.length == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(!o.degenerate);
    // Cross-check against grid refinement.
    CHECK(o.length == doctest::Approx(refine_tripod(tri, {0.3, 0.2})).epsilon(1e-8));
    // 120 degree angles at the junction.
    Point2 s = o.network.steiner_points[0];
    for (int i = 0; i < 3; ++i) {
        Vec2 u = (tri.points[i] - s).normalized();
        Vec2 v = (tri.points[(i + 1) % 3] - s).normalized();
        CHECK(std::acos(std::clamp(u.dot(v), -1.0, 1.0)) ==
              doctest::Approx(2 * M_PI / 3).epsilon(1e-6));
    }

    // Obtuse triangle (vertex angle > 120°): collapses onto the obtuse vertex.
    PointConfig obtuse;
    double alpha = M_PI / 12;
    obtuse.points = {{-std::cos(alpha), std::sin(alpha)}, {0, 0}, {std::cos(alpha), std::sin(alpha)}};
    OptimizedTopology od = optimize_topology(star, obtuse);
    CHECK(od.degenerate);
    CHECK(od.length == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(od.network.steiner_points.empty());
}

TEST_CASE("single edge and two point solver") {
    PointConfig two;
    two.points = {{0, 0}, {0, 2}};
    SteinerSolution s = steiner_tree(two);
    CHECK(s.length == doctest::Approx(2.0));
    CHECK(s.minimizers.size() == 1);
}

TEST_CASE("unit square: 1+sqrt(3) with exactly two minimizers") {
    PointConfig sq;
    sq.points = {{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}};
    SteinerSolution s = steiner_tree(sq);
    CHECK(s.length == doctest::Approx(1 + std::sqrt(3)).epsilon(1e-9));
    CHECK(s.minimizers.size() == 2);
    CHECK(s.length <= minimum_spanning_tree_length(sq) + 1e-12);
}

TEST_CASE("unit-side regular pentagon: 5 rotated minimizers") {
    PointConfig pent = ngon(5, unit_side_circumradius(5), 126);
    SteinerSolution s = steiner_tree(pent);
    CHECK(s.minimizers.size() == 5);
    CHECK(s.length <= minimum_spanning_tree_length(pent) + 1e-12);
    // All five are congruent: same length by rotation.
    for (auto& n : s.minimizers) CHECK(n.length() == doctest::Approx(s.length).epsilon(1e-9));
}

TEST_CASE("unit-side regular hexagon: length 5, six minimizers, polygon minus an edge") {
    PointConfig hexa;
    hexa.points = {{-0.5, std::sqrt(3) / 2}, {-1, 0},          {-0.5, -std::sqrt(3) / 2},
                   {0.5, -std::sqrt(3) / 2}, {1, 0},           {0.5, std::sqrt(3) / 2}};
    SteinerSolution s = steiner_tree(hexa);
    CHECK(s.length == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(s.minimizers.size() == 6);
    for (auto& n : s.minimizers) {
        CHECK(n.steiner_points.empty());
        CHECK(n.edges.size() == 5);
        // Every edge is a polygon side.
        for (auto [a, b] : n.edges) {
            int d = std::abs(a - b);
            CHECK((d == 1 || d == 5));
        }
    }
}

TEST_CASE("rigid motion invariance and terminal angle condition") {
    PointConfig sq;
    sq.points = {{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}};
    double base = steiner_tree(sq).length;
    double th = 0.7;
    Vec2 t{3.2, -1.1};
    PointConfig moved;
    for (auto& p : sq.points)
        moved.points.push_back({p.x * std::cos(th) - p.y * std::sin(th) + t.x,
                                p.x * std::sin(th) + p.y * std::cos(th) + t.y});
    CHECK(steiner_tree(moved).length == doctest::Approx(base).epsilon(1e-9));

    // Terminal angles >= 120° on an optimal network.
    SteinerSolution s = steiner_tree(sq);
    const Network& n = s.minimizers.front();
    for (int t0 = 0; t0 < n.terminal_count(); ++t0) {
        std::vector<Vec2> dirs;
        for (auto [a, b] : n.edges) {
            if (a == t0) dirs.push_back((n.vertex(b) - n.vertex(a)).normalized());
            if (b == t0) dirs.push_back((n.vertex(a) - n.vertex(b)).normalized());
        }
        for (size_t i = 0; i < dirs.size(); ++i)
            for (size_t j = i + 1; j < dirs.size(); ++j)
                CHECK(std::acos(std::clamp(dirs[i].dot(dirs[j]), -1.0, 1.0)) >=
                      2 * M_PI / 3 - 1e-6);
    }
}

TEST_CASE("planar compatibility and interface patterns") {
    // Path 1-3-2-4 on a square is not planar-compatible.
    SteinerTopology bad;
    bad.m = 4;
    bad.k = 0;
    bad.edges = {{0, 2}, {2, 1}, {1, 3}};
    CHECK(!bad.planar_compatible());

    // Hexagon path p1..p6 (polygon minus the arc p6p1): fan pattern at label 1.
    SteinerTopology path;
    path.m = 6;
    path.k = 0;
    for (int i = 0; i < 5; ++i) path.edges.push_back({i, i + 1});
    CHECK(path.planar_compatible());
    auto pat = path.interface_pattern();
    std::set<std::pair<int, int>> got(pat.begin(), pat.end());
    std::set<std::pair<int, int>> want{{1, 6}, {1, 5}, {1, 4}, {1, 3}, {1, 2}};
    CHECK(got == want);
}
