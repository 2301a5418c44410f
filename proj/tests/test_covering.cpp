#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "stcover/covering.hpp"

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

PointConfig hexagon_unit() {
    PointConfig c;
    c.points = {{-0.5, std::sqrt(3) / 2}, {-1, 0},          {-0.5, -std::sqrt(3) / 2},
                {0.5, -std::sqrt(3) / 2}, {1, 0},           {0.5, std::sqrt(3) / 2}};
    return c;
}

// Loop enclosing exactly the 1-based subset of terminals: radius flower around
// the centroid, dipping inside the polygon radius at excluded terminals.
Polyline subset_loop(const PointConfig& cfg, const std::vector<int>& subset_1based) {
    Point2 c = cfg.centroid();
    int m = cfg.m();
    std::vector<char> in(m + 1, 0);
    for (int s : subset_1based) in[s] = 1;
    double R = 0;
    for (auto& p : cfg.points) R = std::max(R, dist(p, c));
    double r_out = 1.45 * R, r_in = 0.35 * R;
    std::vector<Point2> pts;
    int steps = 240;
    // Terminal angles around the centroid.
    std::vector<double> ang(m);
    for (int i = 0; i < m; ++i) {
        Vec2 d = cfg.points[i] - c;
        ang[i] = std::atan2(d.y, d.x);
    }
    for (int k = 0; k < steps; ++k) {
        double th = 2 * M_PI * k / steps + 1e-3;
        // Radius profile: near an excluded terminal's angle, dip inside.
        double r = r_out;
        for (int i = 0; i < m; ++i) {
            if (in[i + 1]) continue;
            double d = std::remainder(th - ang[i], 2 * M_PI);
            double half = M_PI / m * 0.85;
            if (std::abs(d) < half) r = r_in;
        }
        pts.push_back(c + Vec2{std::cos(th), std::sin(th)} * r);
    }
    pts.push_back(pts.front());
    return Polyline(pts);
}

}  // namespace

TEST_CASE("canonical cuts validate on the unit hexagon") {
    PointConfig hexa = hexagon_unit();
    CutSystem cs = canonical_cuts(hexa);
    CutValidation v = validate_cuts(hexa, cs);
    for (auto& f : v.failures) MESSAGE(f);
    CHECK(v.pass());
    CHECK(cs.sigma.size() == 5);

    CoveringSpace cov = build_covering(hexa, cs);
    CHECK(cov.bands.size() == 5);
}

TEST_CASE("canonical cuts for two points and collinear error") {
    PointConfig two;
    two.points = {{0, 0}, {3, 0}};
    CutSystem cs = canonical_cuts(two);
    CHECK(cs.sigma.size() == 1);
    CHECK(validate_cuts(two, cs).pass());

    PointConfig col;
    col.points = {{0, 0}, {1, 0}, {2, 0}};
    CHECK_THROWS_AS(canonical_cuts(col), CutError);
}

TEST_CASE("constructed cut violations are reported") {
    PointConfig sq = ngon(4, 1.0, 45);
    CutSystem cs = canonical_cuts(sq);

    // Σ = Σ': condition (i) fails (and (ii) degenerates).
    CutSystem bad = cs;
    bad.sigma = bad.sigma_prime;
    CutValidation v = validate_cuts(sq, bad);
    CHECK(!v.pass());
    CHECK(!v.i_meet_only_at_terminals);

    // Σ1 and Σ3 sharing an interior point: condition (c).
    CutSystem bad2 = cs;
    Point2 mid = (sq.points[0] + sq.points[1]) / 2;
    // Reroute Σ3 through Σ1's apex.
    Point2 apex1 = bad2.sigma[0].pts[1];
    bad2.sigma[2] = Polyline({sq.points[2], apex1, sq.points[3]});
    v = validate_cuts(sq, bad2);
    CHECK(!v.pass());
    CHECK(!v.c_disjoint);
    (void)mid;
}

TEST_CASE("monodromy on the double cover of two points") {
    PointConfig two;
    two.points = {{0, 0}, {3, 0}};
    CoveringSpace cov = build_covering(two, canonical_cuts(two));

    Polyline around_p1({{-1, -1}, {1, -1}, {1, 5}, {-1, 5}, {-1, -1}});
    SheetPermutation p = monodromy(cov, around_p1);
    CHECK(p.valid());
    CHECK(!p.is_identity());
    CHECK(p.transitive());  // the swap

    Polyline far({{-20, -20}, {20, -20}, {20, 20}, {-20, 20}, {-20, -20}});
    CHECK(monodromy(cov, far).is_identity());
}

TEST_CASE("monodromy composition and homotopy stability on the pentagon") {
    PointConfig pent = ngon(5, 1.0, 126);
    CoveringSpace cov = build_covering(pent, canonical_cuts(pent));

    Polyline l12 = subset_loop(pent, {1, 2});
    SheetPermutation p12 = monodromy(cov, l12);
    CHECK(p12.transitive());  // 5-cycle

    // Homotopic perturbation: same permutation.
    Polyline l12b = l12;
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> U(-0.01, 0.01);
    for (size_t i = 1; i + 1 < l12b.pts.size(); ++i) l12b.pts[i] += Vec2{U(rng), U(rng)};
    l12b.pts.back() = l12b.pts.front();
    SheetPermutation p12b = monodromy(cov, l12b);
    CHECK(p12.map == p12b.map);

    // Loop around everything and the empty loop act trivially.
    CHECK(monodromy(cov, subset_loop(pent, {1, 2, 3, 4, 5})).is_identity());
    Polyline tiny({{40, 40}, {41, 40}, {41, 41}, {40, 41}, {40, 40}});
    CHECK(monodromy(cov, tiny).is_identity());

    // Composition anti-homomorphism on concatenated loops with a shared
    // base point: monodromy(γ∘δ) = monodromy(δ)∘monodromy(γ).
    Point2 base = l12.pts.front();
    Polyline l3 = subset_loop(pent, {3});
    // Connect base -> l3 start -> around l3 -> back.
    std::vector<Point2> cat = l12.pts;
    cat.push_back(l3.pts.front());
    cat.insert(cat.end(), l3.pts.begin() + 1, l3.pts.end());
    cat.push_back(base);
    SheetPermutation pc = monodromy(cov, Polyline(cat));
    SheetPermutation expect = monodromy(cov, l3).compose(p12);
    CHECK(pc.map == expect.map);
}

TEST_CASE("non-transversal loops are rejected") {
    PointConfig two;
    two.points = {{0, 0}, {3, 0}};
    CoveringSpace cov = build_covering(two, canonical_cuts(two));
    // Passes through the terminal p1.
    Polyline through({{-1, 0}, {1, 0}, {1, 1}, {-1, 1}, {-1, 0}});
    CHECK_THROWS_AS(monodromy(cov, through), CutError);
}
