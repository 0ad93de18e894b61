#include <random>

#include "chromap/geom.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chromap;

TEST_CASE("segment_point_distance_sq on the worked examples") {
    CHECK(segment_point_distance_sq(pt(0, 0), pt(1, -1), pt(1, 1)) == rat(1));
    CHECK(segment_point_distance_sq(pt(0, 0), pt(2, 3), pt(5, 3)) == rat(13));
    CHECK(segment_point_distance_sq(pt(1, 2, 1, 2), pt(0, 0), pt(1, 0)) == rat(1, 4));
    CHECK_THROWS_AS(segment_point_distance_sq(pt(0, 0), pt(1, 1), pt(1, 1)), GeomError);
}

TEST_CASE("segment_point_distance_sq agrees with dense sampling") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto coord = [&]() { return rat(static_cast<long>(rng() % 2001) - 1000, 250); };
        Point p{coord(), coord()}, a{coord(), coord()}, b{coord(), coord()};
        if (a == b) continue;
        Rational exact = segment_point_distance_sq(p, a, b);
        double best = 1e300;
        const int steps = 10000;
        for (int i = 0; i <= steps; ++i) {
            double t = static_cast<double>(i) / steps;
            double x = rat_double(a.x) + t * (rat_double(b.x) - rat_double(a.x));
            double y = rat_double(a.y) + t * (rat_double(b.y) - rat_double(a.y));
            double dx = rat_double(p.x) - x, dy = rat_double(p.y) - y;
            best = std::min(best, dx * dx + dy * dy);
        }
        CHECK(rat_double(exact) <= best + 1e-9);
        CHECK(best - rat_double(exact) < 1e-4);  // gap shrinks with refinement
    }
}

TEST_CASE("polygon_distance_interval on squares") {
    Polygon sq;
    sq.vertices = {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)};
    auto self = polygon_distance_interval(sq, sq);
    CHECK(self.min_sq == rat(0));
    CHECK(self.max_sq == rat(2));

    Polygon moved;
    moved.vertices = {pt(3, 0), pt(4, 0), pt(4, 1), pt(3, 1)};
    auto di = polygon_distance_interval(sq, moved);
    CHECK(di.min_sq == rat(4));
    CHECK(di.max_sq == rat(17));

    auto sym = polygon_distance_interval(moved, sq);
    CHECK(sym.min_sq == di.min_sq);
    CHECK(sym.max_sq == di.max_sq);
}

TEST_CASE("polygon_distance_interval against the Monte-Carlo oracle") {
    Polygon t1, t2;
    t1.vertices = {pt(0, 0), pt(2, 0), pt(1, 2)};
    t2.vertices = {pt(4, 1), pt(6, 1), pt(5, 3)};
    auto di = polygon_distance_interval(t1, t2);
    double sampled = oracles::mc_min_distance(t1, t2, 1000000, 42);
    double exact = std::sqrt(rat_double(di.min_sq));
    CHECK(exact <= sampled + 1e-12);
    CHECK(sampled - exact < 1e-3);
}

TEST_CASE("polygon self interval properties on random polygons") {
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        Polygon p = [&] {
            std::mt19937_64 rng(seed);
            Polygon q;
            q.vertices = {pt(0, 0), pt(static_cast<long>(2 + rng() % 4), 0),
                          pt(static_cast<long>(1 + rng() % 3), static_cast<long>(1 + rng() % 4))};
            return q;
        }();
        auto di = polygon_distance_interval(p, p);
        CHECK(di.min_sq == rat(0));
        Rational vmax = 0;
        for (const auto& u : p.vertices)
            for (const auto& v : p.vertices) vmax = std::max(vmax, dist_sq(u, v));
        CHECK(di.max_sq == vmax);
    }
}

TEST_CASE("circle_circle_intersection counts decided exactly") {
    auto tangent = circle_circle_intersection(pt(0, 0), rat(1), pt(2, 0), rat(1));
    CHECK(tangent.count == 1);
    CHECK(tangent.points[0].first == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(tangent.points[0].second == doctest::Approx(0.0).epsilon(1e-12));

    CHECK(circle_circle_intersection(pt(0, 0), rat(1), pt(3, 0), rat(1)).count == 0);

    auto two = circle_circle_intersection(pt(0, 0), rat(1), pt(1, 0), rat(1));
    CHECK(two.count == 2);
    for (auto [x, y] : two.points) {
        CHECK(x == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(std::abs(y) == doctest::Approx(std::sqrt(3) / 2).epsilon(1e-12));
    }

    CHECK_THROWS_AS(circle_circle_intersection(pt(0, 0), rat(1), pt(0, 0), rat(1)), GeomError);
    CHECK(circle_circle_intersection(pt(0, 0), rat(4), pt(0, 0), rat(1)).count == 0);
}

TEST_CASE("circle intersection count invariant under rational translation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        auto coord = [&]() { return rat(static_cast<long>(rng() % 41) - 20, 7); };
        Point c1{coord(), coord()}, c2{coord(), coord()};
        if (c1 == c2) continue;
        Rational r1 = rat(static_cast<long>(1 + rng() % 9), 4);
        Rational r2 = rat(static_cast<long>(1 + rng() % 9), 4);
        Point shift{coord(), coord()};
        int base = circle_circle_intersection(c1, r1, c2, r2).count;
        int moved = circle_circle_intersection(c1 + shift, r1, c2 + shift, r2).count;
        CHECK(base == moved);
    }
}

TEST_CASE("segment circle intersection finds exact tangency") {
    auto through = segment_circle_intersection(pt(-2, 0), pt(2, 0), pt(0, 0), rat(1));
    CHECK(through.count == 2);
    auto tang = segment_circle_intersection(pt(-2, 1), pt(2, 1), pt(0, 0), rat(1));
    CHECK(tang.count == 1);
    CHECK(tang.tangent);
    auto miss = segment_circle_intersection(pt(-2, 2), pt(2, 2), pt(0, 0), rat(1));
    CHECK(miss.count == 0);
    auto half = segment_circle_intersection(pt(0, 0), pt(2, 0), pt(0, 0), rat(1));
    CHECK(half.count == 1);  // only the right-hand crossing lies on the segment
}

TEST_CASE("point in polygon and interior point helpers") {
    Polygon hexish;
    hexish.vertices = {pt(0, 0), pt(4, 0), pt(4, 2), pt(2, 1), pt(0, 2)};
    CHECK(locate_point(pt(1, 2, 1, 2), hexish) == Location::Inside);
    CHECK(locate_point(pt(2, 1), hexish) == Location::Boundary);
    CHECK(locate_point(pt(2, 3, 2, 1), hexish) == Location::Outside);
    Point ip = polygon_interior_point(hexish);
    CHECK(locate_point(ip, hexish) == Location::Inside);

    Polygon other;
    other.vertices = {pt(1, 1, 1, 2), pt(3, 1, 1, 2), pt(2, 1, 3, 4)};
    CHECK(polygon_interiors_intersect(hexish, other));
    Polygon far;
    far.vertices = {pt(10, 10), pt(11, 10), pt(11, 11)};
    CHECK_FALSE(polygon_interiors_intersect(hexish, far));
}
