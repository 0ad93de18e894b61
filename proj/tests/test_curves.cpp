#include <cmath>
#include <numbers>

#include "chromap/curves.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chromap;

namespace {

constexpr double kPi = std::numbers::pi;

TriColoredCurve line_curve(std::vector<int> pieces, std::vector<size_t> breaks, size_t npts) {
    TriColoredCurve c;
    for (size_t i = 0; i < npts; ++i) c.points.push_back({0.1 * static_cast<double>(i), 0.0});
    c.piece_colors = std::move(pieces);
    c.breakpoints = std::move(breaks);
    return c;
}

AnnulusSectors two_sector_cover(double eta) {
    AnnulusSectors s;
    s.center = pt(0, 0);
    s.eta = eta;
    s.outer = {{-0.05, 0.55}};
    s.inner = {{0.45, 1.05}};
    return s;
}

}  // namespace

TEST_CASE("h_delta closed form") {
    CHECK(h_delta(0.0, 0.1) == doctest::Approx(1.1).epsilon(1e-15));
    CHECK(h_delta(kPi / 2, 0.1) == doctest::Approx(std::sqrt(1 - 0.01)).epsilon(1e-15));
}

TEST_CASE("h_delta agrees with the bisection oracle") {
    for (int ia = 0; ia <= 20; ++ia) {
        for (int id = 1; id <= 20; ++id) {
            double alpha = kPi * ia / 20.0;
            double delta = 0.045 * id;
            CHECK(std::abs(h_delta(alpha, delta) - oracles::bisection_h_delta(alpha, delta)) <
                  1e-9);
        }
    }
}

TEST_CASE("h_delta monotone decreasing in alpha, tending to 1 as delta -> 0") {
    for (int id = 1; id <= 10; ++id) {
        double delta = 0.09 * id;
        double prev = h_delta(0.0, delta);
        for (int ia = 1; ia <= 40; ++ia) {
            double cur = h_delta(kPi * ia / 40.0, delta);
            CHECK(cur < prev + 1e-12);
            prev = cur;
        }
    }
    for (int ia = 0; ia <= 10; ++ia) CHECK(std::abs(h_delta(kPi * ia / 10.0, 1e-6) - 1.0) < 2e-6);
}

TEST_CASE("second_largest_angle picks the middle difference") {
    TurnAngle ray{rat(0)};
    CHECK(second_largest_angle(ray, TurnAngle{rat(1, 12)}, TurnAngle{rat(1, 6)},
                               TurnAngle{rat(1, 4)}) == doctest::Approx(kPi / 3).epsilon(1e-15));
    // ray coinciding with one direction: middle of (0, a, b) is a = min of the others
    CHECK(second_largest_angle(ray, TurnAngle{rat(0)}, TurnAngle{rat(1, 6)},
                               TurnAngle{rat(1, 4)}) == doctest::Approx(kPi / 3).epsilon(1e-15));
    // symmetric placement: duplicate middle
    CHECK(second_largest_angle(ray, TurnAngle{rat(1, 8)}, TurnAngle{rat(7, 8)},
                               TurnAngle{rat(1, 2)}) == doctest::Approx(kPi / 4).epsilon(1e-15));
}

TEST_CASE("annulus_sectors covers with three spread boundary rays") {
    std::vector<DeltaSample> samples;
    for (double delta : {0.05, 0.1}) {
        samples.push_back({delta, TurnAngle{rat(0)}, TurnAngle{rat(1, 3)}, TurnAngle{rat(2, 3)}});
    }
    AnnulusSectors s = annulus_sectors(pt(0, 0), samples, 0.01);
    CHECK(!s.inner.empty());
    CHECK(!s.outer.empty());
    // h_delta sign on a grid against the direct formula
    for (int i = 0; i < 360; ++i) {
        double v = i / 360.0;
        double alpha = second_largest_angle(TurnAngle{rat(i, 360)}, samples[0].a45,
                                            samples[0].a46, samples[0].a56);
        double h = h_delta(alpha, samples[0].delta);
        bool inner_hit = false;
        for (const auto& iv : s.inner)
            for (double t : {v, v + 1.0})
                if (iv.lo < t && t < iv.hi) inner_hit = true;
        if (h < 1.0 - 1e-9) CHECK(inner_hit);
    }
}

TEST_CASE("annulus_sectors detects a crafted cover gap") {
    // Invert h_delta(alpha) = 1 per delta: the critical angle is
    // arccos(delta/2). Placing a boundary direction at exactly that distance
    // from direction 0 pins 0 to the A/B boundary for every sample.
    std::vector<DeltaSample> samples;
    for (double delta : {0.2, 0.4}) {
        double tstar = std::acos(delta / 2.0) / (2.0 * kPi);
        Rational exact{mpq_class(tstar)};  // doubles are dyadic: conversion is exact
        samples.push_back(
            {delta, TurnAngle{exact}, TurnAngle{Rational(1) - exact}, TurnAngle{rat(1, 2)}});
    }
    CHECK_THROWS_WITH_AS(annulus_sectors(pt(0, 0), samples, 0.01),
                         doctest::Contains("CoverGap"), CurveError);
}

TEST_CASE("annulus_sectors rejects bad inputs") {
    std::vector<DeltaSample> one = {{0.1, TurnAngle{rat(0)}, TurnAngle{rat(1, 3)},
                                     TurnAngle{rat(2, 3)}}};
    CHECK_THROWS_AS(annulus_sectors(pt(0, 0), one, 0.01), CurveError);
    std::vector<DeltaSample> two = {{0.1, TurnAngle{rat(0)}, TurnAngle{rat(1, 3)},
                                     TurnAngle{rat(2, 3)}},
                                    {0.2, TurnAngle{rat(0)}, TurnAngle{rat(1, 3)},
                                     TurnAngle{rat(2, 3)}}};
    CHECK_THROWS_AS(annulus_sectors(pt(0, 0), two, 0.0), CurveError);
}

TEST_CASE("build_annulus_curve two-sector construction") {
    double eta = 0.05, theta = eta / 10;
    AnnulusCurve out = build_annulus_curve(two_sector_cover(eta), theta);
    CHECK(out.certificate.winding == 1);
    CHECK(out.certificate.max_circle_deviation < eta);
    CHECK(out.certificate.max_tangent_deviation <= 1.5 * theta + 1e-9);
    CHECK(out.certificate.passed(eta, theta));
    CHECK(out.curve.closed);
}

TEST_CASE("build_annulus_curve full-circle sector is a circle") {
    AnnulusSectors s;
    s.center = pt(0, 0);
    s.eta = 0.02;
    s.outer = {{0.0, 1.1}};
    AnnulusCurve out = build_annulus_curve(s, 0.002);
    CHECK(out.certificate.winding == 1);
    double r = 1.0 + s.eta / 2;
    for (const auto& p : out.curve.points)
        CHECK(std::hypot(p.x, p.y) == doctest::Approx(r).epsilon(1e-12));
    CHECK(out.certificate.max_tangent_deviation < 0.01);
}

TEST_CASE("build_annulus_curve rejects theta outside (0, eta)") {
    CHECK_THROWS_AS(build_annulus_curve(two_sector_cover(0.05), 0.05), CurveError);
    CHECK_THROWS_AS(build_annulus_curve(two_sector_cover(0.05), 0.0), CurveError);
}

TEST_CASE("count_circle_crossings on a discretized circle") {
    TriColoredCurve circle;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        double a = 2 * kPi * i / n;
        circle.points.push_back({std::cos(a), std::sin(a)});
    }
    circle.piece_colors = {1};
    circle.closed = true;
    auto rep = count_circle_crossings(circle, {1.5, 0.0});
    CHECK(rep.count == 2);
    auto far = count_circle_crossings(circle, {2.5, 0.0});
    CHECK(far.count == 0);
}

TEST_CASE("curve_index counts all cyclic transitions") {
    CHECK(curve_index(line_curve({1}, {}, 4)) == 0);
    CHECK(curve_index(line_curve({1, 2, 3, 1}, {1, 2, 3}, 5)) == 3);
    CHECK(curve_index(line_curve({1, 3, 2}, {1, 2}, 4)) == -2);
    CHECK(curve_index(line_curve({1, 2}, {2}, 4)) == 1);
    // bichromatic endpoint rejected
    TriColoredCurve bad = line_curve({1, 2}, {3}, 4);
    CHECK_THROWS_AS(curve_index(bad), CurveError);
}

TEST_CASE("curve_index equals the constructed-f oracle and reverses sign") {
    int nonzero = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto pair = oracles::generate_pair(seed, 6);
        for (const TriColoredCurve* c : {&pair.gamma1, &pair.gamma2}) {
            auto oracle = oracles::constructed_f_index(*c);
            CHECK(oracle.color_preserved);
            int ind = curve_index(*c);
            CHECK(ind == oracle.index);
            CHECK(curve_index(reverse_curve(*c)) == -ind);
            if (ind != 0) ++nonzero;
        }
    }
    CHECK(nonzero > 50);
}

TEST_CASE("index difference of complementary pairs is at most one") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto pair = oracles::generate_pair(seed + 5000, 8);
        auto rep = index_difference_bound(pair);
        CHECK(rep.difference <= 1);
        CHECK(rep.diagnostic.empty());
    }
    // translate-and-shift pair: identical transition sequences, difference 0
    TriColoredCurve g1 = line_curve({1, 2, 3}, {2, 4}, 7);
    TriColoredCurve g2 = g1;
    for (auto& p : g2.points) p.y += 1.0;
    g2.piece_colors = {2, 3, 1};
    auto rep = index_difference_bound({g1, g2});
    CHECK(rep.ind1 == rep.ind2);
    CHECK(rep.difference == 0);
}

TEST_CASE("index sign propagates along complementary chains") {
    int tested = 0;
    for (std::uint64_t seed = 0; tested < 100 && seed < 4000; ++seed) {
        oracles::ChainSpec chain;
        try {
            chain = oracles::generate_chain(seed, 2 + seed % 5, 6, true);
        } catch (const std::exception&) {
            continue;
        }
        std::vector<int> inds;
        for (const auto& c : chain.curves) inds.push_back(curve_index(c));
        bool all_pos = true, all_neg = true;
        for (int ind : inds) {
            CHECK(ind != 0);
            all_pos = all_pos && ind > 0;
            all_neg = all_neg && ind < 0;
        }
        CHECK((all_pos || all_neg));
        ++tested;
    }
    CHECK(tested == 100);
}

TEST_CASE("tangential contact raises an error") {
    TriColoredCurve square;
    square.points = {{1.0, -1.0}, {1.0, 1.0}, {3.0, 1.0}, {3.0, -1.0}};
    square.piece_colors = {1};
    square.closed = true;
    // vertex (1,1) is at distance 1 from (1,0): exact zero of the sign function
    CHECK_THROWS_AS(count_circle_crossings(square, {1.0, 0.0}), CurveError);
}
