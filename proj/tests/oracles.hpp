#pragma once

// Test-side oracles, independent of the implementation paths they check.

#include <cmath>
#include <random>
#include <vector>

#include "chromap/circlecolor.hpp"
#include "chromap/curves.hpp"
#include "chromap/geom.hpp"

namespace oracles {

using namespace chromap;

// Dense random sampling of the minimum distance between two disjoint
// polygons. The minimum is attained between the boundaries, so points are
// drawn from the perimeters (perimeter-weighted).
inline double mc_min_distance(const Polygon& a, const Polygon& b, long n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto boundary_sampler = [&](const Polygon& p) {
        std::vector<std::array<double, 4>> segs;
        std::vector<double> cumlen{0.0};
        size_t m = p.vertices.size();
        for (size_t i = 0; i < m; ++i) {
            double ax = rat_double(p.vertices[i].x), ay = rat_double(p.vertices[i].y);
            double bx = rat_double(p.vertices[(i + 1) % m].x);
            double by = rat_double(p.vertices[(i + 1) % m].y);
            segs.push_back({ax, ay, bx, by});
            cumlen.push_back(cumlen.back() + std::hypot(bx - ax, by - ay));
        }
        return [segs, cumlen, this_rng = &rng, u = &unit]() {
            double t = (*u)(*this_rng) * cumlen.back();
            size_t lo = 0;
            while (lo + 1 < cumlen.size() - 1 && cumlen[lo + 1] <= t) ++lo;
            double f = (t - cumlen[lo]) / (cumlen[lo + 1] - cumlen[lo]);
            const auto& s = segs[lo];
            return std::make_pair(s[0] + f * (s[2] - s[0]), s[1] + f * (s[3] - s[1]));
        };
    };
    auto sa = boundary_sampler(a);
    auto sb = boundary_sampler(b);
    double best = 1e300;
    for (long i = 0; i < n; ++i) {
        auto [ax, ay] = sa();
        auto [bx, by] = sb();
        best = std::min(best, std::hypot(ax - bx, ay - by));
    }
    return best;
}

// Radius at which the ray at angle alpha leaves the unit circle around the
// point at polar (delta, alpha-origin): solve | x*dir - p | = 1 by bisection.
inline double bisection_h_delta(double alpha, double delta, double tol = 1e-12) {
    double px = delta * std::cos(alpha), py = delta * std::sin(alpha);
    auto f = [&](double x) {
        double dx = x - px;
        return std::sqrt(dx * dx + py * py) - 1.0;
    };
    double lo = 0.0, hi = 3.0;
    // f(0) = delta - 1 < 0, f(3) > 0
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        double mid = (lo + hi) / 2;
        (f(mid) < 0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

// Rigorous piecewise-linear color-preserving map onto the 3-colored line
// c(x) = (floor(x + 1/2) mod 3) + 1. Knots: zone integers inside pieces and
// half-integer crossings at transitions. Verifies preservation at sampled
// parameters and returns f(end) - f(start).
struct ConstructedF {
    int index = 0;
    bool color_preserved = true;
};

inline int line_color(double x) {
    double f = std::floor(x + 0.5);
    long n = static_cast<long>(f);
    long r = n % 3;
    if (r < 0) r += 3;
    return static_cast<int>(r) + 1;
}

inline ConstructedF constructed_f_index(const TriColoredCurve& c, int samples = 1000) {
    ConstructedF out;
    // knot parameters measured in grid indices
    std::vector<std::pair<double, double>> knots;  // (t, f)
    double n0 = c.piece_colors[0] - 1;             // integer with the right color
    knots.push_back({0.0, n0});
    double zone = n0;
    for (size_t k = 0; k < c.breakpoints.size(); ++k) {
        double t = static_cast<double>(c.breakpoints[k]);
        int from = c.piece_colors[k], to = c.piece_colors[k + 1];
        bool inc = (to == from % 3 + 1);
        double h = zone + (inc ? 0.5 : -0.5);
        knots.push_back({t, h});
        zone += inc ? 1.0 : -1.0;
        double next_t = (k + 1 < c.breakpoints.size())
                            ? static_cast<double>(c.breakpoints[k + 1])
                            : static_cast<double>(c.points.size() - 1);
        knots.push_back({(t + next_t) / 2, zone});
    }
    double t_end = static_cast<double>(c.points.size() - 1);
    knots.push_back({t_end, zone});
    out.index = static_cast<int>(zone - n0);

    auto f_at = [&](double t) {
        for (size_t i = 0; i + 1 < knots.size(); ++i) {
            if (t >= knots[i].first && t <= knots[i + 1].first) {
                double span = knots[i + 1].first - knots[i].first;
                if (span == 0) return knots[i].second;
                double u = (t - knots[i].first) / span;
                return knots[i].second + u * (knots[i + 1].second - knots[i].second);
            }
        }
        return knots.back().second;
    };
    auto curve_color = [&](double t) {
        size_t piece = 0;
        while (piece < c.breakpoints.size() && t >= static_cast<double>(c.breakpoints[piece]))
            ++piece;
        return c.piece_colors[piece];
    };
    for (int s = 0; s < samples; ++s) {
        double t = t_end * (s + 0.5) / samples;
        bool near_knot = false;
        for (const auto& [kt, kf] : knots)
            if (std::abs(t - kt) < 1e-9) near_knot = true;
        if (near_knot) continue;
        if (line_color(f_at(t)) != curve_color(t)) out.color_preserved = false;
    }
    return out;
}

// Complementary pair / chain generator: colors evolve in lockstep (every
// transition is forced to the unique color differing from both the curve's
// own color and its complementary partners').
struct ChainSpec {
    std::vector<TriColoredCurve> curves;
};

inline ChainSpec generate_chain(std::uint64_t seed, size_t chain_len, size_t transitions,
                                bool require_distinct_endpoints) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 400; ++attempt) {
        size_t steps_total = transitions * chain_len;
        size_t npts = 2 * steps_total + 8;
        std::vector<int> color(chain_len);
        color[0] = 1 + static_cast<int>(rng() % 3);
        for (size_t i = 1; i < chain_len; ++i) {
            int c;
            do {
                c = 1 + static_cast<int>(rng() % 3);
            } while (c == color[i - 1]);
            color[i] = c;
        }
        std::vector<std::vector<size_t>> breaks(chain_len);
        std::vector<std::vector<int>> pieces(chain_len);
        for (size_t i = 0; i < chain_len; ++i) pieces[i].push_back(color[i]);
        size_t made = 0;
        for (size_t idx = 1; idx + 1 < npts && made < steps_total; ++idx) {
            size_t who = rng() % chain_len;
            int left = who > 0 ? color[who - 1] : 0;
            int right = who + 1 < chain_len ? color[who + 1] : 0;
            int fresh = 0;
            for (int cand = 1; cand <= 3; ++cand)
                if (cand != color[who] && cand != left && cand != right) fresh = cand;
            if (fresh == 0) continue;
            if (rng() % 2 == 0) continue;  // thin out transitions
            color[who] = fresh;
            breaks[who].push_back(idx);
            pieces[who].push_back(fresh);
            ++made;
        }
        ChainSpec spec;
        bool ok = true;
        for (size_t i = 0; i < chain_len; ++i) {
            TriColoredCurve c;
            for (size_t p = 0; p < npts; ++p)
                c.points.push_back({0.05 * static_cast<double>(p),
                                    static_cast<double>(i)});
            c.breakpoints = breaks[i];
            c.piece_colors = pieces[i];
            if (require_distinct_endpoints &&
                c.piece_colors.front() == c.piece_colors.back())
                ok = false;
            spec.curves.push_back(std::move(c));
        }
        if (!ok) continue;
        // unit vertical offsets between consecutive curves
        return spec;
    }
    throw std::runtime_error("chain generator exhausted its attempts");
}

inline ComplementaryPair generate_pair(std::uint64_t seed, size_t transitions,
                                       bool require_distinct_endpoints = false) {
    ChainSpec spec = generate_chain(seed, 2, transitions, require_distinct_endpoints);
    return ComplementaryPair{spec.curves[0], spec.curves[1]};
}

}  // namespace oracles
