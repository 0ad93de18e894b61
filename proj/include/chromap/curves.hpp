#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromap/circlecolor.hpp"
#include "chromap/geom.hpp"

namespace chromap {

struct CurveError : std::runtime_error {
    std::string kind;
    CurveError(std::string k, const std::string& msg)
        : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

struct Vec2 {
    double x = 0, y = 0;
};

// Piecewise-linear curve colored in {1,2,3}: piece_colors[i] colors the
// polyline between breakpoints[i-1] and breakpoints[i] (indices into points).
// Endpoints are interior to their pieces (never bichromatic).
struct TriColoredCurve {
    std::vector<Vec2> points;
    std::vector<size_t> breakpoints;  // strictly increasing, in (0, points.size()-1)
    std::vector<int> piece_colors;    // breakpoints.size() + 1 entries
    bool closed = false;
};

void validate_curve(const TriColoredCurve& c);

// Two curves on a shared parameter grid at pointwise distance exactly 1:
// gamma2[k] = gamma1[k] + unit offset. Grid parameter k maps to point index k.
struct ComplementaryPair {
    TriColoredCurve gamma1, gamma2;
};

void validate_pair(const ComplementaryPair& p, double unit_tol = 1e-9);

// h_delta(alpha) = delta cos(alpha) + sqrt(1 - delta^2 sin^2 alpha): the radius
// at which a ray from the trichromatic point crosses the unit circle around
// the second-farthest breakpoint at distance delta.
double h_delta(double alpha, double delta);

// Middle of the three circular angular distances (radians) from ray_dir.
double second_largest_angle(const TurnAngle& ray_dir, const TurnAngle& a45,
                            const TurnAngle& a46, const TurnAngle& a56);

struct AngleInterval {
    double lo = 0, hi = 0;  // turns; lo < hi, may exceed 1 to express wrap
};

struct AnnulusSectors {
    Point center{rat(0), rat(0)};
    double eta = 0;
    std::vector<AngleInterval> inner;  // directions where h_delta < 1 for some delta
    std::vector<AngleInterval> outer;  // directions where h_delta > 1 for some delta
};

struct DeltaSample {
    double delta = 0;
    TurnAngle a45, a46, a56;
};

AnnulusSectors annulus_sectors(const Point& u, const std::vector<DeltaSample>& samples,
                               double eta);

struct CurveCertificate {
    int winding = 0;
    double max_circle_deviation = 0;  // max | |p-u| - 1 | over curve points
    double max_tangent_deviation = 0; // max |angle(segment, radial) - pi/2|
    bool passed(double eta, double theta) const {
        return winding == 1 && max_circle_deviation < eta &&
               max_tangent_deviation <= 1.5 * theta + 1e-9;
    }
};

struct AnnulusCurve {
    TriColoredCurve curve;  // geometry only; piece colors unset (single piece)
    CurveCertificate certificate;
};

AnnulusCurve build_annulus_curve(const AnnulusSectors& sectors, double theta);

struct CrossingReport {
    int count = 0;
    std::vector<Vec2> locations;
};

// Transversal crossings of the closed polyline with the unit circle around v,
// by exact sign changes of |p - v|^2 - 1.
CrossingReport count_circle_crossings(const TriColoredCurve& curve, const Vec2& v);

// Signed count of cyclic color transitions: +1 for 1->2, 2->3, 3->1, else -1.
int curve_index(const TriColoredCurve& c);

TriColoredCurve reverse_curve(const TriColoredCurve& c);

struct IndexDifference {
    int ind1 = 0, ind2 = 0;
    int difference = 0;
    std::string diagnostic;  // non-empty iff difference > 1 (invariant violated)
};

IndexDifference index_difference_bound(const ComplementaryPair& pair);

int polyline_winding_number(const std::vector<Vec2>& pts, const Vec2& p);

}  // namespace chromap
