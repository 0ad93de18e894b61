#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chromap/rational.hpp"

namespace chromap {

struct GeomError : std::runtime_error {
    std::string kind;
    GeomError(std::string k, const std::string& msg)
        : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

struct Point {
    Rational x, y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

inline Point pt(long xn, long xd, long yn, long yd) { return Point{rat(xn, xd), rat(yn, yd)}; }
inline Point pt(long x, long y) { return Point{rat(x), rat(y)}; }

inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }

Rational dot(const Point& a, const Point& b);
Rational cross(const Point& a, const Point& b);
Rational dist_sq(const Point& a, const Point& b);

// Sign of the cross product (b-a) x (p-a): >0 left of a->b, 0 collinear.
int orient(const Point& a, const Point& b, const Point& p);

bool on_segment(const Point& p, const Point& a, const Point& b);

// true iff the open segments cross at a single interior point of both.
bool segments_properly_cross(const Point& a, const Point& b, const Point& c, const Point& d);
std::optional<Point> segment_intersection_point(const Point& a, const Point& b,
                                                const Point& c, const Point& d);

// Simple polygon, counter-clockwise, no holes.
struct Polygon {
    std::vector<Point> vertices;
};

Rational polygon_signed_area2(const Polygon& p);  // twice the signed area
void validate_polygon(const Polygon& p);          // throws GeomError on violation

enum class Location { Outside, Boundary, Inside };
Location locate_point(const Point& p, const Polygon& poly);

// A point strictly inside a simple polygon, exact.
Point polygon_interior_point(const Polygon& poly);

bool polygon_interiors_intersect(const Polygon& a, const Polygon& b,
                                 Point* witness = nullptr);

struct DistanceInterval {
    Rational min_sq, max_sq;
};

Rational segment_point_distance_sq(const Point& p, const Point& a, const Point& b);
Rational segment_segment_distance_sq(const Point& a, const Point& b,
                                     const Point& c, const Point& d);
DistanceInterval polygon_distance_interval(const Polygon& p, const Polygon& q);

struct BBox {
    Rational xmin, ymin, xmax, ymax;
};
BBox polygon_bbox(const Polygon& p);
// Range of squared distances achievable between two boxes (lower/upper bound).
Rational bbox_min_dist_sq(const BBox& a, const BBox& b);
Rational bbox_max_dist_sq(const BBox& a, const BBox& b);

struct CircleIntersection {
    int count = 0;  // exact; 0, 1 (tangent) or 2
    // Approximate coordinates, error bounded by a few ulps at desk scale.
    std::vector<std::pair<double, double>> points;
};

CircleIntersection circle_circle_intersection(const Point& c1, const Rational& r1_sq,
                                              const Point& c2, const Rational& r2_sq);

// Intersections of the segment ab with the circle |p-center|^2 = r_sq.
// Count and tangency decided exactly; parameters reported as doubles.
struct SegmentCircleIntersection {
    int count = 0;        // distinct intersection points on the closed segment
    bool tangent = false; // discriminant exactly zero
    std::vector<double> params;
};
SegmentCircleIntersection segment_circle_intersection(const Point& a, const Point& b,
                                                      const Point& center,
                                                      const Rational& r_sq);

// Exact sign of |a + t(b-a) - center|^2 - r_sq evaluated at rational t.
int segment_circle_side(const Point& p, const Point& center, const Rational& r_sq);

}  // namespace chromap
