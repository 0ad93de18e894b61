#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "chromap/geom.hpp"

namespace chromap {

struct MapError : std::runtime_error {
    std::string kind;
    std::string detail;
    MapError(std::string k, const std::string& msg)
        : std::runtime_error(k + ": " + msg), kind(std::move(k)), detail(msg) {}
};

using ColorId = int;  // 1..k
constexpr int kUnboundedRegion = -1;

struct ColoredRegion {
    Polygon poly;
    ColorId color;
};

// Undirected boundary piece between two splits; left/right relative to the
// direction a->b with a < b lexicographically.
struct AtomicEdge {
    Point a, b;
    int left = kUnboundedRegion, right = kUnboundedRegion;  // region indices
};

struct VertexInfo {
    Point location;
    int degree = 0;
    std::set<ColorId> multicolor;
    int chromaticity = 0;
};

// Maximal boundary chain between two vertices (or a closed loop) separating
// one region pair.
struct BoundaryCurve {
    std::vector<Point> polyline;
    int region_a = kUnboundedRegion, region_b = kUnboundedRegion;
    bool closed = false;
};

struct PlanarMap {
    int k = 0;
    Polygon window;
    std::vector<ColoredRegion> regions;
    std::optional<ColorId> unbounded_color;

    // derived structure, populated by build_map
    std::vector<AtomicEdge> edges;
    std::map<Point, VertexInfo> vertices;
    std::vector<BoundaryCurve> curves;

    ColorId color_of(int region_index) const;
    std::pair<ColorId, ColorId> edge_colors(const AtomicEdge& e) const;
};

PlanarMap build_map(std::vector<ColoredRegion> regions, Polygon window, int k,
                    std::optional<ColorId> unbounded_color = std::nullopt);

VertexInfo vertex_info(const PlanarMap& map, const Point& v);

struct ConditionReport {
    struct Entry {
        bool ok = true;
        std::vector<Point> witnesses;
        std::string note;
    };
    Entry jordan, locally_finite, forbidden_arcs, three_col, cubic, poly;
    bool all_ok() const {
        return jordan.ok && locally_finite.ok && forbidden_arcs.ok && three_col.ok &&
               cubic.ok && poly.ok;
    }
};

ConditionReport validate_conditions(const PlanarMap& map);

// Tangent construction of the recolorable triangle: the unit circle through x
// and y on the far side of z, and its tangent parallel to xy. Returned points
// are rational, chosen strictly inside the exact triangle.
std::pair<Point, Point> tangent_triangle_points(const Point& z, const Point& x, const Point& y);

PlanarMap recolor_triangle(const PlanarMap& map, const Point& z, const Point& x,
                           const Point& y, ColorId color);

PlanarMap reduce_degree(const PlanarMap& map, const Rational& radius);

// Union of same-colored regions glued along shared boundary (used by the
// corpus generators and the recoloring surgery).
PlanarMap merge_same_color_components(const PlanarMap& map, const std::set<ColorId>& colors);

// Union of polygons glued along shared boundary pieces into one simple
// polygon; throws UnionNotSimple when the result is not one simple loop.
Polygon merge_region_polygons(const std::vector<Polygon>& group);

std::vector<Point> trichromatic_vertices(const PlanarMap& map);

// Multicolor of an arbitrary point: colors of all regions whose closure
// contains it (plus the unbounded color outside the window when set).
std::set<ColorId> multicolor_at(const PlanarMap& map, const Point& p);

}  // namespace chromap
