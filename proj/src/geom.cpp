#include "chromap/geom.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace chromap {

Rational rat_parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        return rat_from_mpz(num, den);
    }
    auto dotp = text.find('.');
    if (dotp != std::string::npos) {
        std::string digits = text.substr(0, dotp) + text.substr(dotp + 1);
        mpz_class num(digits);
        mpz_class den = 1;
        for (size_t i = dotp + 1; i < text.size(); ++i) den *= 10;
        return rat_from_mpz(num, den);
    }
    return rat_from_mpz(mpz_class(text), 1);
}

std::string rat_str(const Rational& q) {
    std::ostringstream os;
    os << q.get_num();
    if (q.get_den() != 1) os << '/' << q.get_den();
    return os.str();
}

Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Rational dist_sq(const Point& a, const Point& b) {
    Rational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

int orient(const Point& a, const Point& b, const Point& p) {
    return sign(cross(b - a, p - a));
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (orient(a, b, p) != 0) return false;
    if (p.x < std::min(a.x, b.x) || p.x > std::max(a.x, b.x)) return false;
    if (p.y < std::min(a.y, b.y) || p.y > std::max(a.y, b.y)) return false;
    return true;
}

bool segments_properly_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

std::optional<Point> segment_intersection_point(const Point& a, const Point& b,
                                                const Point& c, const Point& d) {
    Point r = b - a, s = d - c;
    Rational denom = cross(r, s);
    if (denom == 0) return std::nullopt;
    Rational t = cross(c - a, s) / denom;
    Rational u = cross(c - a, r) / denom;
    if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
    return Point{a.x + t * r.x, a.y + t * r.y};
}

Rational polygon_signed_area2(const Polygon& p) {
    Rational acc = 0;
    size_t n = p.vertices.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& u = p.vertices[i];
        const Point& v = p.vertices[(i + 1) % n];
        acc += cross(u, v);
    }
    return acc;
}

void validate_polygon(const Polygon& p) {
    size_t n = p.vertices.size();
    if (n < 3) throw GeomError("InvalidPolygon", "fewer than 3 vertices");
    for (size_t i = 0; i < n; ++i) {
        if (p.vertices[i] == p.vertices[(i + 1) % n])
            throw GeomError("InvalidPolygon", "repeated consecutive vertex");
    }
    if (sign(polygon_signed_area2(p)) <= 0)
        throw GeomError("InvalidPolygon", "not counter-clockwise or zero area");
    // Simplicity: no two non-adjacent edges may touch; adjacent edges only at
    // the shared vertex.
    for (size_t i = 0; i < n; ++i) {
        Point a = p.vertices[i], b = p.vertices[(i + 1) % n];
        for (size_t j = i + 1; j < n; ++j) {
            Point c = p.vertices[j], d = p.vertices[(j + 1) % n];
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                // shared endpoint is fine; any further contact is not
                Point shared = (j == i + 1) ? b : a;
                Point a2 = (j == i + 1) ? a : c;
                Point d2 = (j == i + 1) ? d : b;
                if (orient(shared, a2, d2) == 0 && dot(a2 - shared, d2 - shared) > 0)
                    throw GeomError("InvalidPolygon", "spike (edges fold back)");
                continue;
            }
            if (segments_properly_cross(a, b, c, d) || on_segment(c, a, b) ||
                on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d))
                throw GeomError("InvalidPolygon", "self-intersection");
        }
    }
}

Location locate_point(const Point& p, const Polygon& poly) {
    size_t n = poly.vertices.size();
    for (size_t i = 0; i < n; ++i) {
        if (on_segment(p, poly.vertices[i], poly.vertices[(i + 1) % n])) return Location::Boundary;
    }
    int wn = 0;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = poly.vertices[i];
        const Point& b = poly.vertices[(i + 1) % n];
        if (a.y <= p.y) {
            if (b.y > p.y && orient(a, b, p) > 0) ++wn;
        } else {
            if (b.y <= p.y && orient(a, b, p) < 0) --wn;
        }
    }
    return wn != 0 ? Location::Inside : Location::Outside;
}

Point polygon_interior_point(const Polygon& poly) {
    const auto& vs = poly.vertices;
    size_t n = vs.size();
    // Lowest-leftmost vertex is convex.
    size_t vi = 0;
    for (size_t i = 1; i < n; ++i)
        if (vs[i] < vs[vi]) vi = i;
    const Point& a = vs[(vi + n - 1) % n];
    const Point& v = vs[vi];
    const Point& b = vs[(vi + 1) % n];
    // Farthest other vertex strictly inside triangle avb, if any.
    bool found = false;
    Point q{0, 0};
    Rational best = 0;
    for (size_t i = 0; i < n; ++i) {
        if (i == vi || i == (vi + 1) % n || i == (vi + n - 1) % n) continue;
        const Point& c = vs[i];
        if (orient(a, v, c) > 0 || orient(v, b, c) > 0 || orient(b, a, c) > 0) continue;
        // distance from c to line ab, squared numerator suffices for comparison
        Rational d = cross(b - a, c - a);
        if (d < 0) d = -d;
        if (!found || d > best) {
            found = true;
            best = d;
            q = c;
        }
    }
    if (!found) {
        return Point{(a.x + v.x + b.x) / 3, (a.y + v.y + b.y) / 3};
    }
    return Point{(v.x + q.x) / 2, (v.y + q.y) / 2};
}

static bool same_cycle(const Polygon& a, const Polygon& b) {
    size_t n = a.vertices.size();
    if (b.vertices.size() != n) return false;
    for (size_t off = 0; off < n; ++off) {
        bool ok = true;
        for (size_t i = 0; i < n; ++i) {
            if (!(a.vertices[i] == b.vertices[(i + off) % n])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

// Collects all parameters along edge a->b at which the boundary of `poly`
// meets the edge, then checks midpoints of the induced open sub-intervals.
static bool edge_probes_interior(const Point& a, const Point& b, const Polygon& poly,
                                 Point* witness) {
    std::vector<Rational> events;
    events.push_back(rat(0));
    events.push_back(rat(1));
    Point r = b - a;
    size_t n = poly.vertices.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& c = poly.vertices[i];
        const Point& d = poly.vertices[(i + 1) % n];
        Point s = d - c;
        Rational denom = cross(r, s);
        if (denom != 0) {
            Rational t = cross(c - a, s) / denom;
            Rational u = cross(c - a, r) / denom;
            if (t >= 0 && t <= 1 && u >= 0 && u <= 1) events.push_back(t);
        } else {
            // parallel: collinear endpoints project onto the edge
            if (orient(a, b, c) == 0) {
                Rational len2 = dot(r, r);
                Rational tc = dot(c - a, r) / len2;
                Rational td = dot(d - a, r) / len2;
                if (tc >= 0 && tc <= 1) events.push_back(tc);
                if (td >= 0 && td <= 1) events.push_back(td);
            }
        }
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    for (size_t i = 0; i + 1 < events.size(); ++i) {
        Rational tm = (events[i] + events[i + 1]) / 2;
        Point m{a.x + tm * r.x, a.y + tm * r.y};
        if (locate_point(m, poly) == Location::Inside) {
            if (witness) *witness = m;
            return true;
        }
    }
    return false;
}

bool polygon_interiors_intersect(const Polygon& a, const Polygon& b, Point* witness) {
    BBox ba = polygon_bbox(a), bb = polygon_bbox(b);
    if (ba.xmax < bb.xmin || bb.xmax < ba.xmin || ba.ymax < bb.ymin || bb.ymax < ba.ymin)
        return false;
    if (same_cycle(a, b)) {
        if (witness) *witness = polygon_interior_point(a);
        return true;
    }
    size_t na = a.vertices.size(), nb = b.vertices.size();
    for (size_t i = 0; i < na; ++i) {
        const Point& p = a.vertices[i];
        const Point& q = a.vertices[(i + 1) % na];
        for (size_t j = 0; j < nb; ++j) {
            const Point& c = b.vertices[j];
            const Point& d = b.vertices[(j + 1) % nb];
            if (segments_properly_cross(p, q, c, d)) {
                if (witness) *witness = *segment_intersection_point(p, q, c, d);
                return true;
            }
        }
    }
    for (size_t i = 0; i < na; ++i)
        if (edge_probes_interior(a.vertices[i], a.vertices[(i + 1) % na], b, witness)) return true;
    for (size_t j = 0; j < nb; ++j)
        if (edge_probes_interior(b.vertices[j], b.vertices[(j + 1) % nb], a, witness)) return true;
    return false;
}

Rational segment_point_distance_sq(const Point& p, const Point& a, const Point& b) {
    if (a == b) throw GeomError("DegenerateSegment", "segment endpoints coincide");
    Point ab = b - a;
    Rational len2 = dot(ab, ab);
    Rational t = dot(p - a, ab) / len2;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    Point foot{a.x + t * ab.x, a.y + t * ab.y};
    return dist_sq(p, foot);
}

Rational segment_segment_distance_sq(const Point& a, const Point& b,
                                     const Point& c, const Point& d) {
    if (segments_properly_cross(a, b, c, d)) return rat(0);
    Rational m = segment_point_distance_sq(c, a, b);
    m = std::min(m, segment_point_distance_sq(d, a, b));
    m = std::min(m, segment_point_distance_sq(a, c, d));
    m = std::min(m, segment_point_distance_sq(b, c, d));
    return m;
}

DistanceInterval polygon_distance_interval(const Polygon& p, const Polygon& q) {
    Rational max_sq = 0;
    for (const auto& u : p.vertices)
        for (const auto& v : q.vertices) max_sq = std::max(max_sq, dist_sq(u, v));
    if (polygon_interiors_intersect(p, q)) return {rat(0), max_sq};
    // Interiors disjoint: minimum is attained between boundaries, at a
    // vertex-edge pair (including touching closures, where it is 0).
    Rational min_sq = dist_sq(p.vertices[0], q.vertices[0]);
    size_t np = p.vertices.size(), nq = q.vertices.size();
    for (const auto& u : p.vertices)
        for (size_t j = 0; j < nq; ++j)
            min_sq = std::min(min_sq,
                              segment_point_distance_sq(u, q.vertices[j], q.vertices[(j + 1) % nq]));
    for (const auto& v : q.vertices)
        for (size_t i = 0; i < np; ++i)
            min_sq = std::min(min_sq,
                              segment_point_distance_sq(v, p.vertices[i], p.vertices[(i + 1) % np]));
    return {min_sq, max_sq};
}

BBox polygon_bbox(const Polygon& p) {
    BBox b{p.vertices[0].x, p.vertices[0].y, p.vertices[0].x, p.vertices[0].y};
    for (const auto& v : p.vertices) {
        b.xmin = std::min(b.xmin, v.x);
        b.ymin = std::min(b.ymin, v.y);
        b.xmax = std::max(b.xmax, v.x);
        b.ymax = std::max(b.ymax, v.y);
    }
    return b;
}

Rational bbox_min_dist_sq(const BBox& a, const BBox& b) {
    Rational dx = 0, dy = 0;
    if (a.xmax < b.xmin) dx = b.xmin - a.xmax;
    else if (b.xmax < a.xmin) dx = a.xmin - b.xmax;
    if (a.ymax < b.ymin) dy = b.ymin - a.ymax;
    else if (b.ymax < a.ymin) dy = a.ymin - b.ymax;
    return dx * dx + dy * dy;
}

Rational bbox_max_dist_sq(const BBox& a, const BBox& b) {
    Rational dx = std::max(abs(a.xmax - b.xmin), abs(b.xmax - a.xmin));
    Rational dy = std::max(abs(a.ymax - b.ymin), abs(b.ymax - a.ymin));
    return dx * dx + dy * dy;
}

CircleIntersection circle_circle_intersection(const Point& c1, const Rational& r1_sq,
                                              const Point& c2, const Rational& r2_sq) {
    if (sign(r1_sq) <= 0 || sign(r2_sq) <= 0)
        throw GeomError("InvalidRadius", "radius squared must be positive");
    Rational d_sq = dist_sq(c1, c2);
    if (d_sq == 0) {
        if (r1_sq == r2_sq) throw GeomError("InfiniteIntersection", "concentric equal circles");
        return {};
    }
    // Compare d with r1+r2 and |r1-r2| using squared data only.
    // A = d^2 - r1^2 - r2^2; d < r1+r2  <=>  A < 2*sqrt(r1^2 r2^2)
    //                         d > |r1-r2| <=> A > -2*sqrt(r1^2 r2^2)
    Rational A = d_sq - r1_sq - r2_sq;
    Rational rr4 = 4 * r1_sq * r2_sq;
    int sign_outer;  // sign of (r1+r2)^2 - d^2
    if (A < 0) sign_outer = 1;
    else sign_outer = sign(rr4 - A * A);
    int sign_inner;  // sign of d^2 - (r1-r2)^2
    if (A >= 0) sign_inner = 1;
    else sign_inner = sign(rr4 - A * A);

    CircleIntersection out;
    if (sign_outer < 0 || sign_inner < 0) return out;
    out.count = (sign_outer == 0 || sign_inner == 0) ? 1 : 2;

    // a = projection parameter of the radical point along c1->c2 (exact),
    // h^2 = r1^2 - a^2 d^2 (exact, >= 0 when count >= 1).
    Rational a = (d_sq + r1_sq - r2_sq) / (2 * d_sq);
    Point delta = c2 - c1;
    Point foot{c1.x + a * delta.x, c1.y + a * delta.y};
    Rational h_sq = r1_sq - a * a * d_sq;
    if (sign(h_sq) < 0) h_sq = 0;  // count==1 tangency may round below zero symbolically
    double h_over_d = std::sqrt(rat_double(h_sq) / rat_double(d_sq));
    double fx = rat_double(foot.x), fy = rat_double(foot.y);
    double px = -rat_double(delta.y) * h_over_d;
    double py = rat_double(delta.x) * h_over_d;
    if (out.count == 1) {
        out.points.push_back({fx, fy});
    } else {
        out.points.push_back({fx + px, fy + py});
        out.points.push_back({fx - px, fy - py});
    }
    return out;
}

int segment_circle_side(const Point& p, const Point& center, const Rational& r_sq) {
    return sign(dist_sq(p, center) - r_sq);
}

SegmentCircleIntersection segment_circle_intersection(const Point& a, const Point& b,
                                                      const Point& center,
                                                      const Rational& r_sq) {
    if (a == b) throw GeomError("DegenerateSegment", "segment endpoints coincide");
    Point ab = b - a;
    Rational A = dot(ab, ab);
    Rational B = 2 * dot(a - center, ab);
    Rational C = dist_sq(a, center) - r_sq;
    Rational disc = B * B - 4 * A * C;
    SegmentCircleIntersection out;
    int ds = sign(disc);
    if (ds < 0) return out;
    if (ds == 0) {
        Rational t = -B / (2 * A);
        if (t >= 0 && t <= 1) {
            out.count = 1;
            out.tangent = true;
            out.params.push_back(rat_double(t));
        }
        return out;
    }
    // Two line roots r1 < r2 of q(t) = A t^2 + B t + C with A > 0. Exact
    // in-range decisions from the signs of q(0), q(1) and the vertex position.
    Rational q0 = C, q1 = A + B + C;
    Rational tv = -B / (2 * A);
    auto root_in_range = [&](int which) {
        if (which < 0) {
            // r1 >= 0 <=> q(0) >= 0 and vertex > 0; r1 <= 1 <=> q(1) <= 0 or vertex <= 1
            bool ge0 = sign(q0) >= 0 && tv > 0;
            bool le1 = sign(q1) <= 0 || tv <= 1;
            return ge0 && le1;
        }
        // r2 <= 1 <=> q(1) >= 0 and vertex < 1; r2 >= 0 <=> q(0) <= 0 or vertex >= 0
        bool le1 = sign(q1) >= 0 && tv < 1;
        bool ge0 = sign(q0) <= 0 || tv >= 0;
        return le1 && ge0;
    };
    double Ad = rat_double(A), Bd = rat_double(B);
    double sq = std::sqrt(rat_double(disc));
    double t1 = (-Bd - sq) / (2 * Ad);
    double t2 = (-Bd + sq) / (2 * Ad);
    if (root_in_range(-1)) {
        ++out.count;
        out.params.push_back(t1);
    }
    if (root_in_range(+1)) {
        ++out.count;
        out.params.push_back(t2);
    }
    return out;
}

}  // namespace chromap
