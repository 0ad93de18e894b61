#include "chromap/planemap.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace chromap {

namespace {

std::string pt_str(const Point& p) {
    return "(" + rat_str(p.x) + ", " + rat_str(p.y) + ")";
}

struct EdgeKey {
    Point a, b;
    bool operator<(const EdgeKey& o) const {
        if (a < o.a) return true;
        if (o.a < a) return false;
        return b < o.b;
    }
};

// Conservative double prefilter for the exact on-segment test.
struct EdgeHull {
    double xmin, ymin, xmax, ymax;
};

constexpr double kPad = 1e-9;

EdgeHull edge_hull(const Point& a, const Point& b) {
    double ax = rat_double(a.x), ay = rat_double(a.y);
    double bx = rat_double(b.x), by = rat_double(b.y);
    return {std::min(ax, bx) - kPad, std::min(ay, by) - kPad,
            std::max(ax, bx) + kPad, std::max(ay, by) + kPad};
}

// Every sub-interval midpoint of edge a->b (split at window-boundary events)
// must stay inside or on the window.
bool edge_inside_window(const Point& a, const Point& b, const Polygon& window) {
    std::vector<Rational> events{rat(0), rat(1)};
    Point r = b - a;
    size_t n = window.vertices.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& c = window.vertices[i];
        const Point& d = window.vertices[(i + 1) % n];
        Point s = d - c;
        Rational denom = cross(r, s);
        if (denom != 0) {
            Rational t = cross(c - a, s) / denom;
            Rational u = cross(c - a, r) / denom;
            if (t >= 0 && t <= 1 && u >= 0 && u <= 1) events.push_back(t);
        } else if (orient(a, b, c) == 0) {
            Rational len2 = dot(r, r);
            Rational tc = dot(c - a, r) / len2;
            Rational td = dot(d - a, r) / len2;
            if (tc >= 0 && tc <= 1) events.push_back(tc);
            if (td >= 0 && td <= 1) events.push_back(td);
        }
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    for (size_t i = 0; i + 1 < events.size(); ++i) {
        Rational tm = (events[i] + events[i + 1]) / 2;
        Point m{a.x + tm * r.x, a.y + tm * r.y};
        if (locate_point(m, window) == Location::Outside) return false;
    }
    return true;
}

Rational polygon_area2_abs(const Polygon& p) { return polygon_signed_area2(p); }

}  // namespace

ColorId PlanarMap::color_of(int region_index) const {
    if (region_index == kUnboundedRegion) return unbounded_color.value_or(0);
    return regions[static_cast<size_t>(region_index)].color;
}

std::pair<ColorId, ColorId> PlanarMap::edge_colors(const AtomicEdge& e) const {
    return {color_of(e.left), color_of(e.right)};
}

PlanarMap build_map(std::vector<ColoredRegion> region_list, Polygon window, int k,
                    std::optional<ColorId> unbounded_color) {
    if (k < 1) throw MapError("InvalidInput", "k must be positive");
    validate_polygon(window);
    if (region_list.empty()) throw MapError("InvalidInput", "no regions");
    for (const auto& r : region_list) {
        validate_polygon(r.poly);
        if (r.color < 1 || r.color > k)
            throw MapError("InvalidInput", "region color outside 1..k");
    }
    if (unbounded_color && (*unbounded_color < 1 || *unbounded_color > k))
        throw MapError("InvalidInput", "unbounded color outside 1..k");

    // Exact area bookkeeping: regions inside the window, pairwise interior
    // disjoint, areas summing to the window area => exact coverage.
    Rational area_sum = 0;
    for (const auto& r : region_list) {
        area_sum += polygon_area2_abs(r.poly);
        for (const auto& v : r.poly.vertices)
            if (locate_point(v, window) == Location::Outside)
                throw MapError("Gap", "region vertex outside window at " + pt_str(v));
        size_t n = r.poly.vertices.size();
        for (size_t i = 0; i < n; ++i)
            if (!edge_inside_window(r.poly.vertices[i], r.poly.vertices[(i + 1) % n], window))
                throw MapError("Gap", "region edge leaves the window");
    }
    std::vector<BBox> boxes;
    boxes.reserve(region_list.size());
    for (const auto& r : region_list) boxes.push_back(polygon_bbox(r.poly));
    for (size_t i = 0; i < region_list.size(); ++i) {
        for (size_t j = i + 1; j < region_list.size(); ++j) {
            if (bbox_min_dist_sq(boxes[i], boxes[j]) > 0) continue;
            Point w{rat(0), rat(0)};
            if (polygon_interiors_intersect(region_list[i].poly, region_list[j].poly, &w))
                throw MapError("Overlap", "regions " + std::to_string(i) + " and " +
                                              std::to_string(j) + " overlap at " + pt_str(w));
        }
    }
    Rational window_area = polygon_area2_abs(window);
    if (area_sum != window_area) {
        throw MapError("Gap", "region areas cover " + rat_str(area_sum / 2) + " of window area " +
                                  rat_str(window_area / 2));
    }

    PlanarMap map;
    map.k = k;
    map.window = std::move(window);
    map.regions = std::move(region_list);
    map.unbounded_color = unbounded_color;

    // Vertex pool: all polygon corners (window included).
    std::set<Point> pool_set;
    for (const auto& r : map.regions)
        for (const auto& v : r.poly.vertices) pool_set.insert(v);
    for (const auto& v : map.window.vertices) pool_set.insert(v);
    std::vector<Point> pool(pool_set.begin(), pool_set.end());
    std::vector<std::pair<double, double>> pool_d;
    pool_d.reserve(pool.size());
    for (const auto& p : pool) pool_d.push_back({rat_double(p.x), rat_double(p.y)});

    // Split every region edge at pool points lying on it; register sides.
    std::map<EdgeKey, std::pair<int, int>> edge_sides;  // -2 = unset
    for (size_t ri = 0; ri < map.regions.size(); ++ri) {
        const auto& poly = map.regions[ri].poly;
        size_t n = poly.vertices.size();
        for (size_t i = 0; i < n; ++i) {
            const Point& a = poly.vertices[i];
            const Point& b = poly.vertices[(i + 1) % n];
            EdgeHull hull = edge_hull(a, b);
            std::vector<std::pair<Rational, Point>> cuts;
            Point r = b - a;
            Rational len2 = dot(r, r);
            for (size_t pi = 0; pi < pool.size(); ++pi) {
                if (pool_d[pi].first < hull.xmin || pool_d[pi].first > hull.xmax ||
                    pool_d[pi].second < hull.ymin || pool_d[pi].second > hull.ymax)
                    continue;
                const Point& p = pool[pi];
                if (p == a || p == b) continue;
                if (on_segment(p, a, b)) cuts.push_back({dot(p - a, r) / len2, p});
            }
            std::sort(cuts.begin(), cuts.end(),
                      [](const auto& u, const auto& v) { return u.first < v.first; });
            Point prev = a;
            auto emit = [&](const Point& from, const Point& to) {
                bool fwd = from < to;
                EdgeKey key = fwd ? EdgeKey{from, to} : EdgeKey{to, from};
                auto [it, fresh] = edge_sides.try_emplace(key, std::make_pair(-2, -2));
                int& side = fwd ? it->second.first : it->second.second;
                if (side != -2)
                    throw MapError("Overlap", "two regions claim the same side of edge at " +
                                                  pt_str(from));
                side = static_cast<int>(ri);
            };
            for (const auto& c : cuts) {
                emit(prev, c.second);
                prev = c.second;
            }
            emit(prev, b);
        }
    }

    for (auto& [key, sides] : edge_sides) {
        auto& [left, right] = sides;
        if (left == -2 || right == -2) {
            Point mid{(key.a.x + key.b.x) / 2, (key.a.y + key.b.y) / 2};
            if (locate_point(mid, map.window) == Location::Boundary) {
                if (left == -2) left = kUnboundedRegion;
                if (right == -2) right = kUnboundedRegion;
            } else {
                throw MapError("Gap", "uncovered boundary side at " + pt_str(mid));
            }
        }
        if (left == -2 || right == -2 || (left == kUnboundedRegion && right == kUnboundedRegion))
            throw MapError("Gap", "edge with no adjacent region at " + pt_str(key.a));
        ColorId cl = map.color_of(left), cr = map.color_of(right);
        if (cl != 0 && cr != 0 && cl == cr)
            throw MapError("AdjacentSameColor", "edge " + pt_str(key.a) + "-" + pt_str(key.b) +
                                                    " separates two color-" + std::to_string(cl) +
                                                    " regions");
        map.edges.push_back(AtomicEdge{key.a, key.b, left, right});
    }

    // Incidence and vertex census.
    std::map<Point, std::set<int>> incident;
    std::map<Point, std::vector<size_t>> edges_at;
    for (size_t ei = 0; ei < map.edges.size(); ++ei) {
        const auto& e = map.edges[ei];
        for (const Point* p : {&e.a, &e.b}) {
            incident[*p].insert(e.left);
            incident[*p].insert(e.right);
            edges_at[*p].push_back(ei);
        }
    }
    for (const auto& [p, ids] : incident) {
        if (ids.size() < 3) continue;
        VertexInfo info;
        info.location = p;
        info.degree = static_cast<int>(edges_at[p].size());
        for (int id : ids) {
            if (id == kUnboundedRegion) {
                if (map.unbounded_color) info.multicolor.insert(*map.unbounded_color);
            } else {
                info.multicolor.insert(map.regions[static_cast<size_t>(id)].color);
            }
        }
        info.chromaticity = static_cast<int>(info.multicolor.size());
        map.vertices.emplace(p, info);
    }

    // Chain atomic edges through non-vertex points into boundary curves.
    std::vector<bool> used(map.edges.size(), false);
    auto pair_of = [&](size_t ei) {
        int a = map.edges[ei].left, b = map.edges[ei].right;
        return std::make_pair(std::min(a, b), std::max(a, b));
    };
    auto is_vertex = [&](const Point& p) { return map.vertices.count(p) > 0; };
    for (size_t ei = 0; ei < map.edges.size(); ++ei) {
        if (used[ei]) continue;
        used[ei] = true;
        std::vector<Point> chain{map.edges[ei].a, map.edges[ei].b};
        auto rp = pair_of(ei);
        bool closed = false;
        for (int dir = 0; dir < 2 && !closed; ++dir) {
            while (true) {
                Point tip = dir == 0 ? chain.back() : chain.front();
                if (is_vertex(tip)) break;
                const auto& here = edges_at[tip];
                if (here.size() != 2)
                    throw MapError("StructureError",
                                   "non-vertex boundary point of degree " +
                                       std::to_string(here.size()) + " at " + pt_str(tip));
                size_t next;
                if (!used[here[0]]) {
                    next = here[0];
                } else if (!used[here[1]]) {
                    next = here[1];
                } else {
                    // both consumed: the chain closed on itself
                    if (!(chain.front() == chain.back()))
                        throw MapError("StructureError", "chain walk revisited an edge");
                    chain.pop_back();
                    closed = true;
                    break;
                }
                if (pair_of(next) != rp)
                    throw MapError("StructureError",
                                   "region pair changes through a non-vertex point at " +
                                       pt_str(tip));
                used[next] = true;
                const auto& e = map.edges[next];
                Point far = (e.a == tip) ? e.b : e.a;
                if (dir == 0)
                    chain.push_back(far);
                else
                    chain.insert(chain.begin(), far);
            }
        }
        BoundaryCurve curve;
        curve.polyline = std::move(chain);
        curve.region_a = rp.first;
        curve.region_b = rp.second;
        curve.closed = closed;
        map.curves.push_back(std::move(curve));
    }
    return map;
}

VertexInfo vertex_info(const PlanarMap& map, const Point& v) {
    auto it = map.vertices.find(v);
    if (it == map.vertices.end()) throw MapError("NotAVertex", "no map vertex at " + pt_str(v));
    return it->second;
}

ConditionReport validate_conditions(const PlanarMap& map) {
    ConditionReport rep;
    rep.locally_finite.note =
        "finite map: " + std::to_string(map.regions.size()) + " regions in any window";
    rep.forbidden_arcs.note = "polygonal boundaries contain no arc of a unit circle";
    rep.poly.note = "all regions are polygons by construction";
    rep.jordan.note = "adjacent regions differ in color (enforced at build)";
    for (const auto& [p, info] : map.vertices) {
        if (info.degree < 3) {
            rep.jordan.ok = false;
            rep.jordan.witnesses.push_back(p);
        }
        if (info.chromaticity == 3 && info.degree > 3) {
            rep.three_col.ok = false;
            rep.three_col.witnesses.push_back(p);
        }
        if (info.degree != 3) {
            rep.cubic.ok = false;
            rep.cubic.witnesses.push_back(p);
        }
    }
    return rep;
}

std::pair<Point, Point> tangent_triangle_points(const Point& z, const Point& x, const Point& y) {
    if (orient(z, x, y) == 0) throw MapError("CollinearPoints", "z, x, y are collinear");
    Rational L2 = dist_sq(x, y);
    if (L2 >= 4) throw MapError("NoValidTriangle", "|x-y| >= 2, no unit circle through x and y");
    Point m{(x.x + y.x) / 2, (x.y + y.y) / 2};
    Point xy = y - x;
    Point n0{-xy.y, xy.x};
    // N points away from z
    Point N = dot(z - m, n0) < 0 ? n0 : Point{-n0.x, -n0.y};
    Rational S = 1 - L2 / 4;  // s = sqrt(S) is the circumcenter offset

    // p is on or below the tangent line iff D = <p-m, N> satisfies
    // D < 0 and D^2 >= (1-s)^2 L2, rationally: 4 L2^2 S >= ((1+S) L2 - D^2)^2
    // unless the right side is already nonpositive.
    auto safe = [&](const Point& p, bool strict) {
        Rational D = dot(p - m, N);
        if (sign(D) >= 0) return false;
        Rational rhs = (1 + S) * L2 - D * D;
        if (sign(rhs) < 0) return true;
        if (sign(rhs) == 0) return !strict;
        Rational lhs = 4 * L2 * L2 * S;
        if (strict) return lhs > rhs * rhs;
        return lhs >= rhs * rhs;
    };
    if (!safe(z, true))
        throw MapError("NoValidTriangle", "tangent line leaves no room at z (empty triangle)");

    // The tangent crossing parameter along z->x: D(t) = (1-t) D_z.
    double Dz = rat_double(dot(z - m, N));
    double s = std::sqrt(rat_double(S));
    double Lnorm = std::sqrt(rat_double(L2));
    double tstar = 1.0 - (1.0 - s) * Lnorm / std::abs(Dz);
    Rational t = rat_snap(std::max(1e-6, 0.95 * tstar), 32);
    if (t >= 1) t = rat(31, 32);
    if (t <= 0) t = rat(1, 1024);
    for (int guard = 0;; ++guard) {
        Point p{z.x + t * (x.x - z.x), z.y + t * (x.y - z.y)};
        Point q{z.x + t * (y.x - z.x), z.y + t * (y.y - z.y)};
        if (safe(p, false) && safe(q, false)) return {p, q};
        if (guard > 80) throw MapError("NoValidTriangle", "tangent parameter search failed");
        t /= 2;
    }
}

namespace {

// Angular order of directions around a point, exact.
bool dir_less(const Point& d1, const Point& d2) {
    auto half = [](const Point& d) { return (d.y < 0 || (d.y == 0 && d.x < 0)) ? 1 : 0; };
    int h1 = half(d1), h2 = half(d2);
    if (h1 != h2) return h1 < h2;
    return sign(cross(d1, d2)) > 0;
}

struct Ray {
    Point dir;           // w - z
    Point far_end;       // w
    size_t edge_index;
    int left_region;     // region CCW of the ray (left of z->w)
};

std::vector<Ray> rays_at(const PlanarMap& map, const Point& z) {
    std::vector<Ray> rays;
    for (size_t ei = 0; ei < map.edges.size(); ++ei) {
        const auto& e = map.edges[ei];
        if (!(e.a == z) && !(e.b == z)) continue;
        Ray r;
        r.edge_index = ei;
        if (e.a == z) {
            r.far_end = e.b;
            r.left_region = e.left;  // sides stored relative to a->b with a < b; a == z here
        } else {
            r.far_end = e.a;
            r.left_region = e.right;  // traversing b->a flips the sides
        }
        r.dir = r.far_end - z;
        rays.push_back(r);
    }
    std::sort(rays.begin(), rays.end(),
              [](const Ray& a, const Ray& b) { return dir_less(a.dir, b.dir); });
    return rays;
}

}  // namespace

// Splits the edges of each polygon at every vertex used by the group, cancels
// opposite directed edges, and traces the single remaining loop.
Polygon merge_region_polygons(const std::vector<Polygon>& group) {
    std::set<Point> pool;
    for (const auto& poly : group)
        for (const auto& v : poly.vertices) pool.insert(v);
    std::map<std::pair<Point, Point>, int> count;
    auto add = [&](const Point& a, const Point& b) {
        auto rev = count.find({b, a});
        if (rev != count.end() && rev->second > 0) {
            if (--rev->second == 0) count.erase(rev);
            return;
        }
        count[{a, b}]++;
    };
    for (const auto& poly : group) {
        size_t n = poly.vertices.size();
        for (size_t i = 0; i < n; ++i) {
            const Point& a = poly.vertices[i];
            const Point& b = poly.vertices[(i + 1) % n];
            std::vector<std::pair<Rational, Point>> cuts;
            Point r = b - a;
            Rational len2 = dot(r, r);
            for (const auto& p : pool) {
                if (p == a || p == b) continue;
                if (on_segment(p, a, b)) cuts.push_back({dot(p - a, r) / len2, p});
            }
            std::sort(cuts.begin(), cuts.end(),
                      [](const auto& u, const auto& v) { return u.first < v.first; });
            Point prev = a;
            for (const auto& c : cuts) {
                add(prev, c.second);
                prev = c.second;
            }
            add(prev, b);
        }
    }
    std::map<Point, std::vector<Point>> outgoing;
    for (const auto& [key, c] : count) {
        if (c == 0) continue;
        if (c > 1) throw MapError("UnionNotSimple", "duplicated boundary edge in union");
        outgoing[key.first].push_back(key.second);
    }
    for (const auto& [p, outs] : outgoing)
        if (outs.size() != 1)
            throw MapError("UnionNotSimple", "union boundary branches at " + pt_str(p));
    if (outgoing.empty()) throw MapError("UnionNotSimple", "union has empty boundary");
    Polygon out;
    Point start = outgoing.begin()->first;
    Point cur = start;
    do {
        out.vertices.push_back(cur);
        cur = outgoing.at(cur).front();
        if (out.vertices.size() > outgoing.size())
            throw MapError("UnionNotSimple", "union boundary does not close");
    } while (!(cur == start));
    if (static_cast<size_t>(out.vertices.size()) != outgoing.size())
        throw MapError("UnionNotSimple", "union boundary has several loops (hole?)");
    // drop collinear run-through points that belong to no other region; keeping
    // them is harmless, but canonical output helps golden tests
    validate_polygon(out);
    return out;
}

namespace {

bool point_in_triangle_closed(const Point& p, const Point& a, const Point& b, const Point& c) {
    int o1 = orient(a, b, p), o2 = orient(b, c, p), o3 = orient(c, a, p);
    return o1 >= 0 && o2 >= 0 && o3 >= 0;
}

}  // namespace

PlanarMap recolor_triangle(const PlanarMap& map, const Point& z, const Point& x_in,
                           const Point& y_in, ColorId color) {
    Point x = x_in, y = y_in;
    if (orient(z, x, y) == 0) throw MapError("CollinearPoints", "z, x, y are collinear");
    // normalize so the recolored sector runs CCW from ray z->x to ray z->y
    // through an angle < pi
    if (sign(cross(x - z, y - z)) < 0) std::swap(x, y);

    auto rays = rays_at(map, z);
    if (rays.empty()) throw MapError("PreconditionViolation", "z is not on any boundary");
    auto find_ray = [&](const Point& target) -> size_t {
        for (size_t i = 0; i < rays.size(); ++i) {
            if (orient(z, target, rays[i].far_end) == 0 && dot(target - z, rays[i].dir) > 0 &&
                on_segment(target, z, rays[i].far_end))
                return i;
        }
        throw MapError("PreconditionViolation",
                       "segment from z toward " + pt_str(target) + " is not a boundary edge");
    };
    size_t ix = find_ray(x), iy = find_ray(y);
    if (ix == iy) throw MapError("PreconditionViolation", "x and y lie on the same ray");
    auto borders_color = [&](size_t ri) {
        const auto& e = map.edges[rays[ri].edge_index];
        ColorId cl = map.color_of(e.left), cr = map.color_of(e.right);
        return cl == color || cr == color;
    };
    if (!borders_color(ix) || !borders_color(iy))
        throw MapError("PreconditionViolation",
                       "zx or zy does not border a region of the requested color");

    auto [p0, q0] = tangent_triangle_points(z, x, y);
    Point p = p0, q = q0;

    // Shrink the triangle until it is local: no foreign vertex or edge meets
    // it, and every interior ray runs past the chord.
    std::vector<size_t> interior;  // ray indices strictly inside the sector
    for (size_t i = 0; i < rays.size(); ++i) {
        if (i == ix || i == iy) continue;
        if (sign(cross(x - z, rays[i].dir)) > 0 && sign(cross(rays[i].dir, y - z)) > 0)
            interior.push_back(i);
    }
    // CCW order within the sector; all directions span less than pi, so the
    // cross-product sign is a strict order.
    std::sort(interior.begin(), interior.end(), [&](size_t a, size_t b) {
        return sign(cross(rays[a].dir, rays[b].dir)) > 0;
    });

    for (int guard = 0;; ++guard) {
        if (guard > 80) throw MapError("NoValidTriangle", "triangle cannot be made local");
        bool ok = true;
        int z_side = orient(p, q, z);
        for (const auto& [vp, info] : map.vertices) {
            if (vp == z) continue;
            if (point_in_triangle_closed(vp, z, p, q)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            for (const auto& e : map.edges) {
                if (e.a == z || e.b == z) continue;
                if (point_in_triangle_closed(e.a, z, p, q) ||
                    point_in_triangle_closed(e.b, z, p, q) ||
                    segments_properly_cross(e.a, e.b, z, p) ||
                    segments_properly_cross(e.a, e.b, p, q) ||
                    segments_properly_cross(e.a, e.b, q, z)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            for (size_t ri : interior) {
                if (orient(p, q, rays[ri].far_end) == z_side || orient(p, q, rays[ri].far_end) == 0) {
                    ok = false;  // interior ray bends or ends before the chord
                    break;
                }
            }
        }
        if (ok) break;
        p = Point{(z.x + p.x) / 2, (z.y + p.y) / 2};
        q = Point{(z.x + q.x) / 2, (z.y + q.y) / 2};
    }

    // Chord crossings with the interior rays, in CCW order from p to q.
    std::vector<Point> chord_pts{p};
    Point e = q - p;
    for (size_t ri : interior) {
        Rational denom = cross(rays[ri].dir, e);
        if (denom == 0) throw MapError("StructureError", "interior ray parallel to chord");
        Rational s = cross(p - z, e) / denom;
        chord_pts.push_back(Point{z.x + s * rays[ri].dir.x, z.y + s * rays[ri].dir.y});
    }
    chord_pts.push_back(q);

    // Regions whose corner at z is covered by the triangle: the wedge CCW of
    // each sector ray (z->x ray and the interior rays).
    std::vector<size_t> sector_rays{ix};
    sector_rays.insert(sector_rays.end(), interior.begin(), interior.end());
    std::set<int> affected;
    for (size_t ri : sector_rays) {
        int region = rays[ri].left_region;
        if (region == kUnboundedRegion)
            throw MapError("PreconditionViolation", "recolor sector reaches the unbounded face");
        affected.insert(region);
    }

    std::vector<ColoredRegion> out;
    for (size_t i = 0; i < map.regions.size(); ++i) {
        if (!affected.count(static_cast<int>(i))) {
            out.push_back(map.regions[i]);
            continue;
        }
        // cut the corner at z: replace z by the chord crossings on its two
        // polygon edges
        const Polygon& poly = map.regions[i].poly;
        size_t n = poly.vertices.size();
        size_t zi = n;
        for (size_t vi = 0; vi < n; ++vi)
            if (poly.vertices[vi] == z) zi = vi;
        if (zi == n) throw MapError("StructureError", "affected region misses corner z");
        const Point& prev = poly.vertices[(zi + n - 1) % n];
        const Point& next = poly.vertices[(zi + 1) % n];
        auto cut_on = [&](const Point& other) -> Point {
            Point d = other - z;
            Rational denom = cross(d, e);
            if (denom == 0) throw MapError("StructureError", "region edge parallel to chord");
            Rational s = cross(p - z, e) / denom;
            return Point{z.x + s * d.x, z.y + s * d.y};
        };
        Point beta = cut_on(prev);
        Point alpha = cut_on(next);
        Polygon cut;
        for (size_t vi = 0; vi < n; ++vi) {
            if (vi == zi) {
                cut.vertices.push_back(beta);
                cut.vertices.push_back(alpha);
            } else {
                cut.vertices.push_back(poly.vertices[vi]);
            }
        }
        validate_polygon(cut);
        out.push_back({cut, map.regions[i].color});
    }

    Polygon tri;
    tri.vertices.push_back(z);
    for (const auto& cp : chord_pts) tri.vertices.push_back(cp);
    if (sign(polygon_signed_area2(tri)) < 0)
        std::reverse(tri.vertices.begin(), tri.vertices.end());
    validate_polygon(tri);
    out.push_back({tri, color});

    // Merge the triangle with adjacent same-colored regions (positive-length
    // shared boundary), then rebuild.
    auto shares_edge = [](const Polygon& a, const Polygon& b) {
        size_t na = a.vertices.size(), nb = b.vertices.size();
        for (size_t i = 0; i < na; ++i) {
            Point a1 = a.vertices[i], a2 = a.vertices[(i + 1) % na];
            for (size_t j = 0; j < nb; ++j) {
                Point b1 = b.vertices[j], b2 = b.vertices[(j + 1) % nb];
                if (orient(a1, a2, b1) != 0 || orient(a1, a2, b2) != 0) continue;
                // collinear: positive-length overlap?
                Point r = a2 - a1;
                Rational len2 = dot(r, r);
                Rational t1 = dot(b1 - a1, r) / len2;
                Rational t2 = dot(b2 - a1, r) / len2;
                if (t1 > t2) std::swap(t1, t2);
                if (std::min(Rational(1), t2) > std::max(Rational(0), t1)) return true;
            }
        }
        return false;
    };
    size_t tri_index = out.size() - 1;
    std::vector<size_t> group{tri_index};
    std::vector<bool> in_group(out.size(), false);
    in_group[tri_index] = true;
    for (size_t head = 0; head < group.size(); ++head) {
        for (size_t j = 0; j < out.size(); ++j) {
            if (in_group[j] || out[j].color != color) continue;
            if (shares_edge(out[group[head]].poly, out[j].poly)) {
                in_group[j] = true;
                group.push_back(j);
            }
        }
    }
    std::vector<ColoredRegion> final_regions;
    if (group.size() > 1) {
        std::vector<Polygon> member_polys;
        for (size_t gi : group) member_polys.push_back(out[gi].poly);
        Polygon merged = merge_region_polygons(member_polys);
        for (size_t j = 0; j < out.size(); ++j)
            if (!in_group[j]) final_regions.push_back(out[j]);
        final_regions.push_back({merged, color});
    } else {
        final_regions = std::move(out);
    }
    return build_map(std::move(final_regions), map.window, map.k, map.unbounded_color);
}

namespace {

Point window_centroid(const Polygon& w) {
    Rational a2 = polygon_signed_area2(w);
    Rational cx = 0, cy = 0;
    size_t n = w.vertices.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& u = w.vertices[i];
        const Point& v = w.vertices[(i + 1) % n];
        Rational cr = cross(u, v);
        cx += (u.x + v.x) * cr;
        cy += (u.y + v.y) * cr;
    }
    return Point{cx / (3 * a2), cy / (3 * a2)};
}

std::vector<Point> degree_targets(const PlanarMap& map, const Point& center, const Rational& r2) {
    std::vector<Point> out;
    for (const auto& [p, info] : map.vertices) {
        if (info.chromaticity == 3 && info.degree > 3 && dist_sq(p, center) <= r2)
            out.push_back(p);
    }
    return out;
}

}  // namespace

PlanarMap reduce_degree(const PlanarMap& input, const Rational& radius) {
    if (sign(radius) <= 0) throw MapError("InvalidInput", "radius must be positive");
    PlanarMap map = input;
    Point center = window_centroid(map.window);
    Rational r2 = radius * radius;
    size_t budget = 4 * std::max<size_t>(map.vertices.size(), 1);
    for (size_t iter = 0;; ++iter) {
        auto targets = degree_targets(map, center, r2);
        if (targets.empty()) return map;
        if (iter >= budget)
            throw MapError("NonConvergence", "degree reduction exceeded its iteration budget");
        Point z = targets.front();
        auto rays = rays_at(map, z);
        size_t d = rays.size();
        // wedge colors: wedge i sits CCW of ray i
        std::vector<ColorId> wedge(d);
        for (size_t i = 0; i < d; ++i) {
            int region = rays[i].left_region;
            wedge[i] = map.color_of(region);
        }
        bool done = false;
        for (ColorId a = 1; a <= map.k && !done; ++a) {
            std::vector<size_t> idx;
            for (size_t i = 0; i < d; ++i)
                if (wedge[i] == a) idx.push_back(i);
            if (idx.size() < 2) continue;
            for (size_t u = 0; u < idx.size() && !done; ++u) {
                for (size_t v = 0; v < idx.size() && !done; ++v) {
                    if (u == v) continue;
                    // gap runs CCW from the end ray of wedge idx[u] to the
                    // start ray of wedge idx[v]
                    size_t rs = (idx[u] + 1) % d;
                    size_t re = idx[v];
                    if (rs == re) continue;
                    if (sign(cross(rays[rs].dir, rays[re].dir)) <= 0) continue;  // not < pi
                    Point xx = rays[rs].far_end;
                    Point yy = rays[re].far_end;
                    for (int shrink = 0; shrink < 64 && dist_sq(xx, yy) >= 4; ++shrink) {
                        xx = Point{(z.x + xx.x) / 2, (z.y + xx.y) / 2};
                        yy = Point{(z.x + yy.x) / 2, (z.y + yy.y) / 2};
                    }
                    if (dist_sq(xx, yy) >= 4) continue;
                    try {
                        PlanarMap next = recolor_triangle(map, z, xx, yy, a);
                        auto remaining = degree_targets(next, center, r2);
                        if (remaining.size() >= targets.size())
                            throw MapError("NonConvergence",
                                           "recoloring did not reduce the vertex census");
                        map = std::move(next);
                        done = true;
                    } catch (const MapError& err) {
                        if (err.kind == "NonConvergence") throw;
                        // try the other orientation / color pair
                    }
                }
            }
        }
        if (!done)
            throw MapError("NonConvergence",
                           "no recolorable sector at vertex " + pt_str(z));
    }
}

PlanarMap merge_same_color_components(const PlanarMap& map, const std::set<ColorId>& colors) {
    size_t n = map.regions.size();
    // adjacency via shared atomic edges (positive length by construction)
    std::vector<std::vector<size_t>> adj(n);
    for (const auto& e : map.edges) {
        if (e.left < 0 || e.right < 0) continue;
        ColorId cl = map.regions[static_cast<size_t>(e.left)].color;
        ColorId cr = map.regions[static_cast<size_t>(e.right)].color;
        if (cl != cr || !colors.count(cl)) continue;
        adj[static_cast<size_t>(e.left)].push_back(static_cast<size_t>(e.right));
        adj[static_cast<size_t>(e.right)].push_back(static_cast<size_t>(e.left));
    }
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (size_t i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<size_t> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            size_t cur = stack.back();
            stack.pop_back();
            for (size_t nb : adj[cur]) {
                if (comp[nb] < 0) {
                    comp[nb] = ncomp;
                    stack.push_back(nb);
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::vector<size_t>> members(static_cast<size_t>(ncomp));
    for (size_t i = 0; i < n; ++i) members[static_cast<size_t>(comp[i])].push_back(i);
    std::vector<ColoredRegion> merged;
    for (const auto& group : members) {
        if (group.size() == 1) {
            merged.push_back(map.regions[group[0]]);
            continue;
        }
        std::vector<Polygon> polys;
        for (size_t gi : group) polys.push_back(map.regions[gi].poly);
        merged.push_back({merge_region_polygons(polys), map.regions[group[0]].color});
    }
    return build_map(std::move(merged), map.window, map.k, map.unbounded_color);
}

std::vector<Point> trichromatic_vertices(const PlanarMap& map) {
    std::vector<Point> out;
    for (const auto& [p, info] : map.vertices)
        if (info.chromaticity == 3) out.push_back(p);
    return out;
}

std::set<ColorId> multicolor_at(const PlanarMap& map, const Point& p) {
    std::set<ColorId> out;
    for (const auto& r : map.regions)
        if (locate_point(p, r.poly) != Location::Outside) out.insert(r.color);
    if (map.unbounded_color && locate_point(p, map.window) != Location::Inside)
        out.insert(*map.unbounded_color);
    return out;
}

}  // namespace chromap
