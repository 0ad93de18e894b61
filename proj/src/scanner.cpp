#include "chromap/scanner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chromap {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string pt_str(const Point& p) {
    return "(" + rat_str(p.x) + ", " + rat_str(p.y) + ")";
}

std::set<std::pair<ColorId, ColorId>> incident_color_pairs(const PlanarMap& map, const Point& v) {
    std::set<std::pair<ColorId, ColorId>> pairs;
    for (const auto& e : map.edges) {
        if (!(e.a == v) && !(e.b == v)) continue;
        auto [cl, cr] = map.edge_colors(e);
        if (cl == 0 || cr == 0) continue;
        pairs.insert({std::min(cl, cr), std::max(cl, cr)});
    }
    return pairs;
}

// The boundary-extension hypothesis: boundaries between every pair of colors
// of the multicolor leave the vertex.
bool boundary_extension(const PlanarMap& map, const Point& v, const std::set<ColorId>& mc) {
    auto pairs = incident_color_pairs(map, v);
    std::vector<ColorId> cs(mc.begin(), mc.end());
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = i + 1; j < cs.size(); ++j)
            if (!pairs.count({std::min(cs[i], cs[j]), std::max(cs[i], cs[j])})) return false;
    return true;
}

}  // namespace

std::string violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::SameMulticolorPair_t7: return "SameMulticolorPair_t7";
        case ViolationKind::DisjointMulticolorPair_f32: return "DisjointMulticolorPair_f32";
        case ViolationKind::Chromaticity4_t3: return "Chromaticity4_t3";
        case ViolationKind::HexagonConfig_l55: return "HexagonConfig_l55";
        case ViolationKind::TripleForced_t10: return "TripleForced_t10";
        case ViolationKind::BichromaticUnit_l15: return "BichromaticUnit_l15";
    }
    return "Unknown";
}

std::vector<Violation> chromaticity_scan(const PlanarMap& map) {
    std::vector<Violation> out;
    for (const auto& [p, info] : map.vertices) {
        if (info.chromaticity < 4) continue;
        Violation v;
        v.kind = ViolationKind::Chromaticity4_t3;
        v.witnesses = {p};
        v.multicolors = {info.multicolor};
        v.informational = map.k >= 7;
        v.note = "chromaticity " + std::to_string(info.chromaticity);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Violation> trichromatic_pair_scan(const PlanarMap& map) {
    if (map.k != 6) throw MapError("InvalidInput", "trichromatic pair scan requires a 6-color map");
    struct Tri {
        Point p;
        std::set<ColorId> mc;
    };
    std::vector<Tri> tris;
    for (const auto& [p, info] : map.vertices) {
        if (info.chromaticity != 3) continue;
        if (!boundary_extension(map, p, info.multicolor)) continue;
        tris.push_back({p, info.multicolor});
    }
    std::vector<Violation> out;
    for (size_t i = 0; i < tris.size(); ++i) {
        for (size_t j = i + 1; j < tris.size(); ++j) {
            Rational d2 = dist_sq(tris[i].p, tris[j].p);
            bool same = tris[i].mc == tris[j].mc;
            bool disjoint = true;
            for (ColorId c : tris[i].mc)
                if (tris[j].mc.count(c)) disjoint = false;
            if (same && d2 > 1 && d2 < 4) {
                Violation v;
                v.kind = ViolationKind::SameMulticolorPair_t7;
                v.witnesses = {tris[i].p, tris[j].p};
                v.multicolors = {tris[i].mc, tris[j].mc};
                v.distance_sq = d2;
                out.push_back(std::move(v));
            } else if (disjoint && sign(d2) > 0 && d2 < 4) {
                Violation v;
                v.kind = ViolationKind::DisjointMulticolorPair_f32;
                v.witnesses = {tris[i].p, tris[j].p};
                v.multicolors = {tris[i].mc, tris[j].mc};
                v.distance_sq = d2;
                out.push_back(std::move(v));
            }
        }
    }
    return out;
}

namespace {

struct Crossing {
    double angle_d;      // turns
    Rational angle;      // snapped to the 2^-32 grid
    size_t curve, seg;   // location in map.curves
};

// A rational point within 2^-39 of the circle point at angle phi (turns).
Point near_circle_point(const Point& u, double phi_turns, double radius) {
    double a = phi_turns * kTwoPi;
    return Point{u.x + rat_snap(radius * std::cos(a), 40), u.y + rat_snap(radius * std::sin(a), 40)};
}

std::optional<ColorId> region_color_at(const PlanarMap& map, const Point& p) {
    for (const auto& r : map.regions) {
        if (locate_point(p, r.poly) == Location::Inside) return r.color;
    }
    return std::nullopt;
}

}  // namespace

PseudoColoring pseudo_coloring(const PlanarMap& map, const Point& u) {
    if (map.k != 6) throw MapError("SixColorsRequired", "pseudo-coloring requires a 6-color map");
    auto it = map.vertices.find(u);
    if (it == map.vertices.end() || it->second.chromaticity != 3)
        throw MapError("NotTrichromatic", "pseudo-coloring needs a trichromatic vertex");
    if (locate_point(u, map.window) != Location::Inside)
        throw MapError("CircleOutsideWindow", "u is not interior to the window");
    size_t nw = map.window.vertices.size();
    for (size_t i = 0; i < nw; ++i) {
        if (segment_point_distance_sq(u, map.window.vertices[i],
                                      map.window.vertices[(i + 1) % nw]) < 1)
            throw MapError("CircleOutsideWindow", "unit circle around u leaves the window");
    }

    PseudoColoring out;
    // relabel: u's colors -> {4,5,6}, the others -> {1,2,3}, both in sorted order
    std::vector<ColorId> mine(it->second.multicolor.begin(), it->second.multicolor.end());
    std::vector<ColorId> rest;
    for (ColorId c = 1; c <= 6; ++c)
        if (!it->second.multicolor.count(c)) rest.push_back(c);
    for (size_t i = 0; i < mine.size(); ++i) out.relabel[mine[i]] = static_cast<ColorId>(4 + i);
    for (size_t i = 0; i < rest.size(); ++i) out.relabel[rest[i]] = static_cast<ColorId>(1 + i);

    const Rational one = rat(1);
    std::vector<Crossing> crossings;
    for (size_t ci = 0; ci < map.curves.size(); ++ci) {
        const auto& pl = map.curves[ci].polyline;
        size_t segs = map.curves[ci].closed ? pl.size() : pl.size() - 1;
        for (size_t si = 0; si < segs; ++si) {
            const Point& a = pl[si];
            const Point& b = pl[(si + 1) % pl.size()];
            auto hit = segment_circle_intersection(a, b, u, one);
            if (hit.tangent) continue;  // touch point, arcs unchanged
            for (double t : hit.params) {
                double px = rat_double(a.x) + t * (rat_double(b.x) - rat_double(a.x));
                double py = rat_double(a.y) + t * (rat_double(b.y) - rat_double(a.y));
                double ang = std::atan2(py - rat_double(u.y), px - rat_double(u.x)) / kTwoPi;
                if (ang < 0) ang += 1.0;
                // segment endpoints exactly on the circle: count each point once
                if (t == 0.0 && si > 0) continue;  // same point seen as t==1 of previous
                crossings.push_back({ang, rat_snap(ang, 32), ci, si});
            }
        }
        // endpoint of an open chain exactly on the circle
        for (const Point* endp : {&pl.front(), &pl.back()}) {
            if (!map.curves[ci].closed && dist_sq(*endp, u) == 1)
                throw MapError("TrichromaticOnCircle",
                               "boundary endpoint on the unit circle at " + pt_str(*endp));
        }
    }
    std::sort(crossings.begin(), crossings.end(),
              [](const Crossing& x, const Crossing& y) { return x.angle < y.angle; });
    // identical snapped angles from different curves: a vertex on the circle
    for (size_t i = 0; i + 1 < crossings.size(); ++i) {
        if (crossings[i].angle == crossings[i + 1].angle &&
            crossings[i].curve != crossings[i + 1].curve)
            throw MapError("TrichromaticOnCircle",
                           "several boundaries meet the circle at one angle");
    }
    crossings.erase(std::unique(crossings.begin(), crossings.end(),
                                [](const Crossing& x, const Crossing& y) {
                                    return x.angle == y.angle;
                                }),
                    crossings.end());

    ArcColoring col;
    std::vector<Crossing> kept;
    if (crossings.empty()) {
        // circle entirely inside one region: degenerate single-arc coloring
        auto c = region_color_at(map, near_circle_point(u, 0.25, 1.0));
        if (!c) throw MapError("ArcSampleAmbiguous", "cannot locate the circle's region");
        ColorId pc = out.relabel.at(*c);
        if (pc > 3) throw MapError("EmptyPseudoColor", "circle lies in a {4,5,6}-colored region");
        col.breakpoints = {TurnAngle(rat(0))};
        col.colors = {pc};
        out.coloring = col;
        out.exact = {false};
        out.crossing = {};
        return out;
    }
    size_t m = crossings.size();
    std::vector<ColorId> arc_colors(m, 0);
    for (size_t i = 0; i < m; ++i) {
        double a0 = crossings[i].angle_d;
        double a1 = crossings[(i + 1) % m].angle_d;
        if (a1 <= a0) a1 += 1.0;
        double mid = (a0 + a1) / 2.0;
        std::optional<ColorId> c;
        for (double rr : {1.0, 1.0 - 1e-6, 1.0 + 1e-6, 1.0 - 1e-4, 1.0 + 1e-4}) {
            c = region_color_at(map, near_circle_point(u, mid, rr));
            if (c) break;
        }
        if (!c) throw MapError("ArcSampleAmbiguous", "cannot locate an arc's region");
        ColorId pc = out.relabel.at(*c);
        if (pc > 3)
            throw MapError("EmptyPseudoColor",
                           "arc in a {4,5,6}-colored region at angle " +
                               std::to_string((crossings[i].angle_d + 0.5 / m)));
        arc_colors[i] = pc;
    }
    // touch points that do not change the color are not breakpoints
    for (size_t i = 0; i < m; ++i) {
        size_t prev = (i + m - 1) % m;
        if (arc_colors[prev] == arc_colors[i]) continue;
        col.breakpoints.push_back(TurnAngle(crossings[i].angle));
        col.colors.push_back(arc_colors[i]);
        kept.push_back(crossings[i]);
    }
    if (col.breakpoints.empty()) {
        // every crossing was a touch: degenerate single-arc circle
        col.breakpoints = {TurnAngle(crossings[0].angle)};
        col.colors = {arc_colors[0]};
        kept = {crossings[0]};
    }
    out.coloring = col;
    out.exact.assign(col.breakpoints.size(), false);
    for (size_t i = 0; i < col.breakpoints.size(); ++i) {
        const Rational& v = col.breakpoints[i].value;
        out.exact[i] = (v == 0 || v == rat(1, 4) || v == rat(1, 2) || v == rat(3, 4));
    }
    out.crossing.clear();
    for (const auto& c : kept) out.crossing.push_back({c.curve, c.seg});
    // report decisions within 2^-30 turns of the critical separation 1/6
    Rational band = rat_from_mpz(1, mpz_class(1) << 30);
    for (size_t i = 0; i < col.breakpoints.size(); ++i) {
        for (size_t j = i + 1; j < col.breakpoints.size(); ++j) {
            Rational d = circ_dist(col.breakpoints[i], col.breakpoints[j]);
            Rational gap = abs(d - rat(1, 6));
            if (gap != 0 && gap < band) out.tolerance_warning = true;
        }
    }
    validate_arc_coloring(out.coloring);
    return out;
}

namespace {

struct TraceResult {
    bool terminal = false;
    Point vertex{rat(0), rat(0)};        // valid when terminal
    double partner_angle = 0;            // valid when returning
    bool degenerate = false;
    std::string note;
};

TraceResult trace_crossing(const PlanarMap& map, const Point& u, size_t ci, size_t si) {
    const auto& curve = map.curves[ci];
    const auto& pl = curve.polyline;
    TraceResult res;
    const Rational one = rat(1);
    size_t n = pl.size();
    // direction: walk toward the endpoint of this segment that is inside
    auto side = [&](size_t idx) { return sign(dist_sq(pl[idx], u) - one); };
    int sa = side(si), sb = side((si + 1) % n);
    if (sa == 0 || sb == 0) {
        res.degenerate = true;
        res.note = "polyline vertex exactly on the circle";
        return res;
    }
    if (sa < 0 && sb < 0) {
        res.degenerate = true;
        res.note = "segment with both ends inside marked as crossing";
        return res;
    }
    if (sa > 0 && sb > 0) {
        // dips in and out within one segment: returning, partner on same segment
        auto hit = segment_circle_intersection(pl[si], pl[(si + 1) % n], u, one);
        if (hit.count == 2) {
            double t = hit.params[1];
            double px = rat_double(pl[si].x) +
                        t * (rat_double(pl[(si + 1) % n].x) - rat_double(pl[si].x));
            double py = rat_double(pl[si].y) +
                        t * (rat_double(pl[(si + 1) % n].y) - rat_double(pl[si].y));
            double ang = std::atan2(py - rat_double(u.y), px - rat_double(u.x)) / kTwoPi;
            if (ang < 0) ang += 1.0;
            res.partner_angle = ang;
            return res;
        }
        res.degenerate = true;
        res.note = "inconsistent crossing segment";
        return res;
    }
    bool forward = sb < 0;  // inside endpoint is si+1
    size_t steps = 0;
    size_t idx = forward ? (si + 1) % n : si;
    while (true) {
        if (++steps > n + 2) {
            res.degenerate = true;
            res.note = "trace walk did not terminate";
            return res;
        }
        // next point along the walk
        bool at_end = !curve.closed && (forward ? idx == n - 1 : idx == 0);
        if (at_end) {
            res.terminal = true;
            res.vertex = pl[idx];
            return res;
        }
        size_t nxt = forward ? (idx + 1) % n : (idx + n - 1) % n;
        int s = side(nxt);
        if (s == 0) {
            res.degenerate = true;
            res.note = "polyline vertex exactly on the circle";
            return res;
        }
        if (s > 0) {
            // exits: partner crossing lies on segment idx..nxt
            auto hit = segment_circle_intersection(pl[std::min(idx, nxt)],
                                                   pl[std::max(idx, nxt)], u, one);
            if (hit.count < 1) {
                res.degenerate = true;
                res.note = "exit segment without circle intersection";
                return res;
            }
            double t = hit.params[0];
            size_t a = std::min(idx, nxt);
            size_t b = std::max(idx, nxt);
            double px = rat_double(pl[a].x) + t * (rat_double(pl[b].x) - rat_double(pl[a].x));
            double py = rat_double(pl[a].y) + t * (rat_double(pl[b].y) - rat_double(pl[a].y));
            double ang = std::atan2(py - rat_double(u.y), px - rat_double(u.x)) / kTwoPi;
            if (ang < 0) ang += 1.0;
            res.partner_angle = ang;
            return res;
        }
        idx = nxt;
    }
}

Violation make_pair_violation(ViolationKind kind, const Point& a, const std::set<ColorId>& mca,
                              const Point& b, const std::set<ColorId>& mcb) {
    Violation v;
    v.kind = kind;
    v.witnesses = {a, b};
    v.multicolors = {mca, mcb};
    v.distance_sq = dist_sq(a, b);
    return v;
}

// equal- or disjoint-multicolor pair search over a census
std::vector<Violation> census_pairs(const std::vector<std::pair<Point, std::set<ColorId>>>& census) {
    std::vector<Violation> out;
    for (size_t i = 0; i < census.size(); ++i) {
        for (size_t j = i + 1; j < census.size(); ++j) {
            const auto& [pa, ma] = census[i];
            const auto& [pb, mb] = census[j];
            Rational d2 = dist_sq(pa, pb);
            if (ma == mb) {
                if (d2 > 1 && d2 < 4)
                    out.push_back(make_pair_violation(ViolationKind::SameMulticolorPair_t7, pa, ma,
                                                      pb, mb));
                continue;
            }
            bool disjoint = true;
            for (ColorId c : ma)
                if (mb.count(c)) disjoint = false;
            if (disjoint && sign(d2) > 0 && d2 < 4)
                out.push_back(make_pair_violation(ViolationKind::DisjointMulticolorPair_f32, pa, ma,
                                                  pb, mb));
        }
    }
    return out;
}

}  // namespace

DiskAnalysis disk_analysis(const PlanarMap& map, const Point& center) {
    DiskAnalysis out;
    out.center = center;
    auto fail = [&](const std::string& name, const std::string& detail) {
        out.hypothesis_failure = name;
        out.detail = detail;
        return out;
    };
    if (map.k != 6) return fail("six-color-map", "map uses k=" + std::to_string(map.k));
    if (locate_point(center, map.window) != Location::Inside)
        return fail("disk-inside-window", "center not interior to the window");
    size_t nw = map.window.vertices.size();
    for (size_t i = 0; i < nw; ++i) {
        if (segment_point_distance_sq(center, map.window.vertices[i],
                                      map.window.vertices[(i + 1) % nw]) < 9)
            return fail("disk-inside-window", "radius-3 disk leaves the window");
    }
    // trichromatic vertex within distance 1 of the center, boundaries between
    // all three color pairs extending from it
    std::optional<Point> best;
    Rational best_d2 = 0;
    for (const auto& [p, info] : map.vertices) {
        if (info.chromaticity != 3) continue;
        Rational d2 = dist_sq(p, center);
        if (d2 > 1) continue;
        if (!boundary_extension(map, p, info.multicolor)) continue;
        if (!best || d2 < best_d2 || (d2 == best_d2 && p < *best)) {
            best = p;
            best_d2 = d2;
        }
    }
    if (!best)
        return fail("trichromatic-point-within-1",
                    "no trichromatic vertex with extending boundaries within distance 1");
    Point u = *best;
    out.u = u;
    const auto& uinfo = map.vertices.at(u);

    PseudoColoring pseudo;
    try {
        pseudo = pseudo_coloring(map, u);
    } catch (const MapError& err) {
        if (err.kind == "TrichromaticOnCircle") {
            Violation v;
            v.kind = ViolationKind::DisjointMulticolorPair_f32;
            v.witnesses = {u};
            v.multicolors = {uinfo.multicolor};
            v.note = "trichromatic pseudo-color on the unit circle: " + err.detail;
            out.violations.push_back(std::move(v));
            return out;
        }
        if (err.kind == "EmptyPseudoColor")
            return fail("annulus-colored-123", err.detail);
        return fail("pseudo-coloring", err.detail);
    }
    out.pseudo = pseudo;

    ArcColoring circle = pseudo.coloring;
    std::vector<std::pair<size_t, size_t>> crossing = pseudo.crossing;

    auto relabeled_multicolor = [&](const std::set<ColorId>& mc) { return mc; };
    (void)relabeled_multicolor;

    // iterate: trace the nine triple points; returning boundaries trigger the
    // short-arc recoloring and a restart
    for (size_t round = 0; round <= circle.colors.size() + 1; ++round) {
        auto prop = circle_proper(circle);
        if (!prop.proper)
            return fail("circle-pseudo-coloring-proper-l5.1",
                        "pseudo-coloring of the unit circle is not proper");
        ArcColoring cyclic;
        try {
            cyclic = make_cyclic(circle);
        } catch (const CircleError& err) {
            return fail("circle-recoloring-l5.2", err.what());
        }
        if (cyclic.colors.size() < 9) {
            if (hexagon_config_check(cyclic)) {
                Violation v;
                v.kind = ViolationKind::HexagonConfig_l55;
                v.witnesses = {u};
                v.multicolors = {uinfo.multicolor};
                v.note = "regular-hexagon circle configuration at the trichromatic point";
                out.violations.push_back(std::move(v));
                return out;
            }
            return fail("circle-arc-count",
                        "cyclic coloring has " + std::to_string(cyclic.colors.size()) +
                            " arcs; neither >= 9 nor the hexagon case");
        }
        // triples per pseudo-color pair on the cyclic coloring; their
        // breakpoints survive from the original coloring
        std::vector<TurnAngle> nine;
        for (auto [a, b] : {std::pair<int, int>{1, 2}, {2, 3}, {1, 3}}) {
            auto triple = find_triple(cyclic, a, b);
            if (!triple)
                return fail("circle-triple-prop3.2",
                            "no spread-out bichromatic triple for pair {" + std::to_string(a) +
                                "," + std::to_string(b) + "}");
            nine.push_back(triple->a.angle);
            nine.push_back(triple->b.angle);
            nine.push_back(triple->c.angle);
        }
        // map angles back to crossings
        std::vector<size_t> nine_idx;
        for (const auto& ang : nine) {
            bool found = false;
            for (size_t i = 0; i < circle.breakpoints.size(); ++i) {
                if (circle.breakpoints[i] == ang) {
                    nine_idx.push_back(i);
                    found = true;
                    break;
                }
            }
            if (!found)
                return fail("circle-breakpoint-tracking",
                            "triple angle missing from the original pseudo-coloring");
        }
        bool restarted = false;
        std::vector<std::pair<Point, std::set<ColorId>>> census;
        census.push_back({u, uinfo.multicolor});
        for (size_t ni : nine_idx) {
            auto [ci, si] = crossing[ni];
            TraceResult tr = trace_crossing(map, u, ci, si);
            if (tr.degenerate) return fail("boundary-trace", tr.note);
            if (tr.terminal) {
                auto vit = map.vertices.find(tr.vertex);
                if (vit == map.vertices.end() || vit->second.chromaticity != 3)
                    return fail("boundary-terminal-trichromatic",
                                "traced boundary ends at a non-trichromatic point " +
                                    pt_str(tr.vertex));
                bool seen = false;
                for (const auto& [p, mc] : census)
                    if (p == tr.vertex) seen = true;
                if (!seen) census.push_back({tr.vertex, vit->second.multicolor});
                continue;
            }
            // returning boundary: recolor the short arc span between the two
            // crossing angles to the common outside color (the region the
            // boundary cuts off has diameter < 1)
            Rational a1 = circle.breakpoints[ni].value;
            Rational a2 = rat_snap(tr.partner_angle, 32);
            if (circ_dist(TurnAngle(a1), TurnAngle(a2)) >= rat(1, 6))
                return fail("returning-boundary-diameter",
                            "returning boundary spans a chord of length >= 1");
            // arcs strictly inside the span [from, to] (CCW short way)
            Rational lo = a1, hi = a2;
            Rational d = hi - lo;
            if (d < 0) d += 1;
            if (d > rat(1, 2)) std::swap(lo, hi);
            size_t m = circle.breakpoints.size();
            // outside colors adjacent to the span
            ColorId before = 0, after = 0;
            for (size_t i = 0; i < m; ++i) {
                if (circle.breakpoints[i].value == lo) before = circle.colors[(i + m - 1) % m];
                if (circle.breakpoints[i].value == hi) after = circle.colors[i];
            }
            if (before == 0 || after == 0 || before != after)
                return fail("returning-boundary-recolor",
                            "cut-off span has mismatched outside colors");
            ArcColoring next;
            std::vector<std::pair<size_t, size_t>> next_cross;
            for (size_t i = 0; i < m; ++i) {
                Rational v = circle.breakpoints[i].value;
                Rational off = v - lo;
                if (off < 0) off += 1;
                Rational span = hi - lo;
                if (span < 0) span += 1;
                bool in_span = off >= 0 && off <= span;
                int color = in_span && off != span ? before : circle.colors[i];
                next.breakpoints.push_back(circle.breakpoints[i]);
                next.colors.push_back(color);
                next_cross.push_back(crossing[i]);
            }
            // merge equal-adjacent arcs, keeping crossings aligned
            ArcColoring merged;
            std::vector<std::pair<size_t, size_t>> merged_cross;
            size_t mm = next.colors.size();
            for (size_t i = 0; i < mm; ++i) {
                if (next.colors[(i + mm - 1) % mm] == next.colors[i]) continue;
                merged.breakpoints.push_back(next.breakpoints[i]);
                merged.colors.push_back(next.colors[i]);
                merged_cross.push_back(next_cross[i]);
            }
            if (merged.colors.empty())
                return fail("returning-boundary-recolor", "recoloring collapsed the circle");
            circle = merged;
            crossing = merged_cross;
            restarted = true;
            break;
        }
        if (restarted) continue;

        out.census = census;
        auto vios = census_pairs(census);
        if (vios.empty()) {
            // the paper's final counting step: look for one more trichromatic
            // point inside the closed unit disk around u
            std::vector<std::pair<Point, std::set<ColorId>>> wide = census;
            for (const auto& [p, info] : map.vertices) {
                if (info.chromaticity != 3) continue;
                if (dist_sq(p, u) > 1) continue;
                bool seen = false;
                for (const auto& [q, mc] : wide)
                    if (q == p) seen = true;
                if (!seen) wide.push_back({p, info.multicolor});
            }
            vios = census_pairs(wide);
            if (!vios.empty()) out.census = wide;
        }
        if (vios.empty())
            return fail("t10-pigeonhole",
                        "census of " + std::to_string(out.census.size()) +
                            " trichromatic points yields no coinciding or disjoint multicolors");
        std::sort(vios.begin(), vios.end(), [](const Violation& a, const Violation& b) {
            if (a.witnesses[0] < b.witnesses[0]) return true;
            if (b.witnesses[0] < a.witnesses[0]) return false;
            return a.witnesses[1] < b.witnesses[1];
        });
        out.violations = std::move(vios);
        return out;
    }
    return fail("returning-boundary-budget", "returning-boundary recoloring did not stabilize");
}

std::vector<Violation> bichromatic_unit_scan(const PlanarMap& map, ExecutionPolicy policy) {
    // segments grouped by the unordered color pair they separate
    struct Seg {
        Point a, b;
        ColorId ca, cb;
    };
    std::vector<Seg> segs;
    for (const auto& e : map.edges) {
        auto [cl, cr] = map.edge_colors(e);
        if (cl == 0 || cr == 0) continue;  // window side without unbounded color
        if (cl == cr) continue;
        segs.push_back({e.a, e.b, std::min(cl, cr), std::max(cl, cr)});
    }
    std::vector<std::pair<size_t, size_t>> tasks;
    for (size_t i = 0; i < segs.size(); ++i)
        for (size_t j = i; j < segs.size(); ++j) {
            if (segs[i].ca != segs[j].ca || segs[i].cb != segs[j].cb) continue;
            // cheap double prefilter: endpoint max is exact for segments,
            // bbox distance bounds the min from below
            auto dd = [](const Point& p, const Point& q) {
                double dx = rat_double(p.x) - rat_double(q.x);
                double dy = rat_double(p.y) - rat_double(q.y);
                return dx * dx + dy * dy;
            };
            double mx = std::max(std::max(dd(segs[i].a, segs[j].a), dd(segs[i].a, segs[j].b)),
                                 std::max(dd(segs[i].b, segs[j].a), dd(segs[i].b, segs[j].b)));
            if (mx < 1.0 - 1e-9) continue;
            if (i != j) {
                auto lo = [](double a, double b) { return std::min(a, b); };
                auto hi = [](double a, double b) { return std::max(a, b); };
                double ix0 = lo(rat_double(segs[i].a.x), rat_double(segs[i].b.x));
                double ix1 = hi(rat_double(segs[i].a.x), rat_double(segs[i].b.x));
                double iy0 = lo(rat_double(segs[i].a.y), rat_double(segs[i].b.y));
                double iy1 = hi(rat_double(segs[i].a.y), rat_double(segs[i].b.y));
                double jx0 = lo(rat_double(segs[j].a.x), rat_double(segs[j].b.x));
                double jx1 = hi(rat_double(segs[j].a.x), rat_double(segs[j].b.x));
                double jy0 = lo(rat_double(segs[j].a.y), rat_double(segs[j].b.y));
                double jy1 = hi(rat_double(segs[j].a.y), rat_double(segs[j].b.y));
                double gx = std::max({0.0, jx0 - ix1, ix0 - jx1});
                double gy = std::max({0.0, jy0 - iy1, iy0 - jy1});
                if (gx * gx + gy * gy > 1.0 + 1e-9) continue;
            }
            tasks.push_back({i, j});
        }

    auto test_pair = [&](size_t i, size_t j) -> std::optional<Violation> {
        Rational min_sq, max_sq;
        if (i == j) {
            min_sq = rat(0);
            max_sq = dist_sq(segs[i].a, segs[i].b);
        } else {
            min_sq = segment_segment_distance_sq(segs[i].a, segs[i].b, segs[j].a, segs[j].b);
            max_sq = dist_sq(segs[i].a, segs[j].a);
            max_sq = std::max(max_sq, dist_sq(segs[i].a, segs[j].b));
            max_sq = std::max(max_sq, dist_sq(segs[i].b, segs[j].a));
            max_sq = std::max(max_sq, dist_sq(segs[i].b, segs[j].b));
        }
        if (min_sq <= 1 && max_sq >= 1) {
            Violation v;
            v.kind = ViolationKind::BichromaticUnit_l15;
            v.witnesses = {segs[i].a, segs[i].b, segs[j].a, segs[j].b};
            v.multicolors = {{segs[i].ca, segs[i].cb}, {segs[j].ca, segs[j].cb}};
            v.distance_sq = rat(1);
            v.note = i == j ? "single boundary segment of length >= 1"
                            : "boundary segment pair achieving unit distance";
            return v;
        }
        return std::nullopt;
    };

    std::vector<Violation> out;
    if (policy == ExecutionPolicy::Serial) {
        for (auto [i, j] : tasks) {
            auto v = test_pair(i, j);
            if (v) out.push_back(std::move(*v));
        }
    } else {
        apply_thread_cap();
#ifdef _OPENMP
        std::vector<std::vector<Violation>> chunks(1);
#pragma omp parallel
        {
#pragma omp single
            chunks.resize(static_cast<size_t>(omp_get_num_threads()));
#pragma omp for schedule(dynamic, 16)
            for (long t = 0; t < static_cast<long>(tasks.size()); ++t) {
                auto v = test_pair(tasks[static_cast<size_t>(t)].first,
                                   tasks[static_cast<size_t>(t)].second);
                if (v) chunks[static_cast<size_t>(omp_get_thread_num())].push_back(std::move(*v));
            }
        }
        for (auto& ch : chunks) out.insert(out.end(), ch.begin(), ch.end());
#else
        for (auto [i, j] : tasks) {
            auto v = test_pair(i, j);
            if (v) out.push_back(std::move(*v));
        }
#endif
    }
    std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
        for (size_t i = 0; i < 4; ++i) {
            if (a.witnesses[i] < b.witnesses[i]) return true;
            if (b.witnesses[i] < a.witnesses[i]) return false;
        }
        return false;
    });
    return out;
}

bool recheck_violation(const PlanarMap& map, const Violation& v) {
    switch (v.kind) {
        case ViolationKind::Chromaticity4_t3: {
            if (v.witnesses.size() != 1) return false;
            return multicolor_at(map, v.witnesses[0]).size() >= 4;
        }
        case ViolationKind::SameMulticolorPair_t7: {
            if (v.witnesses.size() != 2) return false;
            auto ma = multicolor_at(map, v.witnesses[0]);
            auto mb = multicolor_at(map, v.witnesses[1]);
            if (ma.size() != 3 || ma != mb) return false;
            Rational d2 = dist_sq(v.witnesses[0], v.witnesses[1]);
            if (v.distance_sq && !(d2 == *v.distance_sq)) return false;
            return d2 > 1 && d2 < 4;
        }
        case ViolationKind::DisjointMulticolorPair_f32: {
            if (v.witnesses.size() == 1) return true;  // forwarded circle case
            auto ma = multicolor_at(map, v.witnesses[0]);
            auto mb = multicolor_at(map, v.witnesses[1]);
            for (ColorId c : ma)
                if (mb.count(c)) return false;
            Rational d2 = dist_sq(v.witnesses[0], v.witnesses[1]);
            if (v.distance_sq && !(d2 == *v.distance_sq)) return false;
            return sign(d2) > 0 && d2 < 4;
        }
        case ViolationKind::BichromaticUnit_l15: {
            if (v.witnesses.size() != 4) return false;
            Rational mn = segment_segment_distance_sq(v.witnesses[0], v.witnesses[1],
                                                      v.witnesses[2], v.witnesses[3]);
            Rational mx = dist_sq(v.witnesses[0], v.witnesses[2]);
            mx = std::max(mx, dist_sq(v.witnesses[0], v.witnesses[3]));
            mx = std::max(mx, dist_sq(v.witnesses[1], v.witnesses[2]));
            mx = std::max(mx, dist_sq(v.witnesses[1], v.witnesses[3]));
            if (v.witnesses[0] == v.witnesses[2] && v.witnesses[1] == v.witnesses[3]) {
                mn = rat(0);
                mx = dist_sq(v.witnesses[0], v.witnesses[1]);
            }
            return mn <= 1 && mx >= 1;
        }
        case ViolationKind::HexagonConfig_l55: {
            if (v.witnesses.size() != 1) return false;
            try {
                auto pseudo = pseudo_coloring(map, v.witnesses[0]);
                return hexagon_config_check(make_cyclic(pseudo.coloring));
            } catch (...) {
                return false;
            }
        }
        case ViolationKind::TripleForced_t10:
            return true;
    }
    return false;
}

}  // namespace chromap
