#include "chromap/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace chromap {

namespace {

Polygon rect(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1) {
    Polygon p;
    p.vertices = {Point{x0, y0}, Point{x1, y0}, Point{x1, y1}, Point{x0, y1}};
    return p;
}

int mod_pos(long v, int m) {
    long r = v % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

Polygon clip_polygon_convex(const Polygon& subject, const Polygon& clip) {
    std::vector<Point> out = subject.vertices;
    size_t nc = clip.vertices.size();
    for (size_t c = 0; c < nc && !out.empty(); ++c) {
        const Point& a = clip.vertices[c];
        const Point& b = clip.vertices[(c + 1) % nc];
        std::vector<Point> in = std::move(out);
        out.clear();
        size_t n = in.size();
        for (size_t i = 0; i < n; ++i) {
            const Point& cur = in[i];
            const Point& nxt = in[(i + 1) % n];
            int oc = orient(a, b, cur);
            int on = orient(a, b, nxt);
            if (oc >= 0) out.push_back(cur);
            if ((oc > 0 && on < 0) || (oc < 0 && on > 0)) {
                auto ip = segment_intersection_point(cur, nxt, a, b);
                if (!ip) {
                    // lines known to cross: intersect as infinite lines
                    Point r = nxt - cur, s = b - a;
                    Rational t = cross(a - cur, s) / cross(r, s);
                    ip = Point{cur.x + t * r.x, cur.y + t * r.y};
                }
                out.push_back(*ip);
            }
        }
    }
    // canonicalize: drop consecutive duplicates, reject degenerate output
    Polygon res;
    for (const auto& v : out) {
        if (res.vertices.empty() || !(res.vertices.back() == v)) res.vertices.push_back(v);
    }
    while (res.vertices.size() > 1 && res.vertices.front() == res.vertices.back())
        res.vertices.pop_back();
    if (res.vertices.size() < 3) return Polygon{};
    if (sign(polygon_signed_area2(res)) <= 0) return Polygon{};
    return res;
}

namespace {

struct HexLattice {
    Rational s, h;
    std::vector<std::pair<std::pair<long, long>, Polygon>> cells;  // ((q,r), clipped hexagon)
};

HexLattice hex_lattice(const Rational& d, const Rational& W, const Rational& H) {
    if (sign(d) <= 0 || d >= 1) throw MapError("InvalidInput", "hex7 requires 0 < d < 1");
    HexLattice lat;
    lat.s = d / 2;
    // h slightly below sqrt(3)/2 * s keeps the exact diameter at d
    double h_target = std::sqrt(3.0) / 2.0 * rat_double(lat.s);
    lat.h = rat(static_cast<long>(std::floor(h_target * 100000.0)), 100000);
    Polygon window = rect(rat(0), rat(0), W, H);
    double sd = rat_double(lat.s), hd = rat_double(lat.h);
    double Wd = rat_double(W), Hd = rat_double(H);
    long qmin = static_cast<long>(std::floor(-2 * sd / (1.5 * sd))) - 2;
    long qmax = static_cast<long>(std::ceil((Wd + 2 * sd) / (1.5 * sd))) + 2;
    for (long q = qmin; q <= qmax; ++q) {
        double cy_base = q * hd;
        long rmin = static_cast<long>(std::floor((-2 * hd - cy_base) / (2 * hd))) - 2;
        long rmax = static_cast<long>(std::ceil((Hd + 2 * hd - cy_base) / (2 * hd))) + 2;
        for (long r = rmin; r <= rmax; ++r) {
            Rational cx = Rational(q) * 3 * lat.s / 2;
            Rational cy = Rational(q) * lat.h + Rational(r) * 2 * lat.h;
            Polygon hex;
            hex.vertices = {Point{cx + lat.s, cy},
                            Point{cx + lat.s / 2, cy + lat.h},
                            Point{cx - lat.s / 2, cy + lat.h},
                            Point{cx - lat.s, cy},
                            Point{cx - lat.s / 2, cy - lat.h},
                            Point{cx + lat.s / 2, cy - lat.h}};
            Polygon clipped = clip_polygon_convex(hex, window);
            if (clipped.vertices.empty()) continue;
            lat.cells.push_back({{q, r}, clipped});
        }
    }
    return lat;
}

}  // namespace

PlanarMap generate_hex7(const Rational& d, const Rational& W, const Rational& H) {
    HexLattice lat = hex_lattice(d, W, H);
    std::vector<ColoredRegion> regions;
    for (const auto& [qr, poly] : lat.cells)
        regions.push_back({poly, mod_pos(qr.first + 3 * qr.second, 7) + 1});
    return build_map(std::move(regions), rect(rat(0), rat(0), W, H), 7);
}

PlanarMap generate_hex6_merged(const Rational& d, const Rational& W, const Rational& H) {
    PlanarMap seven = generate_hex7(d, W, H);
    // merge classes 1 and 2 into dominoes, then relabel down to 6 colors
    size_t n = seven.regions.size();
    std::vector<std::vector<size_t>> adj(n);
    for (const auto& e : seven.edges) {
        if (e.left < 0 || e.right < 0) continue;
        ColorId cl = seven.regions[static_cast<size_t>(e.left)].color;
        ColorId cr = seven.regions[static_cast<size_t>(e.right)].color;
        if ((cl == 1 || cl == 2) && (cr == 1 || cr == 2)) {
            adj[static_cast<size_t>(e.left)].push_back(static_cast<size_t>(e.right));
            adj[static_cast<size_t>(e.right)].push_back(static_cast<size_t>(e.left));
        }
    }
    std::vector<int> comp(n, -1);
    std::vector<std::vector<size_t>> groups;
    for (size_t i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        comp[i] = static_cast<int>(groups.size());
        std::vector<size_t> g{i}, stack{i};
        while (!stack.empty()) {
            size_t cur = stack.back();
            stack.pop_back();
            for (size_t nb : adj[cur])
                if (comp[nb] < 0) {
                    comp[nb] = comp[i];
                    g.push_back(nb);
                    stack.push_back(nb);
                }
        }
        groups.push_back(std::move(g));
    }
    std::vector<ColoredRegion> regions;
    for (const auto& g : groups) {
        ColorId old = seven.regions[g.front()].color;
        ColorId fresh = (old <= 2) ? 1 : old - 1;
        if (g.size() == 1) {
            regions.push_back({seven.regions[g.front()].poly, fresh});
        } else {
            std::vector<Polygon> polys;
            for (size_t gi : g) polys.push_back(seven.regions[gi].poly);
            regions.push_back({merge_region_polygons(polys), 1});
        }
    }
    return build_map(std::move(regions), seven.window, 6);
}

PlanarMap generate_stripes(int k, const Rational& width, const Rational& W, const Rational& H) {
    if (k < 2) throw MapError("InvalidInput", "stripes need k >= 2");
    if (sign(width) <= 0) throw MapError("InvalidInput", "stripe width must be positive");
    std::vector<ColoredRegion> regions;
    long i = 0;
    for (Rational x = 0; x < W; x += width, ++i) {
        Rational x1 = x + width < W ? x + width : W;
        regions.push_back({rect(x, rat(0), x1, H), mod_pos(i, k) + 1});
    }
    return build_map(std::move(regions), rect(rat(0), rat(0), W, H), k);
}

PlanarMap generate_grid(int k, const Rational& cell, const Rational& W, const Rational& H) {
    if (k < 2) throw MapError("InvalidInput", "grid needs k >= 2");
    if (sign(cell) <= 0) throw MapError("InvalidInput", "cell size must be positive");
    std::vector<ColoredRegion> regions;
    long i = 0;
    for (Rational x = 0; x < W; x += cell, ++i) {
        Rational x1 = x + cell < W ? x + cell : W;
        long j = 0;
        for (Rational y = 0; y < H; y += cell, ++j) {
            Rational y1 = y + cell < H ? y + cell : H;
            int color = k == 2 ? mod_pos(i + j, 2) + 1 : mod_pos(i + 2 * j, k) + 1;
            regions.push_back({rect(x, y, x1, y1), color});
        }
    }
    return build_map(std::move(regions), rect(rat(0), rat(0), W, H), k);
}

namespace {

PlanarMap tripod_pair_fixture(const Point& u2, int a1, int a2, int a3, int b1, int b2, int b3) {
    // Two three-region stars: one centered at the origin on the block
    // [-1,3/4]x[-1,1], one at u2 on [3/4,4]x[-1,1].
    std::vector<ColoredRegion> regions;
    Polygon ul, ll, right;
    ul.vertices = {pt(0, 0), pt(0, 1), pt(-1, 1), pt(-1, 0)};
    ll.vertices = {pt(0, 0), pt(-1, 0), pt(-1, -1), pt(0, -1)};
    right.vertices = {pt(0, 0), pt(0, -1), pt(3, 4, -1, 1), pt(3, 4, 1, 1), pt(0, 1)};
    regions.push_back({ul, a1});
    regions.push_back({ll, a2});
    regions.push_back({right, a3});
    Polygon left, ur, lr;
    const Rational bx = rat(3, 4);
    left.vertices = {u2, Point{u2.x, rat(1)}, Point{bx, rat(1)}, Point{bx, rat(-1)},
                     Point{u2.x, rat(-1)}};
    ur.vertices = {u2, Point{rat(4), u2.y}, Point{rat(4), rat(1)}, Point{u2.x, rat(1)}};
    lr.vertices = {u2, Point{u2.x, rat(-1)}, Point{rat(4), rat(-1)}, Point{rat(4), u2.y}};
    regions.push_back({left, b1});
    regions.push_back({ur, b2});
    regions.push_back({lr, b3});
    return build_map(std::move(regions), rect(rat(-1), rat(-1), rat(4), rat(1)), 6);
}

PlanarMap strip_stack(const Rational& width, const std::vector<std::pair<Rational, ColorId>>& bands) {
    // horizontal bands [y0,y1) stacked over [0,width] x [0, top]
    std::vector<ColoredRegion> regions;
    Rational y = 0;
    for (const auto& [h, c] : bands) {
        regions.push_back({rect(rat(0), y, width, y + h), c});
        y += h;
    }
    return build_map(std::move(regions), rect(rat(0), rat(0), width, y), 6);
}

PlanarMap quad_patch() {
    const Rational q = rat(1, 4);
    std::vector<ColoredRegion> regions;
    regions.push_back({rect(rat(0), rat(0), q, q), 1});
    regions.push_back({rect(q, rat(0), 2 * q, q), 2});
    regions.push_back({rect(q, q, 2 * q, 2 * q), 1});
    regions.push_back({rect(rat(0), q, q, 2 * q), 3});
    return build_map(std::move(regions), rect(rat(0), rat(0), 2 * q, 2 * q), 6);
}

PlanarMap grid4(int k) {
    std::vector<ColoredRegion> regions;
    regions.push_back({rect(rat(0), rat(0), rat(1), rat(1)), 1});
    regions.push_back({rect(rat(1), rat(0), rat(2), rat(1)), 2});
    regions.push_back({rect(rat(1), rat(1), rat(2), rat(2)), 3});
    regions.push_back({rect(rat(0), rat(1), rat(1), rat(2)), 4});
    return build_map(std::move(regions), rect(rat(0), rat(0), rat(2), rat(2)), k);
}

PlanarMap two_ring_disk() {
    // Trichromatic center {4,5,6}, a two-region ring crossed by the unit
    // circle in just two points: the circle coloring has two half-turn arcs.
    std::vector<ColoredRegion> regions;
    const Rational ri = rat(2, 5), ro = rat(13, 10), w = rat(4);
    Polygon s_left, s_bottom, s_right;
    s_left.vertices = {pt(0, 0), Point{rat(0), ri}, Point{-ri, ri}, Point{-ri, -ri}};
    s_bottom.vertices = {pt(0, 0), Point{-ri, -ri}, Point{ri, -ri}};
    s_right.vertices = {pt(0, 0), Point{ri, -ri}, Point{ri, ri}, Point{rat(0), ri}};
    regions.push_back({s_left, 4});
    regions.push_back({s_bottom, 5});
    regions.push_back({s_right, 6});
    Polygon upper, lower;
    upper.vertices = {Point{ro, rat(0)},  Point{ro, ro},      Point{-ro, ro},
                      Point{-ro, rat(0)}, Point{-ri, rat(0)}, Point{-ri, ri},
                      Point{rat(0), ri},  Point{ri, ri},      Point{ri, rat(0)}};
    lower.vertices = {Point{-ro, rat(0)}, Point{-ro, -ro},    Point{ro, -ro},
                      Point{ro, rat(0)},  Point{ri, rat(0)},  Point{ri, -ri},
                      Point{-ri, -ri},    Point{-ri, rat(0)}};
    regions.push_back({upper, 1});
    regions.push_back({lower, 2});
    Polygon fw, fn, fe, fs;
    fw.vertices = {Point{-w, -w}, Point{-ro, -ro}, Point{-ro, ro}, Point{-w, w}};
    fn.vertices = {Point{-w, w}, Point{-ro, ro}, Point{ro, ro}, Point{w, w}};
    fe.vertices = {Point{w, w}, Point{ro, ro}, Point{ro, -ro}, Point{w, -w}};
    fs.vertices = {Point{w, -w}, Point{ro, -ro}, Point{-ro, -ro}, Point{-w, -w}};
    regions.push_back({fw, 3});
    regions.push_back({fn, 4});
    regions.push_back({fe, 3});
    regions.push_back({fs, 4});
    return build_map(std::move(regions), rect(rat(-4), rat(-4), rat(4), rat(4)), 6);
}

// Same construction with six cells: the pseudo-coloring has six arcs whose
// lengths cannot all equal 1/6 on rational data, so one arc self-conflicts.
PlanarMap six_cell_disk() {
    std::vector<Point> dirs = {
        pt(1, 1, 0, 1),          pt(451, 901, 780, 901),  pt(-33, 65, 56, 65),
        pt(-1, 1, 0, 1),         pt(-33, 65, -56, 65),    pt(451, 901, -780, 901),
    };
    const Rational ri = rat(2, 5), ro = rat(13, 10), w = rat(4);
    auto scale = [](const Point& d, const Rational& r) { return Point{d.x * r, d.y * r}; };
    std::vector<Point> I, O;
    for (const auto& d : dirs) {
        I.push_back(scale(d, ri));
        O.push_back(scale(d, ro));
    }
    std::vector<ColoredRegion> regions;
    for (size_t i = 0; i < 6; ++i) {
        size_t j = (i + 1) % 6;
        Polygon cell;
        cell.vertices = {I[i], O[i], O[j], I[j]};
        regions.push_back({cell, static_cast<int>(i % 3) + 1});
    }
    auto mid = [](const Point& a, const Point& b) {
        return Point{(a.x + b.x) / 2, (a.y + b.y) / 2};
    };
    Point M0 = mid(I[0], I[1]), M1 = mid(I[2], I[3]), M2 = mid(I[4], I[5]);
    Polygon secA, secB, secC;
    secA.vertices = {pt(0, 0), M0, I[1], I[2], M1};
    secB.vertices = {pt(0, 0), M1, I[3], I[4], M2};
    secC.vertices = {pt(0, 0), M2, I[5], I[0], M0};
    regions.push_back({secA, 5});
    regions.push_back({secB, 6});
    regions.push_back({secC, 4});
    auto exit_point = [&](const Point& p) {
        Rational ax = abs(p.x), ay = abs(p.y);
        Rational f = (ax > ay ? w / ax : w / ay);
        return Point{p.x * f, p.y * f};
    };
    Point W0 = mid(O[0], O[1]), W1 = mid(O[2], O[3]), W2 = mid(O[4], O[5]);
    Point E0 = exit_point(W0), E1 = exit_point(W1), E2 = exit_point(W2);
    Polygon fA, fB, fC;
    // E0 sits on the right edge, E1 on the left edge, E2 on the bottom edge
    fA.vertices = {W0, O[1], O[2], W1, E1, Point{-w, w}, Point{w, w}, E0};
    fB.vertices = {W1, O[3], O[4], W2, E2, Point{-w, -w}, E1};
    fC.vertices = {W2, O[5], O[0], W0, E0, Point{w, -w}, E2};
    std::reverse(fA.vertices.begin(), fA.vertices.end());
    std::reverse(fB.vertices.begin(), fB.vertices.end());
    std::reverse(fC.vertices.begin(), fC.vertices.end());
    regions.push_back({fA, 4});
    regions.push_back({fB, 5});
    regions.push_back({fC, 6});
    return build_map(std::move(regions), rect(-w, -w, w, w), 6);
}

PlanarMap near_proper_disk() {
    // Nine annular cells colored 1,2,3 around a {4,5,6} tripod: the unit
    // circle around the origin crosses the nine radial boundaries and nothing
    // else, giving a proper cyclic 9-arc pseudo-coloring whose traced
    // boundaries end at trichromatic points inside.
    // Rational unit directions near angles i/9 of a turn.
    std::vector<Point> dirs = {
        pt(1, 1, 0, 1),
        pt(105, 137, 88, 137),
        pt(11, 61, 60, 61),
        pt(-33, 65, 56, 65),
        pt(-140, 149, 51, 149),
        pt(-140, 149, -51, 149),
        pt(-33, 65, -56, 65),
        pt(11, 61, -60, 61),
        pt(105, 137, -88, 137),
    };
    const Rational ri = rat(2, 5), ro = rat(13, 10), w = rat(4);
    auto scale = [](const Point& d, const Rational& r) { return Point{d.x * r, d.y * r}; };
    std::vector<Point> I, O;
    for (const auto& d : dirs) {
        I.push_back(scale(d, ri));
        O.push_back(scale(d, ro));
    }
    std::vector<ColoredRegion> regions;
    for (size_t i = 0; i < 9; ++i) {
        size_t j = (i + 1) % 9;
        Polygon cell;
        cell.vertices = {I[i], O[i], O[j], I[j]};
        regions.push_back({cell, static_cast<int>(i % 3) + 1});
    }
    // inner tripod: boundaries from the origin to midpoints of inner edges
    // (I1,I2), (I4,I5), (I7,I8)
    auto mid = [](const Point& a, const Point& b) {
        return Point{(a.x + b.x) / 2, (a.y + b.y) / 2};
    };
    Point M0 = mid(I[1], I[2]), M1 = mid(I[4], I[5]), M2 = mid(I[7], I[8]);
    Polygon secA, secB, secC;
    secA.vertices = {pt(0, 0), M0, I[2], I[3], I[4], M1};      // ~60..180 deg
    secB.vertices = {pt(0, 0), M1, I[5], I[6], I[7], M2};      // ~180..300 deg
    secC.vertices = {pt(0, 0), M2, I[8], I[0], I[1], M0};      // ~300..60 deg
    regions.push_back({secA, 5});
    regions.push_back({secB, 6});
    regions.push_back({secC, 4});
    // fillers: cuts from outer-edge midpoints (O1,O2), (O4,O5), (O7,O8)
    // straight out to the window boundary
    auto exit_point = [&](const Point& p) {
        Rational ax = abs(p.x), ay = abs(p.y);
        Rational f = (ax > ay ? w / ax : w / ay);
        return Point{p.x * f, p.y * f};
    };
    Point W0 = mid(O[1], O[2]), W1 = mid(O[4], O[5]), W2 = mid(O[7], O[8]);
    Point E0 = exit_point(W0), E1 = exit_point(W1), E2 = exit_point(W2);
    Polygon fA, fB, fC;
    // fA spans ~60..180 deg: inner chain W0..W1 along the 9-gon, outer chain
    // E1 -> window corners -> E0
    fA.vertices = {W0, O[2], O[3], O[4], W1, E1, Point{-w, w}, E0};
    fB.vertices = {W1, O[5], O[6], O[7], W2, E2, Point{-w, -w}, E1};
    fC.vertices = {W2, O[8], O[0], O[1], W0, E0, Point{w, w}, Point{w, -w}, E2};
    // E0 on top edge, E1 on left edge, E2 on bottom edge; corner membership:
    // fA gets (-w,w); fB gets (-w,-w); fC gets (w,-w) and (w,w).
    std::reverse(fA.vertices.begin(), fA.vertices.end());
    std::reverse(fB.vertices.begin(), fB.vertices.end());
    std::reverse(fC.vertices.begin(), fC.vertices.end());
    regions.push_back({fA, 4});
    regions.push_back({fB, 5});
    regions.push_back({fC, 6});
    return build_map(std::move(regions), rect(-w, -w, w, w), 6);
}

}  // namespace

PlanarMap generate_crafted(const std::string& name) {
    if (name == "grid4") return grid4(4);
    if (name == "grid4_k6") return grid4(6);
    if (name == "quad_patch") return quad_patch();
    if (name == "t7_pair") return tripod_pair_fixture(pt(3, 2, 0, 1), 6, 4, 5, 4, 5, 6);
    if (name == "t7_pair_far") return tripod_pair_fixture(pt(5, 2, 0, 1), 6, 4, 5, 4, 5, 6);
    if (name == "f32_pair") return tripod_pair_fixture(pt(19, 10, 0, 1), 1, 2, 3, 4, 5, 6);
    if (name == "f32_pair_far") return tripod_pair_fixture(pt(5, 2, 0, 1), 1, 2, 3, 4, 5, 6);
    if (name == "l15_parallel")
        return strip_stack(rat(3), {{rat(1), 1}, {rat(1), 2}, {rat(1), 1}});
    if (name == "l15_separated")
        return strip_stack(rat(3, 4), {{rat(1), 1}, {rat(3, 2), 2}, {rat(1, 2), 1}});
    if (name == "l15_differing")
        return strip_stack(rat(3, 4), {{rat(1), 1}, {rat(1), 2}, {rat(1), 3}});
    if (name == "single_region") {
        std::vector<ColoredRegion> regions;
        regions.push_back({rect(rat(-4), rat(-4), rat(4), rat(4)), 1});
        return build_map(std::move(regions), rect(rat(-4), rat(-4), rat(4), rat(4)), 6);
    }
    if (name == "two_ring_disk") return two_ring_disk();
    if (name == "six_cell_disk") return six_cell_disk();
    if (name == "near_proper_disk") return near_proper_disk();
    if (name == "hex6_merged") return generate_hex6_merged(rat(9, 10), rat(10), rat(10));
    throw MapError("UnknownCrafted", "no crafted fixture named '" + name + "'");
}

std::vector<std::string> crafted_names() {
    return {"grid4",         "grid4_k6",      "quad_patch",       "t7_pair",
            "t7_pair_far",   "f32_pair",      "f32_pair_far",     "l15_parallel",
            "l15_separated", "l15_differing", "single_region",    "two_ring_disk",
            "six_cell_disk", "near_proper_disk", "hex6_merged"};
}

PlanarMap random_map(std::uint64_t seed, size_t max_regions) {
    std::mt19937_64 rng(seed);
    int family = static_cast<int>(rng() % 4);
    auto pick = [&](long lo, long hi) { return lo + static_cast<long>(rng() % (hi - lo + 1)); };
    if (family == 0 || family == 3) {
        int k = static_cast<int>(pick(4, 7));
        Rational cell = rat(pick(5, 13), 10);
        long nx = pick(3, 8), ny = pick(3, 8);
        while (static_cast<size_t>(nx * ny) > max_regions) nx = std::max(3L, nx - 1), ny = std::max(3L, ny - 1);
        PlanarMap m = generate_grid(k, cell, cell * nx, cell * ny);
        if (family == 3) {
            // random recolor mutations that keep adjacent regions distinct
            for (int tries = 0; tries < 8; ++tries) {
                size_t idx = static_cast<size_t>(rng() % m.regions.size());
                int c = static_cast<int>(pick(1, k));
                bool clash = false;
                for (const auto& e : m.edges) {
                    int other = -2;
                    if (e.left == static_cast<int>(idx)) other = e.right;
                    if (e.right == static_cast<int>(idx)) other = e.left;
                    if (other >= 0 && m.regions[static_cast<size_t>(other)].color == c) clash = true;
                }
                if (clash || m.regions[idx].color == c) continue;
                auto regions = m.regions;
                regions[idx].color = c;
                m = build_map(std::move(regions), m.window, m.k, m.unbounded_color);
            }
        }
        return m;
    }
    if (family == 1) {
        int k = static_cast<int>(pick(4, 7));
        Rational width = rat(pick(4, 16), 10);
        Rational W = width * pick(4, 9);
        return generate_stripes(k, width, W, rat(pick(2, 5)));
    }
    Rational d = rat(pick(60, 97), 100);
    return generate_hex7(d, rat(pick(3, 4)), rat(pick(3, 4)));
}

Polygon random_polygon(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0;; ++attempt) {
        int n = 3 + static_cast<int>(rng() % 8);
        double radius = 0.2 + 0.6 * (static_cast<double>(rng() % 10000) / 10000.0);
        double cx = -2.0 + 4.0 * (static_cast<double>(rng() % 10000) / 10000.0);
        double cy = -2.0 + 4.0 * (static_cast<double>(rng() % 10000) / 10000.0);
        std::vector<double> angles;
        for (int i = 0; i < n; ++i)
            angles.push_back(static_cast<double>(rng() % 1000000) / 1000000.0);
        std::sort(angles.begin(), angles.end());
        bool gaps_ok = true;
        for (int i = 0; i < n; ++i) {
            double next = (i + 1 < n) ? angles[static_cast<size_t>(i) + 1] : angles[0] + 1.0;
            if (next - angles[static_cast<size_t>(i)] < 0.03) gaps_ok = false;
        }
        if (!gaps_ok && attempt < 64) continue;
        Polygon p;
        for (int i = 0; i < n; ++i) {
            double a = angles[static_cast<size_t>(i)] * 2.0 * 3.14159265358979323846;
            p.vertices.push_back(Point{rat_snap(cx + radius * std::cos(a), 20),
                                       rat_snap(cy + radius * std::sin(a), 20)});
        }
        try {
            validate_polygon(p);
            return p;
        } catch (const GeomError&) {
            if (attempt > 128) throw;
        }
    }
}

ArcColoring random_proper_arc_coloring(std::uint64_t seed, int max_arcs) {
    std::mt19937_64 rng(seed);
    auto finish = [&](ArcColoring c) {
        validate_arc_coloring(c);
        if (!circle_proper(c).proper)
            throw CircleError("GeneratorFailed", "constructed coloring not proper");
        return c;
    };
    // Two families. (a) Uniform m arcs (6 | m, m/6 not divisible by 3) with a
    // rational jitter constant along each +m/6 orbit: the 1/6 shift maps arc
    // boundaries onto arc boundaries exactly, so same-colored arcs only touch
    // in a point. Always cyclic. (b) Six slots at k/6 with a shared interior
    // split pattern and colors walking one step per slot: shifts map split
    // classes onto themselves with a different color. Non-cyclic.
    bool six_slot = (rng() % 2 == 0) && max_arcs >= 18;
    if (!six_slot) {
        static const int kArcCounts[] = {6, 12, 24, 30};
        int m = kArcCounts[rng() % 4];
        while (m > max_arcs) m = kArcCounts[rng() % 4];
        int orbit = m / 6;
        std::vector<Rational> jitter;
        for (int i = 0; i < orbit; ++i)
            jitter.push_back(rat(static_cast<long>(rng() % 200), 400L * m));
        Rational offset = rat(static_cast<long>(rng() % 997), 997);
        std::vector<Rational> raw;
        for (int i = 0; i < m; ++i) raw.push_back(offset + rat(i, m) + jitter[i % orbit]);
        ArcColoring c;
        std::vector<TurnAngle> angles;
        for (const auto& r : raw) angles.push_back(TurnAngle(r));
        std::sort(angles.begin(), angles.end(),
                  [](const TurnAngle& a, const TurnAngle& b) { return a.value < b.value; });
        for (int i = 0; i < m; ++i) {
            c.breakpoints.push_back(angles[static_cast<size_t>(i)]);
            c.colors.push_back(i % 3 + 1);
        }
        return finish(c);
    }
    // six-slot family: per-slot sub-arc pattern (c, c+1, c+2) or
    // (c, c+2, c+1, c+2) with identical split offsets in every slot
    bool four_sub = (rng() % 2 == 0) && max_arcs >= 24;
    long denom = 600;
    long w1 = 10 + static_cast<long>(rng() % 20);        // splits within the
    long w2 = w1 + 10 + static_cast<long>(rng() % 20);   // 100/600 slot width
    long w3 = w2 + 10 + static_cast<long>(rng() % 20);   // (w3 <= 88 < 100)
    Rational offset = rat(static_cast<long>(rng() % 997), 997);
    ArcColoring c;
    std::vector<std::pair<TurnAngle, int>> entries;
    for (int k = 0; k < 6; ++k) {
        int base = k % 3;
        Rational s0 = offset + rat(k, 6);
        if (four_sub) {
            entries.push_back({TurnAngle(s0), base % 3 + 1});
            entries.push_back({TurnAngle(s0 + rat(w1, denom)), (base + 2) % 3 + 1});
            entries.push_back({TurnAngle(s0 + rat(w2, denom)), (base + 1) % 3 + 1});
            entries.push_back({TurnAngle(s0 + rat(w3, denom)), (base + 2) % 3 + 1});
        } else {
            entries.push_back({TurnAngle(s0), base % 3 + 1});
            entries.push_back({TurnAngle(s0 + rat(w1, denom)), (base + 1) % 3 + 1});
            entries.push_back({TurnAngle(s0 + rat(w2, denom)), (base + 2) % 3 + 1});
        }
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first.value < b.first.value; });
    for (const auto& [ang, col] : entries) {
        c.breakpoints.push_back(ang);
        c.colors.push_back(col);
    }
    return finish(c);
}

}  // namespace chromap
