#include "chromap/curves.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace chromap {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double vnorm(const Vec2& a) { return std::hypot(a.x, a.y); }
Vec2 vsub(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }

int piece_at(const TriColoredCurve& c, size_t idx) {
    size_t piece = 0;
    while (piece < c.breakpoints.size() && idx >= c.breakpoints[piece]) ++piece;
    return c.piece_colors[piece];
}

// Colors present at a grid index: two when the index is a breakpoint.
std::vector<int> colors_at(const TriColoredCurve& c, size_t idx) {
    for (size_t b = 0; b < c.breakpoints.size(); ++b) {
        if (c.breakpoints[b] == idx) return {c.piece_colors[b], c.piece_colors[b + 1]};
    }
    return {piece_at(c, idx)};
}

}  // namespace

void validate_curve(const TriColoredCurve& c) {
    if (c.points.size() < 2) throw CurveError("InvalidCurve", "needs at least 2 points");
    if (c.piece_colors.size() != c.breakpoints.size() + 1)
        throw CurveError("InvalidCurve", "piece/breakpoint count mismatch");
    for (int col : c.piece_colors)
        if (col < 1 || col > 3) throw CurveError("InvalidCurve", "color outside {1,2,3}");
    size_t prev = 0;
    for (size_t b : c.breakpoints) {
        if (b == 0 || b >= c.points.size() - 1)
            throw CurveError("BichromaticEndpoint", "endpoint lies on a color transition");
        if (b <= prev)
            throw CurveError("InvalidCurve", "breakpoints not strictly increasing");
        prev = b;
    }
    for (size_t i = 0; i + 1 < c.piece_colors.size(); ++i)
        if (c.piece_colors[i] == c.piece_colors[i + 1])
            throw CurveError("InvalidCurve", "consecutive pieces share color");
}

void validate_pair(const ComplementaryPair& p, double unit_tol) {
    validate_curve(p.gamma1);
    validate_curve(p.gamma2);
    if (p.gamma1.points.size() != p.gamma2.points.size())
        throw CurveError("InvalidPair", "parameter grids differ");
    for (size_t k = 0; k < p.gamma1.points.size(); ++k) {
        double d = vnorm(vsub(p.gamma1.points[k], p.gamma2.points[k]));
        if (std::abs(d - 1.0) > unit_tol)
            throw CurveError("InvalidPair", "offset not unit length at grid point " + std::to_string(k));
        // Monochromatic points must differ in color; synchronized bichromatic
        // points must differ in their color pair (equal pairs at distance 1
        // are the l1.5-forbidden configuration and would break the index
        // walk at a multiple of 3).
        auto c1 = colors_at(p.gamma1, k);
        auto c2 = colors_at(p.gamma2, k);
        if (c1.size() == c2.size() && c1 == c2)
            throw CurveError("InvalidPair",
                             "colors coincide at grid point " + std::to_string(k));
    }
}

double h_delta(double alpha, double delta) {
    double s = delta * std::sin(alpha);
    return delta * std::cos(alpha) + std::sqrt(1.0 - s * s);
}

double second_largest_angle(const TurnAngle& ray_dir, const TurnAngle& a45,
                            const TurnAngle& a46, const TurnAngle& a56) {
    Rational d1 = circ_dist(ray_dir, a45);
    Rational d2 = circ_dist(ray_dir, a46);
    Rational d3 = circ_dist(ray_dir, a56);
    std::vector<Rational> ds{d1, d2, d3};
    std::sort(ds.begin(), ds.end());
    return rat_double(ds[1]) * kTwoPi;
}

namespace {

double circ_dist_d(double a, double b) {
    double d = std::abs(a - b);
    d -= std::floor(d);
    return d > 0.5 ? 1.0 - d : d;
}

// second largest circular distance (turns) from direction v to the three dirs
double second_largest_d(double v, const double dirs[3]) {
    double ds[3] = {circ_dist_d(v, dirs[0]), circ_dist_d(v, dirs[1]), circ_dist_d(v, dirs[2])};
    std::sort(ds, ds + 3);
    return ds[1];
}

struct TaggedInterval {
    AngleInterval iv;
    bool inner;
};

}  // namespace

AnnulusSectors annulus_sectors(const Point& u, const std::vector<DeltaSample>& samples,
                               double eta) {
    if (eta <= 0) throw CurveError("InvalidEta", "eta must be positive");
    {
        std::vector<double> deltas;
        for (const auto& s : samples) deltas.push_back(s.delta);
        std::sort(deltas.begin(), deltas.end());
        deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
        if (deltas.size() < 2)
            throw CurveError("InvalidSamples", "need samples at two or more distinct deltas");
        if (deltas.front() <= 0 || deltas.back() >= 1)
            throw CurveError("InvalidSamples", "delta must lie in (0,1)");
    }

    AnnulusSectors out;
    out.center = u;
    out.eta = eta;
    for (const auto& s : samples) {
        // h_delta(alpha) crosses 1 exactly at alpha* = arccos(delta/2).
        double alpha_star = std::acos(s.delta / 2.0);
        double tstar = alpha_star / kTwoPi;
        double dirs[3] = {rat_double(s.a45.value), rat_double(s.a46.value),
                          rat_double(s.a56.value)};
        std::vector<double> cuts;
        for (double d : dirs) {
            for (double c : {d - tstar, d + tstar}) {
                c -= std::floor(c);
                cuts.push_back(c);
            }
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        size_t n = cuts.size();
        for (size_t i = 0; i < n; ++i) {
            double lo = cuts[i];
            double hi = (i + 1 < n) ? cuts[i + 1] : cuts[0] + 1.0;
            if (hi <= lo) continue;
            double g = second_largest_d((lo + hi) / 2.0, dirs);
            AngleInterval iv{lo, hi};
            if (g > tstar)
                out.inner.push_back(iv);  // h_delta < 1 in this direction
            else if (g < tstar)
                out.outer.push_back(iv);
        }
    }

    // Cover check: the union of the open intervals must be the full circle.
    std::vector<AngleInterval> all;
    all.insert(all.end(), out.inner.begin(), out.inner.end());
    all.insert(all.end(), out.outer.begin(), out.outer.end());
    auto covered = [&](double g) {
        for (const auto& iv : all) {
            for (double t : {g, g + 1.0}) {
                if (iv.lo < t && t < iv.hi) return true;
            }
        }
        return false;
    };
    for (const auto& iv : all) {
        for (double e : {iv.lo, iv.hi}) {
            double g = e - std::floor(e);
            if (!covered(g)) {
                std::ostringstream os;
                os << "direction " << g << " (turns) not interior to any sector";
                throw CurveError("CoverGap", os.str());
            }
        }
    }
    if (all.empty()) throw CurveError("CoverGap", "no sectors");
    return out;
}

namespace {

void emit_arc(std::vector<Vec2>& pts, double r, double from_turn, double to_turn,
              double max_step_turn) {
    int steps = std::max(1, static_cast<int>(std::ceil((to_turn - from_turn) / max_step_turn)));
    for (int s = 1; s <= steps; ++s) {
        double t = from_turn + (to_turn - from_turn) * s / steps;
        pts.push_back({r * std::cos(t * kTwoPi), r * std::sin(t * kTwoPi)});
    }
}

// Transition ramp: radius interpolates linearly in angle, so each sub-segment
// keeps the constant inclination to the tangent while hugging the annulus.
void emit_ramp(std::vector<Vec2>& pts, double r_from, double r_to, double from_turn,
               double to_turn, double max_step_turn) {
    int steps = std::max(1, static_cast<int>(std::ceil((to_turn - from_turn) / max_step_turn)));
    for (int s = 1; s <= steps; ++s) {
        double f = static_cast<double>(s) / steps;
        double t = from_turn + (to_turn - from_turn) * f;
        double r = r_from + (r_to - r_from) * f;
        pts.push_back({r * std::cos(t * kTwoPi), r * std::sin(t * kTwoPi)});
    }
}

}  // namespace

AnnulusCurve build_annulus_curve(const AnnulusSectors& sectors, double theta) {
    double eta = sectors.eta;
    if (!(theta > 0 && theta < eta))
        throw CurveError("InvalidTheta", "theta must satisfy 0 < theta < eta");
    // The two radii may sit anywhere in (1-eta,1) and (1,1+eta); the joining
    // segment climbs their gap at inclination theta, so the gap is chosen
    // small enough for the segment to fit inside the sector overlaps.
    double r_in = 1.0 - eta / 2.0;
    double r_out = 1.0 + eta / 2.0;

    std::vector<TaggedInterval> ivs;
    for (const auto& iv : sectors.inner) ivs.push_back({iv, true});
    for (const auto& iv : sectors.outer) ivs.push_back({iv, false});
    if (ivs.empty()) throw CurveError("SectorsTooNarrow", "no sectors");

    double max_step = std::min(theta / kTwoPi, 1.0 / 512.0);
    std::vector<Vec2> pts;

    // Full-circle shortcut: one sector already covers everything.
    for (const auto& ti : ivs) {
        if (ti.iv.hi - ti.iv.lo >= 1.0) {
            double r = ti.inner ? r_in : r_out;
            pts.push_back({r, 0});
            emit_arc(pts, r, 0.0, 1.0, max_step);
            pts.pop_back();  // closing point duplicates the first
            TriColoredCurve c{pts, {}, {1}, true};
            AnnulusCurve out{c, {}};
            out.certificate.winding =
                polyline_winding_number(pts, {rat_double(sectors.center.x), rat_double(sectors.center.y)});
            for (const auto& p : pts)
                out.certificate.max_circle_deviation = std::max(
                    out.certificate.max_circle_deviation, std::abs(std::hypot(p.x, p.y) - 1.0));
            out.certificate.max_tangent_deviation = max_step * kTwoPi / 2.0;
            return out;
        }
    }

    // Greedy circular cover by open intervals.
    std::sort(ivs.begin(), ivs.end(),
              [](const TaggedInterval& a, const TaggedInterval& b) { return a.iv.lo < b.iv.lo; });
    std::vector<size_t> chain;
    double start = ivs[0].iv.lo;
    double reach = ivs[0].iv.hi;
    chain.push_back(0);
    size_t guard = 0;
    while (reach < start + 1.0) {
        if (++guard > 4 * ivs.size() + 8)
            throw CurveError("SectorsTooNarrow", "cover chain does not close");
        double best_hi = reach;
        long best = -1;
        for (size_t i = 0; i < ivs.size(); ++i) {
            for (double shift : {0.0, 1.0}) {
                double lo = ivs[i].iv.lo + shift, hi = ivs[i].iv.hi + shift;
                if (lo < reach && hi > best_hi) {
                    best_hi = hi;
                    best = static_cast<long>(i);
                }
            }
        }
        if (best < 0) throw CurveError("SectorsTooNarrow", "uncoverable gap in sectors");
        chain.push_back(static_cast<size_t>(best));
        reach = best_hi;
    }

    // Collapse neighbours from the same family and drop redundant entries.
    struct Leg {
        double lo, hi;
        bool inner;
    };
    std::vector<Leg> legs;
    double cursor = start;
    for (size_t k = 0; k < chain.size(); ++k) {
        const auto& ti = ivs[chain[k]];
        double lo = ti.iv.lo, hi = ti.iv.hi;
        while (hi < cursor) {
            lo += 1.0;
            hi += 1.0;
        }
        if (!legs.empty() && legs.back().inner == ti.inner) {
            legs.back().hi = std::max(legs.back().hi, hi);
        } else {
            legs.push_back({lo, hi, ti.inner});
        }
        cursor = std::max(cursor, lo);
    }
    if (legs.size() == 1) {
        // one family ended up covering everything: plain circle at its radius
        double r = legs[0].inner ? r_in : r_out;
        pts.push_back({r, 0});
        emit_arc(pts, r, 0.0, 1.0, max_step);
        pts.pop_back();
    } else {
        size_t L = legs.size();
        double min_overlap = 1.0;
        for (size_t k = 0; k < L; ++k) {
            double olo = (k + 1 < L) ? legs[k + 1].lo : legs[0].lo + 1.0;
            double ohi = legs[k].hi;
            if (ohi - olo <= 1e-12)
                throw CurveError("SectorsTooNarrow", "consecutive sectors barely touch");
            min_overlap = std::min(min_overlap, ohi - olo);
        }
        // gap between the two radii such that the inclined segment spans at
        // most half the narrowest overlap
        double gap = std::min(eta / 2.0, std::tan(theta) * (min_overlap / 2.0) * kTwoPi);
        r_in = 1.0 - gap / 2.0;
        r_out = 1.0 + gap / 2.0;
        double dphi = (gap / std::tan(theta)) / kTwoPi;  // turns
        std::vector<double> trans_mid(L);
        for (size_t k = 0; k < L; ++k) {
            double olo = (k + 1 < L) ? legs[k + 1].lo : legs[0].lo + 1.0;
            double ohi = legs[k].hi;
            if (ohi - olo <= dphi)
                throw CurveError("SectorsTooNarrow", "overlap too narrow for the joining segment");
            trans_mid[k] = (olo + ohi) / 2.0;
        }
        for (size_t k = 0; k < L; ++k) {
            double a0 = (k == 0 ? trans_mid[L - 1] - 1.0 : trans_mid[k - 1]) + dphi / 2.0;
            double a1 = trans_mid[k] - dphi / 2.0;
            double r = legs[k].inner ? r_in : r_out;
            pts.push_back({r * std::cos(a0 * kTwoPi), r * std::sin(a0 * kTwoPi)});
            if (a1 > a0) emit_arc(pts, r, a0, a1, max_step);
            // the jump to the next leg's first point is the inclined segment
        }
    }

    TriColoredCurve c{pts, {}, {1}, true};
    AnnulusCurve out{c, {}};
    Vec2 u{rat_double(sectors.center.x), rat_double(sectors.center.y)};
    // points were built around the origin; shift to the actual center
    for (auto& p : out.curve.points) {
        p.x += u.x;
        p.y += u.y;
    }
    out.certificate.winding = polyline_winding_number(out.curve.points, u);
    for (const auto& p : out.curve.points)
        out.certificate.max_circle_deviation =
            std::max(out.certificate.max_circle_deviation,
                     std::abs(std::hypot(p.x - u.x, p.y - u.y) - 1.0));
    size_t n = out.curve.points.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = out.curve.points[i];
        const Vec2& b = out.curve.points[(i + 1) % n];
        Vec2 mid{(a.x + b.x) / 2 - u.x, (a.y + b.y) / 2 - u.y};
        Vec2 d{b.x - a.x, b.y - a.y};
        double cr = mid.x * d.y - mid.y * d.x;
        double dt = mid.x * d.x + mid.y * d.y;
        double ang = std::atan2(std::abs(cr), dt);  // in [0, pi]
        out.certificate.max_tangent_deviation =
            std::max(out.certificate.max_tangent_deviation, std::abs(ang - std::numbers::pi / 2));
    }
    return out;
}

CrossingReport count_circle_crossings(const TriColoredCurve& curve, const Vec2& v) {
    if (!curve.closed) throw CurveError("InvalidCurve", "crossing count needs a closed curve");
    const auto& pts = curve.points;
    size_t n = pts.size();
    std::vector<double> f(n);
    for (size_t i = 0; i < n; ++i) {
        double dx = pts[i].x - v.x, dy = pts[i].y - v.y;
        f[i] = dx * dx + dy * dy - 1.0;
        if (f[i] == 0.0)
            throw CurveError("TangentialContact", "polyline vertex exactly on the circle");
    }
    CrossingReport out;
    for (size_t i = 0; i < n; ++i) {
        size_t j = (i + 1) % n;
        if ((f[i] > 0) != (f[j] > 0)) {
            ++out.count;
            // solve |p(t)-v|^2 = 1 on the segment
            double ax = pts[i].x - v.x, ay = pts[i].y - v.y;
            double bx = pts[j].x - pts[i].x, by = pts[j].y - pts[i].y;
            double A = bx * bx + by * by;
            double B = 2 * (ax * bx + ay * by);
            double C = ax * ax + ay * ay - 1.0;
            double disc = std::max(0.0, B * B - 4 * A * C);
            double t = (-B + (f[i] < 0 ? 1 : -1) * std::sqrt(disc)) / (2 * A);
            t = std::clamp(t, 0.0, 1.0);
            out.locations.push_back({pts[i].x + t * bx, pts[i].y + t * by});
        }
    }
    return out;
}

namespace {

int transition_sign(int from, int to) {
    return (to == from % 3 + 1) ? 1 : -1;
}

}  // namespace

int curve_index(const TriColoredCurve& c) {
    validate_curve(c);
    int ind = 0;
    for (size_t i = 0; i + 1 < c.piece_colors.size(); ++i)
        ind += transition_sign(c.piece_colors[i], c.piece_colors[i + 1]);
    return ind;
}

TriColoredCurve reverse_curve(const TriColoredCurve& c) {
    TriColoredCurve out;
    out.points.assign(c.points.rbegin(), c.points.rend());
    out.piece_colors.assign(c.piece_colors.rbegin(), c.piece_colors.rend());
    size_t last = c.points.size() - 1;
    for (auto it = c.breakpoints.rbegin(); it != c.breakpoints.rend(); ++it)
        out.breakpoints.push_back(last - *it);
    out.closed = c.closed;
    return out;
}

IndexDifference index_difference_bound(const ComplementaryPair& pair) {
    validate_pair(pair);
    IndexDifference out;
    out.ind1 = curve_index(pair.gamma1);
    out.ind2 = curve_index(pair.gamma2);
    out.difference = std::abs(out.ind1 - out.ind2);
    if (out.difference > 1) {
        // Walk F = f1 - f2 over the merged transition sequence; a multiple of 3
        // pins the grid point where the pair's color-difference invariant broke.
        struct Ev {
            size_t idx;
            int which;
        };
        std::vector<Ev> evs;
        for (size_t b : pair.gamma1.breakpoints) evs.push_back({b, 1});
        for (size_t b : pair.gamma2.breakpoints) evs.push_back({b, 2});
        std::sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) {
            return a.idx < b.idx || (a.idx == b.idx && a.which < b.which);
        });
        int f1 = pair.gamma1.piece_colors[0] - 1;
        int f2 = pair.gamma2.piece_colors[0] - 1;
        size_t p1 = 0, p2 = 0;
        for (const auto& e : evs) {
            if (e.which == 1) {
                f1 += transition_sign(pair.gamma1.piece_colors[p1], pair.gamma1.piece_colors[p1 + 1]);
                ++p1;
            } else {
                f2 += transition_sign(pair.gamma2.piece_colors[p2], pair.gamma2.piece_colors[p2 + 1]);
                ++p2;
            }
            if ((f1 - f2) % 3 == 0) {
                std::ostringstream os;
                os << "F(t) divisible by 3 after transition at grid index " << e.idx
                   << ": curves share a color there";
                out.diagnostic = os.str();
                break;
            }
        }
        if (out.diagnostic.empty()) out.diagnostic = "difference exceeds 1";
    }
    return out;
}

int polyline_winding_number(const std::vector<Vec2>& pts, const Vec2& p) {
    int wn = 0;
    size_t n = pts.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = pts[i];
        const Vec2& b = pts[(i + 1) % n];
        double is_left = (b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y);
        if (a.y <= p.y) {
            if (b.y > p.y && is_left > 0) ++wn;
        } else {
            if (b.y <= p.y && is_left < 0) --wn;
        }
    }
    return wn;
}

}  // namespace chromap
