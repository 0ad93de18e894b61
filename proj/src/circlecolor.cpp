#include "chromap/circlecolor.hpp"

#include <algorithm>
#include <map>

namespace chromap {

static const Rational kSixth = rat(1, 6);

Rational circ_dist(const TurnAngle& a, const TurnAngle& b) {
    Rational d = abs(a.value - b.value);
    if (d > rat(1, 2)) d = 1 - d;
    return d;
}

TurnAngle turn_add(const TurnAngle& a, const Rational& delta) {
    return TurnAngle(a.value + delta);
}

static int cyc_next(int c) { return c % 3 + 1; }

void validate_arc_coloring(const ArcColoring& c) {
    size_t m = c.colors.size();
    if (m == 0 || c.breakpoints.size() != m)
        throw CircleError("InvalidArcColoring", "breakpoint/color count mismatch");
    for (size_t i = 0; i < m; ++i) {
        if (c.colors[i] < 1 || c.colors[i] > 3)
            throw CircleError("InvalidArcColoring", "color outside {1,2,3}");
        if (c.breakpoints[i].value < 0 || c.breakpoints[i].value >= 1)
            throw CircleError("InvalidArcColoring", "breakpoint outside [0,1)");
        if (i > 0 && !(c.breakpoints[i - 1].value < c.breakpoints[i].value))
            throw CircleError("InvalidArcColoring", "breakpoints not strictly increasing");
    }
    if (m >= 2) {
        for (size_t i = 0; i < m; ++i) {
            if (c.colors[i] == c.colors[(i + 1) % m])
                throw CircleError("InvalidArcColoring", "adjacent arcs share a color");
        }
    }
}

static Rational arc_length(const ArcColoring& c, size_t i) {
    size_t m = c.colors.size();
    if (m == 1) return rat(1);
    Rational s = c.breakpoints[i].value;
    Rational e = c.breakpoints[(i + 1) % m].value;
    Rational len = e - s;
    if (len <= 0) len += 1;
    return len;
}

std::vector<BichromaticPoint> bichromatic_points(const ArcColoring& c) {
    std::vector<BichromaticPoint> out;
    size_t m = c.colors.size();
    if (m < 2) return out;
    for (size_t i = 0; i < m; ++i) {
        int left = c.colors[(i + m - 1) % m];
        int right = c.colors[i];
        out.push_back({c.breakpoints[i], std::min(left, right), std::max(left, right)});
    }
    return out;
}

// Positive-length intersection of the open arcs (s1, s1+l1) and (s2, s2+l2).
// Returns an interior point of the overlap when it exists.
static std::optional<Rational> open_arcs_overlap(const Rational& s1, const Rational& l1,
                                                 const Rational& s2, const Rational& l2) {
    Rational g = s2 - s1;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), g.get_num_mpz_t(), g.get_den_mpz_t());
    g -= Rational(fl);  // g in [0,1)
    for (int shift = 0; shift < 2; ++shift) {
        Rational gs = g - shift;  // place (s2..) at offset gs relative to (0, l1)
        Rational lo = gs > 0 ? gs : Rational(0);
        Rational upper = gs + l2;
        Rational hi = l1 < upper ? l1 : upper;
        if (lo < hi) {
            Rational mid = s1 + (lo + hi) / 2;
            return mid;
        }
    }
    return std::nullopt;
}

CircleProperness circle_proper(const ArcColoring& c) {
    validate_arc_coloring(c);
    size_t m = c.colors.size();
    CircleProperness out;
    if (m == 1) {
        // Monochromatic circle: any pair at separation 1/6 shares the color.
        out.proper = false;
        out.witness = {TurnAngle(rat(0)), TurnAngle(kSixth)};
        return out;
    }
    // (a) monochromatic points: same-colored open arcs with interior points at
    // circular distance exactly 1/6. Testing the +1/6 shift over ordered pairs
    // covers both directions.
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            if (c.colors[i] != c.colors[j]) continue;
            auto hit = open_arcs_overlap(c.breakpoints[i].value + kSixth, arc_length(c, i),
                                         c.breakpoints[j].value, arc_length(c, j));
            if (hit) {
                out.proper = false;
                out.witness = {TurnAngle(*hit - kSixth), TurnAngle(*hit)};
                return out;
            }
        }
    }
    // (b) bichromatic points with equal pairs at distance exactly 1/6.
    auto pts = bichromatic_points(c);
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i].color_a != pts[j].color_a || pts[i].color_b != pts[j].color_b) continue;
            if (circ_dist(pts[i].angle, pts[j].angle) == kSixth) {
                out.proper = false;
                out.witness = {pts[i].angle, pts[j].angle};
                return out;
            }
        }
    }
    return out;
}

bool is_cyclic(const ArcColoring& c) {
    validate_arc_coloring(c);
    size_t m = c.colors.size();
    if (m < 3) throw CircleError("TooFewArcs", "cyclicity needs at least 3 arcs");
    bool inc = c.colors[1] == cyc_next(c.colors[0]);
    for (size_t i = 0; i < m; ++i) {
        int a = c.colors[i], b = c.colors[(i + 1) % m];
        if (inc ? (b != cyc_next(a)) : (a != cyc_next(b))) return false;
    }
    return true;
}

// Drops breakpoints whose two sides now share a color.
static ArcColoring merge_equal_arcs(const ArcColoring& c) {
    size_t m = c.colors.size();
    ArcColoring out;
    for (size_t i = 0; i < m; ++i) {
        if (c.colors[(i + m - 1) % m] != c.colors[i]) {
            out.breakpoints.push_back(c.breakpoints[i]);
            out.colors.push_back(c.colors[i]);
        }
    }
    if (out.colors.empty())
        throw CircleError("NonTermination", "recoloring collapsed the circle");
    return out;
}

ArcColoring make_cyclic(const ArcColoring& input) {
    if (!circle_proper(input).proper) throw CircleError("NotProper", "input coloring is not proper");
    ArcColoring c = input;
    size_t m0 = c.colors.size();
    size_t budget = m0 * m0;
    for (size_t iter = 0; iter <= budget; ++iter) {
        size_t m = c.colors.size();
        if (m >= 3 && is_cyclic(c)) return c;
        // shortest arc bordered on both sides by one color; ties by smallest
        // starting breakpoint (scan order is by increasing breakpoint).
        long best = -1;
        Rational best_len;
        for (size_t i = 0; i < m; ++i) {
            int prev = c.colors[(i + m - 1) % m];
            int next = c.colors[(i + 1) % m];
            if (prev != next) continue;
            Rational len = arc_length(c, i);
            if (best < 0 || len < best_len) {
                best = static_cast<long>(i);
                best_len = len;
            }
        }
        if (best < 0)
            throw CircleError("NonTermination", "no same-bordered arc but coloring not cyclic");
        size_t i = static_cast<size_t>(best);
        int a = c.colors[i];
        int b = c.colors[(i + 1) % m];
        // direct recoloring to the bordering color when properness allows
        ArcColoring tentative = c;
        tentative.colors[i] = b;
        tentative = merge_equal_arcs(tentative);
        if (circle_proper(tentative).proper) {
            c = tentative;
            continue;
        }
        // six-arc cyclic recoloring: the arcs rotated by k/6 must be arcs of
        // the coloring with colors following the (a,b,c) cycle and bordered by
        // its successor.
        int third = 6 - a - b;
        auto next_abc = [&](int col) { return col == a ? b : (col == b ? third : a); };
        std::map<Rational, size_t> index_of;
        for (size_t k = 0; k < m; ++k) index_of[c.breakpoints[k].value] = k;
        Rational x0 = c.breakpoints[i].value;
        Rational y0 = c.breakpoints[(i + 1) % m].value;
        bool done = false;
        for (int dir = 1; dir >= -1 && !done; dir -= 2) {
            std::vector<size_t> rotated;
            bool ok = true;
            for (int k = 1; k <= 5 && ok; ++k) {
                TurnAngle xk(x0 + dir * k * kSixth);
                TurnAngle yk(y0 + dir * k * kSixth);
                auto it = index_of.find(xk.value);
                if (it == index_of.end()) {
                    ok = false;
                    break;
                }
                size_t idx = it->second;
                if (!(c.breakpoints[(idx + 1) % m] == yk)) {
                    ok = false;
                    break;
                }
                int expect = a;
                for (int s = 0; s < k; ++s) expect = next_abc(expect);
                if (c.colors[idx] != expect) {
                    ok = false;
                    break;
                }
                if (c.colors[(idx + m - 1) % m] != next_abc(expect) ||
                    c.colors[(idx + 1) % m] != next_abc(expect)) {
                    ok = false;
                    break;
                }
                rotated.push_back(idx);
            }
            if (!ok) continue;
            ArcColoring re = c;
            re.colors[i] = b;
            for (int k = 1; k <= 5; ++k) {
                int expect = a;
                for (int s = 0; s < k; ++s) expect = next_abc(expect);
                re.colors[rotated[k - 1]] = next_abc(expect);
            }
            re = merge_equal_arcs(re);
            if (!circle_proper(re).proper)
                throw CircleError("NonTermination", "six-arc recoloring lost properness");
            c = re;
            done = true;
        }
        if (!done)
            throw CircleError("NonTermination", "six-arc rotation structure not present");
    }
    throw CircleError("NonTermination", "iteration budget exceeded");
}

std::optional<Triple> find_triple(const ArcColoring& c, int color_a, int color_b) {
    if (color_a > color_b) std::swap(color_a, color_b);
    auto pts = bichromatic_points(c);
    std::vector<BichromaticPoint> sel;
    for (const auto& p : pts)
        if (p.color_a == color_a && p.color_b == color_b) sel.push_back(p);
    size_t n = sel.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                if (circ_dist(sel[i].angle, sel[j].angle) > kSixth &&
                    circ_dist(sel[i].angle, sel[k].angle) > kSixth &&
                    circ_dist(sel[j].angle, sel[k].angle) > kSixth)
                    return Triple{sel[i], sel[j], sel[k]};
            }
    return std::nullopt;
}

bool hexagon_config_check(const ArcColoring& c) {
    validate_arc_coloring(c);
    if (c.colors.size() != 6) return false;
    for (size_t i = 0; i < 6; ++i)
        if (arc_length(c, i) != kSixth) return false;
    return is_cyclic(c);
}

}  // namespace chromap
