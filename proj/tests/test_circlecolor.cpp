#include <random>

#include "chromap/circlecolor.hpp"
#include "chromap/corpus.hpp"
#include "doctest.h"

using namespace chromap;

namespace {

ArcColoring coloring(std::vector<std::pair<long, long>> bps, std::vector<int> colors) {
    ArcColoring c;
    for (auto [num, den] : bps) c.breakpoints.push_back(TurnAngle(rat(num, den)));
    c.colors = std::move(colors);
    return c;
}

ArcColoring hexagon() {
    return coloring({{0, 1}, {1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}}, {1, 2, 3, 1, 2, 3});
}

// pseudo-color of an angle: arc color interior, pair at breakpoints
std::set<int> colors_at_angle(const ArcColoring& c, const Rational& ang) {
    TurnAngle t(ang);
    size_t m = c.colors.size();
    for (size_t i = 0; i < m; ++i) {
        if (c.breakpoints[i] == t)
            return {c.colors[(i + m - 1) % m], c.colors[i]};
    }
    size_t arc = m - 1;
    for (size_t i = 0; i + 1 < m; ++i) {
        if (c.breakpoints[i].value < t.value && t.value < c.breakpoints[i + 1].value) arc = i;
    }
    if (t.value < c.breakpoints[0].value) arc = m - 1;
    return {c.colors[arc]};
}

}  // namespace

TEST_CASE("circle_proper on the three worked examples") {
    CHECK(circle_proper(hexagon()).proper);
    // two half-circle arcs: each contains interior pairs at separation 1/6
    CHECK_FALSE(circle_proper(coloring({{0, 1}, {1, 2}}, {1, 2})).proper);
    // three arcs of one third each: same self-conflict
    CHECK_FALSE(circle_proper(coloring({{0, 1}, {1, 3}, {2, 3}}, {1, 2, 3})).proper);
    // degenerate monochromatic circle is rejected
    CHECK_FALSE(circle_proper(coloring({{0, 1}}, {1})).proper);
}

TEST_CASE("circle_proper agrees with a sampling oracle at exact separation 1/6") {
    std::mt19937_64 rng(5);
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        ArcColoring c = random_proper_arc_coloring(seed + 900);
        REQUIRE(circle_proper(c).proper);
        ++checked;
        for (int s = 0; s < 500; ++s) {
            Rational a = rat(static_cast<long>(rng() % 99991), 99991);
            Rational b = a + rat(1, 6);
            auto ca = colors_at_angle(c, a);
            auto cb = colors_at_angle(c, b);
            if (ca.size() == 1 && cb.size() == 1) {
                CHECK(*ca.begin() != *cb.begin());
            } else if (ca.size() == 2 && cb.size() == 2) {
                CHECK(ca != cb);
            }
        }
    }
    CHECK(checked == 200);
}

TEST_CASE("is_cyclic classification") {
    CHECK(is_cyclic(hexagon()));
    CHECK_FALSE(is_cyclic(coloring({{0, 1}, {1, 4}, {1, 2}, {3, 4}}, {1, 2, 1, 3})));
    CHECK_FALSE(is_cyclic(coloring({{0, 1}, {1, 4}, {1, 2}, {3, 4}}, {1, 2, 3, 2})));
    CHECK_THROWS_AS(is_cyclic(coloring({{0, 1}, {1, 2}}, {1, 2})), CircleError);
}

TEST_CASE("make_cyclic leaves cyclic colorings alone") {
    ArcColoring hex = hexagon();
    ArcColoring out = make_cyclic(hex);
    REQUIRE(out.colors.size() == 6);
    for (size_t i = 0; i < 6; ++i) {
        CHECK(out.breakpoints[i] == hex.breakpoints[i]);
        CHECK(out.colors[i] == hex.colors[i]);
    }
}

TEST_CASE("make_cyclic recolors a nested arc directly") {
    // 9-arc cyclic coloring with arc 0 split as 1|2|1; the short color-2 arc
    // is freely recolorable and the result collapses back to 9 cyclic arcs.
    ArcColoring c;
    std::vector<std::pair<long, long>> bps = {{0, 1}, {13, 216}, {17, 216}};
    for (long k = 1; k < 9; ++k) bps.push_back({k, 9});
    std::vector<int> cols = {1, 2, 1};
    for (long k = 1; k < 9; ++k) cols.push_back(static_cast<int>(k % 3) + 1);
    c = coloring(bps, cols);
    REQUIRE(circle_proper(c).proper);
    REQUIRE_FALSE(is_cyclic(c));

    ArcColoring out = make_cyclic(c);
    CHECK(circle_proper(out).proper);
    CHECK(is_cyclic(out));
    CHECK(out.colors.size() == 9);
    CHECK(out.colors.size() < c.colors.size());
}

TEST_CASE("make_cyclic six-arc rotation branch") {
    // Six short arcs at k/6 with cyclically colored gap pairs: the shortest
    // same-bordered arc cannot be recolored directly and forces the six-arc
    // cyclic recoloring.
    ArcColoring c;
    std::vector<std::pair<long, long>> bps;
    std::vector<int> cols;
    const long w_num = 1, w_den = 24;   // slot width 1/24
    const long g_num = 1, g_den = 16;   // gap halves 1/16
    for (long k = 0; k < 6; ++k) {
        // slot [k/6, k/6 + 1/24]
        bps.push_back({k, 6});
        cols.push_back(static_cast<int>(k % 3) + 1);
        // gap arcs [k/6+1/24, k/6+1/24+1/16], [k/6+1/24+1/16, (k+1)/6]
        bps.push_back({k * w_den * g_den + 6 * w_num * g_den, 6 * w_den * g_den});
        cols.push_back(static_cast<int>((k + 1) % 3) + 1);
        bps.push_back(
            {k * w_den * g_den * 16 + 6 * w_num * g_den * 16 + 6 * w_den * g_num * 16,
             6 * w_den * g_den * 16});
        cols.push_back(static_cast<int>((k + 2) % 3) + 1);
    }
    c = coloring(bps, cols);
    REQUIRE(circle_proper(c).proper);
    REQUIRE_FALSE(is_cyclic(c));

    ArcColoring out = make_cyclic(c);
    CHECK(circle_proper(out).proper);
    CHECK(is_cyclic(out));
    CHECK(out.colors.size() == 6);
    CHECK(hexagon_config_check(out));
    // surviving breakpoints keep their original pair
    for (size_t i = 0; i < out.breakpoints.size(); ++i) {
        auto pair_out = colors_at_angle(out, out.breakpoints[i].value);
        auto pair_in = colors_at_angle(c, out.breakpoints[i].value);
        CHECK(pair_out == pair_in);
    }
}

TEST_CASE("make_cyclic properties on seeded random proper colorings") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        ArcColoring c = random_proper_arc_coloring(seed);
        ArcColoring out = make_cyclic(c);
        CHECK(circle_proper(out).proper);
        CHECK(is_cyclic(out));
        // breakpoints subset, pairs preserved
        for (size_t i = 0; i < out.breakpoints.size(); ++i) {
            bool found = false;
            for (const auto& b : c.breakpoints)
                if (b == out.breakpoints[i]) found = true;
            CHECK(found);
            CHECK(colors_at_angle(out, out.breakpoints[i].value) ==
                  colors_at_angle(c, out.breakpoints[i].value));
        }
        // idempotent
        ArcColoring again = make_cyclic(out);
        CHECK(again.colors == out.colors);
        REQUIRE(again.breakpoints.size() == out.breakpoints.size());
        for (size_t i = 0; i < again.breakpoints.size(); ++i)
            CHECK(again.breakpoints[i] == out.breakpoints[i]);
    }
}

TEST_CASE("make_cyclic rejects improper input") {
    CHECK_THROWS_AS(make_cyclic(coloring({{0, 1}, {1, 2}}, {1, 2})), CircleError);
}

TEST_CASE("find_triple on regular colorings") {
    // nine equal arcs: three points per pair, pairwise distance 1/3
    ArcColoring nine;
    for (long k = 0; k < 9; ++k) {
        nine.breakpoints.push_back(TurnAngle(rat(k, 9)));
        nine.colors.push_back(static_cast<int>(k % 3) + 1);
    }
    for (auto [a, b] : {std::pair<int, int>{1, 2}, {2, 3}, {1, 3}}) {
        auto t = find_triple(nine, a, b);
        REQUIRE(t.has_value());
        CHECK(circ_dist(t->a.angle, t->b.angle) > rat(1, 6));
        CHECK(circ_dist(t->a.angle, t->c.angle) > rat(1, 6));
        CHECK(circ_dist(t->b.angle, t->c.angle) > rat(1, 6));
    }
    // hexagon: only two points per pair exist
    CHECK_FALSE(find_triple(hexagon(), 1, 2).has_value());
    CHECK_FALSE(find_triple(hexagon(), 2, 3).has_value());
    CHECK_FALSE(find_triple(hexagon(), 1, 3).has_value());
}

TEST_CASE("find_triple agrees with brute force on twelve arcs") {
    ArcColoring twelve;
    for (long k = 0; k < 12; ++k) {
        twelve.breakpoints.push_back(TurnAngle(rat(k, 12)));
        twelve.colors.push_back(static_cast<int>(k % 3) + 1);
    }
    for (auto [a, b] : {std::pair<int, int>{1, 2}, {2, 3}, {1, 3}}) {
        auto pts = bichromatic_points(twelve);
        std::vector<BichromaticPoint> sel;
        for (const auto& p : pts)
            if (p.color_a == std::min(a, b) && p.color_b == std::max(a, b)) sel.push_back(p);
        REQUIRE(sel.size() == 4);
        bool brute = false;
        for (size_t i = 0; i < sel.size(); ++i)
            for (size_t j = i + 1; j < sel.size(); ++j)
                for (size_t k2 = j + 1; k2 < sel.size(); ++k2)
                    if (circ_dist(sel[i].angle, sel[j].angle) > rat(1, 6) &&
                        circ_dist(sel[i].angle, sel[k2].angle) > rat(1, 6) &&
                        circ_dist(sel[j].angle, sel[k2].angle) > rat(1, 6))
                        brute = true;
        CHECK(find_triple(twelve, a, b).has_value() == brute);
        CHECK(brute);
    }
}

TEST_CASE("hexagon_config_check pattern matching") {
    CHECK(hexagon_config_check(hexagon()));
    ArcColoring bent = hexagon();
    bent.breakpoints[1] = TurnAngle(rat(1, 6) + rat(1, 100));
    CHECK_FALSE(hexagon_config_check(bent));
    ArcColoring nine;
    for (long k = 0; k < 9; ++k) {
        nine.breakpoints.push_back(TurnAngle(rat(k, 9)));
        nine.colors.push_back(static_cast<int>(k % 3) + 1);
    }
    CHECK_FALSE(hexagon_config_check(nine));
}

TEST_CASE("every arc in a proper coloring has length at most 1/6") {
    for (std::uint64_t seed = 300; seed < 330; ++seed) {
        ArcColoring c = random_proper_arc_coloring(seed);
        size_t m = c.colors.size();
        for (size_t i = 0; i < m; ++i) {
            Rational len = c.breakpoints[(i + 1) % m].value - c.breakpoints[i].value;
            if (len <= 0) len += 1;
            CHECK(len <= rat(1, 6));
        }
    }
}
