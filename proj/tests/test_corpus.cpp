#include "chromap/corpus.hpp"
#include "chromap/io.hpp"
#include "chromap/properness.hpp"
#include "chromap/render.hpp"
#include "chromap/scanner.hpp"
#include "doctest.h"

using namespace chromap;

TEST_CASE("hex7 satisfies the conditions and exact properness") {
    PlanarMap hex = generate_hex7(rat(9, 10), rat(5), rat(5));
    ConditionReport rep = validate_conditions(hex);
    CHECK(rep.all_ok());
    CHECK(properness_check(hex, ForbiddenInterval{rat(0)}).proper);
}

TEST_CASE("hex6 merged variant fails properness with a localized pair") {
    PlanarMap six = generate_crafted("hex6_merged");
    CHECK(six.k == 6);
    auto rep = properness_check(six, ForbiddenInterval{rat(0)});
    CHECK_FALSE(rep.proper);
    REQUIRE_FALSE(rep.violations.empty());
    // dominoes of two merged hexagons have diameter > 1, so a self pair exists
    bool self_pair = false;
    for (const auto& v : rep.violations)
        if (v.region_i == v.region_j) self_pair = true;
    CHECK(self_pair);
}

TEST_CASE("stripes fail properness and grids fail cubicity") {
    PlanarMap stripes = generate_stripes(6, rat(1, 2), rat(4), rat(2));
    CHECK_FALSE(properness_check(stripes, ForbiddenInterval{rat(0)}).proper);

    PlanarMap grid = generate_grid(4, rat(1), rat(4), rat(4));
    ConditionReport rep = validate_conditions(grid);
    CHECK_FALSE(rep.cubic.ok);
    CHECK(rep.poly.ok);
}

TEST_CASE("crafted registry covers every name") {
    for (const auto& name : crafted_names()) {
        PlanarMap map = generate_crafted(name);
        CHECK(map.regions.size() >= 1);
    }
    CHECK_THROWS_WITH_AS(generate_crafted("nope"), doctest::Contains("UnknownCrafted"), MapError);
}

TEST_CASE("random maps are deterministic per seed") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
        PlanarMap a = random_map(seed);
        PlanarMap b = random_map(seed);
        CHECK(map_to_json(a) == map_to_json(b));
        CHECK(a.regions.size() <= 100);
    }
}

TEST_CASE("random polygons validate and spread around unit diameter") {
    int above = 0, below = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Polygon p = random_polygon(seed);
        validate_polygon(p);
        Rational diam = 0;
        for (const auto& u : p.vertices)
            for (const auto& v : p.vertices) diam = std::max(diam, dist_sq(u, v));
        (diam >= 1 ? above : below)++;
    }
    CHECK(above > 5);
    CHECK(below > 5);
}

TEST_CASE("random proper arc colorings are proper and sometimes non-cyclic") {
    int non_cyclic = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        ArcColoring c = random_proper_arc_coloring(seed);
        CHECK(circle_proper(c).proper);
        CHECK(c.colors.size() >= 6);
        CHECK(c.colors.size() <= 30);
        if (!is_cyclic(c)) ++non_cyclic;
    }
    CHECK(non_cyclic >= 5);
}

TEST_CASE("render produces deterministic SVG with the fixed palette") {
    PlanarMap hex = generate_hex7(rat(9, 10), rat(3), rat(3));
    RenderSpec spec;
    spec.layers = {RenderLayer::Regions, RenderLayer::Vertices};
    std::string a = render(hex, spec);
    std::string b = render(hex, spec);
    CHECK(a == b);
    CHECK(a.find("<svg") == 0);
    for (const char* color : {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
                              "#f781bf"})
        CHECK(a.find(color) != std::string::npos);

    RenderSpec empty;
    empty.layers = {};
    std::string frame = render(hex, empty);
    CHECK(frame.find("<path") == std::string::npos);
    CHECK(frame.find("<svg") == 0);
}

TEST_CASE("violation overlay draws the witness pair") {
    PlanarMap t7 = generate_crafted("t7_pair");
    RenderSpec spec;
    spec.layers = {RenderLayer::Regions, RenderLayer::Violations};
    spec.violations = trichromatic_pair_scan(t7);
    REQUIRE(spec.violations.size() == 1);
    std::string svg = render(t7, spec);
    CHECK(svg.find("d2=9/4") != std::string::npos);
    CHECK(svg.find("<line") != std::string::npos);
}

TEST_CASE("convex clipping is exact") {
    Polygon subject;
    subject.vertices = {pt(-1, -1), pt(3, -1), pt(3, 3), pt(-1, 3)};
    Polygon clip;
    clip.vertices = {pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)};
    Polygon out = clip_polygon_convex(subject, clip);
    CHECK(polygon_signed_area2(out) == rat(8));  // area 4
    Polygon miss;
    miss.vertices = {pt(10, 10), pt(11, 10), pt(11, 11)};
    CHECK(clip_polygon_convex(miss, clip).vertices.empty());
}
