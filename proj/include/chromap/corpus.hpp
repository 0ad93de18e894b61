#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chromap/circlecolor.hpp"
#include "chromap/planemap.hpp"

namespace chromap {

// Generators for corpus maps used by the CLI, the test suites and the
// acceptance runs. hex7 realizes the classical 7-color hexagon tiling on a
// rational lattice with exact cell diameter d.
PlanarMap generate_hex7(const Rational& d, const Rational& window_w, const Rational& window_h);

// hex7 with two color classes merged into one (domino regions), k = 6.
PlanarMap generate_hex6_merged(const Rational& d, const Rational& window_w,
                               const Rational& window_h);

PlanarMap generate_stripes(int k, const Rational& width, const Rational& window_w,
                           const Rational& window_h);

PlanarMap generate_grid(int k, const Rational& cell, const Rational& window_w,
                        const Rational& window_h);

PlanarMap generate_crafted(const std::string& name);
std::vector<std::string> crafted_names();

// Seeded random map over a mix of generator families; deterministic.
PlanarMap random_map(std::uint64_t seed, size_t max_regions = 100);

// Seeded random simple polygon with rational vertices (convex, desk scale).
Polygon random_polygon(std::uint64_t seed);

// Seeded random proper arc coloring with between 6 and max_arcs arcs;
// properness is verified exactly before returning.
ArcColoring random_proper_arc_coloring(std::uint64_t seed, int max_arcs = 30);

// Exact convex clip (window counter-clockwise convex polygon).
Polygon clip_polygon_convex(const Polygon& subject, const Polygon& clip);

}  // namespace chromap
