#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chromap/circlecolor.hpp"
#include "chromap/planemap.hpp"
#include "chromap/threading.hpp"

namespace chromap {

enum class ViolationKind {
    SameMulticolorPair_t7,
    DisjointMulticolorPair_f32,
    Chromaticity4_t3,
    HexagonConfig_l55,
    TripleForced_t10,
    BichromaticUnit_l15,
};

std::string violation_kind_name(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::vector<Point> witnesses;            // points (vertices, segment ends)
    std::vector<std::set<ColorId>> multicolors;
    std::optional<Rational> distance_sq;     // exact, when applicable
    bool informational = false;              // census entry on k >= 7 maps
    std::string note;
};

std::vector<Violation> chromaticity_scan(const PlanarMap& map);

std::vector<Violation> trichromatic_pair_scan(const PlanarMap& map);

// Pseudo-coloring of the unit circle around a trichromatic vertex: colors are
// relabeled so u's multicolor becomes {4,5,6}; arcs inherit the remaining
// {1,2,3} labels. Angles live on the 2^-32 grid; `exact` flags breakpoints
// whose angle happened to be exactly representable.
struct PseudoColoring {
    ArcColoring coloring;
    std::vector<bool> exact;
    std::map<ColorId, ColorId> relabel;            // original -> pseudo label
    std::vector<std::pair<size_t, size_t>> crossing;  // (curve idx, segment idx) per breakpoint
    bool tolerance_warning = false;  // some angular decision within 2^-30 of 1/6
};

PseudoColoring pseudo_coloring(const PlanarMap& map, const Point& u);

struct DiskAnalysis {
    Point center;
    std::optional<Point> u;  // chosen trichromatic vertex
    std::vector<std::pair<Point, std::set<ColorId>>> census;  // trichromatic points found
    std::optional<PseudoColoring> pseudo;
    std::vector<Violation> violations;
    std::optional<std::string> hypothesis_failure;  // named failed condition
    std::string detail;
};

DiskAnalysis disk_analysis(const PlanarMap& map, const Point& center);

std::vector<Violation> bichromatic_unit_scan(const PlanarMap& map,
                                             ExecutionPolicy policy = ExecutionPolicy::Parallel);

// Exact recheck of an emitted violation against the map (distances and
// multicolors recomputed from scratch).
bool recheck_violation(const PlanarMap& map, const Violation& v);

}  // namespace chromap
