#pragma once

#include <set>
#include <string>
#include <vector>

#include "chromap/planemap.hpp"
#include "chromap/scanner.hpp"

namespace chromap {

enum class RenderLayer { Regions, Vertices, UnitCircles, Violations };

struct RenderSpec {
    std::set<RenderLayer> layers{RenderLayer::Regions};
    std::vector<Point> circle_centers;      // unit circles drawn when layer active
    std::vector<Violation> violations;      // highlighted when layer active
    double scale = 64.0;                    // pixels per unit
};

// Deterministic SVG: identical input yields byte-identical output.
std::string render(const PlanarMap& map, const RenderSpec& spec);

}  // namespace chromap
