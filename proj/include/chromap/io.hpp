#pragma once

#include <string>

#include "chromap/circlecolor.hpp"
#include "chromap/curves.hpp"
#include "chromap/planemap.hpp"

namespace chromap {

// Map file format: {"k": int, "window": [[xnum,xden,ynum,yden],...],
//   "regions": [{"color": int, "poly": [[xnum,xden,ynum,yden],...]},...]}
// Rationals are written in lowest terms. "unbounded_color" appears only when
// set.
std::string map_to_json(const PlanarMap& map);
PlanarMap map_from_json(const std::string& text);

// Circle coloring format: {"breakpoints": [[num,den],...], "colors": [int,...]}
std::string circle_to_json(const ArcColoring& c);
ArcColoring circle_from_json(const std::string& text);

// Curve format: {"points": [[x,y],...], "breaks": [int,...],
//   "colors": [int,...], "closed": bool} with binary64 floats.
std::string curve_to_json(const TriColoredCurve& c);
TriColoredCurve curve_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace chromap
