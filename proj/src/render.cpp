#include "chromap/render.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace chromap {

namespace {

// fixed palette, seven distinguishable colors plus spares
const std::array<const char*, 10> kPalette = {
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
    "#a65628", "#f781bf", "#999999", "#66c2a5", "#ffd92f",
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s(buf);
    return s == "-0.0000" ? "0.0000" : s;
}

}  // namespace

std::string render(const PlanarMap& map, const RenderSpec& spec) {
    if (spec.scale <= 0) throw MapError("InvalidInput", "render scale must be positive");
    BBox box = polygon_bbox(map.window);
    double x0 = rat_double(box.xmin), y0 = rat_double(box.ymin);
    double x1 = rat_double(box.xmax), y1 = rat_double(box.ymax);
    double s = spec.scale;
    double margin = 8.0;
    double w = (x1 - x0) * s + 2 * margin;
    double h = (y1 - y0) * s + 2 * margin;

    auto X = [&](const Rational& x) { return margin + (rat_double(x) - x0) * s; };
    auto Y = [&](const Rational& y) { return margin + (y1 - rat_double(y)) * s; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\""
        << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\">\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
        << "\" fill=\"white\"/>\n";

    if (spec.layers.count(RenderLayer::Regions)) {
        for (const auto& r : map.regions) {
            svg << "  <path d=\"";
            for (size_t i = 0; i < r.poly.vertices.size(); ++i) {
                const auto& v = r.poly.vertices[i];
                svg << (i == 0 ? "M" : "L") << fmt(X(v.x)) << " " << fmt(Y(v.y));
            }
            svg << "Z\" fill=\"" << kPalette[static_cast<size_t>((r.color - 1) % 10)]
                << "\" stroke=\"black\" stroke-width=\"0.6\"/>\n";
        }
    }
    if (spec.layers.count(RenderLayer::Vertices)) {
        for (const auto& [p, info] : map.vertices) {
            svg << "  <circle cx=\"" << fmt(X(p.x)) << "\" cy=\"" << fmt(Y(p.y)) << "\" r=\""
                << fmt(1.2 + info.chromaticity) << "\" fill=\"black\"/>\n";
        }
    }
    if (spec.layers.count(RenderLayer::UnitCircles)) {
        for (const auto& c : spec.circle_centers) {
            svg << "  <circle cx=\"" << fmt(X(c.x)) << "\" cy=\"" << fmt(Y(c.y)) << "\" r=\""
                << fmt(s) << "\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"4 3\""
                << " stroke-width=\"1\"/>\n";
        }
    }
    if (spec.layers.count(RenderLayer::Violations)) {
        for (const auto& v : spec.violations) {
            for (const auto& p : v.witnesses) {
                svg << "  <circle cx=\"" << fmt(X(p.x)) << "\" cy=\"" << fmt(Y(p.y))
                    << "\" r=\"5\" fill=\"none\" stroke=\"red\" stroke-width=\"2\"/>\n";
            }
            if (v.witnesses.size() == 2) {
                const auto& a = v.witnesses[0];
                const auto& b = v.witnesses[1];
                svg << "  <line x1=\"" << fmt(X(a.x)) << "\" y1=\"" << fmt(Y(a.y)) << "\" x2=\""
                    << fmt(X(b.x)) << "\" y2=\"" << fmt(Y(b.y))
                    << "\" stroke=\"red\" stroke-width=\"1.5\"/>\n";
                if (v.distance_sq) {
                    double mx = (X(a.x) + X(b.x)) / 2, my = (Y(a.y) + Y(b.y)) / 2;
                    svg << "  <text x=\"" << fmt(mx) << "\" y=\"" << fmt(my - 4)
                        << "\" font-size=\"11\" fill=\"red\">d2=" << rat_str(*v.distance_sq)
                        << "</text>\n";
                }
            }
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace chromap
