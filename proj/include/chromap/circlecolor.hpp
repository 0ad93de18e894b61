#pragma once

#include <optional>
#include <vector>

#include "chromap/rational.hpp"

namespace chromap {

struct CircleError : std::runtime_error {
    std::string kind;
    CircleError(std::string k, const std::string& msg)
        : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

// Position on the unit circle in turns (1 turn = full circle), always in [0,1).
// Chord length 1 corresponds to circular distance exactly 1/6 turn.
struct TurnAngle {
    Rational value;

    TurnAngle() : value(0) {}
    explicit TurnAngle(Rational v) : value(std::move(v)) {
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
        value -= Rational(fl);
    }
    bool operator==(const TurnAngle& o) const { return value == o.value; }
    bool operator<(const TurnAngle& o) const { return value < o.value; }
};

// Circular distance in turns, in [0, 1/2].
Rational circ_dist(const TurnAngle& a, const TurnAngle& b);
TurnAngle turn_add(const TurnAngle& a, const Rational& delta);

// Partition of the unit circle into colored arcs. colors[i] colors the arc
// from breakpoints[i] to breakpoints[i+1] (cyclically). Colors are from
// {1,2,3}. Adjacent arcs must differ except for the degenerate single-arc
// circle, which is representable but never proper.
struct ArcColoring {
    std::vector<TurnAngle> breakpoints;
    std::vector<int> colors;

    size_t arc_count() const { return colors.size(); }
};

void validate_arc_coloring(const ArcColoring& c);

struct BichromaticPoint {
    TurnAngle angle;
    int color_a, color_b;  // normalized color_a < color_b
};

std::vector<BichromaticPoint> bichromatic_points(const ArcColoring& c);

struct CircleProperness {
    bool proper = true;
    // offending angle pair when improper
    std::optional<std::pair<TurnAngle, TurnAngle>> witness;
};

CircleProperness circle_proper(const ArcColoring& c);

bool is_cyclic(const ArcColoring& c);

// Recoloring of Lemma-style cyclic normalization: output is proper and cyclic,
// its breakpoints are a subset of the input's, and every surviving breakpoint
// keeps its color pair.
ArcColoring make_cyclic(const ArcColoring& c);

struct Triple {
    BichromaticPoint a, b, c;
};

std::optional<Triple> find_triple(const ArcColoring& c, int color_a, int color_b);

bool hexagon_config_check(const ArcColoring& c);

}  // namespace chromap
