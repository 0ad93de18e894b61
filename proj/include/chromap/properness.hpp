#pragma once

#include <cstdint>
#include <vector>

#include "chromap/planemap.hpp"
#include "chromap/threading.hpp"

namespace chromap {

// Forbidden band of distances [1-eps, 1+eps]; eps = 0 is the single classical
// distance.
struct ForbiddenInterval {
    Rational eps;

    ForbiddenInterval() : eps(0) {}
    explicit ForbiddenInterval(Rational e) : eps(std::move(e)) {
        if (sign(eps) < 0 || eps >= 1)
            throw MapError("InvalidInterval", "eps must satisfy 0 <= eps < 1");
    }
    Rational lo_sq() const { return (1 - eps) * (1 - eps); }
    Rational hi_sq() const { return (1 + eps) * (1 + eps); }
};

struct PairViolation {
    size_t region_i, region_j;  // region_i <= region_j
    Rational dmin_sq, dmax_sq;  // achieved squared-distance interval
    // optional exact witness points (filled by the sampling oracle)
    std::optional<Point> witness_a, witness_b;
};

struct PropernessReport {
    bool proper = true;
    std::vector<PairViolation> violations;
    std::vector<PairViolation> critical;  // closed-set contact exactly at an endpoint
};

// Exact check over all unordered same-colored region pairs (self pairs
// included). A pair is a violation iff its achieved distance interval meets
// the open forbidden band; exact endpoint contact goes to `critical`.
PropernessReport properness_check(const PlanarMap& map, const ForbiddenInterval& interval,
                                  ExecutionPolicy policy = ExecutionPolicy::Parallel);

// Seeded random point-pair sampler. Every reported pair carries exact rational
// witness coordinates, so reports are sound by construction.
PropernessReport sampling_oracle(const PlanarMap& map, const ForbiddenInterval& interval,
                                 long n, std::uint64_t seed,
                                 ExecutionPolicy policy = ExecutionPolicy::Parallel);

// The configuration forbidden by the monochromatic-curve argument: z shares
// the path's region color and sits closer than 1 to one path end and farther
// than 1 from the other.
bool monochromatic_path_conflict(const PlanarMap& map, const std::vector<Point>& path,
                                 const Point& z);

}  // namespace chromap
