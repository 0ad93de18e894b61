#include "chromap/properness.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chromap {

namespace {

struct PairTask {
    size_t i, j;
};

bool classify_pair(const PlanarMap& map, size_t i, size_t j, const ForbiddenInterval& interval,
                   PairViolation& out, bool& critical) {
    DistanceInterval di = polygon_distance_interval(map.regions[i].poly, map.regions[j].poly);
    Rational lo = interval.lo_sq(), hi = interval.hi_sq();
    bool violation = di.min_sq < hi && di.max_sq > lo;
    critical = (di.min_sq == hi) || (di.max_sq == lo);
    if (violation || critical) {
        out.region_i = i;
        out.region_j = j;
        out.dmin_sq = di.min_sq;
        out.dmax_sq = di.max_sq;
    }
    return violation;
}

}  // namespace

PropernessReport properness_check(const PlanarMap& map, const ForbiddenInterval& interval,
                                  ExecutionPolicy policy) {
    std::vector<BBox> boxes;
    boxes.reserve(map.regions.size());
    for (const auto& r : map.regions) boxes.push_back(polygon_bbox(r.poly));

    Rational lo = interval.lo_sq(), hi = interval.hi_sq();
    std::vector<PairTask> tasks;
    for (size_t i = 0; i < map.regions.size(); ++i) {
        for (size_t j = i; j < map.regions.size(); ++j) {
            if (map.regions[i].color != map.regions[j].color) continue;
            // box prefilter: skip pairs whose box range already avoids the band
            if (bbox_min_dist_sq(boxes[i], boxes[j]) > hi) continue;
            if (bbox_max_dist_sq(boxes[i], boxes[j]) < lo) continue;
            tasks.push_back({i, j});
        }
    }

    PropernessReport rep;
    if (policy == ExecutionPolicy::Serial) {
        for (const auto& t : tasks) {
            PairViolation v;
            bool crit = false;
            if (classify_pair(map, t.i, t.j, interval, v, crit))
                rep.violations.push_back(v);
            else if (crit)
                rep.critical.push_back(v);
        }
    } else {
        apply_thread_cap();
        long n = static_cast<long>(tasks.size());
        std::vector<std::vector<PairViolation>> vio(1), cri(1);
#ifdef _OPENMP
#pragma omp parallel
        {
#pragma omp single
            {
                vio.resize(static_cast<size_t>(omp_get_num_threads()));
                cri.resize(vio.size());
            }
#pragma omp for schedule(dynamic, 8)
            for (long idx = 0; idx < n; ++idx) {
                size_t tid = static_cast<size_t>(omp_get_thread_num());
                PairViolation v;
                bool crit = false;
                if (classify_pair(map, tasks[static_cast<size_t>(idx)].i,
                                  tasks[static_cast<size_t>(idx)].j, interval, v, crit))
                    vio[tid].push_back(v);
                else if (crit)
                    cri[tid].push_back(v);
            }
        }
#else
        for (long idx = 0; idx < n; ++idx) {
            PairViolation v;
            bool crit = false;
            if (classify_pair(map, tasks[static_cast<size_t>(idx)].i,
                              tasks[static_cast<size_t>(idx)].j, interval, v, crit))
                vio[0].push_back(v);
            else if (crit)
                cri[0].push_back(v);
        }
#endif
        for (auto& chunk : vio) rep.violations.insert(rep.violations.end(), chunk.begin(), chunk.end());
        for (auto& chunk : cri) rep.critical.insert(rep.critical.end(), chunk.begin(), chunk.end());
    }
    auto by_pair = [](const PairViolation& a, const PairViolation& b) {
        return a.region_i < b.region_i || (a.region_i == b.region_i && a.region_j < b.region_j);
    };
    std::sort(rep.violations.begin(), rep.violations.end(), by_pair);
    std::sort(rep.critical.begin(), rep.critical.end(), by_pair);
    rep.proper = rep.violations.empty();
    return rep;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Exact dyadic sample inside the polygon's bbox; rejection against the closed
// polygon, with a fast double pre-test away from the boundary.
struct RegionSampler {
    const Polygon* poly;
    BBox box;
    Rational wx, wy;
    std::vector<std::pair<double, double>> verts_d;

    explicit RegionSampler(const Polygon& p) : poly(&p), box(polygon_bbox(p)) {
        wx = box.xmax - box.xmin;
        wy = box.ymax - box.ymin;
        for (const auto& v : p.vertices) verts_d.push_back({rat_double(v.x), rat_double(v.y)});
    }

    // double winding classification with a conservative boundary band
    int fast_locate(double x, double y, double band) const {
        int wn = 0;
        size_t n = verts_d.size();
        for (size_t i = 0; i < n; ++i) {
            auto [ax, ay] = verts_d[i];
            auto [bx, by] = verts_d[(i + 1) % n];
            double ex = bx - ax, ey = by - ay;
            double crossv = ex * (y - ay) - (x - ax) * ey;
            double len = std::hypot(ex, ey);
            if (std::abs(crossv) <= band * len) {
                double t = ((x - ax) * ex + (y - ay) * ey) / (len * len);
                if (t > -band && t < 1 + band) return 0;  // too close to decide
            }
            if (ay <= y) {
                if (by > y && crossv > 0) ++wn;
            } else {
                if (by <= y && crossv < 0) --wn;
            }
        }
        return wn != 0 ? 1 : -1;
    }

    std::optional<Point> sample(std::uint64_t bits1, std::uint64_t bits2) const {
        Rational fx = rat_from_mpz(mpz_class(static_cast<unsigned long>(bits1 & 0xffffffffULL)),
                                   mpz_class(1) << 32);
        Rational fy = rat_from_mpz(mpz_class(static_cast<unsigned long>(bits2 & 0xffffffffULL)),
                                   mpz_class(1) << 32);
        Point p{box.xmin + fx * wx, box.ymin + fy * wy};
        int fast = fast_locate(rat_double(p.x), rat_double(p.y), 1e-9);
        if (fast < 0) return std::nullopt;
        if (fast > 0) return p;
        if (locate_point(p, *poly) == Location::Outside) return std::nullopt;
        return p;
    }
};

}  // namespace

PropernessReport sampling_oracle(const PlanarMap& map, const ForbiddenInterval& interval,
                                 long n, std::uint64_t seed, ExecutionPolicy policy) {
    if (n < 1) throw MapError("InvalidInput", "sample count must be at least 1");
    std::vector<RegionSampler> samplers;
    samplers.reserve(map.regions.size());
    for (const auto& r : map.regions) samplers.emplace_back(r.poly);
    // same-color partner lists
    std::vector<std::vector<size_t>> partners(map.regions.size());
    for (size_t i = 0; i < map.regions.size(); ++i)
        for (size_t j = 0; j < map.regions.size(); ++j)
            if (map.regions[i].color == map.regions[j].color) partners[i].push_back(j);

    Rational lo = interval.lo_sq(), hi = interval.hi_sq();

    // A sample either lands strictly inside the forbidden band (immediate,
    // exact witness) or contributes a below/above bracket for its region
    // pair: both connected regions achieve a full interval of distances, so a
    // pair sampled on both sides of the band certifies that the band is
    // crossed. Every report stays exactly recheckable.
    struct Sample {
        size_t i, j;
        int side;  // -1 below, 0 inside, +1 above
        Point a, b;
        Rational dsq;
        std::pair<size_t, size_t> region_i_pair() const { return {i, j}; }
    };
    // One independent generator per sample index keeps the result identical
    // across thread counts.
    auto run_sample = [&](long idx) -> std::optional<Sample> {
        std::uint64_t s = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(idx)));
        std::mt19937_64 rng(s);
        size_t i = static_cast<size_t>(rng() % map.regions.size());
        size_t j = partners[i][static_cast<size_t>(rng() % partners[i].size())];
        std::optional<Point> a, b;
        for (int tries = 0; tries < 64 && !a; ++tries) a = samplers[i].sample(rng(), rng());
        for (int tries = 0; tries < 64 && !b; ++tries) b = samplers[j].sample(rng(), rng());
        if (!a || !b) return std::nullopt;
        Rational dsq = dist_sq(*a, *b);
        int side;
        if (dsq > lo && dsq < hi) side = 0;
        else if (dsq <= lo) side = -1;
        else side = 1;
        return Sample{std::min(i, j), std::max(i, j), side, *a, *b, dsq};
    };

    std::vector<Sample> found;
    if (policy == ExecutionPolicy::Serial) {
        for (long idx = 0; idx < n; ++idx) {
            auto v = run_sample(idx);
            if (v) found.push_back(*v);
        }
    } else {
        apply_thread_cap();
#ifdef _OPENMP
        std::vector<std::vector<Sample>> chunks(1);
#pragma omp parallel
        {
#pragma omp single
            chunks.resize(static_cast<size_t>(omp_get_num_threads()));
#pragma omp for schedule(static)
            for (long idx = 0; idx < n; ++idx) {
                auto v = run_sample(idx);
                if (v) chunks[static_cast<size_t>(omp_get_thread_num())].push_back(*v);
            }
        }
        for (auto& ch : chunks) found.insert(found.end(), ch.begin(), ch.end());
#else
        for (long idx = 0; idx < n; ++idx) {
            auto v = run_sample(idx);
            if (v) found.push_back(*v);
        }
#endif
    }
    std::sort(found.begin(), found.end(), [](const Sample& a, const Sample& b) {
        if (a.region_i_pair() != b.region_i_pair()) return a.region_i_pair() < b.region_i_pair();
        if (a.dsq != b.dsq) return a.dsq < b.dsq;
        if (!(a.a == b.a)) return a.a < b.a;
        return a.b < b.b;
    });
    PropernessReport rep;
    size_t idx = 0;
    while (idx < found.size()) {
        size_t end = idx;
        while (end < found.size() && found[end].i == found[idx].i && found[end].j == found[idx].j)
            ++end;
        // inside hit, or a below+above bracket (sorted by dsq: first/last)
        const Sample* inside = nullptr;
        for (size_t k = idx; k < end && !inside; ++k)
            if (found[k].side == 0) inside = &found[k];
        if (inside) {
            PairViolation v;
            v.region_i = inside->i;
            v.region_j = inside->j;
            v.dmin_sq = inside->dsq;
            v.dmax_sq = inside->dsq;
            v.witness_a = inside->a;
            v.witness_b = inside->b;
            rep.violations.push_back(v);
        } else if (found[idx].side == -1 && found[end - 1].side == 1) {
            PairViolation v;
            v.region_i = found[idx].i;
            v.region_j = found[idx].j;
            v.dmin_sq = found[idx].dsq;
            v.dmax_sq = found[end - 1].dsq;
            v.witness_a = found[idx].a;
            v.witness_b = found[idx].b;
            rep.violations.push_back(v);
        }
        idx = end;
    }
    rep.proper = rep.violations.empty();
    return rep;
}

bool monochromatic_path_conflict(const PlanarMap& map, const std::vector<Point>& path,
                                 const Point& z) {
    if (path.size() < 2) throw MapError("InvalidInput", "path needs at least two points");
    // the path must stay inside one region (closure)
    int region = -1;
    for (size_t ri = 0; ri < map.regions.size(); ++ri) {
        bool all = true;
        for (const auto& p : path) {
            if (locate_point(p, map.regions[ri].poly) == Location::Outside) {
                all = false;
                break;
            }
        }
        if (all) {
            region = static_cast<int>(ri);
            break;
        }
    }
    if (region < 0)
        throw MapError("PathNotMonochromatic", "path does not stay inside a single region");
    ColorId c = map.regions[static_cast<size_t>(region)].color;
    auto colors_z = multicolor_at(map, z);
    if (!colors_z.count(c)) return false;
    Rational ds = dist_sq(z, path.front());
    Rational de = dist_sq(z, path.back());
    return (ds < 1 && de > 1) || (de < 1 && ds > 1);
}

}  // namespace chromap
