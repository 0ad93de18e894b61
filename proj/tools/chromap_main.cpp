#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "chromap/corpus.hpp"
#include "chromap/io.hpp"
#include "chromap/properness.hpp"
#include "chromap/render.hpp"
#include "chromap/scanner.hpp"
#include "chromap/threading.hpp"
#include "json.hpp"

namespace {

using namespace chromap;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitProperness = 2;
constexpr int kExitScanner = 3;
constexpr int kExitHypothesis = 4;
constexpr int kExitInvalid = 5;

json point_json(const Point& p) {
    return json::array({rat_str(p.x), rat_str(p.y)});
}

json violation_json(const Violation& v) {
    json j;
    j["kind"] = violation_kind_name(v.kind);
    json w = json::array();
    for (const auto& p : v.witnesses) w.push_back(point_json(p));
    j["witnesses"] = w;
    json mcs = json::array();
    for (const auto& mc : v.multicolors) mcs.push_back(std::vector<int>(mc.begin(), mc.end()));
    j["multicolors"] = mcs;
    if (v.distance_sq) j["distance_sq"] = rat_str(*v.distance_sq);
    if (v.informational) j["informational"] = true;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

json pair_violation_json(const PairViolation& v) {
    json j;
    j["regions"] = json::array({v.region_i, v.region_j});
    j["dmin_sq"] = rat_str(v.dmin_sq);
    j["dmax_sq"] = rat_str(v.dmax_sq);
    if (v.witness_a) j["witness_a"] = point_json(*v.witness_a);
    if (v.witness_b) j["witness_b"] = point_json(*v.witness_b);
    return j;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

int cmd_validate(const std::string& path) {
    PlanarMap map = map_from_json(read_file(path));
    ConditionReport rep = validate_conditions(map);
    json j;
    auto entry = [](const ConditionReport::Entry& e) {
        json je;
        je["ok"] = e.ok;
        if (!e.note.empty()) je["note"] = e.note;
        json w = json::array();
        for (const auto& p : e.witnesses) w.push_back(point_json(p));
        if (!w.empty()) je["witnesses"] = w;
        return je;
    };
    j["jordan"] = entry(rep.jordan);
    j["locally_finite"] = entry(rep.locally_finite);
    j["forbidden_arcs"] = entry(rep.forbidden_arcs);
    j["3col"] = entry(rep.three_col);
    j["cubic"] = entry(rep.cubic);
    j["poly"] = entry(rep.poly);
    j["all_ok"] = rep.all_ok();
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_properness(const std::string& path, const std::string& eps, long oracle_n,
                   std::uint64_t seed) {
    PlanarMap map = map_from_json(read_file(path));
    ForbiddenInterval interval{rat_parse(eps)};
    PropernessReport rep = properness_check(map, interval);
    json j;
    j["proper"] = rep.proper;
    json vio = json::array();
    for (const auto& v : rep.violations) vio.push_back(pair_violation_json(v));
    j["violations"] = vio;
    json crit = json::array();
    for (const auto& v : rep.critical) crit.push_back(pair_violation_json(v));
    j["critical"] = crit;
    if (oracle_n > 0) {
        PropernessReport orep = sampling_oracle(map, interval, oracle_n, seed);
        json ovio = json::array();
        for (const auto& v : orep.violations) ovio.push_back(pair_violation_json(v));
        j["oracle"] = {{"n", oracle_n}, {"seed", seed}, {"violations", ovio}};
    }
    std::cout << j.dump(2) << "\n";
    return rep.proper ? kExitOk : kExitProperness;
}

int cmd_scan(const std::string& path, const std::vector<double>& disk,
             const std::string& kinds_csv) {
    PlanarMap map = map_from_json(read_file(path));
    std::set<std::string> kinds;
    if (!kinds_csv.empty()) {
        std::stringstream ss(kinds_csv);
        std::string item;
        while (std::getline(ss, item, ',')) kinds.insert(item);
    }
    auto want = [&](const std::string& k) { return kinds.empty() || kinds.count(k); };
    std::vector<Violation> all;
    bool hypothesis_failed = false;
    json j;
    if (want("t3")) {
        for (auto& v : chromaticity_scan(map)) all.push_back(std::move(v));
    }
    if ((want("t7") || want("f32")) && map.k == 6) {
        for (auto& v : trichromatic_pair_scan(map)) {
            bool keep = (v.kind == ViolationKind::SameMulticolorPair_t7 && want("t7")) ||
                        (v.kind == ViolationKind::DisjointMulticolorPair_f32 && want("f32"));
            if (keep) all.push_back(std::move(v));
        }
    }
    if (want("l15")) {
        for (auto& v : bichromatic_unit_scan(map)) all.push_back(std::move(v));
    }
    if (disk.size() == 2) {
        Point center{rat_snap(disk[0], 20), rat_snap(disk[1], 20)};
        DiskAnalysis da = disk_analysis(map, center);
        json dj;
        dj["center"] = point_json(center);
        if (da.u) dj["u"] = point_json(*da.u);
        if (da.hypothesis_failure) {
            dj["hypothesis_failure"] = *da.hypothesis_failure;
            dj["detail"] = da.detail;
            hypothesis_failed = true;
        }
        json cj = json::array();
        for (const auto& [p, mc] : da.census) {
            json e;
            e["point"] = point_json(p);
            e["multicolor"] = std::vector<int>(mc.begin(), mc.end());
            cj.push_back(e);
        }
        dj["census"] = cj;
        j["disk"] = dj;
        for (auto& v : da.violations) all.push_back(std::move(v));
    }
    json vj = json::array();
    bool real_violation = false;
    for (const auto& v : all) {
        vj.push_back(violation_json(v));
        if (!v.informational) real_violation = true;
    }
    j["violations"] = vj;
    std::cout << j.dump(2) << "\n";
    if (hypothesis_failed) return kExitHypothesis;
    return real_violation ? kExitScanner : kExitOk;
}

int cmd_circle(const std::string& sub, const std::string& path, const std::string& pair) {
    ArcColoring c = circle_from_json(read_file(path));
    json j;
    if (sub == "proper") {
        auto rep = circle_proper(c);
        j["proper"] = rep.proper;
        if (rep.witness) {
            j["witness"] =
                json::array({rat_str(rep.witness->first.value), rat_str(rep.witness->second.value)});
        }
        std::cout << j.dump(2) << "\n";
        return rep.proper ? kExitOk : kExitProperness;
    }
    if (sub == "cyclic") {
        j["cyclic"] = is_cyclic(c);
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    if (sub == "recolor") {
        ArcColoring out = make_cyclic(c);
        std::cout << circle_to_json(out);
        return kExitOk;
    }
    if (sub == "triple") {
        int a = 1, b = 2;
        if (!pair.empty()) {
            auto comma = pair.find(',');
            if (comma == std::string::npos) throw MapError("InvalidInput", "--pair wants a,b");
            a = std::stoi(pair.substr(0, comma));
            b = std::stoi(pair.substr(comma + 1));
        }
        auto t = find_triple(c, a, b);
        if (t) {
            j["found"] = true;
            j["angles"] = json::array(
                {rat_str(t->a.angle.value), rat_str(t->b.angle.value), rat_str(t->c.angle.value)});
        } else {
            j["found"] = false;
        }
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    throw MapError("InvalidInput", "unknown circle subcommand");
}

int cmd_curve_index(const std::string& path) {
    TriColoredCurve c = curve_from_json(read_file(path));
    json j;
    j["index"] = curve_index(c);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_curve_check_pair(const std::string& path1, const std::string& path2) {
    ComplementaryPair pair{curve_from_json(read_file(path1)), curve_from_json(read_file(path2))};
    auto rep = index_difference_bound(pair);
    json j;
    j["ind1"] = rep.ind1;
    j["ind2"] = rep.ind2;
    j["difference"] = rep.difference;
    if (!rep.diagnostic.empty()) j["diagnostic"] = rep.diagnostic;
    std::cout << j.dump(2) << "\n";
    return rep.difference <= 1 ? kExitOk : kExitScanner;
}

int cmd_curve_build_annulus(double eta, double theta, const std::string& out_path) {
    // Built-in two-family cover: inner sectors over the upper half plus slack,
    // outer sectors over the lower half plus slack.
    AnnulusSectors sectors;
    sectors.center = pt(0, 0);
    sectors.eta = eta;
    sectors.inner = {{-0.05, 0.55}};
    sectors.outer = {{0.45, 1.05}};
    AnnulusCurve curve = build_annulus_curve(sectors, theta);
    json j;
    j["winding"] = curve.certificate.winding;
    j["max_circle_deviation"] = curve.certificate.max_circle_deviation;
    j["max_tangent_deviation"] = curve.certificate.max_tangent_deviation;
    j["passed"] = curve.certificate.passed(eta, theta);
    std::cerr << j.dump(2) << "\n";
    emit(curve_to_json(curve.curve), out_path);
    return curve.certificate.passed(eta, theta) ? kExitOk : kExitInvalid;
}

int cmd_generate(const std::string& kind, const std::string& d, int k, const std::string& size,
                 const std::string& name, const std::vector<std::string>& window,
                 const std::string& out_path) {
    PlanarMap map = [&]() {
        Rational W = window.size() == 2 ? rat_parse(window[0]) : rat(10);
        Rational H = window.size() == 2 ? rat_parse(window[1]) : rat(10);
        if (kind == "hex7") return generate_hex7(rat_parse(d), W, H);
        if (kind == "stripes") return generate_stripes(k, rat_parse(size), W, H);
        if (kind == "grid") return generate_grid(k, rat_parse(size), W, H);
        if (kind == "crafted") return generate_crafted(name);
        throw MapError("InvalidInput", "unknown corpus kind '" + kind + "'");
    }();
    emit(map_to_json(map), out_path);
    return kExitOk;
}

int cmd_render(const std::string& path, const std::string& layers_csv, double scale,
               const std::string& out_path) {
    PlanarMap map = map_from_json(read_file(path));
    RenderSpec spec;
    spec.scale = scale;
    if (!layers_csv.empty()) {
        spec.layers.clear();
        std::stringstream ss(layers_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item == "regions") spec.layers.insert(RenderLayer::Regions);
            else if (item == "vertices") spec.layers.insert(RenderLayer::Vertices);
            else if (item == "unit-circles") spec.layers.insert(RenderLayer::UnitCircles);
            else if (item == "violations") spec.layers.insert(RenderLayer::Violations);
            else if (item == "none") spec.layers.clear();
            else throw MapError("InvalidInput", "unknown layer '" + item + "'");
        }
    }
    if (spec.layers.count(RenderLayer::Violations)) {
        for (auto& v : chromaticity_scan(map)) spec.violations.push_back(std::move(v));
        if (map.k == 6)
            for (auto& v : trichromatic_pair_scan(map)) spec.violations.push_back(std::move(v));
    }
    emit(render(map, spec), out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    chromap::apply_thread_cap();
    CLI::App app{"chromap: exact map-coloring toolkit"};
    app.require_subcommand(1);

    std::string map_path, eps = "0", out_path, kinds, pair, name, layers_csv;
    std::string circle_path, curve_path, curve_path2, gen_kind, gen_d = "9/10", gen_size = "1";
    std::vector<std::string> window;
    std::vector<double> disk;
    long oracle_n = 0;
    std::uint64_t seed = 1;
    int gen_k = 6;
    double scale = 64.0, eta = 0.01, theta = 0.001;

    auto* validate = app.add_subcommand("validate", "check map-type conditions");
    validate->add_option("map", map_path)->required();

    auto* properness = app.add_subcommand("properness", "exact unit-distance properness check");
    properness->add_option("map", map_path)->required();
    properness->add_option("--eps", eps, "forbidden interval half-width p/q");
    properness->add_option("--oracle", oracle_n, "sampling oracle size");
    properness->add_option("--seed", seed, "oracle seed");

    auto* scan = app.add_subcommand("scan", "forbidden-configuration scanners");
    scan->add_option("map", map_path)->required();
    scan->add_option("--disk", disk, "disk analysis center x y")->expected(2);
    scan->add_option("--kinds", kinds, "comma list from t7,f32,t3,l15");

    auto* circle = app.add_subcommand("circle", "circle arc-coloring calculus");
    circle->require_subcommand(1);
    for (const char* sub : {"proper", "cyclic", "recolor", "triple"}) {
        auto* sc = circle->add_subcommand(sub);
        sc->add_option("file", circle_path)->required();
        if (std::string(sub) == "triple") sc->add_option("--pair", pair, "color pair a,b");
    }

    auto* curve = app.add_subcommand("curve", "tri-colored curve operations");
    curve->require_subcommand(1);
    auto* cindex = curve->add_subcommand("index");
    cindex->add_option("file", curve_path)->required();
    auto* cpair = curve->add_subcommand("check-pair");
    cpair->add_option("file1", curve_path)->required();
    cpair->add_option("file2", curve_path2)->required();
    auto* cann = curve->add_subcommand("build-annulus");
    cann->add_option("--eta", eta);
    cann->add_option("--theta", theta);
    cann->add_option("-o,--out", out_path);

    auto* generate = app.add_subcommand("generate", "corpus map generators");
    generate->add_option("kind", gen_kind, "hex7 | stripes | grid | crafted")->required();
    generate->add_option("--d", gen_d, "hex cell diameter p/q");
    generate->add_option("--k", gen_k, "color count");
    generate->add_option("--size", gen_size, "stripe width / grid cell p/q");
    generate->add_option("--name", name, "crafted fixture name");
    generate->add_option("--window", window, "window width height (rationals)")->expected(2);
    generate->add_option("-o,--out", out_path);

    auto* rendercmd = app.add_subcommand("render", "deterministic SVG figure");
    rendercmd->add_option("map", map_path)->required();
    rendercmd->add_option("--layers", layers_csv, "regions,vertices,unit-circles,violations,none");
    rendercmd->add_option("--scale", scale, "pixels per unit");
    rendercmd->add_option("-o,--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(map_path);
        if (properness->parsed()) return cmd_properness(map_path, eps, oracle_n, seed);
        if (scan->parsed()) return cmd_scan(map_path, disk, kinds);
        if (circle->parsed()) {
            for (const char* sub : {"proper", "cyclic", "recolor", "triple"})
                if (circle->get_subcommand(sub)->parsed()) return cmd_circle(sub, circle_path, pair);
        }
        if (curve->parsed()) {
            if (cindex->parsed()) return cmd_curve_index(curve_path);
            if (cpair->parsed()) return cmd_curve_check_pair(curve_path, curve_path2);
            if (cann->parsed()) return cmd_curve_build_annulus(eta, theta, out_path);
        }
        if (generate->parsed())
            return cmd_generate(gen_kind, gen_d, gen_k, gen_size, name, window, out_path);
        if (rendercmd->parsed()) return cmd_render(map_path, layers_csv, scale, out_path);
    } catch (const chromap::MapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const chromap::GeomError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const chromap::CircleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const chromap::CurveError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitUsage;
}
