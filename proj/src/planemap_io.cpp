#include <fstream>
#include <sstream>

#include "chromap/io.hpp"
#include "json.hpp"

namespace chromap {

using nlohmann::json;

namespace {

json rat_json(const Rational& q) {
    // Desk-scale maps fit comfortably in 64-bit; reject anything wider rather
    // than silently losing exactness.
    if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
        throw MapError("SerializationOverflow", "rational exceeds 64-bit JSON range");
    return json::array({q.get_num().get_si(), q.get_den().get_si()});
}

Rational rat_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw MapError("InvalidFile", "rational must be a [num, den] pair");
    return rat(j[0].get<long>(), j[1].get<long>());
}

json poly_json(const Polygon& p) {
    json out = json::array();
    for (const auto& v : p.vertices)
        out.push_back(json::array({rat_json(v.x)[0], rat_json(v.x)[1], rat_json(v.y)[0],
                                   rat_json(v.y)[1]}));
    return out;
}

Polygon poly_from_json(const json& j) {
    Polygon p;
    for (const auto& v : j) {
        if (!v.is_array() || v.size() != 4)
            throw MapError("InvalidFile", "point must be [xnum,xden,ynum,yden]");
        p.vertices.push_back(
            Point{rat(v[0].get<long>(), v[1].get<long>()), rat(v[2].get<long>(), v[3].get<long>())});
    }
    return p;
}

}  // namespace

std::string map_to_json(const PlanarMap& map) {
    json j;
    j["k"] = map.k;
    j["window"] = poly_json(map.window);
    json regions = json::array();
    for (const auto& r : map.regions) {
        json jr;
        jr["color"] = r.color;
        jr["poly"] = poly_json(r.poly);
        regions.push_back(jr);
    }
    j["regions"] = regions;
    if (map.unbounded_color) j["unbounded_color"] = *map.unbounded_color;
    return j.dump(2) + "\n";
}

PlanarMap map_from_json(const std::string& text) {
    json j = json::parse(text);
    int k = j.at("k").get<int>();
    Polygon window = poly_from_json(j.at("window"));
    std::vector<ColoredRegion> regions;
    for (const auto& jr : j.at("regions"))
        regions.push_back({poly_from_json(jr.at("poly")), jr.at("color").get<int>()});
    std::optional<ColorId> unbounded;
    if (j.contains("unbounded_color")) unbounded = j["unbounded_color"].get<int>();
    return build_map(std::move(regions), std::move(window), k, unbounded);
}

std::string circle_to_json(const ArcColoring& c) {
    json j;
    json bps = json::array();
    for (const auto& b : c.breakpoints) bps.push_back(rat_json(b.value));
    j["breakpoints"] = bps;
    j["colors"] = c.colors;
    return j.dump(2) + "\n";
}

ArcColoring circle_from_json(const std::string& text) {
    json j = json::parse(text);
    ArcColoring c;
    for (const auto& b : j.at("breakpoints")) c.breakpoints.push_back(TurnAngle(rat_from_json(b)));
    c.colors = j.at("colors").get<std::vector<int>>();
    validate_arc_coloring(c);
    return c;
}

std::string curve_to_json(const TriColoredCurve& c) {
    json j;
    json pts = json::array();
    for (const auto& p : c.points) pts.push_back(json::array({p.x, p.y}));
    j["points"] = pts;
    j["breaks"] = c.breakpoints;
    j["colors"] = c.piece_colors;
    j["closed"] = c.closed;
    return j.dump(2) + "\n";
}

TriColoredCurve curve_from_json(const std::string& text) {
    json j = json::parse(text);
    TriColoredCurve c;
    for (const auto& p : j.at("points")) c.points.push_back({p[0].get<double>(), p[1].get<double>()});
    c.breakpoints = j.at("breaks").get<std::vector<size_t>>();
    c.piece_colors = j.at("colors").get<std::vector<int>>();
    c.closed = j.value("closed", false);
    validate_curve(c);
    return c;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MapError("FileError", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw MapError("FileError", "cannot write " + path);
    out << content;
}

}  // namespace chromap
