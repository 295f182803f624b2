#include "sofa/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace sofa {

namespace {

using nlohmann::json;

// Parses with a line and column in the error message.
json parse(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        std::size_t line = 1, col = 1;
        const std::size_t end = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        // Drop the library's own "[json.exception...] parse error at ..." prefix.
        std::string why = e.what();
        if (const auto pos = why.find(": "); pos != std::string::npos) why = why.substr(pos + 2);
        throw ValidationError("JSON parse error at line " + std::to_string(line) + ", column " + std::to_string(col) +
                              ": " + why);
    }
}

std::vector<double> number_array(const json &j, const char *key) {
    if (!j.contains(key) || !j[key].is_array()) throw ValidationError(std::string("missing array '") + key + "'");
    std::vector<double> out;
    for (const json &v : j[key]) {
        if (!v.is_number()) throw ValidationError(std::string("non-numeric entry in '") + key + "'");
        out.push_back(v.get<double>());
    }
    return out;
}

std::vector<std::pair<double, double>> pair_array(const json &j, const char *key) {
    std::vector<std::pair<double, double>> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) throw ValidationError(std::string("'") + key + "' must be an array");
    for (const json &v : j[key]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw ValidationError(std::string("entries of '") + key + "' must be [number, number]");
        out.emplace_back(v[0].get<double>(), v[1].get<double>());
    }
    return out;
}

double omega_of(const json &j) {
    if (!j.is_object()) throw ValidationError("expected a JSON object");
    if (!j.contains("omega") || !j["omega"].is_number()) throw ValidationError("missing number 'omega'");
    return j["omega"].get<double>();
}

std::vector<Vec2> vertices_of(const json &j) {
    std::vector<Vec2> pts;
    for (const auto &[x, y] : pair_array(j, "vertices")) pts.push_back({x, y});
    return pts;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    return s == "-0.00" ? "0.00" : s;
}

} // namespace

std::string cap_to_json(const Cap &cap) {
    json j;
    j["omega"] = cap.omega();
    j["grid"] = cap.samples().grid();
    j["support"] = cap.samples().values();
    json v = json::array();
    for (Vec2 q : cap.polygon().vertices()) v.push_back({q.x, q.y});
    j["vertices"] = v;
    return j.dump(2);
}

SupportSamples samples_from_json(const std::string &text, double &omega) {
    const json j = parse(text);
    omega = omega_of(j);
    if (j.contains("grid") || j.contains("support")) {
        std::vector<double> grid = number_array(j, "grid"), values = number_array(j, "support");
        if (grid.size() != values.size()) throw ValidationError("'grid' and 'support' differ in length");
        return SupportSamples(std::move(grid), std::move(values), omega);
    }
    const std::vector<Vec2> pts = vertices_of(j);
    if (pts.empty()) throw ValidationError("cap JSON needs grid + support or vertices");
    return SupportSamples::of_polygon(ConvexPolygon::from_vertices(pts));
}

Cap cap_from_json(const std::string &text) {
    const json j = parse(text);
    const double omega = omega_of(j);
    if (j.contains("grid") || j.contains("support")) {
        std::vector<double> grid = number_array(j, "grid"), values = number_array(j, "support");
        if (grid.size() != values.size()) throw ValidationError("'grid' and 'support' differ in length");
        return validate_cap(SupportSamples(std::move(grid), std::move(values), omega), omega);
    }
    const std::vector<Vec2> pts = vertices_of(j);
    if (pts.empty()) throw ValidationError("cap JSON needs grid + support or vertices");
    return cap_from_polygon(ConvexPolygon::from_vertices(pts), omega);
}

std::string measure_to_json(const AngularMeasure &m) {
    json j;
    j["atoms"] = json::array();
    for (const auto &[t, w] : m.atoms) j["atoms"].push_back({t, w});
    j["density"] = json::array();
    for (const auto &[t, v] : m.density) j["density"].push_back({t, v});
    return j.dump(2);
}

AngularMeasure measure_from_json(const std::string &text) {
    const json j = parse(text);
    if (!j.is_object()) throw ValidationError("expected a JSON object");
    AngularMeasure m;
    m.atoms = pair_array(j, "atoms");
    m.density = pair_array(j, "density");
    return m;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

std::string render_svg(const SvgScene &scene) {
    constexpr double kScale = 100.0, kMargin = 20.0;
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
    auto grow = [&](Vec2 q) {
        xmin = std::min(xmin, q.x);
        xmax = std::max(xmax, q.x);
        ymin = std::min(ymin, q.y);
        ymax = std::max(ymax, q.y);
    };
    std::vector<Vec2> outline;
    if (scene.cap) outline = scene.cap->polygon().vertices();
    for (Vec2 q : outline) grow(q);
    if (scene.path)
        for (Vec2 q : *scene.path) grow(q);
    if (scene.s1) {
        for (const Polyline *c : {&scene.s1->gamma_right, &scene.s1->gamma_left, &scene.s1->x})
            for (Vec2 q : *c) grow(q);
        for (const auto &[a, b] : scene.s1->segments) {
            grow(a);
            grow(b);
        }
    }
    if (!(xmin <= xmax)) xmin = xmax = ymin = ymax = 0.0;
    auto X = [&](double x) { return num(kMargin + kScale * (x - xmin)); };
    auto Y = [&](double y) { return num(kMargin + kScale * (ymax - y)); };
    auto points = [&](const std::vector<Vec2> &pts) {
        std::string s;
        for (Vec2 q : pts) s += (s.empty() ? "" : " ") + X(q.x) + "," + Y(q.y);
        return s;
    };

    std::ostringstream os;
    const std::string w = num(2 * kMargin + kScale * (xmax - xmin)), h = num(2 * kMargin + kScale * (ymax - ymin));
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    if (scene.niche && !scene.niche->empty()) {
        // One polygon per run of columns with a nonempty band.
        const auto &cols = scene.niche->columns;
        std::size_t i = 0;
        while (i < cols.size()) {
            if (cols[i].y_upper <= cols[i].y_lower) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < cols.size() && cols[j].y_upper > cols[j].y_lower) ++j;
            std::vector<Vec2> band;
            for (std::size_t k = i; k < j; ++k) band.push_back({cols[k].x, cols[k].y_upper});
            for (std::size_t k = j; k-- > i;) band.push_back({cols[k].x, cols[k].y_lower});
            os << "  <polygon class=\"niche\" fill=\"#bbbbbb\" stroke=\"none\" points=\"" << points(band) << "\"/>\n";
            i = j;
        }
    }
    if (scene.cap)
        os << "  <polygon class=\"cap\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\" points=\""
           << points(outline) << "\"/>\n";
    if (scene.path)
        os << "  <polyline class=\"rotation-path\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1\" points=\""
           << points(*scene.path) << "\"/>\n";
    if (scene.s1) {
        for (const Polyline *c : {&scene.s1->gamma_right, &scene.s1->gamma_left, &scene.s1->x})
            os << "  <polyline class=\"s1-curve\" fill=\"none\" stroke=\"#2c3e50\" stroke-width=\"1\" points=\""
               << points(*c) << "\"/>\n";
        for (const auto &[a, b] : scene.s1->segments)
            os << "  <line class=\"s1-segment\" stroke=\"#2c3e50\" stroke-width=\"1\" x1=\"" << X(a.x) << "\" y1=\""
               << Y(a.y) << "\" x2=\"" << X(b.x) << "\" y2=\"" << Y(b.y) << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace sofa
