#include "confdet/io.hpp"

#include <cinttypes>
#include <cstdio>

namespace confdet {

using nlohmann::json;

Configuration ConfigFile::to_configuration() const {
    if (tol) return validate_configuration(points, *tol);
    return validate_configuration(points);
}

ConfigFile parse_config(const json& j) {
    if (!j.is_object()) throw Error("configuration document must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw Error("configuration document needs an integer field \"n\"");
    if (!j.contains("points") || !j["points"].is_array())
        throw Error("configuration document needs an array field \"points\"");
    ConfigFile cf;
    cf.n = j["n"].get<int>();
    const auto& pts = j["points"];
    if (static_cast<int>(pts.size()) != cf.n)
        throw Error("points array length " + std::to_string(pts.size()) +
                    " does not match n = " + std::to_string(cf.n));
    for (std::size_t r = 0; r < pts.size(); ++r) {
        const auto& p = pts[r];
        if (!p.is_array() || p.size() != 3 || !p[0].is_number() || !p[1].is_number() ||
            !p[2].is_number())
            throw Error("point " + std::to_string(r + 1) + " must be an array of 3 numbers");
        Vec3 v{p[0].get<double>(), p[1].get<double>(), p[2].get<double>()};
        if (!v.finite())
            throw Error("point " + std::to_string(r + 1) + " has a non-finite coordinate");
        cf.points.push_back(v);
    }
    if (j.contains("tol")) {
        if (!j["tol"].is_number()) throw Error("\"tol\" must be a number");
        cf.tol = j["tol"].get<double>();
    }
    return cf;
}

ConfigFile read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open configuration file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error("cannot parse " + path + ": " + e.what());
    }
    return parse_config(j);
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file for digest: " + path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return buf;
}

json complex_to_json(const Complex& z) { return json{z.real(), z.imag()}; }

json report_to_json(const DeterminantReport& rep) {
    return json{{"D", rep.D},
                {"det_M", complex_to_json(rep.det_M)},
                {"P", complex_to_json(rep.P)},
                {"im_residual", rep.im_residual},
                {"cond_hint", rep.cond_hint},
                {"trusted", rep.trusted}};
}

std::string distribution_name(Distribution d) {
    switch (d) {
        case Distribution::gaussian: return "gaussian";
        case Distribution::unit_sphere: return "sphere";
        case Distribution::shell: return "shell";
    }
    return "unknown";
}

json spec_to_json(const SampleSpec& spec) {
    json j{{"n", spec.n},
           {"count", spec.count},
           {"seed", spec.seed},
           {"distribution", distribution_name(spec.dist)},
           {"wall_guard", spec.wall_guard}};
    if (spec.dist == Distribution::shell) {
        j["shell_rmin"] = spec.shell_rmin;
        j["shell_rmax"] = spec.shell_rmax;
    }
    return j;
}

json points_to_json(const std::vector<Vec3>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back(json{p.x, p.y, p.z});
    return arr;
}

json search_report_to_json(const SearchReport& rep) {
    json violations = json::array();
    for (const auto& v : rep.violations) {
        violations.push_back(json{{"index", v.index},
                                  {"points", points_to_json(v.config.points)},
                                  {"primary", report_to_json(v.primary)},
                                  {"recheck", report_to_json(v.recheck)}});
    }
    return json{{"spec", spec_to_json(rep.spec)},
                {"evaluated", rep.evaluated},
                {"rejected", rep.rejected},
                {"min_D", rep.min_D},
                {"mean_D", rep.mean_D},
                {"max_D", rep.max_D},
                {"argmin_points", points_to_json(rep.argmin.points)},
                {"histogram", rep.histogram},
                {"violations", violations}};
}

namespace {
std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}
}  // namespace

SearchCsv::SearchCsv(const std::string& path, int n) : out_(path, std::ios::binary) {
    if (!out_) throw Error("cannot open CSV output: " + path);
    out_ << "index,D,im_residual,cond_hint";
    for (int r = 0; r < n; ++r)
        out_ << ",p" << r + 1 << "_x,p" << r + 1 << "_y,p" << r + 1 << "_z";
    out_ << "\n";
}

void SearchCsv::row(long long index, const Configuration& c, const DeterminantReport& rep) {
    out_ << index << ',' << fmt17(rep.D) << ',' << fmt17(rep.im_residual) << ','
         << fmt17(rep.cond_hint);
    for (const auto& p : c.points)
        out_ << ',' << fmt17(p.x) << ',' << fmt17(p.y) << ',' << fmt17(p.z);
    out_ << "\n";
}

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path);
    out << body;
}

}  // namespace confdet
