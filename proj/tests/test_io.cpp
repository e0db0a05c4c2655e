#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "confdet/io.hpp"

using namespace confdet;
using nlohmann::json;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name)
        : path(std::filesystem::temp_directory_path() / name) {}
    ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("config files parse and validate") {
    const json good{{"n", 2}, {"points", {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}}};
    const ConfigFile cf = parse_config(good);
    CHECK(cf.n == 2);
    CHECK(!cf.tol.has_value());
    const Configuration c = cf.to_configuration();
    CHECK(c.n() == 2);

    const json with_tol{{"n", 2}, {"points", {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}}, {"tol", 0.5}};
    CHECK(parse_config(with_tol).to_configuration().tol == 0.5);

    CHECK_THROWS_AS(parse_config(json{{"n", 3}, {"points", {{1.0, 0.0, 0.0}}}}), Error);
    CHECK_THROWS_AS(parse_config(json{{"points", {{1.0, 0.0, 0.0}}}}), Error);
    CHECK_THROWS_AS(parse_config(json{{"n", 1}, {"points", {{1.0, 0.0}}}}), Error);
    CHECK_THROWS_AS(parse_config(json::array()), Error);
}

TEST_CASE("file digests are stable and content sensitive") {
    TempFile a("confdet_digest_a.json");
    TempFile b("confdet_digest_b.json");
    write_text_file(a.path.string(), "{\"n\": 2}");
    write_text_file(b.path.string(), "{\"n\": 3}");
    CHECK(file_digest(a.path.string()) == file_digest(a.path.string()));
    CHECK(file_digest(a.path.string()) != file_digest(b.path.string()));
    CHECK(file_digest(a.path.string()).size() == 16);
}

TEST_CASE("report serialization round-trips every float exactly") {
    DeterminantReport rep;
    rep.D = 1.0 / 3.0;
    rep.det_M = Complex(-0.12345678901234567, 3.9e-300);
    rep.P = Complex(0.7071067811865476, -0.7071067811865475);
    rep.im_residual = 5.551115123125783e-17;
    rep.cond_hint = 123456.78901234567;
    rep.trusted = true;

    const std::string text = report_to_json(rep).dump(2);
    const json back = json::parse(text);
    CHECK(back["D"].get<double>() == rep.D);
    CHECK(back["det_M"][0].get<double>() == rep.det_M.real());
    CHECK(back["det_M"][1].get<double>() == rep.det_M.imag());
    CHECK(back["P"][0].get<double>() == rep.P.real());
    CHECK(back["P"][1].get<double>() == rep.P.imag());
    CHECK(back["im_residual"].get<double>() == rep.im_residual);
    CHECK(back["cond_hint"].get<double>() == rep.cond_hint);
}

TEST_CASE("search reports serialize their whole spec") {
    SampleSpec spec;
    spec.n = 2;
    spec.count = 3;
    spec.seed = 9;
    const SearchReport rep = monte_carlo(spec);
    const json j = search_report_to_json(rep);
    CHECK(j["spec"]["n"] == 2);
    CHECK(j["spec"]["seed"] == 9);
    CHECK(j["spec"]["distribution"] == "gaussian");
    CHECK(j["evaluated"] == 3);
    CHECK(j["histogram"].size() == 11);
    CHECK(j["violations"].empty());
    CHECK(j["min_D"].get<double>() == rep.min_D);
}

TEST_CASE("sample CSV has a header, LF endings, and round-trip floats") {
    TempFile csv("confdet_samples_test.csv");
    SampleSpec spec;
    spec.n = 2;
    spec.count = 4;
    spec.seed = 21;
    {
        SearchCsv writer(csv.path.string(), spec.n);
        monte_carlo(spec, [&](long long i, const Configuration& c, const DeterminantReport& d) {
            writer.row(i, c, d);
        });
    }
    std::ifstream in(csv.path, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content.find('\r') == std::string::npos);

    std::istringstream lines(content);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "index,D,im_residual,cond_hint,p1_x,p1_y,p1_z,p2_x,p2_y,p2_z");

    int rows = 0;
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        ++rows;
        // column 1 must round-trip to the recomputed D exactly
        const auto first_comma = line.find(',');
        const auto second_comma = line.find(',', first_comma + 1);
        const long long index = std::stoll(line.substr(0, first_comma));
        const double d_read =
            std::stod(line.substr(first_comma + 1, second_comma - first_comma - 1));
        CHECK(d_read == compute_D(sample_config(spec, index)).D);
    }
    CHECK(rows == 4);
}
