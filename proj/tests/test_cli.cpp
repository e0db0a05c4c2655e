// End-to-end contract tests against the installed CLI binary. The path comes
// in through the CONFDET_CLI_PATH compile definition.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
    int exit_code{-1};
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path();
    const fs::path out = dir / ("confdet_cli_out_" + std::to_string(counter) + ".txt");
    const fs::path err = dir / ("confdet_cli_err_" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd = std::string(CONFDET_CLI_PATH) + " " + args + " > " +
                            out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    fs::remove(out);
    fs::remove(err);
    return r;
}

fs::path write_config(const std::string& name, const json& j) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p) << j.dump();
    return p;
}

const json kCanonical{{"n", 2}, {"points", {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}}};
const json kCollinear{{"n", 2}, {"points", {{1.0, 0.0, 0.0}, {2.0, 0.0, 0.0}}}};

}  // namespace

TEST_CASE("compute emits the pinned determinant value") {
    const auto path = write_config("cli_canon.json", kCanonical);
    const RunResult r = run_cli("compute " + path.string());
    REQUIRE(r.exit_code == 0);
    const json rep = json::parse(r.out);
    CHECK(std::abs(rep["D"].get<double>() - 1.4571067811865475) < 1e-10);
    CHECK(rep["trusted"].get<bool>());
    CHECK(rep["command"] == "compute");
    CHECK(rep["input_digest"].get<std::string>().size() == 16);
    fs::remove(path);
}

TEST_CASE("compute exits 2 on a wall violation, naming the points") {
    const auto path =
        write_config("cli_dup.json", json{{"n", 2}, {"points", {{1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}}}});
    const RunResult r = run_cli("compute " + path.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("points 1,2") != std::string::npos);
    CHECK(r.err.find("x_r != x_s") != std::string::npos);
    fs::remove(path);
}

TEST_CASE("compute reports the collinear equality case") {
    const auto path = write_config("cli_col.json", kCollinear);
    const RunResult r = run_cli("compute " + path.string());
    REQUIRE(r.exit_code == 0);
    CHECK(std::abs(json::parse(r.out)["D"].get<double>() - 1.0) < 1e-12);
    fs::remove(path);
}

TEST_CASE("compute --flag-map adds the unitary residuals") {
    const auto path = write_config("cli_fm.json", kCanonical);
    const RunResult r = run_cli("compute " + path.string() + " --flag-map");
    REQUIRE(r.exit_code == 0);
    const json rep = json::parse(r.out);
    CHECK(rep["flag_map"]["unitarity_residual"].get<double>() < 1e-9);
    CHECK(rep["flag_map"]["pairing_residual"].get<double>() < 1e-9);
    fs::remove(path);
}

TEST_CASE("scaling the input leaves the reported D unchanged") {
    const auto a = write_config("cli_scale_a.json", kCanonical);
    const auto b = write_config(
        "cli_scale_b.json", json{{"n", 2}, {"points", {{10.0, 0.0, 0.0}, {0.0, 10.0, 0.0}}}});
    const double da = json::parse(run_cli("compute " + a.string()).out)["D"].get<double>();
    const double db = json::parse(run_cli("compute " + b.string()).out)["D"].get<double>();
    CHECK(std::abs(da - db) <= 1e-9 * std::abs(da));
    fs::remove(a);
    fs::remove(b);
}

TEST_CASE("verify passes a valid configuration and honors --trials 0") {
    const auto path = write_config(
        "cli_verify.json",
        json{{"n", 3}, {"points", {{1.0, 0.2, -0.3}, {0.1, 1.4, 0.5}, {-0.7, 0.3, 1.1}}}});
    const RunResult r = run_cli("verify " + path.string() + " --trials 50 --seed 5");
    REQUIRE(r.exit_code == 0);
    const json rep = json::parse(r.out);
    for (const auto& [name, fam] : rep["families"].items()) {
        INFO(name);
        CHECK(fam["pass"].get<bool>());
    }
    CHECK(rep["translation"]["status"] == "EXPECTED-VARIANT");

    const RunResult r0 = run_cli("verify " + path.string() + " --trials 0");
    CHECK(r0.exit_code == 0);
    fs::remove(path);
}

TEST_CASE("search honors the exit contract and writes the CSV table") {
    const fs::path report = fs::temp_directory_path() / "cli_search.json";
    const fs::path csv = fs::temp_directory_path() / "cli_search_samples.csv";
    const RunResult r = run_cli("search --n 2 --count 300 --seed 42 --out " + report.string());
    REQUIRE(r.exit_code == 0);
    const json rep = json::parse(slurp(report));
    CHECK(rep["min_D"].get<double>() >= 1.0 - 1e-9);
    CHECK(rep["violations"].empty());
    CHECK(rep["evaluated"] == 300);

    REQUIRE(fs::exists(csv));
    std::ifstream in(csv);
    std::string line;
    int lines = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++lines;
    CHECK(lines == 301);  // header + one row per sample
    fs::remove(report);
    fs::remove(csv);
}

TEST_CASE("search --minimize polishes toward the proven floor") {
    const fs::path report = fs::temp_directory_path() / "cli_min.json";
    const RunResult r =
        run_cli("search --n 2 --count 10 --seed 8 --minimize --out " + report.string());
    REQUIRE(r.exit_code == 0);
    const json rep = json::parse(slurp(report));
    CHECK(std::abs(rep["minimize"]["best_D"].get<double>() - 1.0) < 1e-6);
    fs::remove(report);
    fs::remove(fs::temp_directory_path() / "cli_min_samples.csv");
}

TEST_CASE("search validates its flags") {
    CHECK(run_cli("search --count 10").exit_code == 2);             // missing --n
    CHECK(run_cli("search --n 20 --count 1").exit_code == 2);       // n out of range
    CHECK(run_cli("search --n 3 --distribution bogus").exit_code == 2);
}

TEST_CASE("oracle prints 15-digit values and rejects walls") {
    CHECK(run_cli("oracle --r 1 --theta 1.5707963267948966").out ==
          "1.457106781186548\n");
    CHECK(run_cli("oracle --r 2 --theta 0").out == "1.000000000000000\n");
    CHECK(run_cli("oracle --r 1 --theta 0").exit_code == 2);
    CHECK(run_cli("oracle --r 1").exit_code == 2);  // --theta is required
}

TEST_CASE("shell distribution flag parses bounds") {
    const fs::path report = fs::temp_directory_path() / "cli_shell.json";
    const RunResult r = run_cli(
        "search --n 2 --count 20 --seed 2 --distribution shell:0.5:2.0 --out " +
        report.string());
    REQUIRE(r.exit_code == 0);
    const json rep = json::parse(slurp(report));
    CHECK(rep["spec"]["distribution"] == "shell");
    CHECK(rep["spec"]["shell_rmin"].get<double>() == 0.5);
    fs::remove(report);
    fs::remove(fs::temp_directory_path() / "cli_shell_samples.csv");
}

TEST_CASE("missing input files exit 2") {
    CHECK(run_cli("compute /nonexistent/conf.json").exit_code == 2);
}
