#include "confdet/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "confdet/io.hpp"
#include "confdet/quatlin.hpp"

namespace confdet::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitInvariance = 4;
constexpr int kExitViolation = 5;

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const json& report, const std::string& out_path) {
    const std::string body = report.dump(2) + "\n";
    if (out_path.empty())
        std::cout << body;
    else
        write_text_file(out_path, body);
}

std::string csv_path_for(const std::string& out_path) {
    if (out_path.empty()) return "search_samples.csv";
    const std::filesystem::path p(out_path);
    std::filesystem::path q = p.parent_path() / p.stem();
    return q.string() + "_samples.csv";
}

Distribution parse_distribution(const std::string& text, SampleSpec& spec) {
    if (text == "gaussian") return Distribution::gaussian;
    if (text == "sphere") return Distribution::unit_sphere;
    if (text.rfind("shell:", 0) == 0) {
        const auto rest = text.substr(6);
        const auto colon = rest.find(':');
        if (colon != std::string::npos) {
            try {
                spec.shell_rmin = std::stod(rest.substr(0, colon));
                spec.shell_rmax = std::stod(rest.substr(colon + 1));
                return Distribution::shell;
            } catch (const std::exception&) {
            }
        }
    }
    throw Error("unknown distribution \"" + text +
                "\" (expected gaussian, sphere or shell:rmin:rmax)");
}

struct ComputeArgs {
    std::string input;
    std::string out;
    double tol{-1.0};
    bool flag_map{false};
};

int run_compute(const ComputeArgs& args) {
    Timer timer;
    const std::string digest = file_digest(args.input);
    ConfigFile cf = read_config_file(args.input);
    if (args.tol >= 0.0) cf.tol = args.tol;
    const Configuration c = cf.to_configuration();

    const DeterminantReport rep = compute_D(c);
    json report{{"command", "compute"},
                {"input", args.input},
                {"input_digest", digest},
                {"n", c.n()},
                {"points", points_to_json(c.points)},
                {"tol", c.tol}};
    report.update(report_to_json(rep));
    if (args.flag_map) {
        const FlagPoint f = polar_flag(c);
        report["flag_map"] = json{{"unitarity_residual", unitarity_residual(f)},
                                  {"pairing_residual", pairing_residual(f)}};
    }
    report["timing_sec"] = timer.seconds();
    emit(report, args.out);
    return kExitOk;
}

struct VerifyArgs {
    std::string input;
    std::string out;
    int trials{50};
    std::uint64_t seed{1};
    double tol{-1.0};
};

struct Family {
    Family(const char* name_, double tolerance_) : name(name_), tolerance(tolerance_) {}

    const char* name;
    double tolerance;
    double max_residual{0.0};
    std::string witness;  // transform that produced the max residual

    void update(double residual, const std::string& transform) {
        if (residual >= max_residual) {
            max_residual = residual;
            witness = transform;
        }
    }
};

std::string describe_weyl(const WeylElement& w) {
    std::string s = "signs(";
    for (std::size_t i = 0; i < w.signs.size(); ++i)
        s += (w.signs[i] > 0 ? "+" : "-");
    s += ") perm(";
    for (std::size_t i = 0; i < w.perm.size(); ++i)
        s += (i ? "," : "") + std::to_string(w.perm[i] + 1);
    return s + ")";
}

int run_verify(const VerifyArgs& args) {
    Timer timer;
    const std::string digest = file_digest(args.input);
    ConfigFile cf = read_config_file(args.input);
    if (args.tol >= 0.0) cf.tol = args.tol;
    const Configuration c = cf.to_configuration();
    const int n = c.n();
    const DeterminantReport base = compute_D(c);
    const double d0 = std::abs(base.D);

    Family families[] = {{"weyl", 1e-9},   {"scaling", 1e-9},
                         {"rotation", 1e-9}, {"lift_independence", 1e-9},
                         {"reality", 1e-8},  {"flag_equivariance", 1e-7}};
    double translation_max = 0.0;

    std::mt19937_64 rng(args.seed);
    std::uniform_real_distribution<double> log_scale(std::log(0.1), std::log(10.0));
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double rms = rms_norm(c.points);
    std::optional<FlagPoint> flag0;
    if (args.trials > 0) flag0 = polar_flag(c);

    const auto rel = [&](double d) { return std::abs(d - base.D) / d0; };

    for (int t = 0; t < args.trials; ++t) {
        const WeylElement w = random_weyl(n, rng);
        families[0].update(rel(compute_D(weyl_act(w, c)).D), describe_weyl(w));

        const double lambda = std::exp(log_scale(rng));
        Configuration scaled = c;
        for (auto& p : scaled.points) p = p * lambda;
        scaled.tol = c.tol * lambda;
        families[1].update(rel(compute_D(scaled).D), "scale " + std::to_string(lambda));

        const Mat3 rot = random_rotation(rng);
        Configuration rotated = c;
        for (auto& p : rotated.points) p = rot.apply(p);
        families[2].update(rel(compute_D(rotated).D),
                           "rotation trial " + std::to_string(t));

        families[3].update(rel(compute_D(scrambled_table(c, rng, 0.5, 2.0)).D),
                           "lift rescale trial " + std::to_string(t));

        families[4].update(compute_D(scrambled_table(c, rng, 0.5, 2.0)).im_residual,
                           "lift rephase trial " + std::to_string(t));

        families[5].update(
            flag_residual(polar_flag(weyl_act(w, c)), weyl_act(w, *flag0)),
            describe_weyl(w));

        // Translations genuinely change D; report the witnessed spread only.
        const Vec3 shift{gauss(rng) * 0.5 * rms, gauss(rng) * 0.5 * rms,
                         gauss(rng) * 0.5 * rms};
        Configuration moved = c;
        for (auto& p : moved.points) p = p + shift;
        try {
            translation_max = std::max(translation_max, rel(compute_D(moved).D));
        } catch (const Error&) {
            // the shift may land on a wall; skip that witness
        }
    }

    bool all_pass = true;
    json table = json::object();
    for (const Family& f : families) {
        const bool pass = f.max_residual < f.tolerance;
        all_pass = all_pass && pass;
        json entry{{"max_residual", f.max_residual}, {"tolerance", f.tolerance}, {"pass", pass}};
        if (!f.witness.empty()) entry["witness"] = f.witness;
        if (!pass)
            std::cerr << "verify: " << f.name << " residual " << f.max_residual
                      << " exceeds " << f.tolerance << " (witness: " << f.witness << ")\n";
        table[f.name] = entry;
    }
    json report{{"command", "verify"},
                {"input", args.input},
                {"input_digest", digest},
                {"n", n},
                {"trials", args.trials},
                {"seed", args.seed},
                {"D", base.D},
                {"families", table},
                {"translation",
                 json{{"max_relative_change", translation_max}, {"status", "EXPECTED-VARIANT"}}},
                {"timing_sec", timer.seconds()}};
    emit(report, args.out);

    if (!all_pass) {
        std::cerr << "verify: at least one invariance family exceeded its tolerance\n";
        return kExitInvariance;
    }
    return kExitOk;
}

struct SearchArgs {
    int n{2};
    long long count{100};
    std::uint64_t seed{1};
    std::string distribution{"gaussian"};
    bool minimize{false};
    std::string out;
};

int run_search(const SearchArgs& args) {
    Timer timer;
    SampleSpec spec;
    spec.n = args.n;
    spec.count = args.count;
    spec.seed = args.seed;
    spec.dist = parse_distribution(args.distribution, spec);
    spec.check();

    const std::string csv_path = csv_path_for(args.out);
    SearchCsv csv(csv_path, spec.n);

    // the k lowest samples double as minimization starts
    const std::size_t keep = static_cast<std::size_t>(std::min<long long>(3, spec.count));
    std::vector<std::pair<double, Configuration>> lowest;
    const SearchReport rep = monte_carlo(
        spec, [&](long long index, const Configuration& c, const DeterminantReport& d) {
            csv.row(index, c, d);
            lowest.emplace_back(d.D, c);
            std::sort(lowest.begin(), lowest.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            if (lowest.size() > keep) lowest.pop_back();
        });

    json report = search_report_to_json(rep);
    report["command"] = "search";
    report["csv"] = csv_path;

    if (args.minimize) {
        const MinimizeOptions opts;
        json runs = json::array();
        double best = rep.min_D;
        for (const auto& [start_d, start_c] : lowest) {
            const auto [argmin, dmin] = minimize_D(start_c, opts);
            best = std::min(best, dmin);
            json entry{{"start_D", start_d},
                       {"min_D", dmin},
                       {"argmin_points", points_to_json(argmin.points)}};
            if (spec.n == 2) {
                const auto [r, theta] = reduce_n2(argmin);
                entry["argmin_r"] = r;
                entry["argmin_theta"] = theta;
            }
            runs.push_back(entry);
        }
        report["minimize"] = json{{"restarts", opts.restarts}, {"runs", runs}, {"best_D", best}};
    }

    report["timing_sec"] = timer.seconds();
    emit(report, args.out);

    if (!rep.violations.empty()) {
        std::cerr << "search: " << rep.violations.size()
                  << " violation(s) of D >= 1 recorded -- potential counterexample, see report\n";
        return kExitViolation;
    }
    return kExitOk;
}

struct OracleArgs {
    double r{1.0};
    double theta{0.0};
};

int run_oracle(const OracleArgs& args) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15Lf\n", oracle_n2_ext(args.r, args.theta));
    std::cout << buf;
    return kExitOk;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Configuration-determinant toolkit: computes the Weyl-invariant "
                 "determinant D of point configurations, the unitary flag-map "
                 "representative, and runs conjecture searches (D != 0, D >= 1)."};
    app.require_subcommand(1);

    ComputeArgs compute_args;
    CLI::App* compute = app.add_subcommand(
        "compute", "Evaluate D (and optionally the flag map) for a configuration file");
    compute->add_option("input", compute_args.input, "configuration JSON file")->required();
    compute->add_option("--tol", compute_args.tol, "absolute wall tolerance override");
    compute->add_flag("--flag-map", compute_args.flag_map,
                      "also emit flag-map unitarity and pairing residuals");
    compute->add_option("--out", compute_args.out, "write the JSON report here");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "Randomized invariance checks (Weyl, scaling, rotation, lifts, "
                  "reality, flag equivariance) on a configuration file");
    verify->add_option("input", verify_args.input, "configuration JSON file")->required();
    verify->add_option("--trials", verify_args.trials, "checks per family")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", verify_args.seed, "RNG seed");
    verify->add_option("--tol", verify_args.tol, "absolute wall tolerance override");
    verify->add_option("--out", verify_args.out, "write the JSON report here");

    SearchArgs search_args;
    CLI::App* search = app.add_subcommand(
        "search", "Monte Carlo survey of D over pseudo-random configurations");
    search->add_option("--n", search_args.n, "points per configuration (2..16)")->required();
    search->add_option("--count", search_args.count, "number of samples")
        ->check(CLI::PositiveNumber);
    search->add_option("--seed", search_args.seed, "RNG seed");
    search->add_option("--distribution", search_args.distribution,
                       "gaussian | sphere | shell:rmin:rmax");
    search->add_flag("--minimize", search_args.minimize,
                     "polish the lowest samples with Nelder-Mead");
    search->add_option("--out", search_args.out,
                       "write the JSON report here (CSV goes to <stem>_samples.csv)");

    OracleArgs oracle_args;
    CLI::App* oracle =
        app.add_subcommand("oracle", "Closed-form D for two points (norm ratio r, angle theta)");
    oracle->add_option("--r", oracle_args.r, "norm ratio ||x2||/||x1||")->required();
    oracle->add_option("--theta", oracle_args.theta, "angle between the points, radians")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (compute->parsed()) return run_compute(compute_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (search->parsed()) return run_search(search_args);
        if (oracle->parsed()) return run_oracle(oracle_args);
    } catch (const SingularConfiguration& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const DegenerateNormalizer& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}

}  // namespace confdet::cli
