#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "confdet/quatlin.hpp"
#include "confdet/search.hpp"

namespace py = pybind11;
using namespace confdet;

namespace {

using PyPoints = std::vector<std::array<double, 3>>;

std::vector<Vec3> to_vec3(const PyPoints& pts) {
    std::vector<Vec3> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back({p[0], p[1], p[2]});
    return out;
}

PyPoints from_vec3(const std::vector<Vec3>& pts) {
    PyPoints out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back({p.x, p.y, p.z});
    return out;
}

Configuration make_config(const PyPoints& pts, std::optional<double> tol) {
    return tol ? validate_configuration(to_vec3(pts), *tol)
               : validate_configuration(to_vec3(pts));
}

SampleSpec make_spec(int n, long long count, std::uint64_t seed,
                     const std::string& distribution, double wall_guard,
                     double shell_rmin, double shell_rmax) {
    SampleSpec spec;
    spec.n = n;
    spec.count = count;
    spec.seed = seed;
    spec.wall_guard = wall_guard;
    spec.shell_rmin = shell_rmin;
    spec.shell_rmax = shell_rmax;
    if (distribution == "gaussian")
        spec.dist = Distribution::gaussian;
    else if (distribution == "sphere")
        spec.dist = Distribution::unit_sphere;
    else if (distribution == "shell")
        spec.dist = Distribution::shell;
    else
        throw Error("unknown distribution \"" + distribution +
                    "\" (expected gaussian, sphere or shell)");
    spec.check();
    return spec;
}

std::vector<std::vector<Complex>> matrix_rows(const CMatrix& m) {
    std::vector<std::vector<Complex>> rows(m.dim, std::vector<Complex>(m.dim));
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) rows[i][j] = m.at(i, j);
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Configuration determinants for point configurations in R^3: the "
              "Weyl-invariant quantity D = det(M)/P, the unitary flag-map "
              "representative, and Monte Carlo / minimization searches testing "
              "the conjectures D != 0 and D >= 1.";

    const auto base = py::register_exception<Error>(m, "ConfdetError");
    py::register_exception<SingularConfiguration>(m, "SingularConfigurationError", base);

    py::class_<DeterminantReport>(m, "DeterminantReport")
        .def_readonly("D", &DeterminantReport::D)
        .def_readonly("det_M", &DeterminantReport::det_M)
        .def_readonly("P", &DeterminantReport::P)
        .def_readonly("im_residual", &DeterminantReport::im_residual)
        .def_readonly("cond_hint", &DeterminantReport::cond_hint)
        .def_readonly("trusted", &DeterminantReport::trusted)
        .def("__repr__", [](const DeterminantReport& r) {
            return "DeterminantReport(D=" + std::to_string(r.D) +
                   ", trusted=" + (r.trusted ? "True" : "False") + ")";
        });

    py::class_<ConjectureViolation>(m, "ConjectureViolation")
        .def_readonly("index", &ConjectureViolation::index)
        .def_property_readonly(
            "points", [](const ConjectureViolation& v) { return from_vec3(v.config.points); })
        .def_readonly("primary", &ConjectureViolation::primary)
        .def_readonly("recheck", &ConjectureViolation::recheck);

    py::class_<SearchReport>(m, "SearchReport")
        .def_readonly("evaluated", &SearchReport::evaluated)
        .def_readonly("rejected", &SearchReport::rejected)
        .def_readonly("min_D", &SearchReport::min_D)
        .def_readonly("mean_D", &SearchReport::mean_D)
        .def_readonly("max_D", &SearchReport::max_D)
        .def_property_readonly(
            "argmin_points", [](const SearchReport& r) { return from_vec3(r.argmin.points); })
        .def_readonly("violations", &SearchReport::violations)
        .def_property_readonly("histogram", [](const SearchReport& r) {
            return std::vector<long long>(r.histogram.begin(), r.histogram.end());
        });

    m.def(
        "compute_d",
        [](const PyPoints& pts, std::optional<double> tol) {
            return compute_D(make_config(pts, tol));
        },
        py::arg("points"), py::arg("tol") = std::nullopt,
        "Evaluate the normalized determinant D for n points in R^3.");

    m.def(
        "lift",
        [](double x, double y, double z) {
            const Spinor s = lift(Vec3{x, y, z});
            return std::make_pair(s.u, s.v);
        },
        py::arg("x"), py::arg("y"), py::arg("z"),
        "Unit-norm Hopf lift (u, v) of a unit vector; v/u is its stereographic "
        "projection.");

    m.def(
        "stereographic",
        [](double x, double y, double z) -> std::optional<Complex> {
            return stereographic(Vec3{x, y, z});
        },
        py::arg("x"), py::arg("y"), py::arg("z"),
        "Stereographic projection of a unit vector; None at the north pole.");

    m.def("oracle_n2", &oracle_n2, py::arg("r"), py::arg("theta"),
          "Closed-form D for two points with norm ratio r and angle theta.");

    m.def(
        "reduce_n2",
        [](const PyPoints& pts, std::optional<double> tol) {
            return reduce_n2(make_config(pts, tol));
        },
        py::arg("points"), py::arg("tol") = std::nullopt,
        "Canonical invariants (r, theta) of a two-point configuration.");

    m.def(
        "monte_carlo",
        [](int n, long long count, std::uint64_t seed, const std::string& distribution,
           double wall_guard, double shell_rmin, double shell_rmax) {
            return monte_carlo(
                make_spec(n, count, seed, distribution, wall_guard, shell_rmin, shell_rmax));
        },
        py::arg("n"), py::arg("count"), py::arg("seed") = 0,
        py::arg("distribution") = "gaussian", py::arg("wall_guard") = 1e-4,
        py::arg("shell_rmin") = 0.5, py::arg("shell_rmax") = 1.5,
        "Deterministic Monte Carlo survey of D; violations of D >= 1 are recorded, "
        "never dropped.");

    m.def(
        "sample_points",
        [](int n, std::uint64_t seed, long long index, const std::string& distribution,
           double wall_guard, double shell_rmin, double shell_rmax) {
            const SampleSpec spec =
                make_spec(n, 1, seed, distribution, wall_guard, shell_rmin, shell_rmax);
            return from_vec3(sample_config(spec, index).points);
        },
        py::arg("n"), py::arg("seed") = 0, py::arg("index") = 0,
        py::arg("distribution") = "gaussian", py::arg("wall_guard") = 1e-4,
        py::arg("shell_rmin") = 0.5, py::arg("shell_rmax") = 1.5,
        "The index-th pseudo-random configuration of a sampling spec.");

    m.def(
        "minimize_d",
        [](const PyPoints& pts, int max_iter, double simplex_scale, double ftol,
           double wall_penalty_weight, int restarts, double wall_guard) {
            MinimizeOptions opts;
            opts.max_iter = max_iter;
            opts.simplex_scale = simplex_scale;
            opts.ftol = ftol;
            opts.wall_penalty_weight = wall_penalty_weight;
            opts.restarts = restarts;
            opts.wall_guard = wall_guard;
            const auto [c, d] = minimize_D(make_config(pts, std::nullopt), opts);
            return std::make_pair(from_vec3(c.points), d);
        },
        py::arg("points"), py::arg("max_iter") = 2000, py::arg("simplex_scale") = 0.1,
        py::arg("ftol") = 1e-12, py::arg("wall_penalty_weight") = 1e6,
        py::arg("restarts") = 5, py::arg("wall_guard") = 1e-4,
        "Nelder-Mead minimization of D with a wall penalty; returns (points, D).");

    m.def(
        "polar_flag",
        [](const PyPoints& pts, std::optional<double> tol) {
            return matrix_rows(polar_flag(make_config(pts, tol)).U);
        },
        py::arg("points"), py::arg("tol") = std::nullopt,
        "Unitary flag-map representative U = A (A*A)^{-1/2}, as a nested list of "
        "rows.");

    m.def(
        "flag_residuals",
        [](const PyPoints& pts, std::optional<double> tol) {
            const FlagPoint f = polar_flag(make_config(pts, tol));
            return std::make_pair(unitarity_residual(f), pairing_residual(f));
        },
        py::arg("points"), py::arg("tol") = std::nullopt,
        "(unitarity, column-pairing) residuals of the flag-map representative.");

#ifdef CONFDET_VERSION
    m.attr("__version__") = CONFDET_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
