#include "confdet/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace confdet {

namespace {

constexpr long long kMaxRedraws = 10000;
constexpr double kViolationSlack = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

void SampleSpec::check() const {
    if (n < 2 || n > 16)
        throw Error("sample spec needs 2 <= n <= 16, got " + std::to_string(n));
    if (count < 1) throw Error("sample spec needs count >= 1");
    if (!(wall_guard > 0.0)) throw Error("sample spec needs wall_guard > 0");
    if (dist == Distribution::shell && !(0.0 < shell_rmin && shell_rmin <= shell_rmax))
        throw Error("shell distribution needs 0 < rmin <= rmax");
}

double wall_distance(const std::vector<Vec3>& points) {
    const double scale = rms_norm(points);
    if (!(scale > 0.0)) return 0.0;
    double d = kInf;
    const int n = static_cast<int>(points.size());
    for (int r = 0; r < n; ++r) {
        d = std::min(d, points[r].norm());
        for (int s = r + 1; s < n; ++s) {
            d = std::min(d, (points[r] - points[s]).norm());
            d = std::min(d, (points[r] + points[s]).norm());
        }
    }
    return d / scale;
}

std::mt19937_64 sample_rng(std::uint64_t seed, long long index) {
    const std::uint64_t s =
        splitmix64(splitmix64(seed) ^ splitmix64(static_cast<std::uint64_t>(index)));
    return std::mt19937_64(s);
}

Vec3 random_unit_vector(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (true) {
        const Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
        const double n = v.norm();
        if (n > 1e-6) return v * (1.0 / n);
    }
}

Mat3 random_rotation(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (true) {
        const double w = gauss(rng), x = gauss(rng), y = gauss(rng), z = gauss(rng);
        if (std::sqrt(w * w + x * x + y * y + z * z) > 1e-6)
            return Mat3::from_quaternion(w, x, y, z);
    }
}

WeylElement random_weyl(int n, std::mt19937_64& rng) {
    WeylElement w = WeylElement::identity(n);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int r = 0; r < n; ++r) w.signs[r] = coin(rng) ? 1 : -1;
    // Fisher-Yates with the shared generator keeps the draw deterministic.
    for (int r = n - 1; r > 0; --r) {
        std::uniform_int_distribution<int> pick(0, r);
        std::swap(w.perm[r], w.perm[pick(rng)]);
    }
    return w;
}

namespace {

std::vector<Vec3> draw_points(const SampleSpec& spec, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Vec3> pts(spec.n);
    switch (spec.dist) {
        case Distribution::gaussian:
            for (auto& p : pts) p = {gauss(rng), gauss(rng), gauss(rng)};
            break;
        case Distribution::unit_sphere:
            for (auto& p : pts) p = random_unit_vector(rng);
            break;
        case Distribution::shell: {
            std::uniform_real_distribution<double> radius(spec.shell_rmin, spec.shell_rmax);
            for (auto& p : pts) p = random_unit_vector(rng) * radius(rng);
            break;
        }
    }
    return pts;
}

}  // namespace

Configuration sample_config(const SampleSpec& spec, long long index, long long* rejections) {
    spec.check();
    std::mt19937_64 rng = sample_rng(spec.seed, index);
    for (long long attempt = 0; attempt < kMaxRedraws; ++attempt) {
        std::vector<Vec3> pts = draw_points(spec, rng);
        const double scale = rms_norm(pts);
        if (scale > 0.0) {
            for (auto& p : pts) p = p * (1.0 / scale);
            if (wall_distance(pts) > spec.wall_guard) return validate_configuration(pts);
        }
        if (rejections) ++*rejections;
    }
    throw RejectionOverflow("no sample satisfied the wall guard after " +
                            std::to_string(kMaxRedraws) + " redraws");
}

DirectionTable scrambled_table(const Configuration& c, std::mt19937_64& rng,
                               double min_mag, double max_mag) {
    DirectionTable tbl = build_direction_table(c);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> mag(min_mag, max_mag);
    const auto spin = [&](Spinor& s) {
        const Complex f = std::polar(mag(rng), angle(rng));
        s.u *= f;
        s.v *= f;
    };
    for (auto& s : tbl.single_minus) spin(s);
    for (auto& s : tbl.single_plus) spin(s);
    for (auto& s : tbl.pair_pp) spin(s);
    for (auto& s : tbl.pair_mm) spin(s);
    for (auto& s : tbl.pair_pm) spin(s);
    for (auto& s : tbl.pair_mp) spin(s);
    return tbl;
}

SearchReport monte_carlo(const SampleSpec& spec, const SampleSink& on_sample) {
    spec.check();
    SearchReport rep;
    rep.spec = spec;
    rep.min_D = kInf;
    rep.max_D = -kInf;
    double sum = 0.0;
    for (long long index = 0; index < spec.count; ++index) {
        const Configuration c = sample_config(spec, index, &rep.rejected);
        const DeterminantReport d = compute_D(c);
        if (on_sample) on_sample(index, c, d);
        ++rep.evaluated;
        sum += d.D;
        if (d.D < rep.min_D) {
            rep.min_D = d.D;
            rep.argmin = c;
        }
        rep.max_D = std::max(rep.max_D, d.D);
        const int bin = d.D < 1.0 ? 0 : (d.D >= 10.0 ? 10 : static_cast<int>(d.D));
        ++rep.histogram[static_cast<std::size_t>(bin)];
        if (d.D < 1.0 - kViolationSlack || !d.trusted) {
            std::mt19937_64 rng = sample_rng(spec.seed ^ 0x5ca1ab1eULL, index);
            rep.violations.push_back(
                {index, c, d, compute_D(scrambled_table(c, rng))});
        }
    }
    rep.mean_D = sum / static_cast<double>(rep.evaluated);
    return rep;
}

namespace {

std::vector<double> flatten(const Configuration& c) {
    std::vector<double> x;
    x.reserve(3 * c.points.size());
    for (const auto& p : c.points) {
        x.push_back(p.x);
        x.push_back(p.y);
        x.push_back(p.z);
    }
    return x;
}

std::vector<Vec3> unflatten(const std::vector<double>& x) {
    std::vector<Vec3> pts(x.size() / 3);
    for (std::size_t i = 0; i < pts.size(); ++i)
        pts[i] = {x[3 * i], x[3 * i + 1], x[3 * i + 2]};
    return pts;
}

struct Objective {
    const MinimizeOptions& opts;

    double operator()(const std::vector<double>& x) const {
        const std::vector<Vec3> pts = unflatten(x);
        const double wd = wall_distance(pts);
        try {
            const Configuration c = validate_configuration(pts);
            const DeterminantReport rep = compute_D(c);
            const double gap = std::max(0.0, opts.wall_guard - wd);
            return rep.D + opts.wall_penalty_weight * gap * gap;
        } catch (const Error&) {
            return kInf;  // inside the guard or otherwise unevaluable
        }
    }
};

struct NmResult {
    std::vector<double> x;
    double f{kInf};
};

NmResult nelder_mead(const Objective& obj, const std::vector<double>& x0, double step,
                     int max_iter, double ftol) {
    const std::size_t dim = x0.size();
    std::vector<std::vector<double>> v(dim + 1, x0);
    for (std::size_t i = 0; i < dim; ++i) v[i + 1][i] += step;
    std::vector<double> f(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) f[i] = obj(v[i]);

    std::vector<std::size_t> order(dim + 1);
    for (int iter = 0; iter < max_iter; ++iter) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
        const std::size_t best = order[0], worst = order[dim], second = order[dim - 1];
        if (std::isfinite(f[worst]) &&
            f[worst] - f[best] <= ftol * (1.0 + std::abs(f[best])))
            break;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t k = 0; k < dim; ++k)
            for (std::size_t i = 0; i <= dim; ++i)
                if (i != worst) centroid[k] += v[i][k];
        for (double& c : centroid) c /= static_cast<double>(dim);

        const auto blend = [&](double t) {
            std::vector<double> p(dim);
            for (std::size_t k = 0; k < dim; ++k)
                p[k] = centroid[k] + t * (centroid[k] - v[worst][k]);
            return p;
        };

        const std::vector<double> xr = blend(1.0);
        const double fr = obj(xr);
        if (fr < f[best]) {
            const std::vector<double> xe = blend(2.0);
            const double fe = obj(xe);
            if (fe < fr) {
                v[worst] = xe;
                f[worst] = fe;
            } else {
                v[worst] = xr;
                f[worst] = fr;
            }
        } else if (fr < f[second]) {
            v[worst] = xr;
            f[worst] = fr;
        } else {
            const bool outside = fr < f[worst];
            const std::vector<double> xc = blend(outside ? 0.5 : -0.5);
            const double fc = obj(xc);
            if (fc < (outside ? fr : f[worst])) {
                v[worst] = xc;
                f[worst] = fc;
            } else {
                for (std::size_t i = 0; i <= dim; ++i) {
                    if (i == best) continue;
                    for (std::size_t k = 0; k < dim; ++k)
                        v[i][k] = v[best][k] + 0.5 * (v[i][k] - v[best][k]);
                    f[i] = obj(v[i]);
                }
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= dim; ++i)
        if (f[i] < f[best]) best = i;
    return {v[best], f[best]};
}

}  // namespace

std::pair<Configuration, double> minimize_D(const Configuration& c0,
                                            const MinimizeOptions& opts) {
    const Objective obj{opts};
    const std::vector<double> x0 = flatten(c0);
    const double scale = rms_norm(c0.points);
    const double step = opts.simplex_scale * scale;

    Configuration best_c = c0;
    double best_D = compute_D(c0).D;
    const auto consider = [&](const NmResult& r) {
        if (!std::isfinite(r.f)) return;
        const std::vector<Vec3> pts = unflatten(r.x);
        if (wall_distance(pts) < opts.wall_guard) return;
        try {
            const Configuration c = validate_configuration(pts);
            const double d = compute_D(c).D;
            if (d < best_D) {
                best_D = d;
                best_c = c;
            }
        } catch (const Error&) {
        }
    };

    consider(nelder_mead(obj, x0, step, opts.max_iter, opts.ftol));
    std::mt19937_64 rng = sample_rng(0xc0ffee, static_cast<long long>(x0.size()));
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int k = 0; k < opts.restarts; ++k) {
        std::vector<double> start = x0;
        for (double& xi : start) xi += step * gauss(rng);
        consider(nelder_mead(obj, start, step, opts.max_iter, opts.ftol));
    }
    return {best_c, best_D};
}

std::vector<double> fd_gradient(const Configuration& c, double h) {
    std::vector<double> x = flatten(c);
    std::vector<double> g(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double saved = x[k];
        x[k] = saved + h;
        const double fp = compute_D(validate_configuration(unflatten(x), c.tol)).D;
        x[k] = saved - h;
        const double fm = compute_D(validate_configuration(unflatten(x), c.tol)).D;
        x[k] = saved;
        g[k] = (fp - fm) / (2.0 * h);
    }
    return g;
}

long double oracle_n2_ext(double r, double theta) {
    if (!(r > 0.0)) throw Error("oracle needs a positive norm ratio r");
    const long double rl = r;
    const long double ct = std::cos(static_cast<long double>(theta));
    const long double d1 = std::sqrt(std::max(0.0L, rl * rl - 2.0L * rl * ct + 1.0L));  // |z-1|
    const long double d2 = std::sqrt(std::max(0.0L, rl * rl + 2.0L * rl * ct + 1.0L));  // |z+1|
    if (d1 < 1e-12L || d2 < 1e-12L)
        throw WallInput("(r, theta) lies on a wall: |z-+1| vanishes");
    const long double four_d = 2.0L + (1.0L + rl) * (1.0L - ct) / d1 +
                               (1.0L + rl) * (1.0L + ct) / d2 +
                               2.0L * rl * (1.0L - ct) * (1.0L + ct) / (d1 * d2);
    return four_d / 4.0L;
}

double oracle_n2(double r, double theta) {
    return static_cast<double>(oracle_n2_ext(r, theta));
}

std::pair<double, double> reduce_n2(const Configuration& c) {
    if (c.n() != 2) throw DimensionMismatch("reduction is defined for n = 2 only");
    const double n1 = c.points[0].norm();
    const double n2 = c.points[1].norm();
    const double cosang =
        std::clamp(c.points[0].dot(c.points[1]) / (n1 * n2), -1.0, 1.0);
    return {n2 / n1, std::acos(cosang)};
}

}  // namespace confdet
