#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>

#include "confdet/determinant.hpp"

namespace confdet {

enum class Distribution { gaussian, unit_sphere, shell };

/// How to draw pseudo-random configurations. Every sample is a pure function of
/// (seed, index), so campaigns are reproducible and order-independent.
struct SampleSpec {
    int n{2};                    // in [2, 16]
    long long count{1};
    std::uint64_t seed{0};
    Distribution dist{Distribution::gaussian};
    double shell_rmin{0.5};      // only used by Distribution::shell
    double shell_rmax{1.5};
    double wall_guard{1e-4};     // minimum relative wall distance

    void check() const;
};

/// A sample whose D evaluation violated D >= 1 - 1e-9 or came back untrusted.
/// Before being reported it is re-evaluated with independently re-phased lifts;
/// both evaluations are kept, the entry is never dropped.
struct ConjectureViolation {
    long long index{0};
    Configuration config;
    DeterminantReport primary;
    DeterminantReport recheck;
};

/// Aggregate of a Monte Carlo survey. The histogram has 11 fixed bins:
/// bin 0 counts D < 1, bins 1..9 count [i, i+1), bin 10 counts D >= 10.
struct SearchReport {
    SampleSpec spec;
    long long evaluated{0};
    long long rejected{0};  // wall-guard redraws; evaluated + rejected = attempts
    double min_D{0.0};
    double mean_D{0.0};
    double max_D{0.0};
    Configuration argmin;
    std::vector<ConjectureViolation> violations;
    std::array<long long, 11> histogram{};
};

struct MinimizeOptions {
    int max_iter{2000};
    double simplex_scale{0.1};        // relative to the configuration scale
    double ftol{1e-12};
    double wall_penalty_weight{1e6};
    int restarts{5};
    double wall_guard{1e-4};          // relative wall distance the penalty defends
};

/// Smallest relative wall distance of a point list: min over ||x_r||,
/// ||x_r - x_s||, ||x_r + x_s||, divided by the RMS point norm.
double wall_distance(const std::vector<Vec3>& points);

/// Deterministic per-sample generator: identical (seed, index) pairs give
/// identical streams regardless of evaluation order.
std::mt19937_64 sample_rng(std::uint64_t seed, long long index);

Vec3 random_unit_vector(std::mt19937_64& rng);
Mat3 random_rotation(std::mt19937_64& rng);
WeylElement random_weyl(int n, std::mt19937_64& rng);

/// The canonical direction table of c with every stored spinor multiplied by an
/// independent random scalar of magnitude in [min_mag, max_mag] and random
/// phase. D must not care; used by lift-independence and reality checks.
DirectionTable scrambled_table(const Configuration& c, std::mt19937_64& rng,
                               double min_mag = 1.0, double max_mag = 1.0);

/// Draws the index-th configuration of the spec: points from the distribution,
/// redrawn until the wall guard holds, then normalized to RMS norm 1.
/// If `rejections` is given it accumulates the number of redraws.
/// Throws RejectionOverflow after 10^4 failed redraws.
Configuration sample_config(const SampleSpec& spec, long long index,
                            long long* rejections = nullptr);

/// Evaluates D over the whole spec and aggregates. Per-sample near-wall errors
/// are recorded as violations (untrusted), never dropped. `on_sample`, when
/// given, sees every (index, configuration, report) in index order.
using SampleSink =
    std::function<void(long long, const Configuration&, const DeterminantReport&)>;
SearchReport monte_carlo(const SampleSpec& spec, const SampleSink& on_sample = {});

/// Derivative-free local minimization of
///   D(c) + wall_penalty_weight * max(0, wall_guard - wall_distance)^2
/// over the 3n coordinates (Nelder-Mead, with `restarts` extra starts jittered
/// around c0). Iterates whose configuration cannot be evaluated get objective
/// +infinity. The returned configuration never violates the wall guard.
std::pair<Configuration, double> minimize_D(const Configuration& c0,
                                            const MinimizeOptions& opts);

/// Central-difference gradient of D with respect to the 3n coordinates.
std::vector<double> fd_gradient(const Configuration& c, double h);

/// Closed-form D for two points with norm ratio r and angle theta:
///   4D = 2 + (1+r)(1-cos t)/|z-1| + (1+r)(1+cos t)/|z+1|
///          + 2r(1-cos t)(1+cos t)/(|z-1||z+1|),   z = r e^{i t}.
/// Throws WallInput when z is numerically 1 or -1 (collapsed pair).
/// Evaluated in extended precision; oracle_n2_ext exposes the full result so
/// reference values can be printed correctly rounded.
long double oracle_n2_ext(double r, double theta);
double oracle_n2(double r, double theta);

/// Canonical invariants (r, theta) of a two-point configuration:
/// r = ||x_2||/||x_1||, theta = angle(x_1, x_2) in [0, pi]. These determine D.
std::pair<double, double> reduce_n2(const Configuration& c);

}  // namespace confdet
