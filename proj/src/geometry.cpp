#include "confdet/geometry.hpp"

#include <cmath>
#include <numeric>

namespace confdet {

namespace {
constexpr double kUnitTol = 1e-9;       // how far off 1 a "unit" vector may be
constexpr double kPoleTol = 1e-12;      // z within this of 1 counts as the north pole
constexpr double kDefaultRelTol = 1e-9; // default wall tolerance, relative to RMS norm
}  // namespace

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Vec3 Vec3::normalized() const {
    const double n = norm();
    return {x / n, y / n, z / n};
}

bool Vec3::finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
}

Mat3 Mat3::from_quaternion(double w, double x, double y, double z) {
    const double n = std::sqrt(w * w + x * x + y * y + z * z);
    w /= n; x /= n; y /= n; z /= n;
    Mat3 r;
    r.m = {1 - 2 * (y * y + z * z), 2 * (x * y - w * z),     2 * (x * z + w * y),
           2 * (x * y + w * z),     1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
           2 * (x * z - w * y),     2 * (y * z + w * x),     1 - 2 * (x * x + y * y)};
    return r;
}

WeylElement WeylElement::identity(int n) {
    WeylElement w;
    w.signs.assign(n, 1);
    w.perm.resize(n);
    std::iota(w.perm.begin(), w.perm.end(), 0);
    return w;
}

bool WeylElement::valid() const {
    const int n = static_cast<int>(signs.size());
    if (static_cast<int>(perm.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p]) return false;
        seen[p] = true;
    }
    for (int s : signs)
        if (s != 1 && s != -1) return false;
    return true;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
    const int n = static_cast<int>(a.signs.size());
    if (static_cast<int>(b.signs.size()) != n)
        throw DimensionMismatch("Weyl elements of different rank");
    WeylElement w;
    w.signs.resize(n);
    w.perm.resize(n);
    for (int r = 0; r < n; ++r) {
        w.perm[r] = a.perm[b.perm[r]];
        w.signs[r] = a.signs[b.perm[r]] * b.signs[r];
    }
    return w;
}

double rms_norm(const std::vector<Vec3>& points) {
    double s = 0.0;
    for (const auto& p : points) s += p.dot(p);
    return std::sqrt(s / static_cast<double>(points.size()));
}

Configuration validate_configuration(const std::vector<Vec3>& points, double tol) {
    if (points.size() < 2) throw TooFewPoints(points.size());
    for (std::size_t r = 0; r < points.size(); ++r)
        if (!points[r].finite())
            throw Error("point " + std::to_string(r + 1) + " has a non-finite coordinate");
    const int n = static_cast<int>(points.size());
    for (int r = 0; r < n; ++r)
        if (points[r].norm() <= tol) throw OriginPoint(r);
    for (int r = 0; r < n; ++r) {
        for (int s = r + 1; s < n; ++s) {
            if ((points[r] - points[s]).norm() <= tol) throw WallViolation(r, s, -1);
            if ((points[r] + points[s]).norm() <= tol) throw WallViolation(r, s, +1);
        }
    }
    return Configuration{points, tol};
}

Configuration validate_configuration(const std::vector<Vec3>& points) {
    if (points.empty()) throw TooFewPoints(0);
    for (std::size_t r = 0; r < points.size(); ++r)
        if (!points[r].finite())
            throw Error("point " + std::to_string(r + 1) + " has a non-finite coordinate");
    return validate_configuration(points, kDefaultRelTol * rms_norm(points));
}

Configuration weyl_act(const WeylElement& w, const Configuration& c) {
    const int n = c.n();
    if (static_cast<int>(w.signs.size()) != n || !w.valid())
        throw DimensionMismatch("Weyl element does not match configuration size");
    Configuration out;
    out.points.resize(n);
    out.tol = c.tol;
    for (int r = 0; r < n; ++r)
        out.points[w.perm[r]] = c.points[r] * static_cast<double>(w.signs[r]);
    return out;
}

namespace {
void require_unit(const Vec3& p) {
    const double n = p.norm();
    if (std::abs(n - 1.0) > kUnitTol) throw NotUnit(n);
}
}  // namespace

std::optional<Complex> stereographic(const Vec3& p) {
    require_unit(p);
    if (p.z >= 1.0 - kPoleTol) return std::nullopt;
    return Complex(p.x, p.y) / (1.0 - p.z);
}

Spinor lift(const Vec3& p) {
    require_unit(p);
    if (p.z <= 0.0) {
        const double u = std::sqrt((1.0 - p.z) / 2.0);
        return {Complex(u, 0.0), Complex(p.x, p.y) / std::sqrt(2.0 * (1.0 - p.z))};
    }
    const double v = std::sqrt((1.0 + p.z) / 2.0);
    return {Complex(p.x, -p.y) / std::sqrt(2.0 * (1.0 + p.z)), Complex(v, 0.0)};
}

}  // namespace confdet
