#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "confdet/errors.hpp"

namespace confdet {

using Complex = std::complex<double>;

struct Vec3 {
    double x{0.0};
    double y{0.0};
    double z{0.0};

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const;
    Vec3 normalized() const;
    bool finite() const;
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// 3x3 matrix acting on Vec3; used for SO(3) invariance checks.
struct Mat3 {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    Vec3 apply(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }

    /// Rotation matrix of the unit quaternion (w,x,y,z); the input is normalized first.
    static Mat3 from_quaternion(double w, double x, double y, double z);
};

/// An ordered configuration of n >= 2 points off the walls x_r = 0, x_r = +-x_s.
/// `tol` is the absolute wall-proximity tolerance the points were validated against.
struct Configuration {
    std::vector<Vec3> points;
    double tol{0.0};

    int n() const { return static_cast<int>(points.size()); }
};

/// Signed permutation (element of the hyperoctahedral group).
/// Acting on a configuration puts signs[r] * x_r at position perm[r]; 0-based.
struct WeylElement {
    std::vector<int> signs;  // entries in {+1, -1}
    std::vector<int> perm;   // a bijection of {0..n-1}

    static WeylElement identity(int n);
    bool valid() const;
};

/// Group product: acting by `b` then `a` equals acting by compose(a, b).
WeylElement compose(const WeylElement& a, const WeylElement& b);

/// Root-mean-square point norm; the scale used for relative tolerances.
double rms_norm(const std::vector<Vec3>& points);

/// Checks the wall constraints and returns a Configuration preserving input order.
/// Throws TooFewPoints, OriginPoint or WallViolation. Non-finite coordinates are
/// rejected with a plain Error.
Configuration validate_configuration(const std::vector<Vec3>& points, double tol);

/// Same, with the default tolerance 1e-9 relative to the RMS point norm.
Configuration validate_configuration(const std::vector<Vec3>& points);

/// Applies a signed permutation; the walls are stable so the result is valid.
Configuration weyl_act(const WeylElement& w, const Configuration& c);

/// Stereographic projection (x+iy)/(1-z) from the unit sphere; the north pole
/// maps to the point at infinity, reported as std::nullopt.
std::optional<Complex> stereographic(const Vec3& p);

/// Nonzero pair of complex numbers lifting a point of the sphere through the
/// Hopf map: v/u equals the stereographic projection of the lifted point.
struct Spinor {
    Complex u{0.0};
    Complex v{0.0};
};

/// Unit-norm lift of a unit vector. Two branches keep the formula stable at both
/// poles: z <= 0 uses u = sqrt((1-z)/2), v = (x+iy)/sqrt(2(1-z)); z > 0 uses
/// v = sqrt((1+z)/2), u = (x-iy)/sqrt(2(1+z)). Unit norm matters: downstream
/// flag-map equivariance relies on all lift constants having modulus one.
Spinor lift(const Vec3& p);

}  // namespace confdet
