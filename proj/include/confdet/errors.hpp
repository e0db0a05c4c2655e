#pragma once

#include <stdexcept>
#include <string>

namespace confdet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configuration needs at least two points.
class TooFewPoints : public Error {
public:
    explicit TooFewPoints(std::size_t n)
        : Error("configuration needs n >= 2 points, got " + std::to_string(n)) {}
};

/// Point r sits at (or too close to) the origin. Index is 0-based.
class OriginPoint : public Error {
public:
    explicit OriginPoint(int r)
        : Error("point " + std::to_string(r + 1) + " is at the origin (wall ||x_r|| = 0)"),
          index(r) {}
    int index;
};

/// Points r and s violate a wall: sign=+1 means x_r = -x_s, sign=-1 means x_r = x_s.
/// Indices are 0-based; messages use 1-based numbering.
class WallViolation : public Error {
public:
    WallViolation(int r_, int s_, int sign_)
        : Error("points " + std::to_string(r_ + 1) + "," + std::to_string(s_ + 1) +
                " violate the wall x_r " + (sign_ > 0 ? "!= -x_s" : "!= x_s")),
          r(r_), s(s_), sign(sign_) {}
    int r;
    int s;
    int sign;
};

/// Input vector is not a unit vector (within tolerance).
class NotUnit : public Error {
public:
    explicit NotUnit(double norm)
        : Error("expected a unit vector, got norm " + std::to_string(norm)) {}
};

/// A polynomial product would exceed the ambient degree bound 2n-1.
class DegreeOverflow : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A det-2 factor of the normalizer is numerically zero (near-wall configuration).
class DegenerateNormalizer : public Error {
public:
    using Error::Error;
};

class NotHermitian : public Error {
public:
    using Error::Error;
};

class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

/// The candidate matrix is singular: a counterexample to the linear-independence
/// conjecture. The message carries the full configuration dump.
class SingularConfiguration : public Error {
public:
    using Error::Error;
};

/// Rejection sampling failed to satisfy the wall guard after the redraw budget.
class RejectionOverflow : public Error {
public:
    using Error::Error;
};

/// Closed-form n=2 evaluation requested on a wall (z = 1 or z = -1).
class WallInput : public Error {
public:
    using Error::Error;
};

}  // namespace confdet
