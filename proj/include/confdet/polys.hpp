#pragma once

#include <vector>

#include "confdet/geometry.hpp"

namespace confdet {

/// Complex polynomial of degree <= 2n-1 stored as 2n ascending coefficients,
/// coeffs[k] being the coefficient of t^k. The storage length is fixed by the
/// configuration size n, so degree drops need no special casing.
struct CPoly {
    int n{0};
    std::vector<Complex> coeffs;

    explicit CPoly(int n_) : n(n_), coeffs(2 * static_cast<std::size_t>(n_), Complex(0.0)) {}
    CPoly(int n_, std::vector<Complex> c) : n(n_), coeffs(std::move(c)) {}

    /// Highest index with a (exactly) nonzero coefficient; -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return degree() < 0; }
};

/// The degree-<=1 polynomial u*t - v embedded in the 2n-coefficient space.
CPoly linear_factor(const Spinor& s, int n);

/// Coefficient convolution. Throws DegreeOverflow if the product's actual degree
/// would exceed 2n-1, DimensionMismatch if the operands disagree on n.
CPoly poly_multiply(const CPoly& a, const CPoly& b);

/// The antilinear quaternionic structure: out[k] = (-1)^(k+1) * conj(in[2n-1-k]).
/// Satisfies j(j(p)) = -p; the roots of j(p) are the antipodes -1/conj(w) of the
/// roots w of p.
CPoly j_map(const CPoly& p);

/// All Hopf lifts a configuration needs: one spinor per geometric direction.
/// Singles lift -x_r and +x_r; for each unordered pair {r,s} with r < s the four
/// stored spinors lift x_r+x_s, -(x_r+x_s), x_r-x_s and -(x_r-x_s), normalized.
/// Queries with either index order resolve to the same stored spinor, which is the
/// identification that makes shared factors of different polynomials literally equal.
struct DirectionTable {
    int n{0};
    std::vector<Spinor> single_minus;  // lift of -x_r / ||x_r||
    std::vector<Spinor> single_plus;   // lift of +x_r / ||x_r||
    std::vector<Spinor> pair_pp;       // lift of  (x_r + x_s) normalized, r < s
    std::vector<Spinor> pair_mm;       // lift of -(x_r + x_s)
    std::vector<Spinor> pair_pm;       // lift of  (x_r - x_s)
    std::vector<Spinor> pair_mp;       // lift of -(x_r - x_s)

    /// Index into the unordered-pair arrays; requires r < s.
    static std::size_t pair_index(int r, int s);

    /// The stored spinor lifting sign_r*x_r + sign_s*x_s (normalized); r != s,
    /// signs in {+1,-1}, either index order.
    const Spinor& lookup(int r, int s, int sign_r, int sign_s) const;
    Spinor& lookup(int r, int s, int sign_r, int sign_s);

    /// The stored spinor lifting sign * x_r / ||x_r||.
    const Spinor& single(int r, int sign) const;
};

DirectionTable build_direction_table(const Configuration& c);

/// p_r: product of the 2n-1 linear factors for the directions -x_r, -x_r+x_s and
/// -x_r-x_s (s != r), with lifts drawn from the table. Factors are accumulated in
/// a fixed order (single factor, then the -+ block, then the -- block, s ascending)
/// so results are reproducible bit-for-bit per platform.
CPoly build_p(int r, const DirectionTable& tbl);

/// q_r: same with all signs flipped (+x_r, then the ++ block, then the +- block).
/// Its roots are the antipodes of the roots of p_r, and q_r is a unit-modulus
/// constant times j_map(p_r); that proportionality is a tested theorem here, not
/// an identity used by the construction.
CPoly build_q(int r, const DirectionTable& tbl);

}  // namespace confdet
