#pragma once

#include <vector>

#include "confdet/polys.hpp"

namespace confdet {

/// Dense square complex matrix, row-major. Row k of column 2r / 2r+1 holds the
/// t^k coefficient of p_r / q_r when assembled from a configuration.
struct CMatrix {
    int dim{0};
    std::vector<Complex> a;

    CMatrix() = default;
    explicit CMatrix(int d) : dim(d), a(static_cast<std::size_t>(d) * d, Complex(0.0)) {}

    Complex& at(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
    const Complex& at(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }

    static CMatrix identity(int d);
    CMatrix adjoint() const;                  // conjugate transpose
    CMatrix multiply(const CMatrix& o) const;
    std::vector<Complex> column(int j) const;
    void set_column(int j, const std::vector<Complex>& col);
    double frobenius_norm() const;
    /// max_ij |a_ij - b_ij|
    double max_abs_diff(const CMatrix& o) const;
};

/// 2x2 determinant of two spinors stacked as columns: u_a v_b - v_a u_b.
Complex det2(const Spinor& a, const Spinor& b);

/// The lift-normalizing product
///   P = prod_r det2(u-_r, u+_r) * prod_{r<s} (det2(u-+_rs, u+-_rs) det2(u--_rs, u++_rs))^2.
/// Throws DegenerateNormalizer if any factor has magnitude below 1e-13.
Complex normalizer(const DirectionTable& tbl);

/// Columns (p_1, q_1, ..., p_n, q_n), ascending coefficient index down the rows.
CMatrix assemble_matrix(const std::vector<CPoly>& ps, const std::vector<CPoly>& qs);

struct LuResult {
    Complex det{0.0};
    double cond_hint{0.0};  // ratio of largest to smallest pivot magnitude
};

/// Determinant by LU factorization with partial pivoting. Singular matrices
/// return a ~0 determinant and an infinite condition hint; no error is raised.
LuResult lu_det(CMatrix m);

/// One evaluation of the normalized determinant D = Re(det(M)/P).
struct DeterminantReport {
    double D{0.0};
    Complex det_M{0.0};
    Complex P{0.0};
    double im_residual{0.0};  // |Im(det(M)/P)| / |det(M)/P|
    double cond_hint{0.0};
    bool trusted{false};      // im_residual < 1e-8 and cond_hint < 1e12
};

/// Evaluates D from an existing table (lets callers rescale lifts first).
DeterminantReport compute_D(const DirectionTable& tbl);

/// Builds the canonical direction table for c and evaluates D.
DeterminantReport compute_D(const Configuration& c);

}  // namespace confdet
