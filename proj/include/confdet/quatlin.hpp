#pragma once

#include "confdet/determinant.hpp"

namespace confdet {

/// A point of the symplectic flag manifold, represented by a 2n x 2n unitary
/// whose columns come in pairs (c, jc); compared only modulo the diagonal torus
/// (c, jc) -> (e^{i theta} c, e^{-i theta} jc).
struct FlagPoint {
    CMatrix U;

    int pairs() const { return U.dim / 2; }
};

/// Applies the antilinear structure to a raw coefficient column:
/// out[k] = (-1)^(k+1) * conj(in[2n-1-k]).
std::vector<Complex> j_column(const std::vector<Complex>& col);

/// The complex representation of the quaternionic matrix with columns p_1..p_n:
/// column pairs (p_r, j_map(p_r)). Its determinant is real and nonnegative.
CMatrix quaternionize(const std::vector<CPoly>& ps);

struct HermitianEigen {
    CMatrix vectors;             // unitary; columns are eigenvectors
    std::vector<double> values;  // matching eigenvalues, unsorted
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix (sweep limit 30,
/// off-diagonal threshold 1e-13 * ||H||_F). Throws NotHermitian if
/// ||H - H*|| exceeds 1e-10 * ||H||.
HermitianEigen hermitian_eigen(const CMatrix& H);

/// H^{-1/2} of a Hermitian positive-definite matrix via the eigendecomposition.
/// Throws NotPositiveDefinite if the smallest eigenvalue is below
/// 1e-12 times the largest.
CMatrix hermitian_sqrt_inv(const CMatrix& H);

/// The unitary polar factor U = A (A*A)^{-1/2} of A = quaternionize(p_1..p_n).
/// Requires a trusted, nonzero determinant evaluation; a singular A would be a
/// counterexample to the linear-independence conjecture and raises
/// SingularConfiguration with a full configuration dump.
FlagPoint polar_flag(const Configuration& c);

/// ||U*U - I||_F, zero for an exactly unitary representative.
double unitarity_residual(const FlagPoint& f);

/// Largest entry-wise deviation of column 2r+1 from j applied to column 2r.
double pairing_residual(const FlagPoint& f);

/// Worst column mismatch after fitting one phase per column pair; the phase is
/// estimated from the largest-magnitude entry and then verified on the
/// whole columns.
double flag_residual(const FlagPoint& f, const FlagPoint& g);

/// Equality in the flag manifold: true iff flag_residual(f, g) <= tol.
bool flag_equal(const FlagPoint& f, const FlagPoint& g, double tol);

/// The Weyl action on flag points: a -1 sign at r replaces the column pair
/// (c, jc) by (jc, -c); the permutation moves pair r to position perm[r].
FlagPoint weyl_act(const WeylElement& w, const FlagPoint& f);

}  // namespace confdet
