#include "confdet/quatlin.hpp"

#include <cmath>
#include <sstream>

namespace confdet {

namespace {
constexpr int kMaxSweeps = 30;
constexpr double kOffDiagonalFactor = 1e-13;
constexpr double kHermitianTol = 1e-10;
constexpr double kEigenFloor = 1e-12;
constexpr double kSingularD = 1e-9;

double off_diagonal_norm(const CMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            if (i != j) s += std::norm(m.at(i, j));
    return std::sqrt(s);
}
}  // namespace

std::vector<Complex> j_column(const std::vector<Complex>& col) {
    const int len = static_cast<int>(col.size());
    std::vector<Complex> out(len);
    for (int k = 0; k < len; ++k) {
        const double sign = (k % 2 == 0) ? -1.0 : 1.0;
        out[k] = sign * std::conj(col[len - 1 - k]);
    }
    return out;
}

CMatrix quaternionize(const std::vector<CPoly>& ps) {
    if (ps.empty()) throw DimensionMismatch("need at least one polynomial");
    const int n = static_cast<int>(ps.size());
    CMatrix m(2 * n);
    for (int r = 0; r < n; ++r) {
        if (ps[r].n != n)
            throw DimensionMismatch("polynomial storage does not match column count");
        const CPoly jp = j_map(ps[r]);
        for (int k = 0; k < 2 * n; ++k) {
            m.at(k, 2 * r) = ps[r].coeffs[k];
            m.at(k, 2 * r + 1) = jp.coeffs[k];
        }
    }
    return m;
}

HermitianEigen hermitian_eigen(const CMatrix& H) {
    const double scale = H.frobenius_norm();
    if (H.max_abs_diff(H.adjoint()) > kHermitianTol * std::max(scale, 1e-300))
        throw NotHermitian("matrix is not Hermitian within tolerance");

    const int n = H.dim;
    CMatrix A = H;
    CMatrix Q = CMatrix::identity(n);
    const double threshold = kOffDiagonalFactor * std::max(scale, 1e-300);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(A) <= threshold) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = A.at(p, q);
                const double mag = std::abs(apq);
                if (mag <= threshold / n) continue;
                const Complex phase = apq / mag;  // e^{i phi}
                const double app = A.at(p, p).real();
                const double aqq = A.at(q, q).real();
                const double tau = (app - aqq) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex sp = s * phase;  // s e^{i phi}

                // A <- G* A G with G = [[c, -s e^{i phi}], [s e^{-i phi}, c]]
                for (int j = 0; j < n; ++j) {
                    const Complex rp = A.at(p, j);
                    const Complex rq = A.at(q, j);
                    A.at(p, j) = c * rp + sp * rq;
                    A.at(q, j) = -std::conj(sp) * rp + c * rq;
                }
                for (int i = 0; i < n; ++i) {
                    const Complex cp = A.at(i, p);
                    const Complex cq = A.at(i, q);
                    A.at(i, p) = c * cp + std::conj(sp) * cq;
                    A.at(i, q) = -sp * cp + c * cq;
                    const Complex qp = Q.at(i, p);
                    const Complex qq = Q.at(i, q);
                    Q.at(i, p) = c * qp + std::conj(sp) * qq;
                    Q.at(i, q) = -sp * qp + c * qq;
                }
                // keep the working matrix exactly Hermitian at the pivot
                A.at(p, q) = std::conj(A.at(q, p));
            }
        }
    }

    HermitianEigen e;
    e.vectors = std::move(Q);
    e.values.resize(n);
    for (int i = 0; i < n; ++i) e.values[i] = A.at(i, i).real();
    return e;
}

CMatrix hermitian_sqrt_inv(const CMatrix& H) {
    HermitianEigen e = hermitian_eigen(H);
    double lo = e.values[0], hi = e.values[0];
    for (double v : e.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (!(lo > kEigenFloor * std::max(hi, 0.0)))
        throw NotPositiveDefinite("matrix is not positive definite within tolerance");
    const int n = H.dim;
    CMatrix scaled(n);  // Q * diag(lambda^{-1/2})
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            scaled.at(i, j) = e.vectors.at(i, j) / std::sqrt(e.values[j]);
    return scaled.multiply(e.vectors.adjoint());
}

namespace {
std::string dump_points(const Configuration& c) {
    std::ostringstream os;
    os.precision(17);
    for (const auto& p : c.points) os << " (" << p.x << ", " << p.y << ", " << p.z << ")";
    return os.str();
}
}  // namespace

FlagPoint polar_flag(const Configuration& c) {
    const DeterminantReport rep = compute_D(c);
    if (!rep.trusted)
        throw Error("flag map needs a trusted determinant evaluation (im_residual=" +
                    std::to_string(rep.im_residual) + ", cond_hint=" +
                    std::to_string(rep.cond_hint) + ")");
    if (std::abs(rep.D) < kSingularD)
        throw SingularConfiguration(
            "candidate matrix is numerically singular, D=" + std::to_string(rep.D) +
            " -- possible counterexample to the linear-independence conjecture;"
            " configuration:" + dump_points(c));

    const DirectionTable tbl = build_direction_table(c);
    std::vector<CPoly> ps;
    ps.reserve(c.n());
    for (int r = 0; r < c.n(); ++r) ps.push_back(build_p(r, tbl));
    const CMatrix A = quaternionize(ps);
    return FlagPoint{A.multiply(hermitian_sqrt_inv(A.adjoint().multiply(A)))};
}

double unitarity_residual(const FlagPoint& f) {
    CMatrix g = f.U.adjoint().multiply(f.U);
    for (int i = 0; i < g.dim; ++i) g.at(i, i) -= 1.0;
    return g.frobenius_norm();
}

double pairing_residual(const FlagPoint& f) {
    double worst = 0.0;
    for (int r = 0; r < f.pairs(); ++r) {
        const std::vector<Complex> expect = j_column(f.U.column(2 * r));
        const std::vector<Complex> have = f.U.column(2 * r + 1);
        for (int k = 0; k < f.U.dim; ++k)
            worst = std::max(worst, std::abs(have[k] - expect[k]));
    }
    return worst;
}

double flag_residual(const FlagPoint& f, const FlagPoint& g) {
    if (f.U.dim != g.U.dim) throw DimensionMismatch("flag points of different size");
    const int dim = f.U.dim;
    double worst = 0.0;
    for (int r = 0; r < f.pairs(); ++r) {
        const std::vector<Complex> cf = f.U.column(2 * r);
        const std::vector<Complex> cg = g.U.column(2 * r);
        int idx = 0;
        for (int k = 1; k < dim; ++k)
            if (std::abs(cf[k]) > std::abs(cf[idx])) idx = k;
        Complex phase = cg[idx] * std::conj(cf[idx]);
        const double mag = std::abs(phase);
        phase = mag > 0.0 ? phase / mag : Complex(1.0);

        const std::vector<Complex> df = f.U.column(2 * r + 1);
        const std::vector<Complex> dg = g.U.column(2 * r + 1);
        double s1 = 0.0, s2 = 0.0;
        for (int k = 0; k < dim; ++k) {
            s1 += std::norm(cg[k] - phase * cf[k]);
            s2 += std::norm(dg[k] - std::conj(phase) * df[k]);
        }
        worst = std::max({worst, std::sqrt(s1), std::sqrt(s2)});
    }
    return worst;
}

bool flag_equal(const FlagPoint& f, const FlagPoint& g, double tol) {
    return flag_residual(f, g) <= tol;
}

FlagPoint weyl_act(const WeylElement& w, const FlagPoint& f) {
    const int n = f.pairs();
    if (static_cast<int>(w.signs.size()) != n || !w.valid())
        throw DimensionMismatch("Weyl element does not match flag size");
    FlagPoint out{CMatrix(f.U.dim)};
    for (int r = 0; r < n; ++r) {
        std::vector<Complex> c = f.U.column(2 * r);
        std::vector<Complex> d = f.U.column(2 * r + 1);
        if (w.signs[r] < 0) {
            d = c;
            for (Complex& z : d) z = -z;
            c = j_column(f.U.column(2 * r));  // (c, jc) -> (jc, -c)
        }
        out.U.set_column(2 * w.perm[r], c);
        out.U.set_column(2 * w.perm[r] + 1, d);
    }
    return out;
}

}  // namespace confdet
