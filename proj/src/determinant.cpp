#include "confdet/determinant.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace confdet {

namespace {
constexpr double kNormalizerFloor = 1e-13;
constexpr double kRealityTol = 1e-8;
constexpr double kCondCeiling = 1e12;
}  // namespace

CMatrix CMatrix::identity(int d) {
    CMatrix m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m.at(j, i) = std::conj(at(i, j));
    return m;
}

CMatrix CMatrix::multiply(const CMatrix& o) const {
    if (dim != o.dim) throw DimensionMismatch("matrix product dimensions differ");
    CMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        for (int k = 0; k < dim; ++k) {
            const Complex aik = at(i, k);
            if (aik == Complex(0.0)) continue;
            for (int j = 0; j < dim; ++j) m.at(i, j) += aik * o.at(k, j);
        }
    }
    return m;
}

std::vector<Complex> CMatrix::column(int j) const {
    std::vector<Complex> c(dim);
    for (int i = 0; i < dim; ++i) c[i] = at(i, j);
    return c;
}

void CMatrix::set_column(int j, const std::vector<Complex>& col) {
    if (static_cast<int>(col.size()) != dim)
        throw DimensionMismatch("column length does not match matrix dimension");
    for (int i = 0; i < dim; ++i) at(i, j) = col[i];
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : a) s += std::norm(z);
    return std::sqrt(s);
}

double CMatrix::max_abs_diff(const CMatrix& o) const {
    if (dim != o.dim) throw DimensionMismatch("matrix dimensions differ");
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - o.a[k]));
    return m;
}

Complex det2(const Spinor& a, const Spinor& b) { return a.u * b.v - a.v * b.u; }

Complex normalizer(const DirectionTable& tbl) {
    const auto checked = [](Complex f, const char* what) {
        if (std::abs(f) < kNormalizerFloor)
            throw DegenerateNormalizer(std::string("normalizer factor ") + what +
                                       " is numerically zero (near-wall configuration)");
        return f;
    };
    Complex P(1.0);
    for (int r = 0; r < tbl.n; ++r)
        P *= checked(det2(tbl.single(r, -1), tbl.single(r, +1)), "det(u-_r, u+_r)");
    for (int s = 1; s < tbl.n; ++s) {
        for (int r = 0; r < s; ++r) {
            const Complex d1 = checked(det2(tbl.lookup(r, s, -1, +1), tbl.lookup(r, s, +1, -1)),
                                       "det(u-+_rs, u+-_rs)");
            const Complex d2 = checked(det2(tbl.lookup(r, s, -1, -1), tbl.lookup(r, s, +1, +1)),
                                       "det(u--_rs, u++_rs)");
            const Complex g = d1 * d2;
            P *= g * g;
        }
    }
    return P;
}

CMatrix assemble_matrix(const std::vector<CPoly>& ps, const std::vector<CPoly>& qs) {
    if (ps.size() != qs.size() || ps.empty())
        throw DimensionMismatch("need matching nonempty lists of p and q polynomials");
    const int n = static_cast<int>(ps.size());
    CMatrix m(2 * n);
    for (int r = 0; r < n; ++r) {
        if (ps[r].n != n || qs[r].n != n)
            throw DimensionMismatch("polynomial storage does not match configuration size");
        for (int k = 0; k < 2 * n; ++k) {
            m.at(k, 2 * r) = ps[r].coeffs[k];
            m.at(k, 2 * r + 1) = qs[r].coeffs[k];
        }
    }
    return m;
}

LuResult lu_det(CMatrix m) {
    const int n = m.dim;
    double sign = 1.0;
    double pivot_max = 0.0;
    double pivot_min = std::numeric_limits<double>::infinity();
    Complex det(1.0);
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(m.at(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(m.at(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        const Complex p = m.at(k, k);
        const double pa = std::abs(p);
        pivot_max = std::max(pivot_max, pa);
        pivot_min = std::min(pivot_min, pa);
        if (pa == 0.0) return {Complex(0.0), std::numeric_limits<double>::infinity()};
        det *= p;
        for (int i = k + 1; i < n; ++i) {
            const Complex f = m.at(i, k) / p;
            if (f == Complex(0.0)) continue;
            m.at(i, k) = f;
            for (int j = k + 1; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return {sign * det, pivot_min > 0.0 ? pivot_max / pivot_min
                                        : std::numeric_limits<double>::infinity()};
}

DeterminantReport compute_D(const DirectionTable& tbl) {
    const int n = tbl.n;
    std::vector<CPoly> ps;
    std::vector<CPoly> qs;
    ps.reserve(n);
    qs.reserve(n);
    for (int r = 0; r < n; ++r) {
        ps.push_back(build_p(r, tbl));
        qs.push_back(build_q(r, tbl));
    }
    const Complex P = normalizer(tbl);
    const LuResult lu = lu_det(assemble_matrix(ps, qs));
    const Complex ratio = lu.det / P;
    DeterminantReport rep;
    rep.det_M = lu.det;
    rep.P = P;
    rep.cond_hint = lu.cond_hint;
    rep.D = ratio.real();
    const double mag = std::abs(ratio);
    rep.im_residual = mag > 0.0 ? std::abs(ratio.imag()) / mag : 0.0;
    rep.trusted = rep.im_residual < kRealityTol && rep.cond_hint < kCondCeiling;
    return rep;
}

DeterminantReport compute_D(const Configuration& c) {
    return compute_D(build_direction_table(c));
}

}  // namespace confdet
