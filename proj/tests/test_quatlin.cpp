#include <cmath>
#include <random>

#include "doctest.h"

#include "confdet/quatlin.hpp"
#include "confdet/search.hpp"
#include "support/test_oracles.hpp"

using namespace confdet;

namespace {

CMatrix random_hermitian_pd(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix b(dim);
    for (auto& z : b.a) z = Complex(g(rng), g(rng));
    CMatrix h = b.adjoint().multiply(b);
    for (int i = 0; i < dim; ++i) h.at(i, i) += 0.1;  // keep it comfortably definite
    return h;
}

}  // namespace

TEST_CASE("quaternionize pairs each column with its j image") {
    CPoly t(1);
    t.coeffs = {0.0, 1.0};
    const CMatrix m = quaternionize({t});
    CHECK(m.at(0, 0) == Complex(0.0));
    CHECK(m.at(1, 0) == Complex(1.0));
    CHECK(m.at(0, 1) == Complex(-1.0));
    CHECK(m.at(1, 1) == Complex(0.0));

    std::mt19937_64 rng(301);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + trial % 2;
        std::vector<CPoly> ps;
        for (int r = 0; r < n; ++r) {
            CPoly p(n);
            for (auto& c : p.coeffs) c = Complex(g(rng), g(rng));
            ps.push_back(p);
        }
        const CMatrix q = quaternionize(ps);
        for (int r = 0; r < n; ++r) {
            const auto expect = j_column(q.column(2 * r));
            const auto have = q.column(2 * r + 1);
            for (int k = 0; k < 2 * n; ++k) CHECK(have[k] == expect[k]);
        }
    }
}

TEST_CASE("quaternionic determinants are real with a fixed per-n sign") {
    // In the coefficient basis the representation's determinant is
    // (-1)^{n(n-1)/2} times the square of the quaternionic (Study) norm:
    // real, never positive-and-negative for the same n.
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 4;
        const Configuration c = testsup::random_config(n, 302, trial);
        const DirectionTable tbl = build_direction_table(c);
        std::vector<CPoly> ps;
        for (int r = 0; r < n; ++r) ps.push_back(build_p(r, tbl));
        const CMatrix a = quaternionize(ps);
        const Complex det = lu_det(a).det;
        CHECK(std::abs(det.imag()) <= 1e-9 * std::abs(det));
        const double sign = (n * (n - 1) / 2) % 2 ? -1.0 : 1.0;
        CHECK(det.real() * sign > 0.0);
        if (n == 2) {  // brute-force cross-check
            const Complex co = testsup::cofactor_det(a);
            CHECK(std::abs(det - co) <= 1e-12 * std::abs(co));
        }
    }
}

TEST_CASE("hermitian_sqrt_inv on fixed matrices") {
    CHECK(hermitian_sqrt_inv(CMatrix::identity(3)).max_abs_diff(CMatrix::identity(3)) < 1e-14);

    CMatrix d(2);
    d.at(0, 0) = 4.0;
    d.at(1, 1) = 9.0;
    const CMatrix s = hermitian_sqrt_inv(d);
    CHECK(std::abs(s.at(0, 0) - Complex(0.5)) < 1e-12);
    CHECK(std::abs(s.at(1, 1) - Complex(1.0 / 3.0)) < 1e-12);
    CHECK(std::abs(s.at(0, 1)) < 1e-13);
}

TEST_CASE("hermitian_sqrt_inv reconstructs the identity on random input") {
    std::mt19937_64 rng(303);
    for (int dim : {2, 5, 8, 13, 20}) {
        const CMatrix h = random_hermitian_pd(dim, rng);
        const CMatrix s = hermitian_sqrt_inv(h);
        const CMatrix probe = s.multiply(h).multiply(s);
        CHECK(probe.max_abs_diff(CMatrix::identity(dim)) < 1e-8);
    }
}

TEST_CASE("hermitian_sqrt_inv rejects bad input") {
    std::mt19937_64 rng(304);
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix not_h(3);
    for (auto& z : not_h.a) z = Complex(g(rng), g(rng));
    CHECK_THROWS_AS(hermitian_sqrt_inv(not_h), NotHermitian);

    CMatrix sing(2);
    sing.at(0, 0) = 1.0;
    sing.at(1, 1) = 1e-15;
    CHECK_THROWS_AS(hermitian_sqrt_inv(sing), NotPositiveDefinite);
}

TEST_CASE("polar_flag produces unitary, j-paired representatives") {
    const Configuration collinear = validate_configuration({{1, 0, 0}, {2, 0, 0}}, 1e-9);
    const FlagPoint f = polar_flag(collinear);
    CHECK(unitarity_residual(f) < 1e-9);
    CHECK(pairing_residual(f) < 1e-9);

    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 2;
        const FlagPoint g = polar_flag(testsup::random_config(n, 305, trial));
        CHECK(unitarity_residual(g) < 1e-9);
        CHECK(pairing_residual(g) < 1e-9);
    }
}

TEST_CASE("the polar factor of a unitary is itself") {
    const FlagPoint f = polar_flag(testsup::random_config(2, 306, 0));
    const CMatrix& u = f.U;
    const CMatrix again = u.multiply(hermitian_sqrt_inv(u.adjoint().multiply(u)));
    CHECK(again.max_abs_diff(u) < 1e-9);
}

TEST_CASE("flag equality is exactly mod-torus") {
    const FlagPoint f = polar_flag(testsup::random_config(2, 307, 1));

    FlagPoint rephased = f;
    const Complex ph = std::polar(1.0, 0.77);
    for (int k = 0; k < f.U.dim; ++k) {
        rephased.U.at(k, 0) *= ph;
        rephased.U.at(k, 1) *= std::conj(ph);
    }
    CHECK(flag_equal(f, rephased, 1e-9));

    FlagPoint broken = f;
    for (int k = 0; k < f.U.dim; ++k) broken.U.at(k, 0) *= ph;  // partner left alone
    CHECK(!flag_equal(f, broken, 1e-6));

    // a genuinely different configuration lands elsewhere in the flag manifold
    Configuration rotated = testsup::random_config(2, 307, 1);
    const Mat3 rot = Mat3::from_quaternion(0.9, 0.1, 0.4, 0.2);
    for (auto& p : rotated.points) p = rot.apply(p);
    CHECK(!flag_equal(f, polar_flag(rotated), 1e-6));
}

TEST_CASE("weyl action on flag points") {
    const Configuration c = testsup::random_config(2, 308, 2);
    const FlagPoint f = polar_flag(c);

    CHECK(flag_equal(weyl_act(WeylElement::identity(2), f), f, 1e-12));

    WeylElement flip = WeylElement::identity(2);
    flip.signs = {-1, +1};
    const FlagPoint twice = weyl_act(flip, weyl_act(flip, f));
    CHECK(flag_residual(twice, f) < 1e-12);  // (-c, -jc) is the phase -1 orbit

    WeylElement swap = WeylElement::identity(2);
    swap.perm = {1, 0};
    const FlagPoint sw = weyl_act(swap, f);
    for (int k = 0; k < f.U.dim; ++k) {
        CHECK(sw.U.at(k, 0) == f.U.at(k, 2));
        CHECK(sw.U.at(k, 3) == f.U.at(k, 1));
    }
}

TEST_CASE("the flag map is Weyl-equivariant") {
    std::mt19937_64 rng(309);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 2;
        const Configuration c = testsup::random_config(n, 310, trial);
        const WeylElement w = random_weyl(n, rng);
        const FlagPoint lhs = polar_flag(weyl_act(w, c));
        const FlagPoint rhs = weyl_act(w, polar_flag(c));
        CHECK(flag_equal(lhs, rhs, 1e-7));
    }
}

TEST_CASE("flag-point comparisons insist on matching sizes") {
    const FlagPoint f2 = polar_flag(testsup::random_config(2, 311, 0));
    const FlagPoint f3 = polar_flag(testsup::random_config(3, 311, 0));
    CHECK_THROWS_AS(flag_residual(f2, f3), DimensionMismatch);
}
