"""Smoke tests for the python bindings."""

import math

import pytest

import confdet


def test_pinned_determinant_value():
    rep = confdet.compute_d([(1, 0, 0), (0, 1, 0)])
    assert rep.trusted
    assert abs(rep.D - (3 + 2 * math.sqrt(2)) / 4) < 1e-12
    assert rep.im_residual < 1e-10


def test_collinear_equality_case():
    for lam in (2.0, 0.5, -3.0):
        rep = confdet.compute_d([(1, 0, 0), (lam, 0, 0)])
        assert abs(rep.D - 1.0) < 1e-12


def test_matrix_matches_closed_form_on_random_pairs():
    for index in range(50):
        pts = confdet.sample_points(2, seed=20, index=index)
        r, theta = confdet.reduce_n2(pts)
        assert abs(confdet.compute_d(pts).D - confdet.oracle_n2(r, theta)) < 1e-10


def test_oracle_walls():
    with pytest.raises(confdet.ConfdetError):
        confdet.oracle_n2(1.0, 0.0)


def test_wall_validation_raises():
    with pytest.raises(confdet.ConfdetError):
        confdet.compute_d([(1, 0, 0), (-1, 0, 0)])


def test_monte_carlo_deterministic_and_clean():
    a = confdet.monte_carlo(n=2, count=150, seed=99)
    b = confdet.monte_carlo(n=2, count=150, seed=99)
    assert a.min_D == b.min_D
    assert a.mean_D == b.mean_D
    assert a.min_D >= 1.0 - 1e-9
    assert not a.violations
    assert sum(a.histogram) == a.evaluated == 150


def test_lift_is_a_unit_hopf_lift():
    u, v = confdet.lift(1.0, 0.0, 0.0)
    assert abs(abs(u) ** 2 + abs(v) ** 2 - 1.0) < 1e-12
    assert abs(v / u - confdet.stereographic(1.0, 0.0, 0.0)) < 1e-12
    assert confdet.stereographic(0.0, 0.0, 1.0) is None


def test_flag_residuals_are_tiny():
    unitarity, pairing = confdet.flag_residuals([(1, 0, 0), (0, 1, 0)])
    assert unitarity < 1e-9
    assert pairing < 1e-9


def test_polar_flag_is_unitary():
    numpy = pytest.importorskip("numpy")
    u = numpy.array(confdet.polar_flag([(1, 0.2, -0.3), (0.1, 1.4, 0.5)]))
    eye = u.conj().T @ u
    assert numpy.abs(eye - numpy.eye(u.shape[0])).max() < 1e-9


def test_minimize_reaches_the_floor():
    pts, d = confdet.minimize_d([(1.0, 0.3, 0.1), (0.2, 1.1, -0.4)], restarts=3)
    assert d < 1 + 1e-6
    _, theta = confdet.reduce_n2(pts)
    assert math.sin(theta) < 1e-3
