"""The brute-force primitives themselves, against closed-form answers."""

import math

import numpy as np
import pytest

from minktrig import NumericalError, cm, cm_inf_form
from minktrig.oracles import (bisect_sign_change, equilateral_triangle,
                              expand_bracket, finite_diff, golden_min_vec,
                              minimize_line, sup_circle)


def test_minimize_parabola():
    t, v = minimize_line(lambda t: (t - 3.0) ** 2 + 1.0)
    assert abs(t - 3.0) < 1e-7
    assert abs(v - 1.0) < 1e-12


def test_minimize_hyperbola():
    t, v = minimize_line(lambda t: math.sqrt(1.0 + t * t))
    assert abs(t) < 1e-7
    assert abs(v - 1.0) < 1e-12


def test_minimize_kink():
    # golden-section handles non-smooth convex functions
    t, v = minimize_line(lambda t: abs(t - 3.0) + 1.0)
    assert abs(t - 3.0) < 1e-8
    assert abs(v - 1.0) < 1e-8


def test_minimize_given_bracket():
    t, v = minimize_line(lambda t: (t + 2.0) ** 2, bracket=(-10.0, 10.0))
    assert abs(t + 2.0) < 1e-7


def test_minimize_matches_inf_form(lp4):
    y = np.array([1.0, 0.0])
    b = lp4.bmap(np.array([2 ** -0.25, 2 ** -0.25]))

    def f(t):
        return lp4.norm_xy(y[0] + t * b[0], y[1] + t * b[1])

    _, fmin = minimize_line(f)
    want = abs(cm_inf_form(lp4, np.array([2 ** -0.25, 2 ** -0.25]), y))
    assert abs(fmin / lp4.norm(y) - want) < 1e-10


def test_minimize_rejects_nonfinite():
    with pytest.raises(NumericalError):
        minimize_line(lambda t: float("nan"), bracket=(-1.0, 1.0))


def test_expand_bracket_contains_minimum():
    lo, hi = expand_bracket(lambda t: (t - 37.0) ** 2)
    assert lo < 37.0 < hi


def test_finite_diff_square():
    assert abs(finite_diff(lambda t: t * t, 1.0, 1e-6) - 2.0) < 1e-9


def test_finite_diff_euclidean_norm(euclid):
    x = np.array([1.0, 0.0])
    y = np.array([1.0, 1.0])
    d = finite_diff(lambda t: euclid.norm(x + t * y), 0.0, 1e-6)
    assert abs(d - 1.0) < 1e-8


def test_finite_diff_matches_b_pairing(lp4):
    # the directional derivative of the norm equals [y, b(x)]
    rng = np.random.default_rng(3)
    for _ in range(10):
        x = lp4.unit_point(rng.uniform(0, 2 * math.pi))
        y = rng.normal(size=2)
        d = finite_diff(lambda t: lp4.norm(x + t * y), 0.0, 1e-6)
        assert abs(d - lp4.symplectic(y, lp4.bmap(x))) < 1e-5


def test_sup_circle_euclidean(euclid):
    theta, val = sup_circle(euclid, lambda y: euclid.symplectic(y, np.array([1.0, 0.0])))
    assert abs(val - 1.0) < 1e-9
    assert abs(theta - 1.5 * math.pi) < 1e-4


def test_sup_circle_lp4(lp4):
    w = np.array([-1.0, 1.0])
    _, val = sup_circle(lp4, lambda y: lp4.symplectic(w, y))
    assert abs(val - 2 ** 0.75) < 1e-9


def test_sup_circle_constant(euclid):
    _, val = sup_circle(euclid, lambda y: 0.625)
    assert val == 0.625


def test_bisect_requires_sign_change():
    with pytest.raises(NumericalError):
        bisect_sign_change(lambda t: 1.0 + t * t, -1.0, 1.0)


def test_equilateral_euclidean(euclid):
    y, z = equilateral_triangle(euclid, np.array([1.0, 0.0]))
    assert np.allclose(y, [0.5, math.sqrt(3) / 2], atol=1e-9)
    assert np.allclose(z, [0.5, -math.sqrt(3) / 2], atol=1e-9)


@pytest.mark.parametrize("plane", ["euclidean", "lp4", "mixed4"])
def test_equilateral_sides_unit(plane, all_planes):
    ctx = all_planes[plane]
    rng = np.random.default_rng(11)
    for _ in range(8):
        x = ctx.unit_point(rng.uniform(0, 2 * math.pi))
        y, z = equilateral_triangle(ctx, x)
        assert abs(ctx.norm(y) - 1.0) < 1e-9
        assert abs(ctx.norm(z) - 1.0) < 1e-9
        assert np.allclose(x, y + z, atol=1e-12)
        assert abs(cm(ctx, x, y) + cm(ctx, x, z) - 1.0) < 1e-6


def test_golden_min_vec_rows():
    lo = np.array([-5.0, -1.0, 0.0])
    hi = np.array([5.0, 9.0, 4.0])
    target = np.array([1.0, 4.0, 2.0])

    def f(t):
        return (t - target) ** 2

    t, v = golden_min_vec(f, lo, hi, iters=70)
    assert np.allclose(t, target, atol=1e-8)
    assert np.all(v < 1e-15)
