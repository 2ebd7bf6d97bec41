"""Plane context construction: tables, antinorm, symplectic form, flags."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from minktrig import (ConfigError, DomainError, ParamKind, RadonFlag,
                      build_context)

coord = st.floats(min_value=-100.0, max_value=100.0, allow_nan=False)


def test_euclid_totals(euclid):
    two_pi = 2.0 * math.pi
    assert abs(euclid.norm_length_total - two_pi) < 1e-10
    assert abs(euclid.antinorm_length_total - two_pi) < 1e-10
    assert abs(euclid.sector_area2_total - two_pi) < 1e-10


def test_radon_flags(euclid, lp4, mixed4, mixed2):
    assert euclid.radon_flag == RadonFlag.RADON
    assert lp4.radon_flag == RadonFlag.NOT_RADON
    assert mixed4.radon_flag == RadonFlag.RADON
    assert mixed2.radon_flag == RadonFlag.RADON


def test_lp4_not_radon_witness(lp4):
    # the detector found a direction whose defect is far beyond noise
    assert lp4.radon_defect > 1e-3
    x, b = lp4.radon_witness
    assert abs(lp4.norm(x) - 1.0) < 1e-12


def test_mixed_normalization(mixed4):
    assert mixed4.is_normalized_radon()
    assert mixed4.antinorm_unit_residual() < 1e-6


def test_circle_point_invariants(all_planes):
    for ctx in all_planes.values():
        for i in (0, 17, ctx.table_size // 3, ctx.table_size - 1):
            cp = ctx.circle_point(i)
            assert abs(ctx.norm(cp.point) - 1.0) < 1e-12
            assert abs(np.dot(cp.normal, cp.tangent)) < 1e-12
            assert ctx.symplectic(cp.point, cp.tangent) > 0.0
        assert np.all(np.diff(ctx.s_norm) > 0.0)
        assert np.all(np.diff(ctx.s_anti) > 0.0)
        assert np.all(np.diff(ctx.sector_area2) > 0.0)


def test_unit_point_on_circle(all_planes):
    thetas = np.linspace(0.0, 2.0 * math.pi, 37)
    for ctx in all_planes.values():
        P = ctx.unit_point(thetas)
        assert np.max(np.abs(ctx.norm_batch(P) - 1.0)) < 1e-14


def test_antinorm_euclidean(euclid):
    assert abs(euclid.antinorm(np.array([1.0, 1.0])) - math.sqrt(2.0)) < 1e-10


def test_antinorm_lp4_values(lp4):
    # brute force over the raw table brackets the refined value from below
    v = np.array([-1.0, 1.0])
    table_sup = np.max(np.abs(v[0] * lp4.points[:, 1] - v[1] * lp4.points[:, 0]))
    refined = lp4.antinorm(v)
    assert table_sup <= refined + 1e-12
    assert abs(refined - 2.0 ** 0.75) < 1e-9
    assert abs(lp4.antinorm(np.array([1.0, 0.0])) - 1.0) < 1e-9


def test_antinorm_zero(euclid):
    assert euclid.antinorm(np.zeros(2)) == 0.0


@given(x1=coord, y1=coord, x2=coord, y2=coord)
def test_symplectic_antisymmetric(euclid, x1, y1, x2, y2):
    u = np.array([x1, y1])
    v = np.array([x2, y2])
    assert euclid.symplectic(u, v) == -euclid.symplectic(v, u)
    assert euclid.symplectic(u, u) == 0.0


def test_symplectic_scale():
    ctx = build_context("builtin:euclidean", table_size=256)
    assert ctx.symplectic(np.array([1.0, 0.0]), np.array([0.0, 1.0])) == 1.0


def test_symplectic_scaled_determinant(mixed4):
    u = np.array([1.0, 0.0])
    v = np.array([0.0, 1.0])
    assert abs(mixed4.symplectic(u, v) - mixed4.omega_scale) < 1e-15


def test_build_rejects_bad_spec():
    with pytest.raises(ConfigError):
        build_context({"kind": "lp", "p": 0.5})
    with pytest.raises(ConfigError):
        build_context("builtin:lp:200")


def test_table_size_override():
    ctx = build_context("builtin:euclidean", table_size=128)
    assert ctx.table_size == 128
    assert abs(ctx.norm_length_total - 2.0 * math.pi) < 1e-3


def test_arrays_frozen(euclid):
    with pytest.raises(ValueError):
        euclid.points[0, 0] = 5.0


def test_vector_validation(euclid):
    with pytest.raises(DomainError):
        euclid.norm([1.0, float("nan")])
    with pytest.raises(DomainError):
        euclid.norm([1.0, 2.0, 3.0])
    with pytest.raises(DomainError):
        euclid.norm_gradient([0.0, 0.0])


def test_arc_param_roundtrip(all_planes):
    for ctx in all_planes.values():
        for kind in ParamKind:
            ap = ctx.arc_param(kind)
            ss = np.linspace(0.0, ap.total, 101, endpoint=False)
            back = np.asarray(ap.s_of(ap.theta_of(ss)))
            assert np.max(np.abs(back - ss)) < 1e-8


def test_arc_param_wraps(euclid):
    ap = euclid.arc_param(ParamKind.NORM_LENGTH)
    assert abs(float(ap.theta_of(ap.total + 0.25)) - float(ap.theta_of(0.25))) < 1e-12
