"""Norm models: values, gradients, validation and the JSON wire format."""

import math
import os

import numpy as np
import pytest
from hypothesis import given, strategies as st

from minktrig import ConfigError, DomainError, NormKind, NormSpec
from minktrig.norms import (default_table_size, make_evaluator, parse_norm_arg,
                            spec_from_json, spec_to_json)

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)


def ellipse_samples(a=1.5, b=0.8, n=64):
    th = [2.0 * math.pi * k / n for k in range(n)]
    return [(t, math.sqrt((a * math.cos(t)) ** 2 + (b * math.sin(t)) ** 2))
            for t in th]


def test_euclidean_345():
    ev = make_evaluator(NormSpec(NormKind.EUCLIDEAN))
    assert ev.norm_xy(3.0, 4.0) == 5.0


def test_mixed_p2_is_euclidean():
    ev = make_evaluator(NormSpec(NormKind.MIXED, p=2.0))
    assert abs(ev.norm_xy(1.0, -1.0) - math.sqrt(2.0)) < 1e-15


def test_lp4_diagonal():
    ev = make_evaluator(NormSpec(NormKind.LP, p=4.0))
    assert abs(ev.norm_xy(1.0, 1.0) - 2.0 ** 0.25) < 1e-15


def test_gradient_euclidean():
    ev = make_evaluator(NormSpec(NormKind.EUCLIDEAN))
    assert np.allclose(ev.gradient(np.array([0.0, 2.0])), [0.0, 1.0])


def test_gradient_lp4_diagonal_symmetric():
    ev = make_evaluator(NormSpec(NormKind.LP, p=4.0))
    g = ev.gradient(2.0 ** -0.25 * np.array([1.0, 1.0]))
    assert abs(g[0] - g[1]) < 1e-14


def test_gradient_mixed_supporting_slope_one():
    # at a = (-2^(-3/4), 2^(-3/4)) the supporting line has slope 1
    ev = make_evaluator(NormSpec(NormKind.MIXED, p=4.0))
    a = np.array([-(2.0 ** -0.75), 2.0 ** -0.75])
    g = ev.gradient(a)
    assert abs(g[0] + g[1]) < 1e-14
    tangent = np.array([-g[1], g[0]])
    assert abs(tangent[1] / tangent[0] - 1.0) < 1e-12


def test_gradient_origin_rejected():
    ev = make_evaluator(NormSpec(NormKind.LP, p=4.0))
    with pytest.raises(DomainError):
        ev.gradient(np.zeros(2))


@pytest.mark.parametrize("spec", [
    NormSpec(NormKind.EUCLIDEAN),
    NormSpec(NormKind.LP, p=4.0),
    NormSpec(NormKind.LP, p=1.5),
    NormSpec(NormKind.MIXED, p=4.0),
])
@given(x=finite, y=finite, lam=st.floats(min_value=-8, max_value=8,
                                         allow_nan=False))
def test_homogeneity(spec, x, y, lam):
    ev = make_evaluator(spec)
    n = ev.norm_xy(x, y)
    if n < 1e-9 or n > 1e8:
        return
    assert abs(ev.norm_xy(lam * x, lam * y) - abs(lam) * n) <= 1e-12 * max(1.0, abs(lam) * n)


@pytest.mark.parametrize("spec", [
    NormSpec(NormKind.EUCLIDEAN),
    NormSpec(NormKind.LP, p=4.0),
    NormSpec(NormKind.MIXED, p=4.0),
])
@given(x1=finite, y1=finite, x2=finite, y2=finite)
def test_triangle_inequality(spec, x1, y1, x2, y2):
    ev = make_evaluator(spec)
    lhs = ev.norm_xy(x1 + x2, y1 + y2)
    rhs = ev.norm_xy(x1, y1) + ev.norm_xy(x2, y2)
    assert lhs <= rhs + 1e-9 * max(1.0, rhs)


@pytest.mark.parametrize("plane", ["euclidean", "lp4", "mixed4"])
def test_euler_identity_and_fd(plane, all_planes):
    ctx = all_planes[plane]
    rng = np.random.default_rng(5)
    V = rng.normal(size=(200, 2))
    V = V[ctx.norm_batch(V) > 1e-3]
    G = ctx.norm_gradient_batch(V)
    n = ctx.norm_batch(V)
    assert np.max(np.abs(np.einsum("ij,ij->i", G, V) - n) / n) < 1e-9
    # degree-0 homogeneity of the gradient
    assert np.max(np.abs(ctx.norm_gradient_batch(3.0 * V) - G)) < 1e-12
    h = (1e-6 * n)[:, None]
    for k in (0, 1):
        e = np.zeros((len(V), 2))
        e[:, k] = h[:, 0]
        fd = (ctx.norm_batch(V + e) - ctx.norm_batch(V - e)) / (2.0 * h[:, 0])
        assert np.max(np.abs(fd - G[:, k])) < 1e-5


def test_scalar_paths_match_arrays(all_planes):
    rng = np.random.default_rng(7)
    for ctx in all_planes.values():
        for _ in range(50):
            v = rng.normal(size=2) * 3.0
            assert abs(ctx.norm_xy(*v) - ctx.norm(v)) < 1e-14
            gx, gy = ctx.gradient_xy(*v)
            g = ctx.norm_gradient(v)
            assert abs(gx - g[0]) < 1e-14 and abs(gy - g[1]) < 1e-14


@pytest.mark.parametrize("bad_p", [1.0, 0.5, 65.0, float("inf")])
def test_lp_range_enforced(bad_p):
    with pytest.raises(ConfigError):
        NormSpec(NormKind.LP, p=bad_p)


def test_mixed_range_enforced():
    with pytest.raises(ConfigError):
        NormSpec(NormKind.MIXED, p=1.5)


def test_support_table_valid_ellipse():
    spec = NormSpec(NormKind.SUPPORT, samples=tuple(ellipse_samples()))
    ev = make_evaluator(spec)
    # the ellipse gauge: ||(a, 0)|| = 1 on the boundary
    assert abs(ev.norm_xy(1.5, 0.0) - 1.0) < 1e-9
    assert abs(ev.norm_xy(0.0, 0.8) - 1.0) < 1e-9


def test_support_table_rejects_asymmetric():
    samples = [(t, 1.0 + 0.2 * math.cos(t)) for t in
               np.linspace(0, 2 * math.pi, 64, endpoint=False)]
    with pytest.raises(ConfigError):
        make_evaluator(NormSpec(NormKind.SUPPORT, samples=tuple(samples)))


def test_support_table_rejects_nonconvex():
    samples = [(t, 1.0 + 0.9 * math.cos(4.0 * t)) for t in
               np.linspace(0, 2 * math.pi, 256, endpoint=False)]
    with pytest.raises(ConfigError):
        make_evaluator(NormSpec(NormKind.SUPPORT, samples=tuple(samples)))


def test_support_table_requires_enough_samples():
    with pytest.raises(ConfigError):
        NormSpec(NormKind.SUPPORT, samples=((0.0, 1.0), (1.0, 1.0)))


def test_json_round_trip_field_names():
    spec = NormSpec(NormKind.MIXED, p=4.0)
    obj = spec_to_json(spec)
    assert obj == {"kind": "mixed_lp_lq", "p": 4.0}
    assert spec_from_json(obj) == spec

    table = NormSpec(NormKind.SUPPORT, samples=tuple(ellipse_samples(n=16)))
    obj = spec_to_json(table)
    assert set(obj) == {"kind", "samples"}
    assert obj["kind"] == "support_table"
    assert spec_from_json(obj) == table


def test_json_rejects_unknown_kind():
    with pytest.raises(ConfigError):
        spec_from_json({"kind": "l1"})


def test_parse_builtin_shorthand():
    assert parse_norm_arg("builtin:euclidean").kind == NormKind.EUCLIDEAN
    assert parse_norm_arg("builtin:lp:4").p == 4.0
    assert parse_norm_arg("builtin:mixed:8").kind == NormKind.MIXED
    with pytest.raises(ConfigError):
        parse_norm_arg("builtin:linf")
    with pytest.raises(ConfigError):
        parse_norm_arg("no-such-file.json")


def test_table_size_env(monkeypatch):
    monkeypatch.setenv("MINKTRIG_TABLE_SIZE", "512")
    assert default_table_size() == 512
    monkeypatch.setenv("MINKTRIG_TABLE_SIZE", "junk")
    with pytest.raises(ConfigError):
        default_table_size()
    monkeypatch.delenv("MINKTRIG_TABLE_SIZE")
    assert default_table_size() == 4096
