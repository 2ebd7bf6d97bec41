"""Arc-length and area parameterizations of the unit circle, the distortion
function rho, derivative identities for sn and cm, and the harmonic-motion
equation f'' + rho f = 0 they satisfy in Radon planes."""

from __future__ import annotations

import math
from enum import Enum

import numpy as np

from .context import ArcParam, ParamKind, PlaneContext, RadonFlag, _as_vec, _require_nonzero
from .errors import UnsupportedOperationError
from . import trig

TWO_PI = 2.0 * math.pi


class OdeKind(str, Enum):
    SN_FROM_X0 = "sn_from_x0"   # f(s) = sn(x0, gamma(s)): f(0) = 0, f'(0) = 1
    CM_FROM_X0 = "cm_from_x0"   # f(s) = cm(x0, gamma(s)): f(0) = 1, f'(0) = 0


def _as_param(ctx: PlaneContext, param) -> ArcParam:
    if isinstance(param, ArcParam):
        return param
    return ctx.arc_param(ParamKind(param))


def param_point(ctx: PlaneContext, param, s):
    """Point of the unit circle at parameter value s (wrapped modulo the total)."""
    ap = _as_param(ctx, param)
    return ctx.unit_point(ap.theta_of(s))


def rho(ctx: PlaneContext, s) -> float:
    """Speed of the b-image of the arc length parameterization at s.

    rho(s) = || d/ds b(gamma(s)) ||, by symmetric differences with step
    1e-4 times the circle length.  Constant 1 exactly in the Euclidean plane.
    """
    return float(rho_batch(ctx, np.asarray([s], dtype=float))[0])


def rho_batch(ctx: PlaneContext, s: np.ndarray) -> np.ndarray:
    ap = ctx.arc_param(ParamKind.NORM_LENGTH)
    h = ap.total * 1e-4
    Gp = ctx.unit_point(ap.theta_of(np.asarray(s) + h))
    Gm = ctx.unit_point(ap.theta_of(np.asarray(s) - h))
    dB = (ctx.bmap_batch(Gp) - ctx.bmap_batch(Gm)) / (2.0 * h)
    return ctx.norm_batch(dB)


def d_ds_identities(ctx: PlaneContext, x, y) -> tuple[float, float]:
    """Residuals of the arc-length derivative identities at unit x, y.

    Returns (|d/ds1 sn(x,y) - sn(b(x),y)|, |d/ds2 cm(x,y) - cm(x,b(y))|),
    with symmetric differences of step 1e-5 times the circle length.
    """
    x = _require_nonzero(_as_vec(x))
    y = _require_nonzero(_as_vec(y))
    xh = x / ctx.norm(x)
    yh = y / ctx.norm(y)
    ap = ctx.arc_param(ParamKind.NORM_LENGTH)
    h = ap.total * 1e-5

    s1 = float(ap.s_of(math.atan2(xh[1], xh[0]) % TWO_PI))
    xp = param_point(ctx, ap, s1 + h)
    xm = param_point(ctx, ap, s1 - h)
    d1 = (trig.sn(ctx, xp, yh) - trig.sn(ctx, xm, yh)) / (2.0 * h)
    r1 = abs(d1 - trig.sn(ctx, ctx.bmap(xh), yh))

    s2 = float(ap.s_of(math.atan2(yh[1], yh[0]) % TWO_PI))
    yp = param_point(ctx, ap, s2 + h)
    ym = param_point(ctx, ap, s2 - h)
    d2 = (trig.cm(ctx, xh, yp) - trig.cm(ctx, xh, ym)) / (2.0 * h)
    r2 = abs(d2 - trig.cm(ctx, xh, ctx.bmap(yh)))
    return r1, r2


def _require_normalized_radon(ctx: PlaneContext, what: str):
    if ctx.radon_flag != RadonFlag.RADON:
        raise UnsupportedOperationError(f"{what} requires a Radon plane")
    if not ctx.is_normalized_radon():
        raise UnsupportedOperationError(
            f"{what} requires the antinorm rescaled to match the norm "
            "(build the context with normalize_radon=True)")


def ode_profile(ctx: PlaneContext, f_kind, grid: int):
    """Sampled f, second differences, rho and pointwise ODE residual.

    Returns (s, f, fpp, rho_values, residual) on the uniform norm-arc-length
    grid; f is sn(x0, gamma(s)) or cm(x0, gamma(s)) with x0 = gamma(0).
    """
    _require_normalized_radon(ctx, "the harmonic-motion equation")
    f_kind = OdeKind(f_kind)
    ap = ctx.arc_param(ParamKind.NORM_LENGTH)
    total = ap.total
    s = np.arange(grid) * (total / grid)
    G = ctx.unit_point(ap.theta_of(s))
    x0 = ctx.unit_point(0.0)
    X0 = np.broadcast_to(x0, G.shape)
    if f_kind == OdeKind.SN_FROM_X0:
        f = trig.sn_batch(ctx, X0, G)
    else:
        f = trig.cm_batch(ctx, X0, G)
    h = total / grid
    fpp = (np.roll(f, -1) - 2.0 * f + np.roll(f, 1)) / h ** 2
    rho_values = rho_batch(ctx, s)
    residual = np.abs(fpp + rho_values * f)
    return s, f, fpp, rho_values, residual


def ode_initial_conditions(ctx: PlaneContext, f_kind) -> tuple[float, float]:
    """(f(0), f'(0)) by direct evaluation and a symmetric difference."""
    _require_normalized_radon(ctx, "the harmonic-motion equation")
    f_kind = OdeKind(f_kind)
    ap = ctx.arc_param(ParamKind.NORM_LENGTH)
    h = ap.total * 1e-5
    x0 = ctx.unit_point(0.0)

    def f(s):
        g = param_point(ctx, ap, s)
        if f_kind == OdeKind.SN_FROM_X0:
            return trig.sn(ctx, x0, g) if s % ap.total != 0.0 else 0.0
        return trig.cm(ctx, x0, g)

    f0 = trig.cm(ctx, x0, x0) if f_kind == OdeKind.CM_FROM_X0 else 0.0
    fp0 = (f(h) - f(ap.total - h)) / (2.0 * h)
    return f0, fp0


def ode_expected_initial_conditions(f_kind) -> tuple[float, float]:
    return (0.0, 1.0) if OdeKind(f_kind) == OdeKind.SN_FROM_X0 else (1.0, 0.0)


def ode_residual(ctx: PlaneContext, f_kind, grid: int = 2000) -> float:
    """Max pointwise residual |f'' + rho f| over the uniform grid.

    Initial conditions ((0, 1) for the sine solution, (1, 0) for the cosine
    solution) are checked separately through ode_initial_conditions.
    """
    _, _, _, _, residual = ode_profile(ctx, f_kind, grid)
    return float(residual.max())


def area_param_check(ctx: PlaneContext) -> float:
    """Max per-step gap between the sector-area and antinorm-arc-length columns.

    Both columns integrate the same quantity through two routes (a determinant
    against the analytic velocity versus a circle supremum), so the gap
    measures the internal consistency of the table.
    """
    d_area = np.diff(ctx.sector_area2)
    d_anti = np.diff(ctx.s_anti)
    return float(np.max(np.abs(d_area - d_anti)))


def param_coincidence(ctx: PlaneContext) -> float:
    """Max spread between s_norm, s_anti and sector_area2 over the table.

    The three parameters coincide exactly in a Radon plane whose antinorm is
    rescaled onto the norm.
    """
    _require_normalized_radon(ctx, "parameter coincidence")
    cols = np.stack([ctx.s_norm, ctx.s_anti, ctx.sector_area2])
    return float(np.max(cols.max(axis=0) - cols.min(axis=0)))


def b_image_coverage(ctx: PlaneContext, samples: int = 1024,
                     tol: float = 1e-3, max_rounds: int = 48) -> float:
    """How densely s -> b(gamma(s)) covers the circle.

    Returns the largest Euclidean gap between consecutive image points after
    adaptive refinement in s (the image turns very unevenly where curvature
    concentrates, so offending intervals are bisected until the gap closes or
    the round budget runs out).  In a Radon plane the image is the whole unit
    circle, so a small gap certifies coverage.
    """
    ap = ctx.arc_param(ParamKind.NORM_LENGTH)
    s = np.arange(samples) * (ap.total / samples)
    B = ctx.bmap_batch(ctx.unit_point(ap.theta_of(s)))
    for _ in range(max_rounds):
        B_next = np.roll(B, -1, axis=0)
        gaps = np.hypot(B_next[:, 0] - B[:, 0], B_next[:, 1] - B[:, 1])
        bad = np.nonzero(gaps > tol)[0]
        if len(bad) == 0:
            break
        s_next = np.concatenate([s[1:], [s[0] + ap.total]])
        mids = 0.5 * (s[bad] + s_next[bad])
        B_mid = ctx.bmap_batch(ctx.unit_point(ap.theta_of(mids % ap.total)))
        s = np.concatenate([s, mids])
        order = np.argsort(s)
        s = s[order]
        B = np.concatenate([B, B_mid])[order]
    B_next = np.roll(B, -1, axis=0)
    return float(np.hypot(B_next[:, 0] - B[:, 0], B_next[:, 1] - B[:, 1]).max())
