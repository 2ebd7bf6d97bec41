"""Birkhoff orthogonality, the map b, conjugate pairs and the Radon detector.

x is Birkhoff orthogonal to y when ||x + l*y|| >= ||x|| for every scalar l.
Smoothness makes the relation right unique, which defines b(x): the unique
direction with unit antinorm, x orthogonal to it, and positive orientation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .context import (NOT_RADON_DEFECT_TOL, RADON_DEFECT_TOL, PlaneContext,
                      RadonFlag, _as_vec, _require_nonzero, _radon_probe)
from .errors import NumericalError
from .oracles import bisect_sign_change, minimize_line
from .report import VerifyReport


@dataclass(frozen=True)
class ConjugatePair:
    """Mutually Birkhoff-orthogonal pair: u unit in the norm, v unit in the antinorm."""

    u: np.ndarray
    v: np.ndarray


def is_birkhoff(ctx: PlaneContext, x, y, tol: float = 1e-9) -> bool:
    """True when min over l of ||x + l*y|| >= ||x|| - tol (golden-section check)."""
    x = _require_nonzero(_as_vec(x))
    y = _require_nonzero(_as_vec(y))

    def f(lam):
        return ctx.norm_xy(x[0] + lam * y[0], x[1] + lam * y[1])

    _, fmin = minimize_line(f)
    return fmin >= ctx.norm(x) - tol


def birkhoff_b(ctx: PlaneContext, x) -> np.ndarray:
    """The tangent direction at x/||x||, normalized to unit antinorm.

    Computed analytically as the quarter turn of the norm gradient; the
    minimization definition stays available through is_birkhoff as an oracle.
    """
    return ctx.bmap(x)


def _symmetry_defect_table(ctx: PlaneContext) -> np.ndarray:
    # D(theta) = [u, b(b(u))] over the table; zero exactly at conjugate points
    key = "conjugate_defect"
    if key not in ctx._cache:
        B = ctx.bmap_batch(ctx.points)
        BB = ctx.bmap_batch(B)
        ctx._cache[key] = ctx.symplectic_batch(ctx.points, BB)
    return ctx._cache[key]


def conjugate_pair(ctx: PlaneContext, x) -> ConjugatePair:
    """Conjugate pair (u, b(u)) with u on the circle nearest the direction of x.

    In a Radon plane every direction works.  Otherwise the signed defect
    [u, b(b(u))] is scanned along the table from x for a sign change and the
    zero is bisected.
    """
    x = _require_nonzero(_as_vec(x))
    u0 = x / ctx.norm(x)
    if ctx.radon_flag == RadonFlag.RADON:
        return ConjugatePair(u=u0, v=ctx.bmap(u0))

    def defect(theta):
        u = ctx.unit_point(theta)
        return ctx.symplectic(u, ctx.bmap(ctx.bmap(u)))

    table = _symmetry_defect_table(ctx)
    n = ctx.table_size
    step = 2.0 * math.pi / n
    start = int(round(math.atan2(u0[1], u0[0]) / step)) % n
    if table[start] == 0.0:
        u = ctx.points[start]
        return ConjugatePair(u=u, v=ctx.bmap(u))
    for off in range(1, n // 2 + 1):
        for k, prev in ((start + off, start + off - 1),
                        (start - off, start - off + 1)):
            if table[k % n] == 0.0:
                u = ctx.points[k % n]
                return ConjugatePair(u=u, v=ctx.bmap(u))
            if table[k % n] * table[prev % n] < 0.0:
                lo = min(k, prev) * step
                theta = bisect_sign_change(defect, lo, lo + step, iters=70)
                u = ctx.unit_point(theta)
                return ConjugatePair(u=u, v=ctx.bmap(u))
    raise NumericalError("no conjugate direction found on a full circle scan")


def is_radon(ctx: PlaneContext, samples: int = 256,
             tol: float = RADON_DEFECT_TOL) -> VerifyReport:
    """Probe Birkhoff symmetry: is b(x) orthogonal back to x over the circle?

    The defect per sample is (||b(x)|| - min_l ||b(x) + l x||) / ||b(x)||.
    The classification (Radon / NotRadon / Unknown) is encoded in the check
    name; the report carries the worst defect and its witness.
    """
    defect, witness, _ = _radon_probe(ctx.evaluator, ctx.theta, ctx.points, samples)
    if defect < tol:
        flag = RadonFlag.RADON
    elif defect > NOT_RADON_DEFECT_TOL:
        flag = RadonFlag.NOT_RADON
    else:
        flag = RadonFlag.UNKNOWN
    return VerifyReport(
        check=f"radon-classification:{flag.value}",
        passed=flag != RadonFlag.UNKNOWN,
        max_residual=defect,
        witness=witness,
    )
