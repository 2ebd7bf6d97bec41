"""Generalized trigonometric functions of a smooth Minkowski plane.

The cosine cm comes in three equivalent forms: through the symplectic pairing
with b, through a one-dimensional infimum, and through a supporting-line
intersection.  The signed sine sn, the symmetric cosines cn and ca, the norm
generating semi-inner product and the Gateaux derivative of the norm are all
built on the same b-map.
"""

from __future__ import annotations

import numpy as np

from .context import PlaneContext, RadonFlag, _as_vec, _require_nonzero
from .errors import NumericalError, UnsupportedOperationError
from .oracles import expand_bracket_vec, golden_max_vec, golden_min_vec, minimize_line

_PARALLEL_EPS = 1e-13


def cm(ctx: PlaneContext, x, y) -> float:
    """cm(x, y) = [y, b(x)] / ||y||."""
    x = _require_nonzero(_as_vec(x))
    y = _require_nonzero(_as_vec(y))
    return ctx.symplectic(y, ctx.bmap(x)) / ctx.norm(y)


def cm_batch(ctx: PlaneContext, X, Y) -> np.ndarray:
    B = ctx.bmap_batch(X)
    return ctx.symplectic_batch(Y, B) / ctx.norm_batch(Y)


def cm_inf_form(ctx: PlaneContext, x, y) -> float:
    """cm as sgn([y, b(x)]) * inf_t ||y + t b(x)|| / ||y||."""
    x = _require_nonzero(_as_vec(x))
    y = _require_nonzero(_as_vec(y))
    b = ctx.bmap(x)
    sgn = np.sign(ctx.symplectic(y, b))

    def f(t):
        return ctx.norm_xy(y[0] + t * b[0], y[1] + t * b[1])

    _, fmin = minimize_line(f)
    return float(sgn) * fmin / ctx.norm(y)


def cm_inf_batch(ctx: PlaneContext, X, Y) -> np.ndarray:
    B = ctx.bmap_batch(X)
    sgn = np.sign(ctx.symplectic_batch(Y, B))

    def f(t):
        return ctx.norm_batch(Y + t[..., None] * B)

    lo, hi = expand_bracket_vec(f, len(np.atleast_2d(Y)))
    _, fmin = golden_min_vec(f, lo, hi, iters=75)
    return sgn * fmin / ctx.norm_batch(Y)


def cm_external_form(ctx: PlaneContext, x, y) -> float:
    """Signed inverse length from o to where the ray [o, y> meets the supporting line at x.

    Zero when the ray is parallel to the supporting line; negative when the
    intersection lies on the opposite ray.
    """
    x = _require_nonzero(_as_vec(x))
    y = _require_nonzero(_as_vec(y))
    xh = x / ctx.norm(x)
    yh = y / ctx.norm(y)
    td = ctx.tangent_dir(xh)
    den = td[0] * yh[1] - td[1] * yh[0]
    if abs(den) < _PARALLEL_EPS * max(1.0, abs(td[0]) + abs(td[1])):
        return 0.0
    t = (td[0] * xh[1] - td[1] * xh[0]) / den
    return 1.0 / t


def cm_external_batch(ctx: PlaneContext, X, Y) -> np.ndarray:
    Xh = X / ctx.norm_batch(X)[..., None]
    Yh = Y / ctx.norm_batch(Y)[..., None]
    TD = ctx.norm_gradient_batch(Xh)
    TD = np.stack([-TD[..., 1], TD[..., 0]], axis=-1)
    den = TD[..., 0] * Yh[..., 1] - TD[..., 1] * Yh[..., 0]
    num = TD[..., 0] * Xh[..., 1] - TD[..., 1] * Xh[..., 0]
    scale = np.maximum(1.0, np.abs(TD[..., 0]) + np.abs(TD[..., 1]))
    parallel = np.abs(den) < _PARALLEL_EPS * scale
    t = np.where(parallel, np.inf, num / np.where(parallel, 1.0, den))
    return np.where(parallel, 0.0, 1.0 / t)


def sn(ctx: PlaneContext, x, y) -> float:
    """Signed sine sn(x, y) = [x, y] / (||y||_a ||x||)."""
    x = _require_nonzero(_as_vec(x))
    y = _require_nonzero(_as_vec(y))
    return ctx.symplectic(x, y) / (ctx.antinorm(y) * ctx.norm(x))


def sn_batch(ctx: PlaneContext, X, Y) -> np.ndarray:
    return ctx.symplectic_batch(X, Y) / (ctx.antinorm_batch(Y) * ctx.norm_batch(X))


def cn(ctx: PlaneContext, x, y) -> float:
    """Symmetric cosine sqrt(cm(x,y) * cm(y,x)); well defined only in Radon planes."""
    if ctx.radon_flag != RadonFlag.RADON:
        raise UnsupportedOperationError(
            "cn requires a Radon plane; cm(x,y)*cm(y,x) can be negative here")
    prod = cm(ctx, x, y) * cm(ctx, y, x)
    if prod < -1e-9:
        raise NumericalError(f"negative cosine product {prod} in a Radon context")
    return float(np.sqrt(max(prod, 0.0)))


def ca(ctx: PlaneContext, x, y) -> float:
    """Arithmetic-mean symmetric cosine (cm(x,y) + cm(y,x)) / 2."""
    return 0.5 * (cm(ctx, x, y) + cm(ctx, y, x))


def semi_inner(ctx: PlaneContext, x, y) -> float:
    """The unique norm generating semi-inner product: ||x|| ||y|| cm(x, y)."""
    x = _as_vec(x)
    y = _as_vec(y)
    if (x[0] == 0.0 and x[1] == 0.0) or (y[0] == 0.0 and y[1] == 0.0):
        return 0.0
    return ctx.norm(x) * ctx.symplectic(y, ctx.bmap(x))


def gateaux(ctx: PlaneContext, x, y) -> float:
    """||x|| times the directional derivative of the norm at x toward y.

    Uses the symmetric quotient (||x+ty|| - ||x-ty||) / 2t with
    t = 1e-6 ||x|| / ||y||, which is second-order accurate.
    """
    x = _require_nonzero(_as_vec(x))
    y = _as_vec(y)
    ny = ctx.norm(y)
    if ny == 0.0:
        return 0.0
    nx = ctx.norm(x)
    t = 1e-6 * nx / ny
    quot = (ctx.norm_xy(x[0] + t * y[0], x[1] + t * y[1])
            - ctx.norm_xy(x[0] - t * y[0], x[1] - t * y[1])) / (2.0 * t)
    return nx * quot


def gateaux_batch(ctx: PlaneContext, X, Y) -> np.ndarray:
    NX = ctx.norm_batch(X)
    NY = ctx.norm_batch(Y)
    t = (1e-6 * NX / NY)[..., None]
    quot = (ctx.norm_batch(X + t * Y) - ctx.norm_batch(X - t * Y)) / (2.0 * t[..., 0])
    return NX * quot


def norm_gradient_direction(ctx: PlaneContext, x) -> np.ndarray:
    """Direction maximizing the derivative of the norm at x: argmax over S of [., b(x)].

    Found by table scan plus golden refinement; equals x/||x|| for every
    smooth norm, which is the content of the gradient-flow picture.
    """
    x = _require_nonzero(_as_vec(x))
    b = ctx.bmap(x)
    P = ctx.points
    scores = P[:, 0] * b[1] - P[:, 1] * b[0]
    k = int(np.argmax(scores))
    step = 2.0 * np.pi / ctx.table_size

    def f(t):
        p = ctx.unit_point(t)
        return p[..., 0] * b[1] - p[..., 1] * b[0]

    t_best, _ = golden_max_vec(f, np.array([ctx.theta[k] - step]),
                               np.array([ctx.theta[k] + step]))
    return ctx.unit_point(float(t_best[0]))
