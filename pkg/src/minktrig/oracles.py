"""Brute-force search primitives used to validate every analytic fast path.

These are deliberately dumb and independent: one-dimensional golden-section
minimization with bracket expansion, circle suprema by table scan plus local
refinement, symmetric difference quotients, and a bisection construction of
equilateral triangles.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NumericalError

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0

MAX_DOUBLINGS = 60
MAX_GOLDEN_ITERS = 200


def expand_bracket(f, span: float = 1.0):
    """Find (lo, hi) containing a minimizer of a convex f by doubling from 0."""
    lo, hi = -span, span
    fl, f0, fh = f(lo), f(0.0), f(hi)
    if not (math.isfinite(fl) and math.isfinite(f0) and math.isfinite(fh)):
        raise NumericalError("non-finite value while bracketing")
    n = 0
    while fh < f0 or fl < f0:
        # convexity: the minimum escapes on at most one side at a time
        if fh < f0:
            hi *= 2.0
            fh = f(hi)
        if fl < f0:
            lo *= 2.0
            fl = f(lo)
        n += 1
        if n > MAX_DOUBLINGS:
            raise NumericalError("bracket expansion did not terminate")
        if not (math.isfinite(fl) and math.isfinite(fh)):
            raise NumericalError("non-finite value while bracketing")
    return lo, hi


def minimize_line(f, bracket=None):
    """Golden-section minimum of a convex function on the real line.

    Returns (t, f(t)).  When ``bracket`` is omitted it is found by doubling
    expansion from 0.  The final interval width is below 1e-10 times the
    initial bracket width (float64 value plateaus permitting).
    """
    if bracket is None:
        bracket = expand_bracket(f)
    lo, hi = float(bracket[0]), float(bracket[1])
    if not lo < hi:
        raise NumericalError(f"empty bracket ({lo}, {hi})")
    width0 = hi - lo
    x1 = hi - GOLDEN * (hi - lo)
    x2 = lo + GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(MAX_GOLDEN_ITERS):
        if not (math.isfinite(f1) and math.isfinite(f2)):
            raise NumericalError("non-finite value during golden-section search")
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - GOLDEN * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + GOLDEN * (hi - lo)
            f2 = f(x2)
        if hi - lo <= 1e-10 * width0:
            break
    if f1 <= f2:
        return x1, f1
    return x2, f2


def finite_diff(f, t0: float, h: float) -> float:
    """Symmetric difference quotient (f(t0+h) - f(t0-h)) / 2h."""
    return (f(t0 + h) - f(t0 - h)) / (2.0 * h)


def bisect_sign_change(f, lo: float, hi: float, iters: int = 80):
    """Bisection root of f on [lo, hi]; requires a sign change at the ends."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise NumericalError("bisection interval has no sign change")
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    return 0.5 * (lo + hi)


def sup_circle(ctx, h, refine: bool = True):
    """Supremum of a continuous h over the unit circle: (theta, value).

    Scans the cached circle table and then sharpens the best sample with a
    golden-section pass on the polar angle; accurate to ~1e-9 for smooth h.
    """
    vals = np.asarray([h(p) for p in ctx.points], dtype=float)
    if not np.all(np.isfinite(vals)):
        raise NumericalError("non-finite value while scanning the circle")
    k = int(np.argmax(vals))
    theta = float(ctx.theta[k])
    if not refine:
        return theta, float(vals[k])
    step = 2.0 * math.pi / len(ctx.theta)

    def g(t):
        return -h(ctx.unit_point(t))

    t_best, neg = minimize_line(g, (theta - step, theta + step))
    if -neg < vals[k]:
        return theta, float(vals[k])
    return t_best % (2.0 * math.pi), float(-neg)


def equilateral_triangle(ctx, x):
    """Unit y, z with x = y + z and all three side norms equal to 1.

    y is located by bisection in the polar angle: the chord from x/||x||
    sweeps every length between 0 and 2 along the half circle.
    """
    x = np.asarray(x, dtype=float)
    nx = float(ctx.norm(x))
    if nx == 0.0:
        raise NumericalError("cannot build a triangle on the zero vector")
    xhat = x / nx
    theta_x = math.atan2(xhat[1], xhat[0])
    x0, x1 = float(xhat[0]), float(xhat[1])

    def chord(theta):
        p0, p1 = ctx.unit_point_xy(theta)
        return ctx.norm_xy(x0 - p0, x1 - p1) - 1.0

    eps = 1e-9
    theta_y = bisect_sign_change(chord, theta_x + eps, theta_x + math.pi, iters=70)
    y = ctx.unit_point(theta_y)
    return y, xhat - y


def golden_min_vec(f, lo, hi, iters: int = 60):
    """Vectorized golden-section minimization over independent brackets.

    ``f`` maps an array of abscissae to an array of values.  Returns
    (argmin, min) arrays.
    """
    lo = np.array(lo, dtype=float, copy=True)
    hi = np.array(hi, dtype=float, copy=True)
    x1 = hi - GOLDEN * (hi - lo)
    x2 = lo + GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(iters):
        left = f1 <= f2
        hi = np.where(left, x2, hi)
        lo = np.where(left, lo, x1)
        xn = np.where(left, hi - GOLDEN * (hi - lo), lo + GOLDEN * (hi - lo))
        fn = f(xn)
        x1o, f1o = x1, f1
        x1 = np.where(left, xn, x2)
        f1 = np.where(left, fn, f2)
        x2 = np.where(left, x1o, xn)
        f2 = np.where(left, f1o, fn)
    take1 = f1 <= f2
    return np.where(take1, x1, x2), np.where(take1, f1, f2)


def golden_max_vec(f, lo, hi, iters: int = 60):
    x, v = golden_min_vec(lambda t: -f(t), lo, hi, iters=iters)
    return x, -v


def expand_bracket_vec(f, n: int, span: float = 1.0,
                       max_doublings: int = MAX_DOUBLINGS):
    """Vectorized doubling expansion for n independent convex objectives."""
    lo = np.full(n, -span)
    hi = np.full(n, span)
    f0 = f(np.zeros(n))
    fl, fh = f(lo), f(hi)
    for _ in range(max_doublings):
        open_hi = fh < f0
        open_lo = fl < f0
        if not (np.any(open_hi) or np.any(open_lo)):
            return lo, hi
        hi = np.where(open_hi, 2.0 * hi, hi)
        lo = np.where(open_lo, 2.0 * lo, lo)
        fh = np.where(open_hi, f(hi), fh)
        fl = np.where(open_lo, f(lo), fl)
    raise NumericalError("vectorized bracket expansion did not terminate")
