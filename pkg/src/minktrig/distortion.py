"""Tangent segments from exterior points, the outer distortion functional gamma,
angular bisectors, and the Radon-plane distortion formula.

Through any point strictly outside the unit disc of a smooth strictly convex
plane there are exactly two tangent lines; gamma is the ratio of the Minkowski
lengths of the two tangent segments.  Equivalently it is the ratio of the
touching parameters of any circle inscribed in the angle spanned by two unit
directions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .context import PlaneContext, RadonFlag, _as_vec, _require_nonzero
from .errors import DomainError, NumericalError, UnsupportedOperationError
from .oracles import bisect_sign_change, minimize_line
from . import trig

TWO_PI = 2.0 * math.pi

LOW_ACCURACY_BAND = 1e-6
DEFAULT_RADIUS_FACTOR = 0.2


@dataclass(frozen=True)
class TangentPair:
    """Tangency points and Minkowski tangent lengths from an exterior point.

    q1 and q2 are ordered counterclockwise starting from the polar angle of p.
    ``low_accuracy`` marks exterior points within 1e-6 of the circle, where
    the tangency bisection loses digits.
    """

    p: np.ndarray
    q1: np.ndarray
    q2: np.ndarray
    len1: float
    len2: float
    low_accuracy: bool = False


def tangent_points(ctx: PlaneContext, p, tol: float = 1e-9) -> TangentPair:
    """Both tangency points of the unit circle seen from exterior p.

    A point gamma(theta) is a tangency exactly when the supporting line there
    passes through p, i.e. <grad(theta), p> = 1.  The table is scanned for the
    two sign changes and each is sharpened by bisection.
    """
    p = _as_vec(p)
    np_norm = ctx.norm(p)
    if np_norm <= 1.0 + tol:
        raise DomainError(f"tangent construction needs ||p|| > 1 + tol, got {np_norm}")

    roots = _support_through(ctx, p)
    if len(roots) != 2:
        raise NumericalError(
            f"expected 2 tangency points, found {len(roots)} for p={p.tolist()}")

    ang_p = math.atan2(p[1], p[0])
    roots.sort(key=lambda t: (t - ang_p) % TWO_PI)
    q1 = ctx.unit_point(roots[0])
    q2 = ctx.unit_point(roots[1])
    return TangentPair(
        p=p, q1=q1, q2=q2,
        len1=ctx.norm(p - q1), len2=ctx.norm(p - q2),
        low_accuracy=np_norm < 1.0 + LOW_ACCURACY_BAND,
    )


def _support_through(ctx: PlaneContext, p: np.ndarray, refine_factor: int = 1):
    """Polar angles where the supporting line passes through p.

    The tangency condition is evaluated as <grad(theta), p - gamma(theta)>,
    which is cancellation free even where the circle is numerically flat
    (the equivalent <grad, p> - 1 collapses to exact zeros there).
    """
    n = ctx.table_size * refine_factor
    if refine_factor == 1:
        theta = ctx.theta
        F = np.einsum("ij,ij->i", ctx.normals, p[None, :] - ctx.points)
    else:
        theta = np.arange(n) * (TWO_PI / n)
        pts = ctx.unit_point(theta)
        F = np.einsum("ij,ij->i", ctx.norm_gradient_batch(pts), p[None, :] - pts)

    def G(t):
        q0, q1 = ctx.unit_point_xy(t)
        g0, g1 = ctx.gradient_xy(q0, q1)
        return g0 * (p[0] - q0) + g1 * (p[1] - q1)

    roots = []
    step = TWO_PI / n
    for i in range(n):
        j = (i + 1) % n
        if F[i] == 0.0:
            roots.append(float(theta[i]))
        elif F[i] * F[j] < 0.0:
            roots.append(bisect_sign_change(G, theta[i], theta[i] + step, iters=70))
    if len(roots) != 2 and refine_factor == 1:
        return _support_through(ctx, p, refine_factor=8)
    return roots


def gamma_from_point(ctx: PlaneContext, p, tol: float = 1e-9) -> float:
    """Outer distortion at p: ratio len1/len2 of the two tangent segments."""
    tp = tangent_points(ctx, p, tol=tol)
    return tp.len1 / tp.len2


def _ray_foot(ctx: PlaneContext, direction: np.ndarray, v: np.ndarray) -> float:
    """Foot parameter t* minimizing ||t*direction - v||, by derivative bisection.

    The derivative of t -> ||t d - v|| is the gradient pairing <g(t d - v), d>,
    monotone by convexity, so its sign bisects to machine precision.
    """
    d0, d1 = float(direction[0]), float(direction[1])
    v0, v1 = float(v[0]), float(v[1])
    grad = ctx.evaluator.gradient_xy

    def phi(t):
        gx, gy = grad(t * d0 - v0, t * d1 - v1)
        return gx * d0 + gy * d1

    lo, hi = 0.0, 1.0
    if phi(lo) >= 0.0:
        return 0.0
    n = 0
    while phi(hi) <= 0.0:
        hi *= 2.0
        n += 1
        if n > 60:
            raise NumericalError("ray foot search did not bracket")
    return bisect_sign_change(phi, lo, hi, iters=60)


def _ray_distance(ctx: PlaneContext, direction: np.ndarray, v: np.ndarray) -> float:
    t = _ray_foot(ctx, direction, v)
    return ctx.norm_xy(t * direction[0] - v[0], t * direction[1] - v[1])


def _angle_sweep(ctx: PlaneContext, x, y):
    """Unit directions and the signed polar sweep of the convex angle from x to y."""
    x = _require_nonzero(_as_vec(x))
    y = _require_nonzero(_as_vec(y))
    xh = x / ctx.norm(x)
    yh = y / ctx.norm(y)
    tx = math.atan2(xh[1], xh[0])
    ty = math.atan2(yh[1], yh[0])
    delta = (ty - tx) % TWO_PI
    if min(delta, TWO_PI - delta) < 1e-12 or abs(delta - math.pi) < 1e-12:
        raise DomainError("directions must be linearly independent")
    sweep = delta if delta < math.pi else delta - TWO_PI
    return xh, yh, tx, sweep


def _inscribed_circle(ctx: PlaneContext, x, y,
                      radius_factor: float = DEFAULT_RADIUS_FACTOR):
    """Inscribed-circle construction in the angle of x and y.

    The center direction is located by bisecting the signed difference of the
    Minkowski distances to the two rays (they are equal exactly on the
    Glogovskii bisector); the center is then scaled so the circle has radius
    radius_factor times the common ray distance.
    """
    xh, yh, tx, sweep = _angle_sweep(ctx, x, y)

    def ddiff(tau):
        w = ctx.unit_point(tx + tau * sweep)
        return _ray_distance(ctx, xh, w) - _ray_distance(ctx, yh, w)

    tau = bisect_sign_change(ddiff, 1e-9, 1.0 - 1e-9, iters=70)
    what = ctx.unit_point(tx + tau * sweep)
    d = _ray_distance(ctx, xh, what)
    if d <= 0.0:
        raise NumericalError("degenerate inscribed circle")
    # scale the center so the common ray distance equals radius_factor; gamma
    # is scale free, a small circle just stays strictly inside the angle
    center = what * (radius_factor / d)
    radius = radius_factor
    beta = _ray_foot(ctx, xh, center)
    alpha = _ray_foot(ctx, yh, center)
    if beta <= 0.0 or alpha <= 0.0:
        raise NumericalError("inscribed circle does not touch both ray interiors")
    return {
        "x": xh, "y": yh, "center": center, "radius": radius,
        "beta": beta, "alpha": alpha,
        "touch_x": beta * xh, "touch_y": alpha * yh,
    }


def gamma_pair(ctx: PlaneContext, x, y,
               radius_factor: float = DEFAULT_RADIUS_FACTOR) -> float:
    """Outer distortion gamma(x, y) = ||beta x|| / ||alpha y|| via an inscribed circle."""
    c = _inscribed_circle(ctx, x, y, radius_factor=radius_factor)
    return c["beta"] / c["alpha"]


def radon_gamma_formula(ctx: PlaneContext, x, y) -> float:
    """Distortion of a Radon plane from the cosine: cm(x, x+y) / cm(y, x+y)."""
    if ctx.radon_flag != RadonFlag.RADON:
        raise UnsupportedOperationError("the cosine distortion formula needs a Radon plane")
    x = _require_nonzero(_as_vec(x))
    y = _require_nonzero(_as_vec(y))
    xh = x / ctx.norm(x)
    yh = y / ctx.norm(y)
    s = xh + yh
    den = trig.cm(ctx, yh, s)
    if den == 0.0:
        raise DomainError("directions must be linearly independent")
    return trig.cm(ctx, xh, s) / den


def glogovskii_defect(ctx: PlaneContext, x, y, v) -> float:
    """cm(alpha x - v, v) - cm(beta y - v, v); zero exactly on the Glogovskii bisector.

    alpha and beta are the Birkhoff foot parameters of v on the two rays,
    found by golden-section minimization of the ray distances.
    """
    xh, yh, _, _ = _angle_sweep(ctx, x, y)
    v = _require_nonzero(_as_vec(v))
    det = xh[0] * yh[1] - xh[1] * yh[0]
    a = (v[0] * yh[1] - v[1] * yh[0]) / det
    b = (xh[0] * v[1] - xh[1] * v[0]) / det
    if a <= 0.0 or b <= 0.0:
        raise DomainError("v must lie strictly inside the angle of x and y")

    def fx(t):
        return ctx.norm_xy(t * xh[0] - v[0], t * xh[1] - v[1])

    def fy(t):
        return ctx.norm_xy(t * yh[0] - v[0], t * yh[1] - v[1])

    alpha, _ = minimize_line(fx)
    beta, _ = minimize_line(fy)
    return trig.cm(ctx, alpha * xh - v, v) - trig.cm(ctx, beta * yh - v, v)


def busemann_ray(ctx: PlaneContext, x, y) -> np.ndarray:
    """Direction of the Busemann angular bisector: x/||x|| + y/||y||."""
    x = _require_nonzero(_as_vec(x))
    y = _require_nonzero(_as_vec(y))
    xh = x / ctx.norm(x)
    yh = y / ctx.norm(y)
    if abs(xh[0] * yh[1] - xh[1] * yh[0]) < 1e-14:
        raise DomainError("directions must be linearly independent")
    return xh + yh


def gamma_limit_probe(ctx: PlaneContext, x, eps_list):
    """gamma(x, y_eps) for y_eps at arc distance eps from x and from -x.

    Values approach 1 as eps shrinks in a Radon plane; the approach is
    reported, not asserted.  Returns [(eps, gamma_near_x, gamma_near_minus_x)].
    """
    if ctx.radon_flag != RadonFlag.RADON:
        raise UnsupportedOperationError("the limit probe is defined for Radon planes")
    from .calculus import param_point  # local import to avoid a cycle
    x = _require_nonzero(_as_vec(x))
    xh = x / ctx.norm(x)
    theta_x = math.atan2(xh[1], xh[0]) % TWO_PI
    ap = ctx.arc_param("norm_length")
    s_x = float(ap.s_of(theta_x))
    half = 0.5 * ctx.norm_length_total
    out = []
    for eps in eps_list:
        y_near = param_point(ctx, ap, s_x + eps)
        y_far = param_point(ctx, ap, s_x + half + eps)
        out.append((float(eps),
                    radon_gamma_formula(ctx, xh, y_near),
                    radon_gamma_formula(ctx, xh, y_far)))
    return out


def _tangency_with_direction(ctx: PlaneContext, t: np.ndarray) -> np.ndarray:
    """Circle point whose supporting line is parallel to t, with [q, t] > 0."""
    H = ctx.normals @ t
    n = ctx.table_size
    step = TWO_PI / n

    def h(theta):
        return float(np.dot(ctx.norm_gradient(ctx.unit_point(theta)), t))

    roots = []
    for i in range(n):
        j = (i + 1) % n
        if H[i] == 0.0:
            roots.append(float(ctx.theta[i]))
        elif H[i] * H[j] < 0.0:
            roots.append(bisect_sign_change(h, ctx.theta[i], ctx.theta[i] + step, iters=70))
    for th in roots:
        q = ctx.unit_point(th)
        if q[0] * t[1] - q[1] * t[0] > 0.0:
            return q
    raise NumericalError("no positively oriented tangency for the given direction")


def parallel_chords_construction(ctx: PlaneContext, t1_dir, t2_dir) -> dict:
    """Full chord-parallelism construction for two tangent directions.

    Tangents with the given directions touch the circle at q1, q2 and meet at
    p.  The circle points b1, b2 along p - q1, p - q2 define b on the ray of
    b1 + b2; chords c1, c2 cut the diameters of b1, b2 by the parallels of
    their supporting lines through b.
    """
    t1 = _require_nonzero(_as_vec(t1_dir))
    t2 = _require_nonzero(_as_vec(t2_dir))
    if abs(t1[0] * t2[1] - t1[1] * t2[0]) < 1e-12:
        raise DomainError("tangent directions must be independent")

    q1 = _tangency_with_direction(ctx, t1)
    q2 = _tangency_with_direction(ctx, t2)
    g1 = ctx.norm_gradient(q1)
    g2 = ctx.norm_gradient(q2)
    det = g1[0] * g2[1] - g1[1] * g2[0]
    if abs(det) < 1e-14:
        raise DomainError("tangent lines are parallel")
    p = np.array([(g2[1] - g1[1]) / det, (g1[0] - g2[0]) / det])

    b1 = (p - q1) / ctx.norm(p - q1)
    b2 = (p - q2) / ctx.norm(p - q2)
    w = b1 + b2
    b_pt = w / ctx.norm(w)

    def cut(bi):
        ti = ctx.tangent_dir(bi)
        d = bi[0] * (-ti[1]) - (-ti[0]) * bi[1]
        u = (b_pt[0] * (-ti[1]) + ti[0] * b_pt[1]) / d
        return u * bi

    c1 = cut(b1)
    c2 = cut(b2)
    defect = abs(trig.sn(ctx, q1 - q2, c1 - c2))
    collinearity = abs(trig.sn(ctx, p, b_pt))
    return {
        "q1": q1, "q2": q2, "p": p, "b1": b1, "b2": b2, "b": b_pt,
        "c1": c1, "c2": c2, "defect": defect, "collinearity": collinearity,
    }


def parallel_chords_check(ctx: PlaneContext, t1_dir, t2_dir) -> float:
    """Parallelism defect |sn(q1 - q2, c1 - c2)| of the chord construction."""
    if ctx.radon_flag != RadonFlag.RADON:
        raise UnsupportedOperationError("chord parallelism holds in Radon planes")
    return parallel_chords_construction(ctx, t1_dir, t2_dir)["defect"]


def mixed_config_apex(p: float) -> np.ndarray:
    """Apex of the two tangents at a = (-2^(-1/q), 2^(-1/q)) and b = (0, 1)."""
    q = p / (p - 1.0)
    return np.array([1.0 - 2.0 ** (1.0 - 1.0 / q), 1.0])


def mixed_config_gamma_magnitude(p: float) -> float:
    """|2^(1/p) (1 + 2^(-1/q) / (1 - 2^(1-1/q)))| at the standard mixed-norm configuration."""
    q = p / (p - 1.0)
    return abs(2.0 ** (1.0 / p) * (1.0 + 2.0 ** (-1.0 / q) / (1.0 - 2.0 ** (1.0 - 1.0 / q))))
