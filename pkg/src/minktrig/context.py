"""Plane contexts: symplectic form, antinorm, b-map and cached unit-circle tables.

A PlaneContext freezes one norm together with the (scaled) determinant form
and a dense parameterization of the unit circle carrying outward normals,
positively oriented tangents of unit antinorm, and cumulative arc-length and
sector-area parameters.  Everything downstream is a pure function of a
context, so contexts are safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import DomainError, NumericalError
from .norms import NormSpec, default_table_size, make_evaluator, parse_norm_arg
from .oracles import expand_bracket_vec, golden_max_vec, golden_min_vec

TWO_PI = 2.0 * math.pi

# classification thresholds for the Birkhoff-symmetry defect, chosen to
# separate discretization noise from genuine asymmetry
RADON_DEFECT_TOL = 1e-7
NOT_RADON_DEFECT_TOL = 1e-4

_REFINE_ITERS = 48
_CHUNK_ELEMS = 1 << 22


class RadonFlag(str, Enum):
    RADON = "Radon"
    NOT_RADON = "NotRadon"
    UNKNOWN = "Unknown"


class ParamKind(str, Enum):
    NORM_LENGTH = "norm_length"
    ANTINORM_LENGTH = "antinorm_length"
    SECTOR_AREA = "sector_area"


class CirclePoint(NamedTuple):
    """One unit-circle sample with its local frame and accumulated parameters."""

    theta: float
    point: np.ndarray
    normal: np.ndarray
    tangent: np.ndarray
    s_norm: float
    s_anti: float
    sector_area2: float


@dataclass(frozen=True)
class ArcParam:
    """Monotone bijection between a circle parameter and the polar angle."""

    kind: ParamKind
    total: float
    _s_of_theta: CubicSpline = field(repr=False)
    _theta_of_s: CubicSpline = field(repr=False)

    def theta_of(self, s):
        return self._theta_of_s(np.mod(s, self.total))

    def s_of(self, theta):
        return self._s_of_theta(np.mod(theta, TWO_PI))


def _rot90(V: np.ndarray) -> np.ndarray:
    """Quarter turn (x, y) -> (-y, x)."""
    return np.stack([-V[..., 1], V[..., 0]], axis=-1)


def _as_vec(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.shape != (2,):
        raise DomainError(f"expected a 2-vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise DomainError("non-finite vector component")
    return v


def _require_nonzero(v: np.ndarray) -> np.ndarray:
    if v[0] == 0.0 and v[1] == 0.0:
        raise DomainError("operation undefined at the origin")
    return v


@dataclass(frozen=True)
class PlaneContext:
    """Immutable bundle of a norm, a symplectic scale and circle tables."""

    spec: NormSpec
    evaluator: object = field(repr=False)
    omega_scale: float
    radon_flag: RadonFlag
    radon_defect: float
    radon_witness: tuple
    theta: np.ndarray = field(repr=False)
    points: np.ndarray = field(repr=False)
    normals: np.ndarray = field(repr=False)
    tangents: np.ndarray = field(repr=False)
    s_norm: np.ndarray = field(repr=False)      # length N+1, node 0 duplicated at 2*pi
    s_anti: np.ndarray = field(repr=False)
    sector_area2: np.ndarray = field(repr=False)
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    # -- norm layer ---------------------------------------------------------

    @property
    def table_size(self) -> int:
        return len(self.theta)

    def norm(self, v) -> float:
        return float(self.evaluator.norm(_as_vec(v)))

    def norm_batch(self, V) -> np.ndarray:
        return self.evaluator.norm(V)

    def norm_xy(self, x: float, y: float) -> float:
        return self.evaluator.norm_xy(x, y)

    def gradient_xy(self, x: float, y: float) -> tuple[float, float]:
        return self.evaluator.gradient_xy(x, y)

    def unit_point_xy(self, theta: float) -> tuple[float, float]:
        c, s = math.cos(theta), math.sin(theta)
        r = 1.0 / self.evaluator.norm_xy(c, s)
        return r * c, r * s

    def norm_gradient(self, v) -> np.ndarray:
        return self.evaluator.gradient(_require_nonzero(_as_vec(v)))

    def norm_gradient_batch(self, V) -> np.ndarray:
        return self.evaluator.gradient(V)

    def unit_point(self, theta):
        """Point of the unit circle at polar angle theta (vectorized)."""
        theta = np.asarray(theta, dtype=float)
        U = np.stack([np.cos(theta), np.sin(theta)], axis=-1)
        return U / self.evaluator.norm(U)[..., None]

    # -- symplectic form / antinorm -----------------------------------------

    def symplectic(self, u, v) -> float:
        u, v = _as_vec(u), _as_vec(v)
        return self.omega_scale * (u[0] * v[1] - u[1] * v[0])

    def symplectic_batch(self, U, V) -> np.ndarray:
        U = np.asarray(U, dtype=float)
        V = np.asarray(V, dtype=float)
        return self.omega_scale * (U[..., 0] * V[..., 1] - U[..., 1] * V[..., 0])

    def antinorm(self, v) -> float:
        return float(self.antinorm_batch(_as_vec(v)[None, :])[0])

    def antinorm_batch(self, V, with_theta: bool = False,
                       bracket_offset: float = 0.0):
        """sup over the circle of |[v, y]|, by table scan plus golden refinement.

        ``bracket_offset`` (in table steps) shifts the refinement bracket; the
        result must not depend on it, which is how right uniqueness is probed.
        """
        V = np.asarray(V, dtype=float)
        flat = V.reshape(-1, 2)
        # det(v, p_j) = v . (p_j2, -p_j1)
        R = np.stack([self.points[:, 1], -self.points[:, 0]], axis=1)
        n = len(flat)
        block = max(1, _CHUNK_ELEMS // max(1, len(R)))
        k = np.empty(n, dtype=int)
        sgn = np.empty(n)
        for i in range(0, n, block):
            scores = flat[i:i + block] @ R.T
            kk = np.argmax(np.abs(scores), axis=1)
            k[i:i + block] = kk
            sgn[i:i + block] = np.sign(scores[np.arange(len(kk)), kk])
        sgn[sgn == 0.0] = 1.0
        step = TWO_PI / self.table_size
        t0 = self.theta[k] + bracket_offset * step
        half = (1.0 + abs(bracket_offset)) * step

        def f(t):
            P = self.unit_point(t)
            return sgn * (flat[:, 0] * P[..., 1] - flat[:, 1] * P[..., 0])

        t_best, val = golden_max_vec(f, t0 - half, t0 + half, iters=_REFINE_ITERS)
        vals = self.omega_scale * np.maximum(val, 0.0)
        vals = vals.reshape(V.shape[:-1])
        if with_theta:
            return vals, np.mod(t_best, TWO_PI).reshape(V.shape[:-1])
        return vals

    # -- b-map ----------------------------------------------------------------

    def tangent_dir(self, v) -> np.ndarray:
        """Positively oriented supporting-line direction at v (not normalized)."""
        return _rot90(self.norm_gradient(v))

    def bmap(self, x) -> np.ndarray:
        x = _require_nonzero(_as_vec(x))
        td = _rot90(self.evaluator.gradient(x))
        return td / self.antinorm(td)

    def bmap_batch(self, X) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        td = self.evaluator.gradient(X)
        td = _rot90(td)
        return td / self.antinorm_batch(td)[..., None]

    # -- table access ----------------------------------------------------------

    def circle_point(self, i: int) -> CirclePoint:
        return CirclePoint(
            theta=float(self.theta[i]),
            point=self.points[i],
            normal=self.normals[i],
            tangent=self.tangents[i],
            s_norm=float(self.s_norm[i]),
            s_anti=float(self.s_anti[i]),
            sector_area2=float(self.sector_area2[i]),
        )

    @property
    def norm_length_total(self) -> float:
        return float(self.s_norm[-1])

    @property
    def antinorm_length_total(self) -> float:
        return float(self.s_anti[-1])

    @property
    def sector_area2_total(self) -> float:
        return float(self.sector_area2[-1])

    def arc_param(self, kind: ParamKind) -> ArcParam:
        kind = ParamKind(kind)
        key = ("arc_param", kind)
        if key not in self._cache:
            values = {
                ParamKind.NORM_LENGTH: self.s_norm,
                ParamKind.ANTINORM_LENGTH: self.s_anti,
                ParamKind.SECTOR_AREA: self.sector_area2,
            }[kind]
            theta_ext = np.concatenate([self.theta, [TWO_PI]])
            fwd = CubicSpline(theta_ext, values)
            inv = CubicSpline(values, theta_ext)
            self._cache[key] = ArcParam(kind, float(values[-1]), fwd, inv)
        return self._cache[key]

    def antinorm_unit_residual(self) -> float:
        """max over the table of | ||y||_a - 1 |; small only for rescaled Radon planes."""
        if "anti_residual" not in self._cache:
            vals = self.antinorm_batch(self.points)
            self._cache["anti_residual"] = float(np.max(np.abs(vals - 1.0)))
        return self._cache["anti_residual"]

    def is_normalized_radon(self, tol: float = 1e-6) -> bool:
        return self.radon_flag == RadonFlag.RADON and self.antinorm_unit_residual() < tol


def _radon_probe(evaluator, theta, points, samples: int):
    """Max Birkhoff-symmetry defect of b over sampled circle points.

    For each sample x the defect is (||b(x)|| - min_l ||b(x) + l x||) / ||b(x)||,
    zero exactly when b(x) is Birkhoff orthogonal back to x.  The antinorm
    normalization of b cancels in the ratio, so the raw tangent directions work.
    """
    n = len(points)
    idx = np.unique(np.linspace(0, n, samples, endpoint=False).astype(int))
    X = points[idx]
    TD = _rot90(evaluator.gradient(X))
    # normalize in the Euclidean sense for conditioning only
    TD = TD / np.hypot(TD[:, 0], TD[:, 1])[:, None]
    nB = evaluator.norm(TD)

    def f(lam):
        return evaluator.norm(TD + lam[:, None] * X)

    lo, hi = expand_bracket_vec(f, len(X), span=1.0)
    _, fmin = golden_min_vec(f, lo, hi, iters=80)
    defect = np.maximum((nB - fmin) / nB, 0.0)
    worst = int(np.argmax(defect))
    return float(defect[worst]), (X[worst].copy(), TD[worst].copy()), idx[worst]


def build_context(spec, table_size: int | None = None,
                  normalize_radon: bool = False,
                  radon_samples: int = 256) -> PlaneContext:
    """Build an immutable PlaneContext for a NormSpec (or spec argument).

    The circle table is uniform in polar angle.  Cumulative norm/antinorm arc
    length and twice the sector area are composite-trapezoid integrals of the
    analytic tangent speeds.  When ``normalize_radon`` is set and the plane is
    detected Radon, the symplectic scale is adjusted so the antinorm agrees
    with the norm on the table.
    """
    spec = parse_norm_arg(spec)
    if table_size is None:
        table_size = default_table_size()
    ev = make_evaluator(spec)

    theta = np.arange(table_size) * (TWO_PI / table_size)
    U = np.stack([np.cos(theta), np.sin(theta)], axis=1)
    nU = ev.norm(U)
    points = U / nU[:, None]
    normals = ev.gradient(points)

    # analytic circle velocity: gamma(t) = r(t) U(t), r = 1/n(U)
    Udot = np.stack([-np.sin(theta), np.cos(theta)], axis=1)
    nprime = np.einsum("ij,ij->i", normals, Udot)
    r = 1.0 / nU
    rprime = -nprime / nU ** 2
    gamma_prime = rprime[:, None] * U + r[:, None] * Udot
    speed_norm = ev.norm(gamma_prime)

    defect, witness, _ = _radon_probe(ev, theta, points, radon_samples)
    if defect < RADON_DEFECT_TOL:
        flag = RadonFlag.RADON
    elif defect > NOT_RADON_DEFECT_TOL:
        flag = RadonFlag.NOT_RADON
    else:
        flag = RadonFlag.UNKNOWN

    # provisional context with scale 1 supplies the antinorm machinery
    ctx = PlaneContext(
        spec=spec, evaluator=ev, omega_scale=1.0,
        radon_flag=flag, radon_defect=defect, radon_witness=witness,
        theta=theta, points=points, normals=normals,
        tangents=np.empty_like(points),
        s_norm=np.zeros(table_size + 1), s_anti=np.zeros(table_size + 1),
        sector_area2=np.zeros(table_size + 1),
    )

    t_dirs = _rot90(normals)
    raw_anti_t, _ = _refined_sup(ctx, t_dirs)

    scale = 1.0
    if normalize_radon and flag == RadonFlag.RADON:
        raw_anti_pts, _ = _refined_sup(ctx, points)
        scale = 1.0 / float(np.median(raw_anti_pts))

    tangents = t_dirs / (scale * raw_anti_t)[:, None]

    # gamma' is a positive multiple of the tangent direction
    k = (np.einsum("ij,ij->i", gamma_prime, t_dirs)
         / np.einsum("ij,ij->i", t_dirs, t_dirs))
    if np.any(k <= 0.0):
        raise NumericalError("circle orientation flipped; norm model is inconsistent")
    speed_anti = scale * k * raw_anti_t
    darea = scale * (points[:, 0] * gamma_prime[:, 1] - points[:, 1] * gamma_prime[:, 0])

    s_norm = _cumtrapz_periodic(speed_norm, theta)
    s_anti = _cumtrapz_periodic(speed_anti, theta)
    area2 = _cumtrapz_periodic(darea, theta)

    for arr in (theta, points, normals, tangents, s_norm, s_anti, area2):
        arr.setflags(write=False)

    return PlaneContext(
        spec=spec, evaluator=ev, omega_scale=scale,
        radon_flag=flag, radon_defect=defect, radon_witness=witness,
        theta=theta, points=points, normals=normals, tangents=tangents,
        s_norm=s_norm, s_anti=s_anti, sector_area2=area2,
    )


def _refined_sup(ctx: PlaneContext, V: np.ndarray):
    """Raw (scale-1) antinorm of every row of V, with refinement angles."""
    saved = ctx.omega_scale
    assert saved == 1.0
    return ctx.antinorm_batch(V, with_theta=True)


def _cumtrapz_periodic(f: np.ndarray, theta: np.ndarray) -> np.ndarray:
    """Cumulative trapezoid over the uniform theta grid, wrapped to 2*pi."""
    dtheta = TWO_PI / len(theta)
    f_ext = np.concatenate([f, [f[0]]])
    steps = 0.5 * (f_ext[:-1] + f_ext[1:]) * dtheta
    out = np.empty(len(theta) + 1)
    out[0] = 0.0
    np.cumsum(steps, out=out[1:])
    return out
