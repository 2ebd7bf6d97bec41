"""Norm models: Euclidean, l_p, mixed l_p-l_q and tabulated-support-function norms.

Every model exposes the norm and its gradient both vectorized over (..., 2)
arrays and as scalar fast paths used by the one-dimensional search oracles.
All supported norms are smooth and strictly convex away from the origin.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import ConfigError, DomainError

P_MIN = 1.001
P_MAX = 64.0

DEFAULT_TABLE_SIZE = 4096
TABLE_SIZE_ENV = "MINKTRIG_TABLE_SIZE"


class NormKind(str, Enum):
    EUCLIDEAN = "euclidean"
    LP = "lp"
    MIXED = "mixed_lp_lq"
    SUPPORT = "support_table"


@dataclass(frozen=True)
class NormSpec:
    """Declarative description of a plane norm.

    ``p`` is required for the ``lp`` and ``mixed_lp_lq`` kinds; for the mixed
    norm the conjugate exponent q is derived from 1/p + 1/q = 1.  ``samples``
    is required for ``support_table`` and holds (angle, support value) pairs.
    """

    kind: NormKind
    p: float | None = None
    samples: tuple[tuple[float, float], ...] | None = None

    def __post_init__(self):
        if self.kind == NormKind.LP:
            if self.p is None or not (P_MIN <= self.p <= P_MAX):
                raise ConfigError(
                    f"lp norm requires {P_MIN} <= p <= {P_MAX}, got {self.p!r}")
        elif self.kind == NormKind.MIXED:
            if self.p is None or not (2.0 <= self.p <= P_MAX):
                raise ConfigError(
                    f"mixed_lp_lq norm requires 2 <= p <= {P_MAX}, got {self.p!r}")
        elif self.kind == NormKind.SUPPORT:
            if not self.samples or len(self.samples) < 8:
                raise ConfigError("support_table norm requires at least 8 samples")
        elif self.kind != NormKind.EUCLIDEAN:
            raise ConfigError(f"unknown norm kind {self.kind!r}")

    @property
    def q(self) -> float | None:
        """Conjugate exponent of p (mixed norms only)."""
        if self.kind != NormKind.MIXED:
            return None
        return self.p / (self.p - 1.0)

    def label(self) -> str:
        if self.kind == NormKind.EUCLIDEAN:
            return "euclidean"
        if self.kind == NormKind.LP:
            return f"lp:{self.p:g}"
        if self.kind == NormKind.MIXED:
            return f"mixed:{self.p:g}"
        return f"support_table[{len(self.samples)}]"


def spec_to_json(spec: NormSpec) -> dict:
    """Serialize to the wire format {"kind": ..., "p": ..., "samples": ...}."""
    obj: dict = {"kind": spec.kind.value}
    if spec.p is not None:
        obj["p"] = spec.p
    if spec.samples is not None:
        obj["samples"] = [[t, h] for t, h in spec.samples]
    return obj


def spec_from_json(obj: dict) -> NormSpec:
    """Parse the wire format, raising ConfigError on anything malformed."""
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ConfigError("norm spec must be an object with a 'kind' field")
    try:
        kind = NormKind(obj["kind"])
    except ValueError:
        raise ConfigError(f"unknown norm kind {obj['kind']!r}") from None
    p = obj.get("p")
    if p is not None:
        try:
            p = float(p)
        except (TypeError, ValueError):
            raise ConfigError(f"norm exponent must be a number, got {p!r}") from None
        if not math.isfinite(p):
            raise ConfigError("norm exponent must be finite")
    samples = obj.get("samples")
    if samples is not None:
        try:
            samples = tuple((float(t), float(h)) for t, h in samples)
        except (TypeError, ValueError):
            raise ConfigError("support samples must be [angle, value] pairs") from None
    return NormSpec(kind=kind, p=p, samples=samples)


def parse_norm_arg(arg) -> NormSpec:
    """Accept a NormSpec, a JSON object, a ``builtin:`` shorthand or a JSON file path."""
    if isinstance(arg, NormSpec):
        return arg
    if isinstance(arg, dict):
        return spec_from_json(arg)
    if not isinstance(arg, str):
        raise ConfigError(f"cannot interpret norm argument {arg!r}")
    if arg.startswith("builtin:"):
        parts = arg.split(":")
        name = parts[1] if len(parts) > 1 else ""
        if name == "euclidean":
            return NormSpec(NormKind.EUCLIDEAN)
        if name in ("lp", "mixed"):
            if len(parts) != 3:
                raise ConfigError(f"{arg!r}: expected builtin:{name}:P")
            try:
                p = float(parts[2])
            except ValueError:
                raise ConfigError(f"{arg!r}: exponent is not a number") from None
            kind = NormKind.LP if name == "lp" else NormKind.MIXED
            return NormSpec(kind, p=p)
        raise ConfigError(f"unknown builtin norm {arg!r}")
    if arg.lstrip().startswith("{"):
        try:
            obj = json.loads(arg)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid norm spec JSON: {exc}") from None
        return spec_from_json(obj)
    if os.path.exists(arg):
        with open(arg, "r", encoding="utf-8") as fh:
            try:
                obj = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"{arg}: invalid JSON: {exc}") from None
        return spec_from_json(obj)
    raise ConfigError(f"norm argument {arg!r} is neither builtin:..., JSON nor a file")


def builtin_normalize_flag(arg) -> bool:
    """builtin:mixed:P contexts are Radon-rescaled; everything else keeps scale 1."""
    return isinstance(arg, str) and arg.startswith("builtin:mixed:")


def _check_vectors(V: np.ndarray) -> np.ndarray:
    V = np.asarray(V, dtype=float)
    if V.shape[-1] != 2:
        raise DomainError(f"expected 2-vectors, got shape {V.shape}")
    if not np.all(np.isfinite(V)):
        raise DomainError("non-finite vector component")
    return V


class EuclideanNorm:
    kind = NormKind.EUCLIDEAN

    def norm(self, V):
        V = _check_vectors(V)
        return np.hypot(V[..., 0], V[..., 1])

    def gradient(self, V):
        V = _check_vectors(V)
        n = np.hypot(V[..., 0], V[..., 1])
        if np.any(n == 0.0):
            raise DomainError("norm gradient undefined at the origin")
        return V / n[..., None]

    def norm_xy(self, x: float, y: float) -> float:
        return math.hypot(x, y)

    def gradient_xy(self, x: float, y: float) -> tuple[float, float]:
        n = math.hypot(x, y)
        if n == 0.0:
            raise DomainError("norm gradient undefined at the origin")
        return x / n, y / n


def _lp_norm_arr(V: np.ndarray, p: float) -> np.ndarray:
    a = np.abs(V[..., 0])
    b = np.abs(V[..., 1])
    m = np.maximum(a, b)
    # scale out the max so large p cannot overflow
    with np.errstate(invalid="ignore"):
        s = np.where(m > 0.0, ((a / np.where(m > 0, m, 1.0)) ** p
                               + (b / np.where(m > 0, m, 1.0)) ** p) ** (1.0 / p), 0.0)
    return m * s


def _lp_grad_arr(V: np.ndarray, p: float) -> np.ndarray:
    n = _lp_norm_arr(V, p)
    if np.any(n == 0.0):
        raise DomainError("norm gradient undefined at the origin")
    r = np.abs(V) / n[..., None]
    return np.sign(V) * r ** (p - 1.0)


class LpNorm:
    kind = NormKind.LP

    def __init__(self, p: float):
        self.p = float(p)

    def norm(self, V):
        return _lp_norm_arr(_check_vectors(V), self.p)

    def gradient(self, V):
        return _lp_grad_arr(_check_vectors(V), self.p)

    def norm_xy(self, x: float, y: float) -> float:
        a, b = abs(x), abs(y)
        m = a if a > b else b
        if m == 0.0:
            return 0.0
        return m * ((a / m) ** self.p + (b / m) ** self.p) ** (1.0 / self.p)

    def gradient_xy(self, x: float, y: float) -> tuple[float, float]:
        return _lp_grad_xy(x, y, self.p)


def _lp_grad_xy(x: float, y: float, p: float) -> tuple[float, float]:
    n = abs(x) if abs(x) > abs(y) else abs(y)
    if n == 0.0:
        raise DomainError("norm gradient undefined at the origin")
    a, b = abs(x) / n, abs(y) / n
    n = n * (a ** p + b ** p) ** (1.0 / p)
    gx = math.copysign((abs(x) / n) ** (p - 1.0), x) if x != 0.0 else 0.0
    gy = math.copysign((abs(y) / n) ** (p - 1.0), y) if y != 0.0 else 0.0
    return gx, gy


class MixedLpLqNorm:
    """l_p in the quadrants where the coordinates share a sign, l_q elsewhere."""

    kind = NormKind.MIXED

    def __init__(self, p: float):
        self.p = float(p)
        self.q = self.p / (self.p - 1.0)

    def norm(self, V):
        V = _check_vectors(V)
        same = V[..., 0] * V[..., 1] >= 0.0
        return np.where(same, _lp_norm_arr(V, self.p), _lp_norm_arr(V, self.q))

    def gradient(self, V):
        V = _check_vectors(V)
        same = (V[..., 0] * V[..., 1] >= 0.0)[..., None]
        return np.where(same, _lp_grad_arr(V, self.p), _lp_grad_arr(V, self.q))

    def norm_xy(self, x: float, y: float) -> float:
        e = self.p if x * y >= 0.0 else self.q
        a, b = abs(x), abs(y)
        m = a if a > b else b
        if m == 0.0:
            return 0.0
        return m * ((a / m) ** e + (b / m) ** e) ** (1.0 / e)

    def gradient_xy(self, x: float, y: float) -> tuple[float, float]:
        return _lp_grad_xy(x, y, self.p if x * y >= 0.0 else self.q)


class SupportTableNorm:
    """Norm whose unit ball is given by a sampled support function h(theta).

    The gauge of the body {x : <x, u(theta)> <= h(theta)} is
    sup_theta <x, u(theta)> / h(theta); the maximizing direction gives the
    gradient via the envelope theorem.  h is interpolated by a periodic cubic
    spline and must describe a positive, strictly convex (h + h'' > 0),
    centrally symmetric body.
    """

    kind = NormKind.SUPPORT

    _GRID = 2048
    _REFINE_ITERS = 48

    def __init__(self, samples):
        th = np.asarray([t for t, _ in samples], dtype=float)
        hv = np.asarray([h for _, h in samples], dtype=float)
        if not (np.all(np.isfinite(th)) and np.all(np.isfinite(hv))):
            raise ConfigError("support samples must be finite")
        order = np.argsort(th)
        th, hv = th[order], hv[order]
        if np.any(np.diff(th) <= 0.0):
            raise ConfigError("support sample angles must be distinct")
        if th[0] < 0.0 or th[-1] >= 2.0 * math.pi:
            raise ConfigError("support sample angles must lie in [0, 2*pi)")
        if np.any(hv <= 0.0):
            raise ConfigError("support values must be positive")
        th_ext = np.concatenate([th, [th[0] + 2.0 * math.pi]])
        hv_ext = np.concatenate([hv, [hv[0]]])
        self._spline = CubicSpline(th_ext, hv_ext, bc_type="periodic")
        self._validate(th)
        grid = np.linspace(0.0, 2.0 * math.pi, self._GRID, endpoint=False)
        hg = self._h(grid)
        self._dirs = np.stack([np.cos(grid) / hg, np.sin(grid) / hg], axis=1)
        self._grid = grid

    def _h(self, theta):
        return self._spline(np.mod(theta, 2.0 * math.pi))

    def _validate(self, th):
        probe = np.linspace(0.0, 2.0 * math.pi, 4 * len(th), endpoint=False)
        h = self._h(probe)
        hpp = self._spline(np.mod(probe, 2.0 * math.pi), 2)
        if np.any(h + hpp <= 0.0):
            raise ConfigError("support table is not strictly convex: h + h'' <= 0")
        sym = np.max(np.abs(h - self._h(probe + math.pi)))
        if sym > 1e-9 * np.max(h):
            raise ConfigError("support table must be centrally symmetric (h(t) = h(t+pi))")

    def _refine(self, V, k):
        # golden-section max of <v, u(t)>/h(t) around the best grid direction
        step = 2.0 * math.pi / self._GRID
        lo = self._grid[k] - step
        hi = self._grid[k] + step
        g = (math.sqrt(5.0) - 1.0) / 2.0

        def f(t):
            u = np.stack([np.cos(t), np.sin(t)], axis=-1)
            return np.einsum("...i,...i->...", V, u) / self._h(t)

        x1 = hi - g * (hi - lo)
        x2 = lo + g * (hi - lo)
        f1, f2 = f(x1), f(x2)
        for _ in range(self._REFINE_ITERS):
            left = f1 >= f2
            hi = np.where(left, x2, hi)
            lo = np.where(left, lo, x1)
            xn = np.where(left, hi - g * (hi - lo), lo + g * (hi - lo))
            fn = f(xn)
            x1o, f1o = x1, f1
            x1 = np.where(left, xn, x2)
            f1 = np.where(left, fn, f2)
            x2 = np.where(left, x1o, xn)
            f2 = np.where(left, f1o, fn)
        t = np.where(f1 >= f2, x1, x2)
        return t, np.maximum(f1, f2)

    def norm(self, V):
        V = _check_vectors(V)
        flat = V.reshape(-1, 2)
        scores = flat @ self._dirs.T
        k = np.argmax(scores, axis=1)
        _, val = self._refine(flat, k)
        return val.reshape(V.shape[:-1])

    def gradient(self, V):
        V = _check_vectors(V)
        flat = V.reshape(-1, 2)
        if np.any(np.all(flat == 0.0, axis=1)):
            raise DomainError("norm gradient undefined at the origin")
        scores = flat @ self._dirs.T
        k = np.argmax(scores, axis=1)
        t, _ = self._refine(flat, k)
        u = np.stack([np.cos(t), np.sin(t)], axis=-1)
        g = u / self._h(t)[..., None]
        return g.reshape(V.shape)

    def norm_xy(self, x: float, y: float) -> float:
        return float(self.norm(np.array([x, y])))

    def gradient_xy(self, x: float, y: float) -> tuple[float, float]:
        g = self.gradient(np.array([x, y]))
        return float(g[0]), float(g[1])


def make_evaluator(spec: NormSpec):
    if spec.kind == NormKind.EUCLIDEAN:
        return EuclideanNorm()
    if spec.kind == NormKind.LP:
        return LpNorm(spec.p)
    if spec.kind == NormKind.MIXED:
        return MixedLpLqNorm(spec.p)
    return SupportTableNorm(spec.samples)


def default_table_size() -> int:
    raw = os.environ.get(TABLE_SIZE_ENV)
    if raw is None:
        return DEFAULT_TABLE_SIZE
    try:
        n = int(raw)
    except ValueError:
        raise ConfigError(f"{TABLE_SIZE_ENV} must be an integer, got {raw!r}") from None
    if n < 16:
        raise ConfigError(f"{TABLE_SIZE_ENV} must be at least 16")
    return n
