"""Hand-emitted SVG figures of the core constructions, with coordinate CSVs.

No rendering dependency: the figures are polylines, circles and labels in a
fixed viewport.  Every figure returns (svg_text, csv_text); the CSV carries
one (label, x, y) row per named point plus figure-specific scalar rows with
the value in the x column.
"""

from __future__ import annotations

import math

import numpy as np

from . import distortion, trig
from .context import PlaneContext
from .errors import ConfigError
from .render import fmt_float, render_csv

VIEW = 1.8          # world half width
SIZE = 640          # pixels
SCALE = SIZE / (2 * VIEW)

FIGURES = ("circle", "cm-construction", "gamma-construction", "parallel-chords")


def _sx(x: float) -> str:
    return fmt_float(SCALE * (x + VIEW))


def _sy(y: float) -> str:
    return fmt_float(SCALE * (VIEW - y))


def _polyline(P, stroke, width="1.5", dash=None, closed=True):
    pts = " ".join(f"{_sx(p[0])},{_sy(p[1])}" for p in P)
    extra = f' stroke-dasharray="{dash}"' if dash else ""
    tag = "polygon" if closed else "polyline"
    return (f'<{tag} points="{pts}" fill="none" stroke="{stroke}" '
            f'stroke-width="{width}"{extra}/>')


def _segment(a, b, stroke, width="1.2", dash=None):
    extra = f' stroke-dasharray="{dash}"' if dash else ""
    return (f'<line x1="{_sx(a[0])}" y1="{_sy(a[1])}" x2="{_sx(b[0])}" '
            f'y2="{_sy(b[1])}" stroke="{stroke}" stroke-width="{width}"{extra}/>')


def _dot(p, label, color="#000"):
    return (f'<circle cx="{_sx(p[0])}" cy="{_sy(p[1])}" r="3.5" fill="{color}"/>'
            f'<text x="{_sx(p[0] + 0.05)}" y="{_sy(p[1] + 0.05)}" '
            f'font-size="15" font-family="sans-serif">{label}</text>')


def _line_through(p, direction, stroke, dash="6 4"):
    d = np.asarray(direction, dtype=float)
    d = d / max(abs(d[0]), abs(d[1]))
    a = np.asarray(p) - 3.0 * VIEW * d
    b = np.asarray(p) + 3.0 * VIEW * d
    return _segment(a, b, stroke, width="1.0", dash=dash)


def _svg(elements) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" '
            f'height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">')
    axes = [
        _segment((-VIEW, 0.0), (VIEW, 0.0), "#cccccc", width="1.0"),
        _segment((0.0, -VIEW), (0.0, VIEW), "#cccccc", width="1.0"),
    ]
    return "\n".join([head, *axes, *elements, "</svg>"]) + "\n"


def _circle_polyline(ctx, color="#1f4e9c", samples=720):
    theta = np.arange(samples) * (2.0 * math.pi / samples)
    return _polyline(ctx.unit_point(theta), color)


def _minkowski_circle(ctx, center, radius, color, samples=720):
    theta = np.arange(samples) * (2.0 * math.pi / samples)
    P = np.asarray(center) + radius * ctx.unit_point(theta)
    return _polyline(P, color)


def figure_circle(ctx: PlaneContext):
    """Unit circle with the antinorm unit circle overlaid."""
    samples = 512
    theta = np.arange(samples) * (2.0 * math.pi / samples)
    S = ctx.unit_point(theta)
    U = np.stack([np.cos(theta), np.sin(theta)], axis=1)
    A = U / ctx.antinorm_batch(U)[:, None]
    svg = _svg([
        _circle_polyline(ctx),
        _polyline(A, "#b03030", dash="5 4"),
        _dot((0.0, 0.0), "o"),
    ])
    rows = [("circle", p[0], p[1]) for p in S[::8]]
    rows += [("antinorm_circle", p[0], p[1]) for p in A[::8]]
    csv = render_csv(("label", "x", "y"), rows)
    return svg, csv


def figure_cm_construction(ctx: PlaneContext, x, y):
    """cm(x, y) as the point q on <-x, x> cut by the supporting-line parallel at y."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    xh = x / ctx.norm(x)
    yh = y / ctx.norm(y)
    value = trig.cm(ctx, xh, yh)
    q = value * xh
    td = ctx.tangent_dir(xh)
    svg = _svg([
        _circle_polyline(ctx),
        _line_through(xh, td, "#2a7a2a", dash=None),
        _line_through(yh, td, "#2a7a2a", dash="6 4"),
        _segment(-xh, xh, "#888888", width="1.0"),
        _dot(xh, "x"), _dot(yh, "y"), _dot(q, "q", color="#b03030"),
        _dot((0.0, 0.0), "o"),
    ])
    csv = render_csv(("label", "x", "y"), [
        ("x", xh[0], xh[1]),
        ("y", yh[0], yh[1]),
        ("q", q[0], q[1]),
        ("cm", value, 0.0),
    ])
    return svg, csv


def figure_gamma_construction(ctx: PlaneContext, x, y):
    """Inscribed circle touching the rays of x and y at beta*x and alpha*y."""
    c = distortion._inscribed_circle(ctx, x, y)
    xh, yh = c["x"], c["y"]
    gamma = c["beta"] / c["alpha"]
    svg = _svg([
        _circle_polyline(ctx),
        _segment((0.0, 0.0), 1.6 * VIEW * xh, "#555555"),
        _segment((0.0, 0.0), 1.6 * VIEW * yh, "#555555"),
        _minkowski_circle(ctx, c["center"], c["radius"], "#b03030"),
        _dot(c["center"], "c", color="#b03030"),
        _dot(c["touch_x"], "bx"), _dot(c["touch_y"], "ay"),
        _dot((0.0, 0.0), "o"),
    ])
    csv = render_csv(("label", "x", "y"), [
        ("x", xh[0], xh[1]),
        ("y", yh[0], yh[1]),
        ("center", c["center"][0], c["center"][1]),
        ("touch_x", c["touch_x"][0], c["touch_x"][1]),
        ("touch_y", c["touch_y"][0], c["touch_y"][1]),
        ("beta", c["beta"], 0.0),
        ("alpha", c["alpha"], 0.0),
        ("gamma", gamma, 0.0),
    ])
    return svg, csv


def figure_parallel_chords(ctx: PlaneContext, t1_dir, t2_dir):
    """Tangency chord <q1, q2> against the chord <c1, c2> of the bisector construction."""
    c = distortion.parallel_chords_construction(ctx, t1_dir, t2_dir)
    elements = [
        _circle_polyline(ctx),
        _line_through(c["q1"], np.asarray(t1_dir, dtype=float), "#2a7a2a"),
        _line_through(c["q2"], np.asarray(t2_dir, dtype=float), "#2a7a2a"),
        _segment(c["q1"], c["q2"], "#b03030", width="2.0"),
        _segment(c["c1"], c["c2"], "#b03030", width="2.0", dash="6 4"),
        _segment(-c["b1"], c["b1"], "#888888", width="1.0"),
        _segment(-c["b2"], c["b2"], "#888888", width="1.0"),
        _dot(c["q1"], "q1"), _dot(c["q2"], "q2"), _dot(c["p"], "p"),
        _dot(c["b1"], "b1"), _dot(c["b2"], "b2"), _dot(c["b"], "b"),
        _dot(c["c1"], "c1", color="#b03030"), _dot(c["c2"], "c2", color="#b03030"),
        _dot((0.0, 0.0), "o"),
    ]
    csv = render_csv(("label", "x", "y"), [
        ("q1", c["q1"][0], c["q1"][1]),
        ("q2", c["q2"][0], c["q2"][1]),
        ("p", c["p"][0], c["p"][1]),
        ("b1", c["b1"][0], c["b1"][1]),
        ("b2", c["b2"][0], c["b2"][1]),
        ("b", c["b"][0], c["b"][1]),
        ("c1", c["c1"][0], c["c1"][1]),
        ("c2", c["c2"][0], c["c2"][1]),
        ("defect", c["defect"], 0.0),
        ("collinearity", c["collinearity"], 0.0),
    ])
    return _svg(elements), csv


def make_figure(ctx: PlaneContext, figure: str, x=None, y=None,
                t1=None, t2=None):
    if figure == "circle":
        return figure_circle(ctx)
    if figure == "cm-construction":
        return figure_cm_construction(ctx, x if x is not None else (1.0, 0.0),
                                      y if y is not None else (0.5, math.sqrt(3) / 2))
    if figure == "gamma-construction":
        return figure_gamma_construction(ctx, x if x is not None else (1.0, 0.0),
                                         y if y is not None else (0.0, 1.0))
    if figure == "parallel-chords":
        return figure_parallel_chords(ctx, t1 if t1 is not None else (1.0, 0.2),
                                      t2 if t2 is not None else (-0.3, 1.0))
    raise ConfigError(f"unknown figure {figure!r}; choose from {FIGURES}")
