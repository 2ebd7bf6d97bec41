"""CSV table generators behind the table/gamma/calculus commands."""

from __future__ import annotations

import numpy as np

from . import calculus, distortion, trig
from .context import ParamKind, PlaneContext, build_context
from .errors import ConfigError
from .render import render_csv

DEFAULT_P_LIST = (4.0, 8.0, 16.0, 32.0, 64.0)


def table_rho(ctx: PlaneContext, grid: int = 512) -> str:
    ap = ctx.arc_param(ParamKind.NORM_LENGTH)
    s = np.arange(grid) * (ap.total / grid)
    theta = np.asarray(ap.theta_of(s))
    r = calculus.rho_batch(ctx, s)
    return render_csv(("s", "theta", "rho"), zip(s, theta, r))


def table_cm_row(ctx: PlaneContext, x, grid: int = 360) -> str:
    theta = np.arange(grid) * (2.0 * np.pi / grid)
    Y = ctx.unit_point(theta)
    X = np.broadcast_to(np.asarray(x, dtype=float), Y.shape)
    vals = trig.cm_batch(ctx, X, Y)
    return render_csv(("theta", "cm"), zip(theta, vals))


def table_gamma_sweep(p_list=DEFAULT_P_LIST, table_size: int | None = None) -> str:
    rows = []
    for p in p_list:
        ctx = build_context({"kind": "mixed_lp_lq", "p": float(p)},
                            table_size=table_size, normalize_radon=True)
        apex = distortion.mixed_config_apex(float(p))
        rows.append((float(p),
                     distortion.gamma_from_point(ctx, apex),
                     distortion.mixed_config_gamma_magnitude(float(p))))
    return render_csv(("p", "gamma", "closed_form_magnitude"), rows)


def table_arc_params(ctx: PlaneContext) -> str:
    theta = np.concatenate([ctx.theta, [2.0 * np.pi]])
    return render_csv(("theta", "s_norm", "s_anti", "sector_area2"),
                      zip(theta, ctx.s_norm, ctx.s_anti, ctx.sector_area2))


def table_gamma_points(ctx: PlaneContext, points) -> str:
    rows = []
    for p in points:
        tp = distortion.tangent_points(ctx, p)
        rows.append((p[0], p[1], tp.len1, tp.len2, tp.len1 / tp.len2))
    return render_csv(("p_x", "p_y", "len1", "len2", "gamma"), rows)


def table_calculus(ctx: PlaneContext, grid: int = 512) -> str:
    """(s, theta, rho, sn, cm, residual): both solution profiles on one grid.

    residual is the larger of the two pointwise residuals |f'' + rho f|; it
    localizes exactly where the circle fails to be twice differentiable.
    """
    s, f_sn, _, r, res_sn = calculus.ode_profile(ctx, calculus.OdeKind.SN_FROM_X0, grid)
    _, f_cm, _, _, res_cm = calculus.ode_profile(ctx, calculus.OdeKind.CM_FROM_X0, grid)
    ap = ctx.arc_param(ParamKind.NORM_LENGTH)
    theta = np.asarray(ap.theta_of(s))
    res = np.maximum(res_sn, res_cm)
    return render_csv(("s", "theta", "rho", "sn", "cm", "residual"),
                      zip(s, theta, r, f_sn, f_cm, res))


def make_table(ctx: PlaneContext, fn: str, p_list=None, x=None,
               grid: int = 512, table_size: int | None = None) -> str:
    if fn == "rho":
        return table_rho(ctx, grid=grid)
    if fn == "cm-row":
        if x is None:
            x = (1.0, 0.0)
        return table_cm_row(ctx, x, grid=max(grid, 8))
    if fn == "gamma-sweep":
        return table_gamma_sweep(tuple(p_list) if p_list else DEFAULT_P_LIST,
                                 table_size=table_size)
    if fn == "arc-params":
        return table_arc_params(ctx)
    raise ConfigError(f"unknown table function {fn!r}")
