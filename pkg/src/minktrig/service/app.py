"""FastAPI service exposing the plane-geometry package.

Contexts are expensive to build (dense circle tables), so the service caches
them per (norm, table size, rescaling) key; every endpoint is a pure function
of its request against a cached context.  Float-bearing responses are
serialized through the deterministic renderer, byte-identical across runs.
"""

from __future__ import annotations

import math

import numpy as np
from fastapi import FastAPI, Response
from fastapi.responses import JSONResponse

from .. import __version__
from .. import distortion, tables, trig
from ..context import PlaneContext, build_context
from ..errors import ConfigError, MinktrigError
from ..figures import make_figure
from ..norms import builtin_normalize_flag, parse_norm_arg, spec_to_json
from ..render import render_json
from ..suites import run_suite
from . import schemas


def _norm_arg(norm):
    if isinstance(norm, schemas.NormSpecModel):
        return norm.model_dump(exclude_none=True)
    return norm


def _json_response(obj, status_code: int = 200, headers=None) -> Response:
    return Response(content=render_json(obj), status_code=status_code,
                    media_type="application/json", headers=headers)


def create_app() -> FastAPI:
    app = FastAPI(title="minktrig", version=__version__,
                  description="Trigonometry of smooth Minkowski planes")
    contexts: dict = {}

    def get_ctx(norm, table_size=None) -> PlaneContext:
        raw = _norm_arg(norm)
        spec = parse_norm_arg(raw)
        # builtin:lp keeps symplectic scale 1; everything else rescales the
        # antinorm onto the norm whenever the plane turns out to be Radon
        normalize = True
        if isinstance(raw, str) and raw.startswith("builtin:") \
                and not builtin_normalize_flag(raw):
            normalize = False
        key = (render_json(spec_to_json(spec)), table_size, normalize)
        if key not in contexts:
            contexts[key] = build_context(spec, table_size=table_size,
                                          normalize_radon=normalize)
        return contexts[key]

    @app.exception_handler(MinktrigError)
    async def _domain_error(request, exc: MinktrigError):
        return JSONResponse(status_code=400, content={
            "error": {"kind": exc.kind, "message": str(exc)}})

    @app.get("/health")
    def health() -> Response:
        return _json_response({"status": "ok", "version": __version__})

    @app.post("/eval")
    def eval_fn(req: schemas.EvalRequest) -> Response:
        ctx = get_ctx(req.norm, req.table_size)
        value = _evaluate(ctx, req.fn, req.args)
        return _json_response({"fn": req.fn, "value": value})

    @app.post("/verify")
    def verify(req: schemas.VerifyRequest) -> Response:
        ctx = get_ctx(req.norm, req.table_size)
        reports = run_suite(ctx, req.suite, samples=req.samples, seed=req.seed)
        all_pass = all(r.passed for r in reports)
        return _json_response([r.to_json_obj() for r in reports],
                              headers={"X-Verify-Pass": str(all_pass).lower()})

    @app.post("/table")
    def table(req: schemas.TableRequest) -> Response:
        ctx = get_ctx(req.norm, req.table_size)
        text = tables.make_table(ctx, req.fn, p_list=req.p_list, x=req.x,
                                 grid=req.grid, table_size=req.table_size)
        return Response(content=text, media_type="text/csv")

    @app.post("/plot")
    def plot(req: schemas.PlotRequest) -> Response:
        ctx = get_ctx(req.norm, req.table_size)
        svg, csv = make_figure(ctx, req.figure, x=req.x, y=req.y,
                               t1=req.t1, t2=req.t2)
        return _json_response({"figure": req.figure, "svg": svg, "csv": csv})

    @app.post("/gamma")
    def gamma(req: schemas.GammaRequest) -> Response:
        ctx = get_ctx(req.norm, req.table_size)
        points = req.points
        if points is None:
            rng = np.random.default_rng(req.seed)
            theta = rng.uniform(0.0, 2.0 * math.pi, req.count)
            r = rng.uniform(1.2, 4.0, req.count)
            points = [tuple(rr * ctx.unit_point(t)) for t, rr in zip(theta, r)]
        text = tables.table_gamma_points(ctx, points)
        return Response(content=text, media_type="text/csv")

    @app.post("/calculus")
    def calculus_table(req: schemas.CalculusRequest) -> Response:
        ctx = get_ctx(req.norm, req.table_size)
        text = tables.table_calculus(ctx, grid=req.grid)
        return Response(content=text, media_type="text/csv")

    return app


def _evaluate(ctx: PlaneContext, fn: str, args: list[float]):
    def two_vectors():
        if len(args) != 4:
            raise ConfigError(f"{fn} needs 4 numbers (x1,x2,y1,y2), got {len(args)}")
        return np.array(args[:2]), np.array(args[2:])

    def one_vector():
        if len(args) != 2:
            raise ConfigError(f"{fn} needs 2 numbers (x1,x2), got {len(args)}")
        return np.array(args)

    if fn == "cm":
        x, y = two_vectors()
        return trig.cm(ctx, x, y)
    if fn == "sn":
        x, y = two_vectors()
        return trig.sn(ctx, x, y)
    if fn == "cn":
        x, y = two_vectors()
        return trig.cn(ctx, x, y)
    if fn == "ca":
        x, y = two_vectors()
        return trig.ca(ctx, x, y)
    if fn == "gateaux":
        x, y = two_vectors()
        return trig.gateaux(ctx, x, y)
    if fn == "gamma":
        return distortion.gamma_from_point(ctx, one_vector())
    if fn == "b":
        b = ctx.bmap(one_vector())
        return [float(b[0]), float(b[1])]
    if fn == "antinorm":
        return ctx.antinorm(one_vector())
    raise ConfigError(f"unknown function {fn!r}")
