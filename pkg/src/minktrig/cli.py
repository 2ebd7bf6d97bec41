"""Command line client for the plane-geometry service.

The CLI is a thin transport layer: every subcommand builds a request, sends
it to the FastAPI app (in process by default, or to a remote server via
--server / MINKTRIG_SERVER), and prints or writes the response bytes
verbatim.  All math lives behind the service.

Exit codes: 0 success, 1 verification failure, 2 configuration error,
3 domain/unsupported/numerical error, 4 I/O or transport error.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys

import httpx

SERVER_ENV = "MINKTRIG_SERVER"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CONFIG = 2
EXIT_DOMAIN = 3
EXIT_IO = 4

_KIND_EXIT = {
    "config": EXIT_CONFIG,
    "domain": EXIT_DOMAIN,
    "unsupported": EXIT_DOMAIN,
    "numerical": EXIT_DOMAIN,
    "io": EXIT_IO,
    "error": EXIT_DOMAIN,
}


class _CliFailure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _parse_pair(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise _CliFailure(EXIT_CONFIG, f"expected 'a,b', got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise _CliFailure(EXIT_CONFIG, f"non-numeric pair {text!r}") from None


def _parse_floats(text: str):
    try:
        return [float(t) for t in text.split(",") if t != ""]
    except ValueError:
        raise _CliFailure(EXIT_CONFIG, f"non-numeric list {text!r}") from None


def _norm_payload(arg: str):
    """Pass builtin: strings through; inline JSON and files become objects."""
    if arg.startswith("builtin:"):
        return arg
    if arg.lstrip().startswith("{"):
        try:
            return json.loads(arg)
        except json.JSONDecodeError as exc:
            raise _CliFailure(EXIT_CONFIG, f"invalid norm JSON: {exc}") from None
    if os.path.exists(arg):
        try:
            with open(arg, "r", encoding="utf-8") as fh:
                return json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise _CliFailure(EXIT_CONFIG, f"cannot read norm spec {arg}: {exc}") from None
    raise _CliFailure(EXIT_CONFIG,
                      f"norm argument {arg!r} is neither builtin:..., JSON nor a file")


def _post(server: str | None, path: str, payload: dict) -> httpx.Response:
    async def go():
        if server:
            async with httpx.AsyncClient(base_url=server, timeout=600.0) as client:
                return await client.post(path, json=payload)
        from .service.app import create_app
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(transport=transport,
                                     base_url="http://minktrig",
                                     timeout=600.0) as client:
            return await client.post(path, json=payload)

    try:
        return asyncio.run(go())
    except httpx.HTTPError as exc:
        raise _CliFailure(EXIT_IO, f"transport failure: {exc}") from None


def _check_errors(resp: httpx.Response) -> None:
    if resp.status_code == 422:
        raise _CliFailure(EXIT_CONFIG, resp.text)
    if resp.status_code >= 400:
        try:
            kind = resp.json()["error"]["kind"]
            message = resp.json()["error"]["message"]
        except Exception:
            kind, message = "error", resp.text
        raise _CliFailure(_KIND_EXIT.get(kind, EXIT_DOMAIN), message)


def _write_out(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise _CliFailure(EXIT_IO, f"cannot write {path}: {exc}") from None


def cmd_eval(args) -> int:
    payload = {"norm": _norm_payload(args.norm), "fn": args.fn,
               "args": _parse_floats(args.args)}
    if args.table_size:
        payload["table_size"] = args.table_size
    resp = _post(args.server, "/eval", payload)
    _check_errors(resp)
    sys.stdout.write(resp.text + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    payload = {"norm": _norm_payload(args.norm), "suite": args.suite,
               "samples": args.samples, "seed": args.seed}
    if args.table_size:
        payload["table_size"] = args.table_size
    resp = _post(args.server, "/verify", payload)
    _check_errors(resp)
    sys.stdout.write(resp.text + "\n")
    if resp.headers.get("X-Verify-Pass") != "true":
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_plot(args) -> int:
    payload = {"norm": _norm_payload(args.norm), "figure": args.figure}
    for key in ("x", "y", "t1", "t2"):
        value = getattr(args, key)
        if value is not None:
            payload[key] = _parse_pair(value)
    if args.table_size:
        payload["table_size"] = args.table_size
    resp = _post(args.server, "/plot", payload)
    _check_errors(resp)
    body = resp.json()
    _write_out(args.out, body["svg"])
    _write_out(args.out + ".csv", body["csv"])
    return EXIT_OK


def cmd_table(args) -> int:
    payload = {"norm": _norm_payload(args.norm), "fn": args.fn, "grid": args.grid}
    if args.p_list:
        payload["p_list"] = _parse_floats(args.p_list)
    if args.x:
        payload["x"] = _parse_pair(args.x)
    if args.table_size:
        payload["table_size"] = args.table_size
    resp = _post(args.server, "/table", payload)
    _check_errors(resp)
    _write_out(args.out, resp.text)
    return EXIT_OK


def cmd_gamma(args) -> int:
    payload = {"norm": _norm_payload(args.norm), "count": args.count,
               "seed": args.seed}
    if args.points:
        payload["points"] = [_parse_pair(p) for p in args.points.split(";") if p]
    if args.table_size:
        payload["table_size"] = args.table_size
    resp = _post(args.server, "/gamma", payload)
    _check_errors(resp)
    _write_out(args.out, resp.text)
    return EXIT_OK


def cmd_calculus(args) -> int:
    payload = {"norm": _norm_payload(args.norm), "grid": args.grid}
    if args.table_size:
        payload["table_size"] = args.table_size
    resp = _post(args.server, "/calculus", payload)
    _check_errors(resp)
    _write_out(args.out, resp.text)
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import create_app
    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minktrig",
        description="trigonometry of smooth Minkowski planes")
    parser.add_argument("--server", default=os.environ.get(SERVER_ENV),
                        help="base URL of a running service "
                             "(default: run in process)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_norm(p):
        p.add_argument("--norm", required=True,
                       help="builtin:euclidean | builtin:lp:P | builtin:mixed:P "
                            "| spec JSON | path to a spec JSON file")
        p.add_argument("--table-size", type=int, default=None,
                       help="circle table resolution override")

    p = sub.add_parser("eval", help="evaluate one function")
    add_norm(p)
    p.add_argument("--fn", required=True,
                   choices=["cm", "sn", "cn", "ca", "gamma", "b", "antinorm",
                            "gateaux"])
    p.add_argument("--args", required=True, help="x1,x2[,y1,y2]")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run a property suite")
    add_norm(p)
    p.add_argument("--suite", default="all",
                   choices=["all", "trig", "distortion", "calculus", "radon"])
    p.add_argument("--samples", type=int, default=96)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plot", help="emit an SVG construction with a CSV sidecar")
    add_norm(p)
    p.add_argument("--figure", required=True,
                   choices=["circle", "cm-construction", "gamma-construction",
                            "parallel-chords"])
    p.add_argument("--out", required=True, help="output SVG path")
    p.add_argument("--x", default=None, help="point a,b")
    p.add_argument("--y", default=None, help="point a,b")
    p.add_argument("--t1", default=None, help="direction a,b")
    p.add_argument("--t2", default=None, help="direction a,b")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("table", help="emit a CSV table")
    add_norm(p)
    p.add_argument("--fn", required=True,
                   choices=["rho", "cm-row", "gamma-sweep", "arc-params"])
    p.add_argument("--p-list", default=None, help="4,8,16,32,64")
    p.add_argument("--x", default=None, help="base point a,b for cm-row")
    p.add_argument("--grid", type=int, default=512)
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("gamma", help="tangent lengths and distortion per point")
    add_norm(p)
    p.add_argument("--points", default=None, help="x,y;x,y;... exterior points")
    p.add_argument("--count", type=int, default=16,
                   help="random exterior points when --points is omitted")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("calculus", help="rho/sn/cm profile along the circle")
    add_norm(p)
    p.add_argument("--grid", type=int, default=512)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_calculus)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliFailure as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
