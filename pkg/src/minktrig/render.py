"""Deterministic text rendering: floats at 10 significant digits everywhere.

All CSV/JSON/SVG output funnels through these helpers so identical inputs
produce identical bytes on a given platform.
"""

from __future__ import annotations

import json


def fmt_float(x) -> str:
    v = float(x)
    if v == 0.0:
        v = 0.0  # collapse -0.0
    return f"{v:.10g}"


def render_json(obj) -> str:
    """JSON text with floats formatted by fmt_float, keys in insertion order."""
    out: list[str] = []
    _render(obj, out)
    return "".join(out)


def _render(obj, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(fmt_float(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(", ")
            out.append(json.dumps(str(k)))
            out.append(": ")
            _render(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(", ")
            _render(v, out)
        out.append("]")
    else:
        try:
            _render(float(obj), out)   # numpy scalars
        except (TypeError, ValueError):
            raise TypeError(f"cannot render {type(obj)!r} deterministically") from None


def render_csv(header, rows) -> str:
    """CSV text; numeric cells via fmt_float, everything else verbatim."""
    lines = [",".join(header)]
    for row in rows:
        cells = []
        for cell in row:
            if isinstance(cell, str):
                cells.append(cell)
            else:
                cells.append(fmt_float(cell))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
