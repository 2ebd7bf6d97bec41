"""Structured results of property-suite runs."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class VerifyReport:
    """One verified property: pass/fail, worst residual and the witness inputs."""

    check: str
    passed: bool
    max_residual: float
    witness: tuple | None = None

    def to_json_obj(self) -> dict:
        w = self.witness
        if w is not None:
            w = [[float(w[0][0]), float(w[0][1])], [float(w[1][0]), float(w[1][1])]]
        return {
            "check": self.check,
            "pass": bool(self.passed),
            "max_residual": float(self.max_residual),
            "witness": w,
        }


def worst_pair(residuals, X, Y) -> tuple:
    """Witness = the input pair realizing the largest residual."""
    k = int(np.argmax(residuals))
    return (np.asarray(X)[k], np.asarray(Y)[k])
