"""Pydantic request/response models for the compute service."""

from __future__ import annotations

from typing import Literal, Union

from pydantic import BaseModel, Field

NormKindName = Literal["euclidean", "lp", "mixed_lp_lq", "support_table"]

EvalFn = Literal["cm", "sn", "cn", "ca", "gamma", "b", "antinorm", "gateaux"]
SuiteName = Literal["all", "trig", "distortion", "calculus", "radon"]
TableFn = Literal["rho", "cm-row", "gamma-sweep", "arc-params"]
FigureName = Literal["circle", "cm-construction", "gamma-construction",
                     "parallel-chords"]


class NormSpecModel(BaseModel):
    kind: NormKindName
    p: float | None = None
    samples: list[tuple[float, float]] | None = None


NormArg = Union[str, NormSpecModel]


class EvalRequest(BaseModel):
    norm: NormArg
    fn: EvalFn
    args: list[float]
    table_size: int | None = None


class EvalResponse(BaseModel):
    fn: str
    value: float | tuple[float, float]


class VerifyRequest(BaseModel):
    norm: NormArg
    suite: SuiteName = "all"
    samples: int = Field(default=96, ge=8, le=100000)
    seed: int = 0
    table_size: int | None = None


class TableRequest(BaseModel):
    norm: NormArg
    fn: TableFn
    p_list: list[float] | None = None
    x: tuple[float, float] | None = None
    grid: int = Field(default=512, ge=8, le=1000000)
    table_size: int | None = None


class PlotRequest(BaseModel):
    norm: NormArg
    figure: FigureName
    x: tuple[float, float] | None = None
    y: tuple[float, float] | None = None
    t1: tuple[float, float] | None = None
    t2: tuple[float, float] | None = None
    table_size: int | None = None


class PlotResponse(BaseModel):
    figure: str
    svg: str
    csv: str


class GammaRequest(BaseModel):
    norm: NormArg
    points: list[tuple[float, float]] | None = None
    count: int = Field(default=16, ge=1, le=100000)
    seed: int = 0
    table_size: int | None = None


class CalculusRequest(BaseModel):
    norm: NormArg
    grid: int = Field(default=512, ge=16, le=1000000)
    table_size: int | None = None


class ErrorInfo(BaseModel):
    kind: str
    message: str


class ErrorResponse(BaseModel):
    error: ErrorInfo
