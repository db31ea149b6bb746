"""Pydantic request/response models for the analysis service.

The response models mirror the JSON report schema emitted by the CLI with
--json, so reports round-trip through model_validate_json unchanged.
"""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, Field


class AnalyzeRequest(BaseModel):
    edgelist: str
    source: str = "<inline>"


class VerdictsModel(BaseModel):
    alpha_minus: bool
    alpha_plus: bool
    alpha_stable: bool
    bistable: bool


class ComponentModel(BaseModel):
    vertices: list[int]
    graph_class: str
    alpha: int | None
    mu: int | None
    alpha_minus: bool
    alpha_plus: bool
    alpha_stable: bool
    bistable: bool


class AnalyzeResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    input: str
    graph_class: str = Field(alias="class")
    n: int
    edge_count: int
    duplicate_edges: int
    alpha: int | None
    mu: int | None
    konig_identity: bool | None
    verdicts: VerdictsModel
    certificates: dict[str, Any]
    per_component: list[ComponentModel]
    timing: float


class DecomposeRequest(BaseModel):
    edgelist: str
    ears: bool = False
    source: str = "<inline>"


class PieceModel(BaseModel):
    vertices: list[int]
    edgelist: str  # standalone re-parseable document, densely relabeled


class EarModel(BaseModel):
    start: int
    interior: list[int]
    end: int


class EarDecompositionModel(BaseModel):
    base_edge: list[int]
    ears: list[EarModel]


class DecomposeResponse(BaseModel):
    input: str
    pieces: list[PieceModel]
    k2_pieces: list[list[int]]
    ears: EarDecompositionModel | None
    timing: float


class GenerateRequest(BaseModel):
    family: str
    size: int | None = None
    p: int | None = None
    q: int | None = None
    seed: int | None = None
    template: str | None = None
    pieces: str | None = None  # comma-separated family tokens, e.g. "c4,c4"
    bridges: str | None = None  # comma-separated "u-v" global-id pairs


class GenerateResponse(BaseModel):
    family: str
    params: dict[str, Any]
    seed: int | None
    edgelist: str
    properties: dict[str, Any]


class VerifyRequest(BaseModel):
    max_n: int = 8
    claims: list[str] | None = None
    seed: int | None = None
    sample: int = 0


class ClaimModel(BaseModel):
    name: str
    instances: int
    passed: bool
    counterexample: dict[str, Any] | None = None


class VerifyResponse(BaseModel):
    claims: list[ClaimModel]
    max_n: int
    seed: int | None
    sample: int
    elapsed_seconds: float
    all_passed: bool
