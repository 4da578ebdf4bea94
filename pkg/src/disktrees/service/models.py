"""Pydantic request/response models for the service endpoints."""
from __future__ import annotations

from typing import Any, Literal, Optional

from pydantic import BaseModel, Field


class PermStatsRequest(BaseModel):
    perm: str = Field(description="space-separated 1-based values, e.g. '5 2 3 4 1'")


class PermStatsResponse(BaseModel):
    perm: str
    n: int
    lmax: list[int]
    lmin: list[int]
    des: list[int]
    desb: list[int]
    iar: int
    idr: int
    comp: int


class TreeStatsRequest(BaseModel):
    tree: str = Field(description="canonical tree text, e.g. '((. - .) + .)'")


class TreeStatsResponse(BaseModel):
    tree: str
    size: int
    omi: int
    spine_signs: str
    stats: dict[str, int]  # the sixteen traversal initial-run statistics


class MapRequest(BaseModel):
    name: str = Field(description="one of eta, eta-inv, l, l-inv, phi, "
                                  "phi-inv, Phi, theta, psi, psi-inv")
    input: str
    node: Optional[int] = Field(default=None, description="NodeRef for l/l-inv")
    iterations: int = Field(default=1, ge=1)


class MapResponse(BaseModel):
    name: str
    input: str
    output: str


class EnumerateRequest(BaseModel):
    kind: Literal["trees", "perms"]
    n: int = Field(ge=1, description="class index: permutation length; "
                                     "trees in the class have n-1 nodes")
    patterns: Optional[str] = Field(
        default=None, description="comma-separated patterns for perms, "
                                  "e.g. '2413,3142'")


class EnumerateResponse(BaseModel):
    kind: str
    n: int
    count: int
    items: list[str]


class TableRequest(BaseModel):
    rows: str
    cols: str
    n: int = Field(ge=1)


class TableResponse(BaseModel):
    rows: str
    cols: str
    n: int
    matrix: list[list[int]]


class CheckResultModel(BaseModel):
    check_id: str
    scope: str
    status: str
    kind: str
    witness: Optional[dict[str, Any]]
    elapsed: float


class VerifyRequest(BaseModel):
    suite: str = Field(default="all", description="'all' or one check id")
    max_n: Optional[int] = Field(default=None, ge=1)
    jobs: int = Field(default=1, ge=1)


class VerifyResponse(BaseModel):
    results: list[CheckResultModel]
    passed: bool


class CheckInfo(BaseModel):
    check_id: str
    kind: str
    default_n: int
    cap: int
    description: str


class SeriesResponse(BaseModel):
    order: int
    markers: list[str]
    text: str
    coefficients: dict[str, dict[str, int]]
