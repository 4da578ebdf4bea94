"""
FastAPI service over the core package.

Every endpoint body is a plain function taking and returning pydantic
models, so the CLI can call the same handlers in-process; domain errors
(bad input, inapplicable map, unknown statistic) surface as 400s.
"""
from __future__ import annotations

import json

from fastapi import FastAPI, HTTPException

from .. import bijections, enumeration, perm as perm_mod, series, verify
from ..disktree import (
    TREE_STATS, format_tree, omi, parse_tree, size, spine_signs,
)
from ..perm import format_perm, parse_perm, stat_profile
from .models import (
    CheckInfo, CheckResultModel, EnumerateRequest, EnumerateResponse,
    MapRequest, MapResponse, PermStatsRequest, PermStatsResponse,
    SeriesResponse, TableRequest, TableResponse, TreeStatsRequest,
    TreeStatsResponse, VerifyRequest, VerifyResponse,
)

SIXTEEN = ("iop", "riop", "top", "rtop", "pop", "rpop", "lop", "rlop",
           "iom", "riom", "tom", "rtom", "pom", "rpom", "lom", "rlom")


def perm_stats(request: PermStatsRequest) -> PermStatsResponse:
    p = parse_perm(request.perm)
    profile = stat_profile(p)
    return PermStatsResponse(
        perm=format_perm(p), n=len(p),
        lmax=list(profile.lmax), lmin=list(profile.lmin),
        des=list(profile.des), desb=list(profile.desb),
        iar=profile.iar, idr=profile.idr, comp=profile.comp,
    )


def tree_stats(request: TreeStatsRequest) -> TreeStatsResponse:
    t = parse_tree(request.tree)
    return TreeStatsResponse(
        tree=format_tree(t), size=size(t), omi=omi(t),
        spine_signs="".join(spine_signs(t)) if t is not None else "",
        stats={name: TREE_STATS[name](t) for name in SIXTEEN},
    )


def apply_map(request: MapRequest) -> MapResponse:
    if request.name not in bijections.MAPS:
        raise ValueError(f"unknown map {request.name!r}; "
                         f"known: {', '.join(bijections.MAPS)}")
    in_kind, out_kind, fn, needs_node = bijections.MAPS[request.name]
    if needs_node and request.node is None:
        raise ValueError(f"map {request.name!r} needs a node reference")
    if request.iterations > 1 and in_kind != out_kind:
        raise ValueError(f"map {request.name!r} cannot be iterated")

    obj = parse_perm(request.input) if in_kind == "perm" else parse_tree(request.input)
    for _ in range(request.iterations):
        obj = fn(obj, request.node) if needs_node else fn(obj)
    output = format_perm(obj) if out_kind == "perm" else format_tree(obj)
    return MapResponse(name=request.name, input=request.input, output=output)


ENUMERATION_CAP = 10


def enumerate_objects(request: EnumerateRequest) -> EnumerateResponse:
    if request.n > ENUMERATION_CAP:
        raise ValueError(f"enumeration capped at n = {ENUMERATION_CAP}")
    if request.kind == "trees":
        if request.patterns:
            raise ValueError("patterns apply to perms only")
        items = [format_tree(t) for t in enumeration.gen_disk_trees(request.n - 1)]
    else:
        patterns = _parse_patterns(request.patterns or "2413,3142")
        items = [format_perm(p) for p in enumeration.gen_avoiders(request.n, patterns)]
    return EnumerateResponse(kind=request.kind, n=request.n,
                             count=len(items), items=items)


def _parse_patterns(text: str) -> tuple[tuple[int, ...], ...]:
    patterns = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if chunk.isdigit():
            values = tuple(int(ch) for ch in chunk)
        else:
            values = tuple(int(v) for v in chunk.split())
        patterns.append(perm_mod.as_perm(values))
    if not patterns:
        raise ValueError(f"no patterns in {text!r}")
    return tuple(patterns)


def table(request: TableRequest) -> TableResponse:
    if request.n > ENUMERATION_CAP:
        raise ValueError(f"tables capped at n = {ENUMERATION_CAP}")
    matrix = enumeration.pair_matrix(request.rows, request.cols, request.n)
    return TableResponse(rows=request.rows, cols=request.cols,
                         n=request.n, matrix=matrix)


def list_checks() -> list[CheckInfo]:
    return [
        CheckInfo(check_id=check_id, kind=spec.kind, default_n=spec.default_n,
                  cap=spec.cap, description=spec.description)
        for check_id, spec in verify.CHECKS.items()
    ]


def run_verify(request: VerifyRequest) -> VerifyResponse:
    ids = None if request.suite == "all" else [request.suite]
    results = verify.run_suite(ids, max_n=request.max_n, jobs=request.jobs)
    return VerifyResponse(
        results=[CheckResultModel(**r.to_dict()) for r in results],
        passed=verify.suite_passed(results),
    )


def series_json(order: int) -> SeriesResponse:
    built = series.build_series(order)
    payload = json.loads(built.to_json())
    return SeriesResponse(order=built.order, markers=payload["markers"],
                          text=built.to_text(),
                          coefficients=payload["coefficients"])


def create_app() -> FastAPI:
    app = FastAPI(
        title="disktrees",
        description="Statistics, bijections and exhaustive verification for "
                    "di-sk trees and separable permutations.",
        version="0.1.0",
    )

    def guard(fn, *args):
        try:
            return fn(*args)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/stats/perm", response_model=PermStatsResponse)
    def stats_perm(request: PermStatsRequest):
        return guard(perm_stats, request)

    @app.post("/stats/tree", response_model=TreeStatsResponse)
    def stats_tree(request: TreeStatsRequest):
        return guard(tree_stats, request)

    @app.post("/map", response_model=MapResponse)
    def map_endpoint(request: MapRequest):
        return guard(apply_map, request)

    @app.post("/enumerate", response_model=EnumerateResponse)
    def enumerate_endpoint(request: EnumerateRequest):
        return guard(enumerate_objects, request)

    @app.post("/table", response_model=TableResponse)
    def table_endpoint(request: TableRequest):
        return guard(table, request)

    @app.get("/verify/checks", response_model=list[CheckInfo])
    def checks_endpoint():
        return list_checks()

    @app.post("/verify", response_model=VerifyResponse)
    def verify_endpoint(request: VerifyRequest):
        return guard(run_verify, request)

    @app.get("/series", response_model=SeriesResponse)
    def series_endpoint(order: int = 4):
        return guard(series_json, order)

    return app


app = create_app()
