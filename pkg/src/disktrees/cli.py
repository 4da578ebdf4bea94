"""
Batch command line for the package: enumerate objects, print statistic
profiles, apply the named maps, build joint-count tables, and run the
verification suite.

The CLI is a thin client over the service layer: by default it calls
the same handler functions the HTTP endpoints use, in-process; with
``--server URL`` it talks to a running service instead.

Exit codes: 0 success, 1 verification failure, 2 usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .enumeration import matrix_to_csv
from .service.app import (
    apply_map, enumerate_objects, list_checks, perm_stats, run_verify,
    table as table_handler, tree_stats,
)
from .service.models import (
    EnumerateRequest, MapRequest, PermStatsRequest, TableRequest,
    TreeStatsRequest, VerifyRequest,
)

_ROUTES = {
    "stats_perm": ("/stats/perm", perm_stats),
    "stats_tree": ("/stats/tree", tree_stats),
    "map": ("/map", apply_map),
    "enumerate": ("/enumerate", enumerate_objects),
    "table": ("/table", table_handler),
    "verify": ("/verify", run_verify),
}


def _call(server: str | None, route: str, request):
    """Dispatch a request model locally or to a remote service."""
    path, handler = _ROUTES[route]
    if server is None:
        return handler(request).model_dump()
    import httpx

    response = httpx.post(server.rstrip("/") + path,
                          json=request.model_dump(), timeout=600.0)
    if response.status_code != 200:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        raise ValueError(f"server error {response.status_code}: {detail}")
    return response.json()


def _format_set(values) -> str:
    return "{" + ", ".join(str(v) for v in values) + "}"


def _read_inputs(args) -> list[str]:
    if args.input is not None:
        if args.input == "-":
            return [line.strip() for line in sys.stdin if line.strip()]
        return [args.input]
    if args.file is not None:
        with open(args.file, encoding="utf-8") as handle:
            return [line.strip() for line in handle if line.strip()]
    raise ValueError("provide --input (or '-' for stdin) or --file")


def _cmd_stats(args) -> int:
    if (args.perm is None) == (args.tree is None):
        raise ValueError("provide exactly one of --perm or --tree")
    if args.perm is not None:
        data = _call(args.server, "stats_perm", PermStatsRequest(perm=args.perm))
        if args.format == "json":
            print(json.dumps(data))
        else:
            print(f"perm: {data['perm']}")
            print(f"n: {data['n']}")
            for name in ("lmax", "lmin", "des", "desb"):
                print(f"{name}: {_format_set(data[name])}")
            for name in ("iar", "idr", "comp"):
                print(f"{name}: {data[name]}")
    else:
        data = _call(args.server, "stats_tree", TreeStatsRequest(tree=args.tree))
        if args.format == "json":
            print(json.dumps(data))
        else:
            print(f"tree: {data['tree']}")
            print(f"size: {data['size']}")
            print(f"omi: {data['omi']}")
            print(f"spine: {data['spine_signs']}")
            for name, value in data["stats"].items():
                print(f"{name}: {value}")
    return 0


def _cmd_map(args) -> int:
    inputs = _read_inputs(args)
    outputs = []
    for text in inputs:
        request = MapRequest(name=args.name, input=text, node=args.node,
                             iterations=args.iterations)
        outputs.append(_call(args.server, "map", request))
    if args.format == "json":
        print(json.dumps(outputs))
    else:
        for data in outputs:
            print(data["output"])
    return 0


def _cmd_enumerate(args) -> int:
    request = EnumerateRequest(kind=args.kind, n=args.n, patterns=args.patterns)
    data = _call(args.server, "enumerate", request)
    if args.format == "json":
        print(json.dumps(data))
    elif args.format == "csv":
        print("item")
        for item in data["items"]:
            print(f'"{item}"' if "," in item else item)
    else:
        for item in data["items"]:
            print(item)
        print(f"count: {data['count']}", file=sys.stderr)
    return 0


def _cmd_table(args) -> int:
    request = TableRequest(rows=args.rows, cols=args.cols, n=args.n)
    data = _call(args.server, "table", request)
    matrix = data["matrix"]
    if args.format == "json":
        print(json.dumps(data))
    elif args.format == "csv":
        print(matrix_to_csv(matrix), end="")
    else:
        width = max(len(str(v)) for row in matrix for v in row)
        for row in matrix:
            print(" ".join(str(v).rjust(width) for v in row))
    return 0


def _cmd_verify(args) -> int:
    if args.list:
        for info in list_checks():
            print(f"{info.check_id:24s} {info.kind:12s} "
                  f"default n={info.default_n} cap={info.cap}  {info.description}")
        return 0
    request = VerifyRequest(suite=args.suite, max_n=args.max_n, jobs=args.jobs)
    data = _call(args.server, "verify", request)
    if args.format == "json":
        print(json.dumps(data["results"]))
    else:
        for result in data["results"]:
            tag = result["status"].upper()
            note = "" if result["kind"] == "theorem" else f" [{result['kind']}]"
            print(f"{tag} {result['check_id']} ({result['scope']}) "
                  f"{result['elapsed']:.2f}s{note}")
            if result["witness"]:
                print(f"  witness: {json.dumps(result['witness'])}",
                      file=sys.stderr)
    return 0 if data["passed"] else 1


def _cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("disktrees.service:app", host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="disktrees",
        description="Di-sk trees and separable permutations: statistics, "
                    "maps, tables, and exhaustive verification.",
    )
    parser.add_argument("--server", default=None,
                        help="base URL of a running service; default in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list a class of trees or permutations")
    p.add_argument("--kind", choices=["trees", "perms"], required=True)
    p.add_argument("--n", type=int, required=True,
                   help="class index n (trees in the class have n-1 nodes)")
    p.add_argument("--patterns", default=None,
                   help="comma-separated patterns for perms, default 2413,3142")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("stats", help="print the statistic profile of one object")
    p.add_argument("--perm", default=None, help="space-separated values")
    p.add_argument("--tree", default=None, help="canonical tree text")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("map", help="apply a named map to one or more objects")
    p.add_argument("--name", required=True,
                   help="eta | eta-inv | l | l-inv | phi | phi-inv | Phi | "
                        "theta | psi | psi-inv")
    p.add_argument("--input", default=None,
                   help="object text, or '-' to read one object per stdin line")
    p.add_argument("--file", default=None, help="file with one object per line")
    p.add_argument("--node", type=int, default=None,
                   help="NodeRef (1-based inorder index) for l / l-inv")
    p.add_argument("--iterations", type=int, default=1)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("table", help="joint-count matrix of two statistics")
    p.add_argument("--rows", required=True, help="row statistic, e.g. top")
    p.add_argument("--cols", required=True, help="column statistic, e.g. iom")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--suite", default="all", help="'all' or one check id")
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--list", action="store_true", help="list check ids and exit")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
