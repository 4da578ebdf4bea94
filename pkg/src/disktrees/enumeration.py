"""
Exhaustive generators and counting for di-sk trees and pattern-avoiding
permutation classes, plus distribution tables over their statistics.

Indexing convention: the class DT_n of di-sk trees associated with
permutations of length n consists of trees with m = n-1 nodes, and
|DT_n| is the large Schroeder number S_{n-1}.  The generator API takes
the node count m.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Sequence

from . import perm as perm_mod
from .bijections import eta_inv
from .disktree import MINUS, PLUS, TREE_STATS, Tree, iom, top
from .perm import PERM_STATS, Perm, all_perms, avoids_all

# Trees up to this node count are materialized once and shared; larger
# sizes stream from the cached smaller blocks.
_CACHE_MAX_NODES = 8

# Default cap for filtering all n! permutations.
NAIVE_FILTER_CAP = 10


def schroder(k: int) -> int:
    """
    Large Schroeder number S_k: 1, 2, 6, 22, 90, 394, 1806, ...

    >>> [schroder(k) for k in range(6)]
    [1, 2, 6, 22, 90, 394]
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return sum(comb(2 * i, i) // (i + 1) * comb(k + i, k - i) for i in range(k + 1))


def catalan_triangle(n: int, k: int) -> int:
    """
    Ballot number C_{n,k} = (n-k)/n * binom(n-1+k, k) for 0 <= k <= n-1.

    >>> [catalan_triangle(5, k) for k in range(5)]
    [1, 4, 9, 14, 14]
    """
    if not (n >= 1 and 0 <= k <= n - 1):
        raise ValueError(f"need 0 <= k <= n-1, got n={n}, k={k}")
    numerator = (n - k) * comb(n - 1 + k, k)
    assert numerator % n == 0
    return numerator // n


@lru_cache(maxsize=None)
def _trees(m: int) -> tuple[Tree, ...]:
    assert m <= _CACHE_MAX_NODES
    return tuple(_gen_stream(m))


def _subtrees(m: int) -> Iterable[Tree]:
    if m <= _CACHE_MAX_NODES:
        return _trees(m)
    return _gen_stream(m)


def _gen_stream(m: int) -> Iterator[Tree]:
    if m == 0:
        yield None
        return
    for sign in (PLUS, MINUS):
        for left_size in range(m):
            for left in _subtrees(left_size):
                for right in _subtrees(m - 1 - left_size):
                    if right is not None and right[0] == sign:
                        continue
                    yield (sign, left, right)


def gen_disk_trees(m: int) -> Iterator[Tree]:
    """
    Every di-sk tree with exactly ``m`` nodes, once each, in a fixed
    order: by root label (plus first), then left subtree size, then
    recursively by the left and right subtrees.  The count is S_m.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    return _gen_stream(m) if m > _CACHE_MAX_NODES else iter(_trees(m))


@lru_cache(maxsize=None)
def _avoiders_naive(n: int, patterns: tuple[Perm, ...]) -> tuple[Perm, ...]:
    return tuple(p for p in all_perms(n) if avoids_all(p, patterns))


@lru_cache(maxsize=None)
def _separable_fast(n: int) -> tuple[Perm, ...]:
    return tuple(eta_inv(t) for t in gen_disk_trees(n - 1))


def gen_avoiders(n: int, patterns: Iterable[Sequence[int]],
                 naive: bool = False) -> Iterator[Perm]:
    """
    Every permutation of [n] avoiding all of ``patterns``, once each.

    For the separable class {2413, 3142} a fast path maps di-sk trees
    through ``eta_inv`` unless ``naive`` forces the n!-filter; the two
    routes produce the same set (cross-checked by the verification
    suite).  The naive filter is capped at n = NAIVE_FILTER_CAP.
    """
    pats = tuple(sorted(perm_mod.as_perm(q) for q in patterns))
    if not naive and pats == tuple(sorted(perm_mod.SEPARABLE_PATTERNS)):
        return iter(_separable_fast(n))
    if n > NAIVE_FILTER_CAP:
        raise ValueError(f"naive filtering capped at n = {NAIVE_FILTER_CAP}")
    return iter(_avoiders_naive(n, pats))


def separable(n: int) -> Iterator[Perm]:
    """All separable permutations of [n] (fast path)."""
    return gen_avoiders(n, perm_mod.SEPARABLE_PATTERNS)


# ---------------------------------------------------------------------------
# distribution tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DistributionTable:
    """
    Multiset of statistic tuples over an enumerated class: ``rows`` maps
    each observed value tuple to its count, ``key_spec`` names the
    statistics in tuple order, and the counts sum to ``universe``.
    """

    key_spec: tuple[str, ...]
    rows: dict[tuple, int]
    universe: int

    def __post_init__(self):
        assert sum(self.rows.values()) == self.universe

    def sorted_rows(self) -> list[tuple[tuple, int]]:
        return sorted(self.rows.items())

    def same_distribution(self, other: "DistributionTable") -> bool:
        """Multiset equality of the value tuples (key names may differ)."""
        return self.rows == other.rows and self.universe == other.universe

    def to_json(self) -> str:
        return json.dumps({
            "stats": list(self.key_spec),
            "universe": self.universe,
            "rows": [[list(key) if isinstance(key, tuple) else key
                      for key in row] + [count]
                     for row, count in self.sorted_rows()],
        })

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(list(self.key_spec) + ["count"])
        for row, count in self.sorted_rows():
            writer.writerow([" ".join(map(str, key)) if isinstance(key, tuple)
                             else key for key in row] + [count])
        return buf.getvalue()


def _resolve_stats(stats: Sequence[str]):
    if all(name in TREE_STATS for name in stats):
        return "tree", [TREE_STATS[name] for name in stats]
    if all(name in PERM_STATS for name in stats):
        return "perm", [PERM_STATS[name] for name in stats]
    unknown = [s for s in stats if s not in TREE_STATS and s not in PERM_STATS]
    if unknown:
        raise ValueError(f"unknown statistic name(s): {', '.join(unknown)}")
    raise ValueError(f"statistics mix permutation and tree kinds: {list(stats)}")


def distribution(objects: Iterable, stats: Sequence[str]) -> DistributionTable:
    """
    Tally the joint distribution of the named statistics over a stream
    of objects (all permutations, or all trees).  Set-valued statistics
    enter keys as sorted tuples, so keys compare canonically.
    """
    _, fns = _resolve_stats(stats)
    rows: dict[tuple, int] = {}
    universe = 0
    for obj in objects:
        key = tuple(fn(obj) for fn in fns)
        rows[key] = rows.get(key, 0) + 1
        universe += 1
    return DistributionTable(tuple(stats), rows, universe)


def stat_kind(name: str) -> str:
    """'tree' or 'perm', by which registry knows the statistic."""
    kind, _ = _resolve_stats([name])
    return kind


def matrix_top_iom(n: int) -> list[list[int]]:
    """
    The n x n matrix whose (i, j) entry counts di-sk trees with n-1
    nodes having top = i-1 and iom = j-1.  Upper anti-triangular and
    constant along anti-diagonals.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    matrix = [[0] * n for _ in range(n)]
    for t in gen_disk_trees(n - 1):
        matrix[top(t)][iom(t)] += 1
    return matrix


_SCALAR_PERM_STATS = ("iar", "idr", "comp")


def pair_matrix(row_stat: str, col_stat: str, n: int) -> list[list[int]]:
    """
    General n x n joint-count matrix for two scalar statistics over the
    size-n class: tree statistics range over 0..n-1 on di-sk trees with
    n-1 nodes; permutation statistics range over 1..n on separable
    permutations of length n.
    """
    kind_r = stat_kind(row_stat)
    kind_c = stat_kind(col_stat)
    if kind_r != kind_c:
        raise ValueError(
            f"statistics {row_stat!r} and {col_stat!r} are of different kinds")
    for name, kind in ((row_stat, kind_r), (col_stat, kind_c)):
        if kind == "perm" and name not in _SCALAR_PERM_STATS:
            raise ValueError(f"statistic {name!r} is set-valued; tables need "
                             f"scalar statistics")
    if n < 1:
        raise ValueError("n must be at least 1")
    if kind_r == "tree":
        objects: Iterable = gen_disk_trees(n - 1)
        offset = 0
    else:
        objects = separable(n)
        offset = 1
    row_fn = TREE_STATS[row_stat] if kind_r == "tree" else PERM_STATS[row_stat]
    col_fn = TREE_STATS[col_stat] if kind_r == "tree" else PERM_STATS[col_stat]
    matrix = [[0] * n for _ in range(n)]
    for obj in objects:
        r = row_fn(obj) - offset
        c = col_fn(obj) - offset
        matrix[r][c] += 1
    return matrix


def matrix_to_csv(matrix: list[list[int]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    for row in matrix:
        writer.writerow(row)
    return buf.getvalue()


def count_disk_trees(m: int) -> int:
    """Stream-count the m-node generator (used against :func:`schroder`)."""
    return sum(1 for _ in gen_disk_trees(m))


__all__ = [
    "DistributionTable", "NAIVE_FILTER_CAP", "catalan_triangle",
    "count_disk_trees", "distribution", "gen_avoiders", "gen_disk_trees",
    "matrix_to_csv", "matrix_top_iom", "pair_matrix", "schroder",
    "separable", "stat_kind",
]
