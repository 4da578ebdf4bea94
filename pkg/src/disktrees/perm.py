"""
Permutations of [n] = {1, ..., n} in one-line notation, and their statistics.

A permutation is represented as a tuple of the integers 1..n, each appearing
exactly once.  All statistic functions are pure and take any integer sequence
that passes :func:`is_permutation`.

Set-valued statistics (left-to-right maxima/minima, descent positions,
descent bottoms) are returned as sorted tuples so that results compare and
serialize canonically.

The descent convention used throughout is ``i`` is a descent of ``p`` when
``p[i-1] > p[i]`` (positions are 1-based, ``1 <= i <= n-1``).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]

# The pattern pair defining separable permutations, plus the other pattern
# sets used by the verification suite.
SEPARABLE_PATTERNS = ((2, 4, 1, 3), (3, 1, 4, 2))


def is_permutation(values: Sequence[int]) -> bool:
    """
    True iff ``values`` is a rearrangement of 1..n.

    >>> is_permutation((5, 2, 3, 4, 1))
    True
    >>> is_permutation((1, 1, 2))
    False
    """
    n = len(values)
    seen = [False] * n
    for v in values:
        if not isinstance(v, int) or not 1 <= v <= n or seen[v - 1]:
            return False
        seen[v - 1] = True
    return True


def as_perm(values: Iterable[int]) -> Perm:
    """Coerce to a tuple and reject non-permutations."""
    p = tuple(values)
    if not is_permutation(p):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p!r}")
    return p


def parse_perm(text: str) -> Perm:
    """
    Parse the one-line text format: space-separated 1-based integers.

    >>> parse_perm("5 2 3 4 1")
    (5, 2, 3, 4, 1)
    """
    parts = text.split()
    if not parts:
        raise ValueError("empty permutation")
    try:
        values = tuple(int(part) for part in parts)
    except ValueError:
        raise ValueError(f"not space-separated integers: {text!r}") from None
    return as_perm(values)


def format_perm(p: Sequence[int]) -> str:
    return " ".join(str(v) for v in p)


def lmax(p: Sequence[int]) -> tuple[int, ...]:
    """
    Values of the left-to-right maxima of ``p``.

    Contains the first entry and the value ``n``.

    >>> lmax((5, 2, 3, 4, 1, 9, 11, 10, 6, 8, 7))
    (5, 9, 11)
    """
    out = []
    best = 0
    for v in p:
        if v > best:
            out.append(v)
            best = v
    return tuple(out)


def lmin(p: Sequence[int]) -> tuple[int, ...]:
    """
    Values of the left-to-right minima of ``p``, sorted increasingly.

    Contains the first entry and the value 1.

    >>> lmin((5, 2, 3, 4, 1, 9, 11, 10, 6, 8, 7))
    (1, 2, 5)
    """
    out = []
    best = len(p) + 1
    for v in p:
        if v < best:
            out.append(v)
            best = v
    return tuple(sorted(out))


def des(p: Sequence[int]) -> tuple[int, ...]:
    """
    Descent positions: the 1-based ``i`` with ``p[i-1] > p[i]``.

    >>> des((5, 2, 3, 4, 1, 9, 11, 10, 6, 8, 7))
    (1, 4, 7, 8, 10)
    """
    return tuple(i for i in range(1, len(p)) if p[i - 1] > p[i])


def desb(p: Sequence[int]) -> tuple[int, ...]:
    """
    Descent bottoms: the values immediately after each descent, sorted.

    >>> desb((5, 2, 3, 4, 1, 9, 11, 10, 6, 8, 7))
    (1, 2, 6, 7, 10)
    """
    return tuple(sorted(p[i] for i in des(p)))


def iar(p: Sequence[int]) -> int:
    """
    Length of the initial ascending run: min of the descent set and n.

    >>> iar((1, 2, 3))
    3
    >>> iar((5, 2, 3, 4, 1, 9, 11, 10, 6, 8, 7))
    1
    """
    d = des(p)
    return d[0] if d else len(p)


def idr(p: Sequence[int]) -> int:
    """
    Length of the initial descending run: the largest k with
    ``p[0] > p[1] > ... > p[k-1]``.

    >>> idr((3, 2, 1))
    3
    >>> idr((1, 2, 3))
    1
    """
    k = 1
    while k < len(p) and p[k - 1] > p[k]:
        k += 1
    return k


def comp(p: Sequence[int]) -> int:
    """
    Number of components: positions ``i`` whose prefix is exactly {1..i}.

    Always counts ``i = n``, so the result is at least 1.  A permutation
    with k components is a direct sum of k indecomposable blocks.

    >>> comp((5, 2, 3, 4, 1, 9, 11, 10, 6, 8, 7))
    2
    >>> comp((1, 2, 3))
    3
    """
    count = 0
    prefix_max = 0
    for i, v in enumerate(p, start=1):
        prefix_max = max(prefix_max, v)
        if prefix_max == i:
            count += 1
    return count


@dataclass(frozen=True)
class StatProfile:
    """All scalar and set-valued statistics of one permutation."""

    lmax: tuple[int, ...]
    lmin: tuple[int, ...]
    des: tuple[int, ...]
    desb: tuple[int, ...]
    iar: int
    idr: int
    comp: int


def stat_profile(p: Sequence[int]) -> StatProfile:
    return StatProfile(
        lmax=lmax(p), lmin=lmin(p), des=des(p), desb=desb(p),
        iar=iar(p), idr=idr(p), comp=comp(p),
    )


def _order_isomorphic(sub: Sequence[int], pattern: Sequence[int]) -> bool:
    k = len(pattern)
    return all(
        (sub[i] < sub[j]) == (pattern[i] < pattern[j])
        for i in range(k) for j in range(i + 1, k)
    )


def contains_pattern(p: Sequence[int], pattern: Sequence[int]) -> bool:
    """
    True iff some subsequence of ``p`` is order-isomorphic to ``pattern``.

    Brute-force subsequence search; all patterns in this project have
    length at most 4, so the cost stays at desk scale.

    >>> contains_pattern((2, 4, 1, 3), (2, 4, 1, 3))
    True
    >>> contains_pattern((1, 2, 3), (2, 1))
    False
    """
    k = len(pattern)
    if k > len(p):
        return False
    for sub in itertools.combinations(p, k):
        if _order_isomorphic(sub, pattern):
            return True
    return False


def avoids_all(p: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    """True iff ``p`` contains none of the given patterns."""
    return not any(contains_pattern(p, q) for q in patterns)


def direct_sum(p: Sequence[int], q: Sequence[int]) -> Perm:
    """
    Concatenate with the second block shifted above the first.

    >>> direct_sum((1, 2, 3), (2, 1))
    (1, 2, 3, 5, 4)
    """
    k = len(p)
    return tuple(p) + tuple(v + k for v in q)


def skew_sum(p: Sequence[int], q: Sequence[int]) -> Perm:
    """
    Concatenate with the first block shifted above the second.

    >>> skew_sum((1, 2, 3), (2, 1))
    (3, 4, 5, 2, 1)
    """
    l = len(q)
    return tuple(v + l for v in p) + tuple(q)


def reverse_complement(p: Sequence[int]) -> Perm:
    """
    Reverse the word and complement the values: an involution on
    permutations of [n] that preserves separability.

    >>> reverse_complement((2, 1, 3))
    (1, 3, 2)
    """
    n = len(p)
    return tuple(n + 1 - v for v in reversed(p))


def all_perms(n: int) -> Iterator[Perm]:
    """All permutations of [n] in lexicographic order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return itertools.permutations(range(1, n + 1))


# Registry used by distribution tables and the table endpoint/CLI.
PERM_STATS = {
    "lmax": lmax,
    "lmin": lmin,
    "des": des,
    "desb": desb,
    "iar": iar,
    "idr": idr,
    "comp": comp,
}
