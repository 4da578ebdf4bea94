"""
Truncated power series in z whose coefficients are integer polynomials
in the three markers t, x, y, built by exhaustive enumeration: the
coefficient of z^n tallies t^omi * x^rpop * y^top over all di-sk trees
with n nodes (constant term 1).

The generating-function identities satisfied by this series are checked
coefficient-wise after cross-multiplying, so only exact integer
arithmetic is ever used; no rational function is formed.
"""
from __future__ import annotations

import json
from functools import lru_cache
from typing import Mapping

from .disktree import omi, rpop, top
from .enumeration import gen_disk_trees

Monomial = tuple[int, int, int]  # exponents of t, x, y

DEFAULT_ORDER = 8
MAX_ORDER = 10


class MPoly:
    """Integer polynomial in the markers t, x, y (sparse monomial map)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    self.terms[mono] = coeff

    @classmethod
    def const(cls, c: int) -> "MPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def marker(cls, name: str) -> "MPoly":
        index = {"t": 0, "x": 1, "y": 2}[name]
        mono = tuple(1 if i == index else 0 for i in range(3))
        return cls({mono: 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, MPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "MPoly") -> "MPoly":
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            new = out.get(mono, 0) + coeff
            if new:
                out[mono] = new
            else:
                out.pop(mono, None)
        result = MPoly()
        result.terms = out
        return result

    def __neg__(self) -> "MPoly":
        result = MPoly()
        result.terms = {mono: -coeff for mono, coeff in self.terms.items()}
        return result

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + (-other)

    def __mul__(self, other: "MPoly") -> "MPoly":
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                new = out.get(mono, 0) + c1 * c2
                if new:
                    out[mono] = new
                else:
                    out.pop(mono, None)
        result = MPoly()
        result.terms = out
        return result

    def set_one(self, name: str) -> "MPoly":
        """Specialize one marker to 1 (its exponent is dropped)."""
        index = {"t": 0, "x": 1, "y": 2}[name]
        out = MPoly()
        for mono, coeff in self.terms.items():
            dropped = tuple(0 if i == index else e for i, e in enumerate(mono))
            new = out.terms.get(dropped, 0) + coeff
            if new:
                out.terms[dropped] = new
            else:
                out.terms.pop(dropped, None)
        return out

    def swap_xy(self) -> "MPoly":
        out = MPoly()
        out.terms = {(et, ey, ex): c for (et, ex, ey), c in self.terms.items()}
        return out

    def constant_value(self) -> int:
        """The value when all markers are 1."""
        return sum(self.terms.values())

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in sorted(self.terms.items()):
            names = [f"{name}^{exp}" if exp > 1 else name
                     for name, exp in zip("txy", mono) if exp]
            if not names:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(names))
            elif coeff == -1:
                parts.append("-" + "*".join(names))
            else:
                parts.append("*".join([str(coeff)] + names))
        return " + ".join(parts).replace("+ -", "- ")


class TruncatedSeries:
    """
    Power series in z truncated at order N: ``coeffs[k]`` is the MPoly
    coefficient of z^k, for 0 <= k <= N.  Arithmetic truncates
    consistently at z^N.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: list[MPoly] | None = None):
        if order < 0:
            raise ValueError("order must be nonnegative")
        self.order = order
        if coeffs is None:
            coeffs = [MPoly() for _ in range(order + 1)]
        if len(coeffs) != order + 1:
            raise ValueError("need exactly order+1 coefficients")
        self.coeffs = coeffs

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        s = cls(order)
        s.coeffs[0] = MPoly.const(1)
        return s

    def __eq__(self, other) -> bool:
        return (isinstance(other, TruncatedSeries) and self.order == other.order
                and self.coeffs == other.coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(
            order, [self.coeffs[k] + other.coeffs[k] for k in range(order + 1)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(
            order, [self.coeffs[k] - other.coeffs[k] for k in range(order + 1)])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        coeffs = [MPoly() for _ in range(order + 1)]
        for i, ci in enumerate(self.coeffs[: order + 1]):
            if not ci:
                continue
            for j in range(order + 1 - i):
                cj = other.coeffs[j]
                if cj:
                    coeffs[i + j] = coeffs[i + j] + ci * cj
        return TruncatedSeries(order, coeffs)

    def scale(self, poly: MPoly) -> "TruncatedSeries":
        return TruncatedSeries(self.order, [c * poly for c in self.coeffs])

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by z^k, k >= 0 (coefficients beyond the order fall away)."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        coeffs = [MPoly() for _ in range(self.order + 1)]
        for i in range(self.order + 1 - k):
            coeffs[i + k] = self.coeffs[i]
        return TruncatedSeries(self.order, coeffs)

    def map_coeffs(self, fn) -> "TruncatedSeries":
        return TruncatedSeries(self.order, [fn(c) for c in self.coeffs])

    def set_one(self, name: str) -> "TruncatedSeries":
        return self.map_coeffs(lambda c: c.set_one(name))

    def swap_xy(self) -> "TruncatedSeries":
        return self.map_coeffs(lambda c: c.swap_xy())

    def constant_values(self) -> list[int]:
        return [c.constant_value() for c in self.coeffs]

    def to_text(self) -> str:
        parts = [f"({c.to_text()})*z^{k}" if k else f"({c.to_text()})"
                 for k, c in enumerate(self.coeffs)]
        return " + ".join(parts)

    def to_json(self) -> str:
        return json.dumps({
            "order": self.order,
            "markers": ["t", "x", "y"],
            "coefficients": {
                str(k): {" ".join(map(str, mono)): coeff
                         for mono, coeff in sorted(c.terms.items())}
                for k, c in enumerate(self.coeffs)
            },
        })


@lru_cache(maxsize=None)
def build_series(max_order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """
    The trivariate tree series to order ``max_order``: constant term 1,
    and for n >= 1 the z^n coefficient sums t^omi * x^rpop * y^top over
    all di-sk trees with n nodes.
    """
    if not 0 <= max_order <= MAX_ORDER:
        raise ValueError(f"order must be between 0 and {MAX_ORDER}")
    series = TruncatedSeries.one(max_order)
    for n in range(1, max_order + 1):
        acc = MPoly()
        for t in gen_disk_trees(n):
            acc = acc + MPoly({(omi(t), rpop(t), top(t)): 1})
        series.coeffs[n] = acc
    return series


def check_cubic(max_order: int = DEFAULT_ORDER,
                series: TruncatedSeries | None = None) -> bool:
    """
    With S = S(t,1,1;z), check S = t z^2 S^3 + t z^2 S^2 + (1+t) z S + 1
    coefficient-wise up to z^max_order.
    """
    full = series if series is not None else build_series(max_order)
    s = full.set_one("x").set_one("y")
    t = MPoly.marker("t")
    one_plus_t = MPoly.const(1) + t
    s2 = s * s
    s3 = s2 * s
    rhs = ((s3 + s2).shift(2).scale(t) + s.shift(1).scale(one_plus_t)
           + TruncatedSeries.one(s.order))
    return rhs == s


def check_top_kernel(max_order: int = DEFAULT_ORDER,
                     series: TruncatedSeries | None = None) -> bool:
    """
    Check S(t,1,y) * (1 + (1-y) z S(t,1,1)) = S(t,1,1) coefficient-wise,
    the kernel form of the top-marginal identity.
    """
    full = series if series is not None else build_series(max_order)
    s_y = full.set_one("x")
    s = s_y.set_one("y")
    one_minus_y = MPoly.const(1) - MPoly.marker("y")
    lhs = s_y * (TruncatedSeries.one(s.order) + s.shift(1).scale(one_minus_y))
    return lhs == s


def check_rpop_kernel(max_order: int = DEFAULT_ORDER,
                      series: TruncatedSeries | None = None) -> bool:
    """
    Check S(t,x,1) * (1 + (1-x) z S(t,1,1)) = S(t,1,1) and the marginal
    agreement S(t,x,1) = S(t,1,x), the kernel form for rpop.
    """
    full = series if series is not None else build_series(max_order)
    s_x = full.set_one("y")
    s_y_renamed = full.set_one("x").swap_xy()  # y-marginal written in x
    if s_x != s_y_renamed:
        return False
    s = s_x.set_one("x")
    one_minus_x = MPoly.const(1) - MPoly.marker("x")
    lhs = s_x * (TruncatedSeries.one(s.order) + s.shift(1).scale(one_minus_x))
    return lhs == s


def check_symmetry(max_order: int = DEFAULT_ORDER,
                   series: TruncatedSeries | None = None) -> bool:
    """Check the full exchange symmetry S(t,x,y) = S(t,y,x)."""
    full = series if series is not None else build_series(max_order)
    return full == full.swap_xy()
