"""
Named verification suites: every equidistribution theorem, identity and
conjecture from the underlying combinatorics is bound to a deterministic
exhaustive check over a bounded range.

Checks are registered by id.  Theorem-scoped checks gate the suite exit
status; conjecture- and exploratory-scoped checks are reported but never
gate.  A failing check carries a serialized witness (the offending
object and the disagreeing values).

Conventions: ``max_n`` bounds the permutation length n; tree checks
range over di-sk trees with n-1 nodes; series checks read ``max_n`` as
the z-truncation order.
"""
from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable

from . import series as series_mod
from .bijections import (
    NotSeparableError, big_phi, eta, eta_inv, l_inv, l_op_tracked, phi,
    phi_inv, psi, psi_inv, theta, theta_inv,
)
from .disktree import (
    MINUS, TREE_STATS, Tree, conjugate, format_tree, iom, iop, pop, rlop,
    rpop, rtop, signs_in_order, spine_signs, top,
)
from .enumeration import (
    catalan_triangle, count_disk_trees, distribution, gen_avoiders,
    gen_disk_trees, matrix_top_iom, schroder, separable,
)
from .perm import (
    all_perms, avoids_all, comp, desb, des, format_perm, iar, idr, lmax,
    lmin, SEPARABLE_PATTERNS,
)

# The five joint-count matrices printed for n = 2..6 (top by iom).
GOLDEN_MATRICES = {
    2: [[0, 1],
        [1, 0]],
    3: [[1, 1, 1],
        [1, 1, 0],
        [1, 0, 0]],
    4: [[4, 4, 2, 1],
        [4, 2, 1, 0],
        [2, 1, 0, 0],
        [1, 0, 0, 0]],
    5: [[17, 16, 8, 3, 1],
        [16, 8, 3, 1, 0],
        [8, 3, 1, 0, 0],
        [3, 1, 0, 0, 0],
        [1, 0, 0, 0, 0]],
    6: [[76, 69, 34, 13, 4, 1],
        [69, 34, 13, 4, 1, 0],
        [34, 13, 4, 1, 0, 0],
        [13, 4, 1, 0, 0, 0],
        [4, 1, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0]],
}

PATTERN_321 = ((3, 2, 1),)
PATTERN_312 = (3, 1, 2)
PATTERNS_2413_4213 = ((2, 4, 1, 3), (4, 2, 1, 3))


def _trees_of_class(n: int) -> Iterable[Tree]:
    """Di-sk trees of the size class indexed by permutation length n."""
    return gen_disk_trees(n - 1)


def _minus_positions(t: Tree) -> tuple[int, ...]:
    return tuple(i for i, s in enumerate(signs_in_order(t, "inorder"), start=1)
                 if s == MINUS)


def _triple(p) -> tuple:
    return (desb(p), lmax(p), lmin(p))


# ---------------------------------------------------------------------------
# check bodies: return None on pass, else a witness dict
# ---------------------------------------------------------------------------

def _check_lemma_2_2(max_n: int):
    for n in range(1, max_n + 1):
        for p in separable(n):
            expected = des(p)
            got = _minus_positions(eta(p))
            if expected != got:
                return {"n": n, "perm": format_perm(p),
                        "des": list(expected), "minus_inorder": list(got)}
    return None


def _check_eq_3(max_n: int):
    for n in range(1, max_n + 1):
        for p in separable(n):
            if iar(p) - 1 != iop(eta(p)):
                return {"n": n, "perm": format_perm(p),
                        "iar": iar(p), "iop": iop(eta(p))}
    return None


def _check_lemma_2_3(max_n: int):
    for n in range(1, max_n + 1):
        for p in separable(n):
            if comp(p) - 1 != top(eta(p)):
                return {"n": n, "perm": format_perm(p),
                        "comp": comp(p), "top": top(eta(p))}
    return None


def _check_eta_roundtrip(max_n: int):
    for n in range(1, max_n + 1):
        for p in separable(n):
            if eta_inv(eta(p)) != p:
                return {"n": n, "perm": format_perm(p),
                        "roundtrip": format_perm(eta_inv(eta(p)))}
        for t in _trees_of_class(n):
            if eta(eta_inv(t)) != t:
                return {"n": n, "tree": format_tree(t),
                        "roundtrip": format_tree(eta(eta_inv(t)))}
    return None


def _check_lemma_3_1(max_n: int):
    for n in range(2, max_n + 1):
        for t in _trees_of_class(n):
            base = _triple(eta_inv(t))
            for ref in _minus_positions(t):
                try:
                    image, new_ref = l_op_tracked(t, ref)
                except ValueError:
                    continue  # neither surgery configuration applies here
                if _triple(eta_inv(image)) != base:
                    return {"n": n, "tree": format_tree(t), "node": ref,
                            "image": format_tree(image)}
                back = l_inv(image, new_ref)
                if back != t:
                    return {"n": n, "tree": format_tree(t), "node": ref,
                            "image": format_tree(image),
                            "inverse": format_tree(back)}
    return None


def _check_thm_3_2(max_n: int):
    for n in range(2, max_n + 1):
        forward: Counter = Counter()
        classes: Counter = Counter()
        for t in _trees_of_class(n):
            if MINUS not in spine_signs(t):
                continue
            k, l = top(t), iop(t)
            classes[(k, l)] += 1
            if k < 1:
                continue
            u = phi(t)
            if (top(u), iop(u)) != (k - 1, l + 1) or MINUS not in spine_signs(u):
                return {"n": n, "tree": format_tree(t), "phi": format_tree(u),
                        "class": [k, l], "image_class": [top(u), iop(u)]}
            if _triple(eta_inv(u)) != _triple(eta_inv(t)):
                return {"n": n, "tree": format_tree(t), "phi": format_tree(u),
                        "reason": "triple not preserved"}
            if phi_inv(u) != t:
                return {"n": n, "tree": format_tree(t), "phi": format_tree(u),
                        "phi_inv": format_tree(phi_inv(u))}
            forward[(k, l)] += 1
        for (k, l), count in forward.items():
            if classes[(k - 1, l + 1)] != count:
                return {"n": n, "class": [k, l], "image_size": count,
                        "target_size": classes[(k - 1, l + 1)]}
    return None


def _check_thm_1_2(max_n: int):
    for n in range(1, max_n + 1):
        for p in separable(n):
            q = big_phi(p)
            if (lmax(q), lmin(q), desb(q)) != (lmax(p), lmin(p), desb(p)):
                return {"n": n, "perm": format_perm(p), "image": format_perm(q),
                        "reason": "triple not preserved"}
            if (comp(q), iar(q)) != (iar(p), comp(p)):
                return {"n": n, "perm": format_perm(p), "image": format_perm(q),
                        "reason": "(comp, iar) not exchanged"}
            if big_phi(q) != p:
                return {"n": n, "perm": format_perm(p), "image": format_perm(q),
                        "reason": "not an involution"}
            if avoids_all(p, (PATTERN_312,)) and not avoids_all(q, (PATTERN_312,)):
                return {"n": n, "perm": format_perm(p), "image": format_perm(q),
                        "reason": "312-avoidance not preserved"}
    return None


def _check_eq_1(max_n: int):
    for n in range(1, max_n + 1):
        av = list(gen_avoiders(n, PATTERN_321))
        for k in range(1, n + 1):
            expected = catalan_triangle(n, n - k)
            by_iar = sum(1 for p in av if iar(p) == k)
            by_comp = sum(1 for p in av if comp(p) == k)
            if not by_iar == by_comp == expected:
                return {"n": n, "k": k, "catalan_triangle": expected,
                        "iar_count": by_iar, "comp_count": by_comp}
    return None


def _check_eq_2(max_n: int):
    for n in range(1, max_n + 1):
        av = list(gen_avoiders(n, PATTERNS_2413_4213))
        top_counts = Counter(top(t) for t in _trees_of_class(n))
        iar_counts = Counter(iar(p) for p in av)
        for k in range(1, n + 1):
            if top_counts[k - 1] != iar_counts[k]:
                return {"n": n, "k": k, "trees_with_top": top_counts[k - 1],
                        "avoiders_with_iar": iar_counts[k]}
    return None


def _check_thm_4_1(max_n: int):
    five = ("riop", "iop", "top", "pop", "rpop")
    for n in range(1, max_n + 1):
        trees = list(_trees_of_class(n))
        for t in trees:
            if rtop(t) != rlop(t):
                return {"n": n, "tree": format_tree(t),
                        "rtop": rtop(t), "rlop": rlop(t)}
        dists = {name: Counter(TREE_STATS[name](t) for t in trees)
                 for name in five + ("lop",)}
        for name in five[1:]:
            if dists[name] != dists["riop"]:
                return {"n": n, "stat": name,
                        "reason": "distribution differs from riop"}
        lop_same = dists["lop"] == dists["riop"]
        if n <= 4 and not lop_same:
            return {"n": n, "reason": "lop distribution should agree for n <= 4"}
        if n >= 5 and lop_same:
            return {"n": n, "reason": "lop distribution should differ for n >= 5"}
    return None


def _check_thm_4_2(max_n: int):
    for n in range(1, max_n + 1):
        trees = list(_trees_of_class(n))
        left = distribution(trees, ["omi", "rpop", "top"])
        right = distribution(trees, ["omi", "top", "rpop"])
        if not left.same_distribution(right):
            return {"n": n, "reason": "(omi, rpop, top) vs (omi, top, rpop)"}
    if not series_mod.check_symmetry(max_n):
        return {"order": max_n, "reason": "series symmetry S(x,y) = S(y,x)"}
    return None


def _check_conj_4_3(max_n: int):
    triples = (
        (["omi", "riop", "rpop"], ["omi", "rpop", "riop"]),
        (["omi", "iop", "rpop"], ["omi", "rpop", "iop"]),
        (["riop", "pop"], ["pop", "riop"]),
    )
    for n in range(1, max_n + 1):
        trees = list(_trees_of_class(n))
        for left_spec, right_spec in triples:
            left = distribution(trees, left_spec)
            right = distribution(trees, right_spec)
            if not left.same_distribution(right):
                return {"n": n, "stats": left_spec,
                        "reason": "conjectured symmetry fails"}
    return None


def _check_thm_4_5(max_n: int):
    for n in range(1, max_n + 1):
        classes: Counter = Counter()
        forward: Counter = Counter()
        for t in _trees_of_class(n):
            k, l = top(t), iom(t)
            classes[(k, l)] += 1
            if k < 1:
                continue
            u = psi(t)
            if (top(u), iom(u)) != (k - 1, l + 1):
                return {"n": n, "tree": format_tree(t), "psi": format_tree(u),
                        "class": [k, l], "image_class": [top(u), iom(u)]}
            if psi_inv(u) != t:
                return {"n": n, "tree": format_tree(t), "psi": format_tree(u),
                        "psi_inv": format_tree(psi_inv(u))}
            forward[(k, l)] += 1
        for (k, l), count in forward.items():
            if classes[(k - 1, l + 1)] != count:
                return {"n": n, "class": [k, l], "image_size": count,
                        "target_size": classes[(k - 1, l + 1)]}
        matrix = matrix_top_iom(n)
        for i in range(n):
            for j in range(n):
                if i + j > n - 1 and matrix[i][j] != 0:
                    return {"n": n, "reason": "matrix not anti-triangular",
                            "entry": [i, j]}
                if i + 1 < n and j >= 1 and matrix[i][j] != matrix[i + 1][j - 1]:
                    return {"n": n, "reason": "matrix not Hankel",
                            "entry": [i, j]}
        pairs = Counter((comp(p), idr(p)) for p in separable(n))
        for (a, b), count in pairs.items():
            if pairs[(b, a)] != count:
                return {"n": n, "pair": [a, b], "count": count,
                        "swapped_count": pairs[(b, a)]}
    return None


def _check_sign_duality(max_n: int):
    dual = {"iop": "iom", "riop": "riom", "top": "tom", "rtop": "rtom",
            "pop": "pom", "rpop": "rpom", "lop": "lom", "rlop": "rlom"}
    for n in range(1, max_n + 1):
        trees = list(_trees_of_class(n))
        for t in trees:
            c = conjugate(t)
            for plus_name, minus_name in dual.items():
                if TREE_STATS[plus_name](t) != TREE_STATS[minus_name](c):
                    return {"n": n, "tree": format_tree(t), "stat": plus_name,
                            "reason": "conjugation duality fails"}
        dists = {name: Counter(TREE_STATS[name](t) for t in trees)
                 for name in ("riom", "iom", "tom", "pom", "rpom")}
        for name in ("iom", "tom", "pom", "rpom"):
            if dists[name] != dists["riom"]:
                return {"n": n, "stat": name,
                        "reason": "minus-run distribution differs from riom"}
    return None


def _check_theta_eq_6(max_n: int):
    for n in range(1, max_n + 1):
        for t in _trees_of_class(n):
            u = theta(t)
            if (pop(t), rpop(t)) != (rpop(u), pop(u)):
                return {"n": n, "tree": format_tree(t), "theta": format_tree(u),
                        "pop_rpop": [pop(t), rpop(t)],
                        "image_rpop_pop": [rpop(u), pop(u)]}
            if theta_inv(u) != t:
                return {"n": n, "tree": format_tree(t), "theta": format_tree(u),
                        "theta_inv": format_tree(theta_inv(u))}
    return None


def _check_theta_involution(max_n: int):
    for n in range(1, max_n + 1):
        for t in _trees_of_class(n):
            if theta(theta(t)) != t:
                return {"n": n, "tree": format_tree(t),
                        "theta_theta": format_tree(theta(theta(t)))}
    return None


def _check_series_eq_4(max_order: int):
    if not series_mod.check_cubic(max_order):
        return {"order": max_order, "reason": "cubic equation fails"}
    return None


def _check_series_eq_5(max_order: int):
    if not series_mod.check_top_kernel(max_order):
        return {"order": max_order, "reason": "top kernel identity fails"}
    return None


def _check_series_eq_13(max_order: int):
    if not series_mod.check_rpop_kernel(max_order):
        return {"order": max_order, "reason": "rpop kernel identity fails"}
    return None


def _check_matrix_golden(max_n: int):
    for n in range(2, max_n + 1):
        got = matrix_top_iom(n)
        if got != GOLDEN_MATRICES[n]:
            return {"n": n, "expected": GOLDEN_MATRICES[n], "got": got}
    return None


def _check_counting_schroder(max_n: int):
    for n in range(1, max_n + 1):
        count = count_disk_trees(n - 1)
        expected = schroder(n - 1)
        if count != expected:
            return {"n": n, "count": count, "schroder": expected}
    return None


def _check_avoiders_consistency(max_n: int):
    for n in range(1, max_n + 1):
        fast = set(separable(n))
        naive = set(gen_avoiders(n, SEPARABLE_PATTERNS, naive=True))
        if fast != naive:
            example = next(iter(fast ^ naive))
            return {"n": n, "reason": "fast path and naive filter disagree",
                    "example": format_perm(example)}
        for p in all_perms(n):
            sep = avoids_all(p, SEPARABLE_PATTERNS)
            try:
                eta(p)
                built = True
            except NotSeparableError:
                built = False
            if sep != built:
                return {"n": n, "perm": format_perm(p),
                        "avoids": sep, "eta_succeeds": built}
    return None


# ---------------------------------------------------------------------------
# registry and runner
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    check_id: str
    scope: str
    status: str  # "pass" | "fail"
    kind: str  # "theorem" | "conjecture" | "exploratory"
    witness: dict | None
    elapsed: float

    @property
    def gating(self) -> bool:
        return self.kind == "theorem"

    def to_dict(self) -> dict:
        return {"check_id": self.check_id, "scope": self.scope,
                "status": self.status, "kind": self.kind,
                "witness": self.witness, "elapsed": round(self.elapsed, 3)}


@dataclass(frozen=True)
class _Check:
    fn: Callable[[int], dict | None]
    default_n: int
    cap: int
    kind: str
    scope_name: str
    description: str


CHECKS: dict[str, _Check] = {
    "lemma_2_2": _Check(_check_lemma_2_2, 8, 10, "theorem", "n",
                        "descents map to inorder minus nodes"),
    "eq_3": _Check(_check_eq_3, 8, 10, "theorem", "n",
                   "iar - 1 equals the initial inorder plus run"),
    "lemma_2_3": _Check(_check_lemma_2_3, 8, 10, "theorem", "n",
                        "comp - 1 equals the spine-top plus run"),
    "eta_roundtrip": _Check(_check_eta_roundtrip, 8, 10, "theorem", "n",
                            "eta and eta_inv invert each other"),
    "lemma_3_1": _Check(_check_lemma_3_1, 8, 9, "theorem", "n",
                        "left-edge surgery preserves (desb, lmax, lmin)"),
    "thm_3_2": _Check(_check_thm_3_2, 8, 9, "theorem", "n",
                      "phi shifts (top, iop) and preserves the triple"),
    "thm_1_2": _Check(_check_thm_1_2, 8, 9, "theorem", "n",
                      "the involution preserves the triple, swaps (comp, iar)"),
    "eq_1": _Check(_check_eq_1, 8, 9, "theorem", "n",
                   "ballot-number counts of iar and comp on 321-avoiders"),
    "eq_2": _Check(_check_eq_2, 8, 9, "theorem", "n",
                   "top on trees matches iar on (2413, 4213)-avoiders"),
    "thm_4_1": _Check(_check_thm_4_1, 9, 11, "theorem", "n",
                      "traversal plus-run statistics group into classes"),
    "thm_4_2": _Check(_check_thm_4_2, 8, 10, "theorem", "n",
                      "(omi, rpop, top) is exchange-symmetric"),
    "conj_4_3": _Check(_check_conj_4_3, 8, 10, "conjecture", "n",
                       "three conjectured exchange symmetries"),
    "thm_4_5": _Check(_check_thm_4_5, 9, 10, "theorem", "n",
                      "psi shifts (top, iom); Hankel matrices; (comp, idr)"),
    "sign_duality": _Check(_check_sign_duality, 9, 11, "theorem", "n",
                           "conjugation swaps plus-run and minus-run stats"),
    "theta_eq_6": _Check(_check_theta_eq_6, 9, 11, "theorem", "n",
                         "theta swaps (pop, rpop) and is invertible"),
    "theta_involution": _Check(_check_theta_involution, 9, 11, "exploratory",
                               "n", "theta composed with itself is the identity"),
    "series_eq_4": _Check(_check_series_eq_4, 8, 10, "theorem", "order",
                          "cubic functional equation for the descent series"),
    "series_eq_5": _Check(_check_series_eq_5, 8, 10, "theorem", "order",
                          "kernel identity for the top marginal"),
    "series_eq_13": _Check(_check_series_eq_13, 8, 10, "theorem", "order",
                           "kernel identity for the rpop marginal"),
    "matrix_golden": _Check(_check_matrix_golden, 6, 6, "theorem", "n",
                            "joint (top, iom) matrices match the published values"),
    "counting_schroder": _Check(_check_counting_schroder, 10, 11, "theorem", "n",
                                "tree counts are the large Schroeder numbers"),
    "avoiders_consistency": _Check(_check_avoiders_consistency, 8, 9, "theorem",
                                   "n", "naive filter, fast path and eta agree"),
}


def check_ids() -> list[str]:
    return list(CHECKS)


def run_check(check_id: str, max_n: int | None = None) -> CheckResult:
    """Run one registered check; raises ValueError for unknown ids or a
    range beyond the check's resource cap."""
    if check_id not in CHECKS:
        raise ValueError(f"unknown check id {check_id!r}; "
                         f"known: {', '.join(CHECKS)}")
    spec = CHECKS[check_id]
    n = spec.default_n if max_n is None else max_n
    if n < 1 or n > spec.cap:
        raise ValueError(f"max_n for {check_id} must be in 1..{spec.cap}")
    start = time.perf_counter()
    witness = spec.fn(n)
    elapsed = time.perf_counter() - start
    return CheckResult(
        check_id=check_id,
        scope=f"{spec.scope_name} <= {n}",
        status="pass" if witness is None else "fail",
        kind=spec.kind,
        witness=witness,
        elapsed=elapsed,
    )


def run_suite(check_ids_to_run: Iterable[str] | None = None,
              max_n: int | None = None,
              jobs: int = 1,
              stop_on_failure: bool = True) -> list[CheckResult]:
    """
    Run several checks (all by default, in registry order).  ``max_n``
    overrides every check's default range, clamped to each check's cap.
    A failing theorem-scoped check halts the remaining checks unless
    ``stop_on_failure`` is false or ``jobs`` > 1.
    """
    ids = list(check_ids_to_run) if check_ids_to_run is not None else check_ids()
    for check_id in ids:
        if check_id not in CHECKS:
            raise ValueError(f"unknown check id {check_id!r}")

    def bounded(check_id: str) -> int | None:
        if max_n is None:
            return None
        return min(max_n, CHECKS[check_id].cap)

    results: list[CheckResult] = []
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(run_check, check_id, bounded(check_id))
                       for check_id in ids]
            results = [f.result() for f in futures]
    else:
        for check_id in ids:
            result = run_check(check_id, bounded(check_id))
            results.append(result)
            if stop_on_failure and result.gating and result.status == "fail":
                break
    return results


def suite_passed(results: Iterable[CheckResult]) -> bool:
    """True iff every theorem-scoped result passed."""
    return all(r.status == "pass" for r in results if r.gating)
