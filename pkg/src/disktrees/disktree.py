"""
Di-sk trees: rooted binary trees whose nodes carry a ``+`` or ``-`` label,
subject to one structural rule: no node has the same label as its right
child.  Di-sk trees with n-1 nodes are in bijection with separable
permutations of length n (see :mod:`disktrees.bijections`).

Representation: the empty tree is ``None``; a node is the plain tuple
``(sign, left, right)`` with ``sign`` in ``{PLUS, MINUS}``.  Trees are
immutable values, safe to share and hash.

Nodes of one tree are addressed by NodeRef = 1-based inorder index, the
only node identity that survives serialization.

Text format (byte-exact grammar)::

    tree := "." | "(" tree " " sign " " tree ")"
    sign := "+" | "-"

so ``"((. - .) + .)"`` is the two-node tree with a ``+`` root whose left
child is a ``-`` node.
"""
from __future__ import annotations

import json
from collections import deque
from typing import Iterator, Optional

PLUS = "+"
MINUS = "-"
SIGNS = (PLUS, MINUS)

Tree = Optional[tuple]  # None | (sign, Tree, Tree)

TRAVERSAL_ORDERS = (
    "inorder", "right_inorder", "preorder", "right_preorder",
    "postorder", "right_postorder", "level", "right_level",
)


def node(sign: str, left: Tree = None, right: Tree = None) -> Tree:
    if sign not in SIGNS:
        raise ValueError(f"bad sign {sign!r}")
    return (sign, left, right)


def opposite(sign: str) -> str:
    return MINUS if sign == PLUS else PLUS


def size(t: Tree) -> int:
    """Number of nodes."""
    if t is None:
        return 0
    return 1 + size(t[1]) + size(t[2])


def validate(t: Tree) -> bool:
    """
    True iff every node with a nonempty right child has a label different
    from that child's label.
    """
    if t is None:
        return True
    sign, left, right = t
    if right is not None and right[0] == sign:
        return False
    return validate(left) and validate(right)


def require_valid(t: Tree) -> Tree:
    if not validate(t):
        raise ValueError("not a valid di-sk tree: a node shares its label "
                         "with its right child")
    return t


# ---------------------------------------------------------------------------
# text / JSON formats
# ---------------------------------------------------------------------------

def format_tree(t: Tree) -> str:
    """Canonical text form, e.g. ``"((. - .) + .)"``."""
    if t is None:
        return "."
    sign, left, right = t
    return f"({format_tree(left)} {sign} {format_tree(right)})"


def parse_tree(text: str) -> Tree:
    """Parse the canonical text form; rejects malformed or invalid trees."""
    pos = 0

    def parse() -> Tree:
        nonlocal pos
        if pos < len(text) and text[pos] == ".":
            pos += 1
            return None
        if pos >= len(text) or text[pos] != "(":
            raise ValueError(f"expected '.' or '(' at offset {pos} in {text!r}")
        pos += 1
        left = parse()
        expect(" ")
        if pos >= len(text) or text[pos] not in SIGNS:
            raise ValueError(f"expected sign at offset {pos} in {text!r}")
        sign = text[pos]
        pos += 1
        expect(" ")
        right = parse()
        expect(")")
        return (sign, left, right)

    def expect(ch: str) -> None:
        nonlocal pos
        if pos >= len(text) or text[pos] != ch:
            raise ValueError(f"expected {ch!r} at offset {pos} in {text!r}")
        pos += 1

    t = parse()
    if pos != len(text):
        raise ValueError(f"trailing input at offset {pos} in {text!r}")
    return require_valid(t)


def tree_to_obj(t: Tree):
    """Nested ``{label, left, right}`` objects with null for empty."""
    if t is None:
        return None
    return {"label": t[0], "left": tree_to_obj(t[1]), "right": tree_to_obj(t[2])}


def tree_from_obj(obj) -> Tree:
    if obj is None:
        return None
    if not isinstance(obj, dict) or set(obj) != {"label", "left", "right"}:
        raise ValueError(f"bad tree object: {obj!r}")
    if obj["label"] not in SIGNS:
        raise ValueError(f"bad label {obj['label']!r}")
    return (obj["label"], tree_from_obj(obj["left"]), tree_from_obj(obj["right"]))


def tree_to_json(t: Tree) -> str:
    return json.dumps(tree_to_obj(t))


def tree_from_json(text: str) -> Tree:
    return require_valid(tree_from_obj(json.loads(text)))


# ---------------------------------------------------------------------------
# traversals
# ---------------------------------------------------------------------------

def _index_tree(t: Tree, lo: int = 1):
    """
    Annotate each node with its 1-based inorder index: nodes become
    ``(ref, sign, left, right)``.  Identical subtree tuples may be shared
    between positions, so indices are assigned positionally.
    """
    if t is None:
        return None, 0
    left, n_left = _index_tree(t[1], lo)
    ref = lo + n_left
    right, n_right = _index_tree(t[2], ref + 1)
    return (ref, t[0], left, right), n_left + 1 + n_right


def _walk(t: Tree, order: str) -> Iterator[tuple]:
    """Yield ``(ref, sign, left, right)`` nodes in the traversal order."""
    if order not in TRAVERSAL_ORDERS:
        raise ValueError(f"unknown traversal order {order!r}")
    indexed, _ = _index_tree(t)
    yield from _walk_indexed(indexed, order)


def _walk_indexed(t, order: str) -> Iterator[tuple]:
    if t is None:
        return
    if order == "inorder":
        yield from _walk_indexed(t[2], order)
        yield t
        yield from _walk_indexed(t[3], order)
    elif order == "right_inorder":
        yield from _walk_indexed(t[3], order)
        yield t
        yield from _walk_indexed(t[2], order)
    elif order == "preorder":
        yield t
        yield from _walk_indexed(t[2], order)
        yield from _walk_indexed(t[3], order)
    elif order == "right_preorder":
        yield t
        yield from _walk_indexed(t[3], order)
        yield from _walk_indexed(t[2], order)
    elif order == "postorder":
        yield from _walk_indexed(t[2], order)
        yield from _walk_indexed(t[3], order)
        yield t
    elif order == "right_postorder":
        yield from _walk_indexed(t[3], order)
        yield from _walk_indexed(t[2], order)
        yield t
    else:
        first, second = (2, 3) if order == "level" else (3, 2)
        queue = deque([t])
        while queue:
            cur = queue.popleft()
            yield cur
            for child_index in (first, second):
                if cur[child_index] is not None:
                    queue.append(cur[child_index])


def traverse(t: Tree, order: str) -> tuple[int, ...]:
    """
    Node references (1-based inorder indices) in the given visitation
    order.  ``order`` is one of :data:`TRAVERSAL_ORDERS`; the two level
    orders are breadth-first by depth, left-to-right resp. right-to-left
    within each level.
    """
    return tuple(n[0] for n in _walk(t, order))


def signs_in_order(t: Tree, order: str) -> tuple[str, ...]:
    return tuple(n[1] for n in _walk(t, order))


def initial_count(t: Tree, order: str, sign: str) -> int:
    """
    Length of the maximal prefix of the ``order`` traversal whose nodes
    all carry ``sign``.  The empty tree gives 0 for every order and sign.
    """
    count = 0
    for s in signs_in_order(t, order):
        if s != sign:
            break
        count += 1
    return count


def _make_stat(order: str, sign: str):
    def stat(t: Tree) -> int:
        return initial_count(t, order, sign)
    return stat


# Initial-run statistics for the eight traversals, for each sign.
iop = _make_stat("inorder", PLUS)
riop = _make_stat("right_inorder", PLUS)
top = _make_stat("preorder", PLUS)
rtop = _make_stat("right_preorder", PLUS)
pop = _make_stat("postorder", PLUS)
rpop = _make_stat("right_postorder", PLUS)
lop = _make_stat("level", PLUS)
rlop = _make_stat("right_level", PLUS)

iom = _make_stat("inorder", MINUS)
riom = _make_stat("right_inorder", MINUS)
tom = _make_stat("preorder", MINUS)
rtom = _make_stat("right_preorder", MINUS)
pom = _make_stat("postorder", MINUS)
rpom = _make_stat("right_postorder", MINUS)
lom = _make_stat("level", MINUS)
rlom = _make_stat("right_level", MINUS)

for _name in ("iop", "riop", "top", "rtop", "pop", "rpop", "lop", "rlop",
              "iom", "riom", "tom", "rtom", "pom", "rpom", "lom", "rlom"):
    globals()[_name].__name__ = _name
del _name


def omi(t: Tree) -> int:
    """Number of minus-labeled nodes."""
    if t is None:
        return 0
    return (1 if t[0] == MINUS else 0) + omi(t[1]) + omi(t[2])


def conjugate(t: Tree) -> Tree:
    """Flip every node label; an involution on di-sk trees."""
    if t is None:
        return None
    return (opposite(t[0]), conjugate(t[1]), conjugate(t[2]))


# ---------------------------------------------------------------------------
# spine and inorder root
# ---------------------------------------------------------------------------

def _spine_subtrees(t: Tree) -> list[Tree]:
    """Subtrees along the root-to-iroot path (all left edges), root first."""
    if t is None:
        raise ValueError("empty tree has no spine")
    out = [t]
    while out[-1][1] is not None:
        out.append(out[-1][1])
    return out


def iroot(t: Tree) -> int:
    """NodeRef of the first node in inorder; always 1."""
    if t is None:
        raise ValueError("empty tree has no inorder root")
    return 1


def spine(t: Tree) -> tuple[int, ...]:
    """NodeRefs along the path from the root down to the inorder root."""
    # spine nodes sit on the leftmost path, so each one's inorder index is
    # the size of its left subtree plus one
    return tuple(size(sub[1]) + 1 for sub in _spine_subtrees(t))


def spine_signs(t: Tree) -> tuple[str, ...]:
    return tuple(sub[0] for sub in _spine_subtrees(t))


# ---------------------------------------------------------------------------
# path surgery: subtree addressing, insertion and extraction
# ---------------------------------------------------------------------------

def _path_to(t: Tree, ref: int) -> tuple[int, ...]:
    """L/R path (1 = left, 2 = right) from the root to the given NodeRef."""
    m = size(t)
    if not 1 <= ref <= m:
        raise ValueError(f"node reference {ref} out of range 1..{m}")

    path: list[int] = []

    def descend(sub: Tree, lo: int) -> None:
        # inorder index of sub's root is lo + size(left subtree)
        here = lo + size(sub[1])
        if ref == here:
            return
        if ref < here:
            path.append(1)
            descend(sub[1], lo)
        else:
            path.append(2)
            descend(sub[2], here + 1)

    descend(t, 1)
    return tuple(path)


def _subtree_at(t: Tree, path: tuple[int, ...]) -> Tree:
    for step in path:
        t = t[step]
    return t


def _replace_at(t: Tree, path: tuple[int, ...], new: Tree) -> Tree:
    if not path:
        return new
    sign, left, right = t
    if path[0] == 1:
        return (sign, _replace_at(left, path[1:], new), right)
    return (sign, left, _replace_at(right, path[1:], new))


def _leftmost_path(t: Tree) -> tuple[int, ...]:
    path = []
    while t[1] is not None:
        path.append(1)
        t = t[1]
    return tuple(path)


def insert(t1: Tree, t2: Tree, a: int | None, b: int | None) -> Tree:
    """
    Graft the nonempty tree ``t2`` into ``t1`` between the nodes ``a``
    and ``b`` (NodeRefs in ``t1``, either possibly empty).

    Requires ``a`` to be the left child of ``b``; with ``b`` empty,
    ``a`` must be the root of ``t1``; with ``a`` empty, ``b`` must have
    no left child.  The edge a-b is deleted, the subtree rooted at ``a``
    becomes the left child of t2's inorder root, and t2's root becomes
    the left child of ``b``.  Raises if the grafted tree violates the
    di-sk label rule.
    """
    if t2 is None:
        raise ValueError("cannot insert an empty tree")
    require_valid(t1)
    require_valid(t2)

    if a is None and b is None:
        if t1 is not None:
            raise ValueError("a and b may both be empty only for an empty host")
        return require_valid(t2)

    c_path = _leftmost_path(t2)

    if b is None:
        path_a = _path_to(t1, a)
        if path_a:
            raise ValueError(f"with b empty, node {a} must be the root")
        return require_valid(_replace_at(t2, c_path + (1,), t1))

    path_b = _path_to(t1, b)
    b_sub = _subtree_at(t1, path_b)
    if a is None:
        if b_sub[1] is not None:
            raise ValueError(f"node {b} has a left child; a cannot be empty")
        return require_valid(_replace_at(t1, path_b + (1,), t2))

    path_a = _path_to(t1, a)
    if path_a != path_b + (1,):
        raise ValueError(f"node {a} is not the left child of node {b}")
    a_sub = _subtree_at(t1, path_a)
    grafted = _replace_at(t2, c_path + (1,), a_sub)
    return require_valid(_replace_at(t1, path_a, grafted))


def extract(t3: Tree, t2_root: int, t2_iroot: int) -> tuple[Tree, Tree]:
    """
    Inverse of :func:`insert`: split off the embedded tree whose root is
    ``t2_root`` and whose inorder root is ``t2_iroot`` (NodeRefs in
    ``t3``).  The embedded tree consists of the subtree below ``t2_root``
    minus the subtree hanging left of ``t2_iroot``, so ``t2_iroot`` must
    lie on the left spine below ``t2_root`` and ``t2_root`` must not be a
    right child.  Returns ``(remainder, extracted)``.
    """
    require_valid(t3)
    path_d = _path_to(t3, t2_root)
    if path_d and path_d[-1] == 2:
        raise ValueError(f"node {t2_root} is a right child; cannot extract")
    path_c = _path_to(t3, t2_iroot)
    if path_c[: len(path_d)] != path_d or any(s != 1 for s in path_c[len(path_d):]):
        raise ValueError(
            f"node {t2_iroot} is not on the left spine below node {t2_root}")

    d_sub = _subtree_at(t3, path_d)
    rel_c = path_c[len(path_d):]
    a_sub = _subtree_at(d_sub, rel_c + (1,))
    extracted = _replace_at(d_sub, rel_c + (1,), None)
    remainder = _replace_at(t3, path_d, a_sub)
    return remainder, require_valid(extracted)


# Registry used by distribution tables and the table endpoint/CLI.
TREE_STATS = {
    "iop": iop, "riop": riop, "top": top, "rtop": rtop,
    "pop": pop, "rpop": rpop, "lop": lop, "rlop": rlop,
    "iom": iom, "riom": riom, "tom": tom, "rtom": rtom,
    "pom": pom, "rpom": rpom, "lom": lom, "rlom": rlom,
    "omi": omi,
}
