"""
The bijections between separable permutations and di-sk trees, and the
statistic-swapping maps on di-sk trees.

* ``eta`` / ``eta_inv``: the classical decomposition bijection between
  separable permutations of length n and di-sk trees with n-1 nodes.
  Descent positions of the permutation are exactly the inorder positions
  of minus nodes in the tree.
* ``l_op`` / ``l_inv``: the elementary left-edge surgery at a minus node
  that slides an adjacent plus node (with its right subtree) below it.
  It changes no descent bottom, left-to-right maximum or minimum of the
  underlying permutation.
* ``phi`` / ``phi_inv``: composed of left-edge surgeries ("swing down"
  then "backward shift"), trades one unit of the spine-top plus run for
  one unit of the initial inorder plus run.
* ``big_phi``: the involution on separable permutations built from
  ``phi``; it preserves (lmax, lmin, desb) and swaps (comp, iar).
* ``theta``: a recursive bijection on di-sk trees swapping the postorder
  and right-postorder initial plus runs.
* ``psi`` / ``psi_inv``: the cut-and-paste bijection trading one unit of
  the spine-top plus run for one unit of the initial inorder minus run.

Multi-step constructions perform pointer surgery on a private mutable
copy of the tree, so a node chosen at the start keeps its identity while
the tree around it changes; results are frozen back to plain tuples.
"""
from __future__ import annotations

from typing import Sequence

from .disktree import (
    MINUS, PLUS, Tree, iop, opposite, require_valid, spine_signs, top,
)
from .perm import Perm, as_perm


class NotSeparableError(ValueError):
    """Raised by ``eta`` when the input contains 2413 or 3142."""


# ---------------------------------------------------------------------------
# eta: separable permutations <-> di-sk trees
# ---------------------------------------------------------------------------

def eta(p: Sequence[int]) -> Tree:
    """
    Decomposition tree of a separable permutation.

    Split the word at the greatest position where the prefix is either
    entirely below the suffix (plus root) or entirely above it (minus
    root), and recurse; a single letter gives the empty tree.  The
    greatest-split rule forces the right child's label to differ from
    the root's, so the result is a valid di-sk tree with n-1 nodes.

    Raises :class:`NotSeparableError` when no split exists at some level,
    which happens exactly when the input contains 2413 or 3142.
    """
    values = as_perm(p)

    def build(seg: tuple[int, ...]) -> Tree:
        n = len(seg)
        if n == 1:
            return None
        prefix_min = [0] * n
        prefix_max = [0] * n
        prefix_min[0] = prefix_max[0] = seg[0]
        for i in range(1, n):
            prefix_min[i] = min(prefix_min[i - 1], seg[i])
            prefix_max[i] = max(prefix_max[i - 1], seg[i])
        suffix_min = [0] * n
        suffix_max = [0] * n
        suffix_min[n - 1] = suffix_max[n - 1] = seg[n - 1]
        for i in range(n - 2, -1, -1):
            suffix_min[i] = min(suffix_min[i + 1], seg[i])
            suffix_max[i] = max(suffix_max[i + 1], seg[i])
        for i in range(n - 1, 0, -1):
            if prefix_min[i - 1] > suffix_max[i]:
                return (MINUS, build(seg[:i]), build(seg[i:]))
            if prefix_max[i - 1] < suffix_min[i]:
                return (PLUS, build(seg[:i]), build(seg[i:]))
        raise NotSeparableError(
            f"permutation is not separable (contains 2413 or 3142): {values}")

    return build(values)


def eta_inv(t: Tree) -> Perm:
    """
    The unique separable permutation whose decomposition tree is ``t``.

    A subtree with a plus root concatenates its children's permutations
    with the right block shifted up; a minus root shifts the left block
    up instead.  The empty tree gives the one-letter permutation.
    """
    require_valid(t)

    def build(sub: Tree) -> tuple[int, ...]:
        if sub is None:
            return (1,)
        sign, left, right = sub
        a = build(left)
        b = build(right)
        if sign == PLUS:
            return a + tuple(v + len(a) for v in b)
        return tuple(v + len(b) for v in a) + b

    return build(t)


# ---------------------------------------------------------------------------
# mutable nodes for pointer surgery
# ---------------------------------------------------------------------------

class _Node:
    __slots__ = ("sign", "left", "right", "parent")

    def __init__(self, sign, left=None, right=None, parent=None):
        self.sign = sign
        self.left = left
        self.right = right
        self.parent = parent


def _thaw(t: Tree) -> _Node:
    """Build a mutable copy under a sentinel whose left child is the root."""
    sentinel = _Node(None)

    def build(sub: Tree, parent: _Node) -> _Node | None:
        if sub is None:
            return None
        n = _Node(sub[0], parent=parent)
        n.left = build(sub[1], n)
        n.right = build(sub[2], n)
        return n

    sentinel.left = build(t, sentinel)
    return sentinel


def _freeze(n: _Node | None) -> Tree:
    if n is None:
        return None
    return (n.sign, _freeze(n.left), _freeze(n.right))


def _set_left(parent: _Node, child: _Node | None) -> None:
    parent.left = child
    if child is not None:
        child.parent = parent


def _inorder_nodes(n: _Node | None) -> list[_Node]:
    out: list[_Node] = []

    def walk(cur: _Node | None) -> None:
        if cur is None:
            return
        walk(cur.left)
        out.append(cur)
        walk(cur.right)

    walk(n)
    return out


def _spine_nodes(n: _Node) -> list[_Node]:
    out = [n]
    while out[-1].left is not None:
        out.append(out[-1].left)
    return out


def _leftmost(n: _Node) -> _Node:
    while n.left is not None:
        n = n.left
    return n


def _path_down(top_node: _Node, bottom: _Node) -> list[_Node]:
    """Nodes from ``top_node`` down to ``bottom`` (inclusive) via parents."""
    path = [bottom]
    cur = bottom
    while cur is not top_node:
        cur = cur.parent
        if cur is None or cur.sign is None:
            raise ValueError("nodes are not on a common downward path")
        path.append(cur)
    path.reverse()
    return path


def _l_apply(v: _Node) -> None:
    """
    The left-edge surgery at the minus node ``v``.  Two configurations
    qualify; in both, the nearest plus node ``w`` above ``v`` that is not
    a right child is cut together with its right subtree and re-grafted
    as the left child of ``v``, while v's old left subtree moves below
    ``w`` and w's old position is filled from below.
    """
    if v.sign != MINUS:
        raise ValueError("surgery applies at a minus node only")
    p = v.parent
    if p.sign == PLUS and p.left is v and p.parent.left is p:
        # v is the left child of w := p
        w = p
        u = w.parent
        d = v.left
        _set_left(u, v)
        _set_left(v, w)
        _set_left(w, d)
    elif (p.sign == PLUS and p.right is v and p.parent.sign == PLUS
          and p.parent.left is p and p.parent.parent.left is p.parent):
        # v is the right child of w' := p, whose parent is w := p.parent
        w_prime = p
        w = w_prime.parent
        u = w.parent
        d = v.left
        _set_left(u, w_prime)
        _set_left(v, w)
        _set_left(w, d)
    else:
        raise ValueError("left-edge surgery is not applicable at this node")


def _l_unapply(v: _Node) -> None:
    """Inverse of :func:`_l_apply` at the same minus node ``v``."""
    if v.sign != MINUS:
        raise ValueError("surgery applies at a minus node only")
    w = v.left
    if w is None or w.sign != PLUS:
        raise ValueError("node has no plus left child to push back up")
    p = v.parent
    if p.left is v:
        # image of the first configuration: v is not a right child
        u = p
        d = w.left
        _set_left(u, w)
        _set_left(w, v)
        _set_left(v, d)
    elif p.right is v and p.sign == PLUS and p.parent.left is p:
        # image of the second configuration: v is the right child of w'
        w_prime = p
        u = w_prime.parent
        d = w.left
        _set_left(u, w)
        _set_left(w, w_prime)
        _set_left(v, d)
    else:
        raise ValueError("inverse left-edge surgery is not applicable here")


def _node_by_ref(nodes: list[_Node], ref: int) -> _Node:
    if not 1 <= ref <= len(nodes):
        raise ValueError(f"node reference {ref} out of range 1..{len(nodes)}")
    return nodes[ref - 1]


def l_op_tracked(t: Tree, v: int) -> tuple[Tree, int]:
    """
    Left-edge surgery at NodeRef ``v`` (a minus node).  Returns the new
    tree together with the surgery node's NodeRef in it (the surgery
    moves subtrees around, so inorder indices shift).
    """
    require_valid(t)
    sentinel = _thaw(t)
    target = _node_by_ref(_inorder_nodes(sentinel.left), v)
    _l_apply(target)
    out = _freeze(sentinel.left)
    assert require_valid(out) is out
    return out, _inorder_nodes(sentinel.left).index(target) + 1


def l_inv_tracked(t: Tree, v: int) -> tuple[Tree, int]:
    """Inverse left-edge surgery at NodeRef ``v``, with the node's new ref."""
    require_valid(t)
    sentinel = _thaw(t)
    target = _node_by_ref(_inorder_nodes(sentinel.left), v)
    _l_unapply(target)
    out = _freeze(sentinel.left)
    assert require_valid(out) is out
    return out, _inorder_nodes(sentinel.left).index(target) + 1


def l_op(t: Tree, v: int) -> Tree:
    """Left-edge surgery at NodeRef ``v``; see :func:`l_op_tracked`."""
    return l_op_tracked(t, v)[0]


def l_inv(t: Tree, v: int) -> Tree:
    """Inverse left-edge surgery at NodeRef ``v``; see :func:`l_inv_tracked`."""
    return l_inv_tracked(t, v)[0]


# ---------------------------------------------------------------------------
# phi: trades the spine-top plus run against the initial inorder plus run
# ---------------------------------------------------------------------------

def phi(t: Tree) -> Tree:
    """
    Bijection from {top = k, iop = l} to {top = k-1, iop = l+1} on di-sk
    trees whose spine contains a minus node; requires k >= 1.

    Step 1 ("swing down"): walk the path from the topmost spine minus
    node down to the first inorder minus node and apply the left-edge
    surgery at each minus node on it, in order.  Step 2 ("backward
    shift"): let w be the plus node now hanging left of the first
    inorder minus node; along the spine of w's right subtree, push each
    minus node's plus-gap back up with inverse surgeries.

    The underlying permutation keeps its descent bottoms and its
    left-to-right maxima and minima.
    """
    require_valid(t)
    signs = spine_signs(t)
    if MINUS not in signs:
        raise ValueError("phi needs a minus node on the spine")
    if signs[0] != PLUS:
        raise ValueError("phi needs top >= 1 (a plus root)")

    sentinel = _thaw(t)
    root = sentinel.left

    # swing down
    v1 = next(n for n in _spine_nodes(root) if n.sign == MINUS)
    v = next(n for n in _inorder_nodes(root) if n.sign == MINUS)
    for u in [n for n in _path_down(v1, v) if n.sign == MINUS]:
        _l_apply(u)

    # backward shift
    w = v.left
    assert w is not None and w.sign == PLUS
    b = w.right
    if b is not None:
        assert b.sign == MINUS
        spine_b = _spine_nodes(b)
        positions = [i for i, n in enumerate(spine_b) if n.sign == MINUS]
        assert positions and positions[0] == 0
        for which, start in enumerate(positions):
            end = positions[which + 1] if which + 1 < len(positions) else len(spine_b)
            gap = end - start - 1  # plus nodes below this minus node
            for _ in range(gap):
                _l_unapply(spine_b[start])

    out = _freeze(sentinel.left)
    assert require_valid(out) is out
    return out


def phi_inv(t: Tree) -> Tree:
    """
    Inverse of :func:`phi`: from {top = k-1, iop = l+1} back to
    {top = k, iop = l}.  Requires iop >= 1 and a minus node on the spine.

    Step 1 ("forward shift") re-stacks plus nodes below the right
    subtree of the plus node w sitting just before the first inorder
    minus node, until w's parent is the nearest minus ancestor v.
    Step 2 ("swing up") undoes the swing by inverse surgeries from v
    back up to the topmost spine minus node.
    """
    require_valid(t)
    signs = spine_signs(t)
    if MINUS not in signs:
        raise ValueError("phi_inv needs a minus node on the spine")

    sentinel = _thaw(t)
    root = sentinel.left
    order = _inorder_nodes(root)
    first_minus = next((i for i, n in enumerate(order) if n.sign == MINUS), None)
    if first_minus is None or first_minus == 0:
        raise ValueError("phi_inv needs iop >= 1")
    w = order[first_minus - 1]
    assert w.sign == PLUS

    # locate the nearest minus ancestor v of w and the plus gap c1
    c1 = 0
    v = w.parent
    while v.sign == PLUS:
        c1 += 1
        v = v.parent
    if v.sign is None:
        raise ValueError("no minus node above the initial plus run")

    # forward shift
    b = w.right
    if b is not None:
        assert b.sign == MINUS
        spine_b = _spine_nodes(b)
        minus_nodes = [n for n in spine_b if n.sign == MINUS]
        positions = [i for i, n in enumerate(spine_b) if n.sign == MINUS]
        assert positions[0] == 0 and spine_b[-1].sign == MINUS
        counts = [c1]
        counts.extend(positions[j] - positions[j - 1] - 1
                      for j in range(1, len(positions)))
        for vp, count in zip(minus_nodes, counts):
            for _ in range(count):
                _l_apply(vp)
    else:
        assert c1 == 0

    assert w.parent is v

    # swing up
    v1 = next(n for n in _spine_nodes(sentinel.left) if n.sign == MINUS)
    chain = [n for n in _path_down(v1, v) if n.sign == MINUS]
    for u in reversed(chain):
        _l_unapply(u)

    out = _freeze(sentinel.left)
    assert require_valid(out) is out
    return out


def big_phi(p: Sequence[int]) -> Perm:
    """
    The involution on separable permutations that preserves the triple
    (lmax, lmin, desb) and exchanges comp with iar; it maps 312-avoiding
    permutations to 312-avoiding permutations.

    When the decomposition tree's spine is all plus (equivalently the
    first letter is 1), recurse on the rest; otherwise apply ``phi``
    (or its inverse) enough times to swap the two class indices.
    """
    values = as_perm(p)
    t = eta(values)  # also certifies separability
    if len(values) == 1:
        return values
    if MINUS not in spine_signs(t):
        # values[0] == 1 exactly in this case
        inner = big_phi(tuple(v - 1 for v in values[1:]))
        return (1,) + tuple(v + 1 for v in inner)
    k = top(t)
    l = iop(t)
    for _ in range(k - l):
        t = phi(t)
    for _ in range(l - k):
        t = phi_inv(t)
    return eta_inv(t)


# ---------------------------------------------------------------------------
# theta: swaps the postorder and right-postorder initial plus runs
# ---------------------------------------------------------------------------

def theta(t: Tree) -> Tree:
    """
    Size-preserving bijection on di-sk trees with
    ``(pop, rpop)(t) == (rpop, pop)(theta(t))``.

    Recursively: keep a right-empty node as is; otherwise swap the
    transformed children, with the root label forced by the new right
    child's label.
    """
    if t is None:
        return None
    sign, left, right = t
    if right is None:
        return (sign, theta(left), None)
    if left is None:
        image = theta(right)
        return (opposite(image[0]), None, image)
    new_right = theta(left)
    return (opposite(new_right[0]), theta(right), new_right)


def theta_inv(t: Tree) -> Tree:
    """Inverse of :func:`theta` (the same case analysis, unwound)."""
    if t is None:
        return None
    sign, left, right = t
    if right is None:
        return (sign, theta_inv(left), None)
    if left is None:
        pre = theta_inv(right)
        return (opposite(pre[0]), None, pre)
    new_right = theta_inv(left)
    return (opposite(new_right[0]), theta_inv(right), new_right)


# ---------------------------------------------------------------------------
# psi: trades the spine-top plus run against the initial inorder minus run
# ---------------------------------------------------------------------------

def _conjugate_nodes(n: _Node | None) -> None:
    if n is None:
        return
    n.sign = opposite(n.sign)
    _conjugate_nodes(n.left)
    _conjugate_nodes(n.right)


def psi(t: Tree) -> Tree:
    """
    Bijection from {top = k, iom = l} to {top = k-1, iom = l+1} on di-sk
    trees; requires k >= 1, i.e. a plus root v.

    Cut-and-paste: detach the root's left subtree T1 and, inside the
    right subtree, the left subtree T3 of the lowest minus node on its
    spine; hang the remaining middle part below T3's inorder root,
    conjugate every label of that assembly, and graft it back into T1
    at the first inorder plus node of the original tree.
    """
    require_valid(t)
    if t is None or t[0] != PLUS:
        raise ValueError("psi needs top >= 1 (a plus root)")

    sentinel = _thaw(t)
    v = sentinel.left

    order = _inorder_nodes(v)
    v1 = next(n for n in order if n.sign == PLUS)
    u1 = v1.left  # may be None
    t1_root = v.left  # may be None

    # carve out the middle assembly rooted at star_root
    v.left = None
    v.parent = None
    star_root = v
    if v.right is not None:
        t2_root = v.right
        assert t2_root.sign == MINUS
        v2 = [n for n in _spine_nodes(t2_root) if n.sign == MINUS][-1]
        t3_root = v2.left
        if t3_root is not None:
            v2.left = None
            _set_left(_leftmost(t3_root), v)
            star_root = t3_root
            star_root.parent = None
    _conjugate_nodes(star_root)
    star_iroot = _leftmost(star_root)
    assert star_iroot is v

    # graft the assembly back at (u1, v1)
    if v1 is v:
        if t1_root is not None:
            _set_left(star_iroot, t1_root)
        result_root = star_root
    else:
        _set_left(v1, star_root)
        if u1 is not None:
            _set_left(star_iroot, u1)
        result_root = t1_root

    out = _freeze(result_root)
    assert require_valid(out) is out
    return out


def psi_inv(t: Tree) -> Tree:
    """
    Inverse of :func:`psi`: from {top = k-1, iom = l+1} back to
    {top = k, iom = l}.  Requires iom >= 1.

    Locate the last node v of the initial inorder minus run.  If v has a
    right subtree, climb the maximal left-edge minus chain above v,
    detach the chain with its hangings, move the part above v below v's
    inorder successor, and conjugate; otherwise conjugate v alone.  The
    remainder of the tree is re-hung below the conjugated assembly.
    """
    require_valid(t)
    sentinel = _thaw(t)
    root = sentinel.left
    order = _inorder_nodes(root)
    run = 0
    while run < len(order) and order[run].sign == MINUS:
        run += 1
    if run == 0:
        raise ValueError("psi_inv needs iom >= 1")
    v = order[run - 1]
    successor = order[run] if run < len(order) else None
    if successor is not None:
        assert successor.sign == PLUS

    if v.right is None:
        # the assembly is v alone
        assert v.parent.left is v
        _set_left(v.parent, v.left)
        v.left = None
        v.parent = None
        v.sign = PLUS
        star_root = v
    else:
        assert successor is not None and _leftmost(v.right) is successor
        chain = [v]
        while True:
            parent = chain[-1].parent
            if parent.sign != MINUS or parent.left is not chain[-1]:
                break
            chain.append(parent)
        wm = chain[-1]
        assert wm.parent.left is wm, "chain top must not be a right child"
        # extract the assembly: subtree(wm) minus subtree(v.left)
        _set_left(wm.parent, v.left)
        v.left = None
        wm.parent = None
        if len(chain) > 1:
            # detach the part above v and re-hang it below v's successor
            w2 = chain[1]
            assert w2.left is v
            w2.left = None
            v.parent = None
            assert successor.left is None
            _set_left(successor, wm)
        _conjugate_nodes(v)
        star_root = v

    host_root = sentinel.left  # remainder, possibly None
    star_iroot = _leftmost(star_root)
    assert star_iroot is v
    if host_root is not None:
        _set_left(star_iroot, host_root)

    out = _freeze(star_root)
    assert require_valid(out) is out
    return out


# ---------------------------------------------------------------------------
# map registry for the service and CLI
# ---------------------------------------------------------------------------

# name -> (input kind, output kind, callable, needs node ref)
MAPS = {
    "eta": ("perm", "tree", eta, False),
    "eta-inv": ("tree", "perm", eta_inv, False),
    "l": ("tree", "tree", l_op, True),
    "l-inv": ("tree", "tree", l_inv, True),
    "phi": ("tree", "tree", phi, False),
    "phi-inv": ("tree", "tree", phi_inv, False),
    "Phi": ("perm", "perm", big_phi, False),
    "theta": ("tree", "tree", theta, False),
    "psi": ("tree", "tree", psi, False),
    "psi-inv": ("tree", "tree", psi_inv, False),
}
