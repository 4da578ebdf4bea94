import pytest

from disktrees.bijections import (
    MAPS, NotSeparableError, big_phi, eta, eta_inv, l_inv, l_inv_tracked,
    l_op, l_op_tracked, phi, phi_inv, psi, psi_inv, theta, theta_inv,
)
from disktrees.disktree import (
    MINUS, format_tree, iom, iop, parse_tree, pop, rpop, signs_in_order,
    spine_signs, top, validate,
)
from disktrees.enumeration import gen_disk_trees, separable
from disktrees.perm import comp, des, desb, iar, lmax, lmin

BIG = (5, 2, 3, 4, 1, 9, 11, 10, 6, 8, 7)
BIG_TREE = "(((. - ((. + .) + .)) - .) + ((. + (. - .)) - (. + (. - .))))"
BIG_PHI_TREE = "((((. + (. - (. + (. - .)))) + (. - .)) - ((. + .) + .)) - .)"
BIG_IMAGE = (5, 9, 6, 8, 7, 11, 10, 2, 3, 4, 1)


def triple(p):
    return (desb(p), lmax(p), lmin(p))


# --- eta -------------------------------------------------------------------

def test_eta_examples():
    assert eta((1,)) is None
    assert eta((2, 1)) == parse_tree("(. - .)")
    assert format_tree(eta(BIG)) == BIG_TREE


def test_eta_rejects_non_separable():
    for p in ((2, 4, 1, 3), (3, 1, 4, 2), (2, 5, 3, 1, 4)):
        with pytest.raises(NotSeparableError):
            eta(p)
    with pytest.raises(ValueError):
        eta((1, 3))  # not a permutation at all


def test_eta_inv_examples():
    assert eta_inv(None) == (1,)
    assert eta_inv(parse_tree(BIG_TREE)) == BIG


def test_eta_roundtrips_small():
    for n in range(1, 7):
        for p in separable(n):
            assert eta_inv(eta(p)) == p
        for t in gen_disk_trees(n - 1):
            assert eta(eta_inv(t)) == t


def test_descents_are_inorder_minus_nodes():
    for n in range(1, 7):
        for p in separable(n):
            minus_at = tuple(
                i for i, s in enumerate(signs_in_order(eta(p), "inorder"), 1)
                if s == MINUS)
            assert des(p) == minus_at


def test_initial_runs_transport_through_eta():
    from disktrees.perm import iar as perm_iar, idr as perm_idr
    for n in range(1, 7):
        for p in separable(n):
            t = eta(p)
            assert perm_iar(p) - 1 == iop(t)
            assert perm_idr(p) - 1 == iom(t)
            assert comp(p) - 1 == top(t)


def test_riop_is_iop_after_reverse_complement():
    # the device behind riop ~ iop: reading a tree backwards matches the
    # reverse-complement of its permutation
    from disktrees.disktree import riop
    from disktrees.perm import reverse_complement
    for m in range(7):
        for t in gen_disk_trees(m):
            assert riop(t) == iop(eta(reverse_complement(eta_inv(t))))


# --- the left-edge surgery --------------------------------------------------

def test_l_op_minimal_case():
    assert l_op(parse_tree("((. - .) + .)"), 1) == parse_tree("((. + .) - .)")


def test_l_op_rejects_bad_sites():
    with pytest.raises(ValueError):
        l_op(parse_tree("((. - .) + .)"), 2)  # plus node
    with pytest.raises(ValueError):
        l_op(parse_tree("(. - .)"), 1)  # no plus node above
    with pytest.raises(ValueError):
        l_op(parse_tree("((. + .) - .)"), 2)  # minus root has no parent
    with pytest.raises(ValueError):
        l_inv(parse_tree("((. - .) + .)"), 1)  # no plus left child


def test_l_surgery_roundtrip_and_triple_exhaustive():
    for m in range(1, 7):
        for t in gen_disk_trees(m):
            base = triple(eta_inv(t))
            minus_refs = [i for i, s in enumerate(signs_in_order(t, "inorder"), 1)
                          if s == MINUS]
            for ref in minus_refs:
                try:
                    image, new_ref = l_op_tracked(t, ref)
                except ValueError:
                    continue
                assert validate(image)
                assert triple(eta_inv(image)) == base
                back, back_ref = l_inv_tracked(image, new_ref)
                assert back == t and back_ref == ref


# --- phi ---------------------------------------------------------------------

def test_phi_worked_example():
    t = parse_tree(BIG_TREE)
    u = phi(t)
    assert format_tree(u) == BIG_PHI_TREE
    assert eta_inv(u) == BIG_IMAGE
    assert (top(t), iop(t)) == (1, 0)
    assert (top(u), iop(u)) == (0, 1)
    assert triple(eta_inv(u)) == triple(BIG)
    assert phi_inv(u) == t


def test_phi_preconditions():
    with pytest.raises(ValueError):
        phi(parse_tree("(. + .)"))  # all-plus spine
    with pytest.raises(ValueError):
        phi(parse_tree("((. + .) - .)"))  # top = 0
    with pytest.raises(ValueError):
        phi_inv(parse_tree("((. - .) + .)"))  # iop = 0
    with pytest.raises(ValueError):
        phi_inv(parse_tree("(. + .)"))  # all-plus spine


def test_phi_roundtrip_and_classes_exhaustive():
    for m in range(1, 7):
        for t in gen_disk_trees(m):
            if MINUS not in spine_signs(t):
                continue
            k, l = top(t), iop(t)
            if k >= 1:
                u = phi(t)
                assert (top(u), iop(u)) == (k - 1, l + 1)
                assert triple(eta_inv(u)) == triple(eta_inv(t))
                assert phi_inv(u) == t
            if l >= 1:
                w = phi_inv(t)
                assert (top(w), iop(w)) == (k + 1, l - 1)
                assert phi(w) == t


# --- the involution on separable permutations -------------------------------

def test_big_phi_worked_example():
    assert big_phi((2, 4, 5, 9, 6, 8, 7, 11, 10, 3, 1)) == \
        (2, 1, 4, 3, 5, 9, 11, 10, 6, 8, 7)
    assert big_phi(BIG) == BIG_IMAGE


def test_big_phi_fixes_identity():
    for n in range(1, 8):
        ident = tuple(range(1, n + 1))
        assert big_phi(ident) == ident


def test_big_phi_contract_exhaustive():
    for n in range(1, 7):
        for p in separable(n):
            q = big_phi(p)
            assert (lmax(q), lmin(q), desb(q)) == (lmax(p), lmin(p), desb(p))
            assert (comp(q), iar(q)) == (iar(p), comp(p))
            assert big_phi(q) == p


def test_big_phi_rejects_non_separable():
    with pytest.raises(NotSeparableError):
        big_phi((2, 4, 1, 3))


# --- theta -------------------------------------------------------------------

def test_theta_examples():
    assert theta(None) is None
    assert theta(parse_tree("(. + .)")) == parse_tree("(. + .)")
    assert theta(parse_tree("(. + (. - .))")) == parse_tree("(. + (. - .))")


def test_theta_swap_and_inverse_exhaustive():
    for m in range(8):
        for t in gen_disk_trees(m):
            u = theta(t)
            assert validate(u)
            assert (pop(t), rpop(t)) == (rpop(u), pop(u))
            assert theta_inv(u) == t
            assert theta(theta(t)) == t  # exploratory: also an involution


# --- psi ---------------------------------------------------------------------

def test_psi_worked_example():
    t = parse_tree("((. - .) + ((. + .) - .))")
    u = psi(t)
    assert format_tree(u) == "(((. - .) - (. + .)) - .)"
    assert (top(t), iom(t)) == (1, 1)
    assert (top(u), iom(u)) == (0, 2)
    assert psi_inv(u) == t


def test_psi_preconditions():
    with pytest.raises(ValueError):
        psi(parse_tree("(. - .)"))  # top = 0
    with pytest.raises(ValueError):
        psi_inv(parse_tree("(. + .)"))  # iom = 0


def test_psi_roundtrip_and_classes_exhaustive():
    for m in range(1, 7):
        for t in gen_disk_trees(m):
            k, l = top(t), iom(t)
            if k >= 1:
                u = psi(t)
                assert validate(u)
                assert (top(u), iom(u)) == (k - 1, l + 1)
                assert psi_inv(u) == t
            if l >= 1:
                w = psi_inv(t)
                assert (top(w), iom(w)) == (k + 1, l - 1)
                assert psi(w) == t


def test_map_registry_names():
    assert set(MAPS) == {"eta", "eta-inv", "l", "l-inv", "phi", "phi-inv",
                         "Phi", "theta", "psi", "psi-inv"}
