from itertools import permutations

import pytest
from conftest import M, S, sh, un

from nakatau.algebra import Pair
from nakatau.errors import DifferentModules, NotAValidSequence, NotRelativeProjective, NotTFOrders, OutOfRange
from nakatau.reduction import e_map, jasso
from nakatau.sequences import (
    apply_path,
    is_exceptional_sequence,
    is_tf_order,
    pibar,
    psi,
    psi_inverse,
    psi_recursive,
    sbar,
    tf_count,
    tf_orders,
    tf_transposition_path,
    tf_transposition_path_bfs,
)
from nakatau.tilting import tau_rigid_pairs, tau_tilting_modules


def seq(*mods):
    return tuple(un(m) if not hasattr(m, "shift") else m for m in mods)


def test_tf_order_examples(a3):
    P0, P1 = M(0, 2), M(1, 2)
    assert is_tf_order(a3, [P0, S(0)])
    assert not is_tf_order(a3, [S(0), P0])
    assert is_tf_order(a3, [S(2)])
    assert is_tf_order(a3, [P1, P0, S(0)])
    assert not is_tf_order(a3, [un(P0), sh(P1)])


def test_tf_order_enumeration(a3, a4):
    orders = tf_orders(a3, [S(0), M(0, 2), M(1, 2)])
    assert len(orders) == 3 == tf_count([S(0), M(0, 2), M(1, 2)])
    assert len(tf_orders(a4, a4.projectives())) == 24
    assert tf_orders(a4, [M(0, 3), S(0)]) == [seq(M(0, 3), S(0))]


def test_tf_orders_match_brute_force(d3, e5):
    for A in (d3, e5):
        for T in tau_rigid_pairs(A):
            if T.shifted or not T.modules:
                continue
            brute = sorted(p for p in permutations(T.summands()) if is_tf_order(A, p))
            assert tf_orders(A, T.modules) == brute


def test_psi_examples(a3, a4):
    assert psi(a4, [M(0, 3), M(3, 3)]) == seq(S(0), M(3, 3))
    assert psi(a3, [M(1, 2), M(0, 2), S(0)]) == seq(S(1), M(0, 2), S(0))
    assert psi(a4, [M(1, 2)]) == seq(M(1, 2))


def test_psi_inverse_examples(a4):
    assert psi_inverse(a4, [S(0), M(3, 3)]) == seq(M(0, 3), M(3, 3))
    assert psi_inverse(a4, [M(1, 2)]) == seq(M(1, 2))
    with pytest.raises(NotAValidSequence):
        psi_inverse(a4, [S(3), M(3, 3)])
    assert not is_exceptional_sequence(a4, [S(3), M(3, 3)])


def test_psi_routes_agree_and_invert(a4, d3):
    for A in (a4, d3):
        for T in tau_rigid_pairs(A):
            for order in permutations(T.summands()):
                image = psi(A, order)
                assert psi_recursive(A, order) == image
                assert psi_inverse(A, image) == order


def test_sign_flips(a4):
    T = [M(0, 3), M(3, 3)]
    assert sbar(a4, T, 2) == seq(S(0), sh(M(3, 3)))
    assert sbar(a4, T, 1) == seq(sh(M(0, 3)), M(3, 3))
    for i in (1, 2):
        assert sbar(a4, sbar(a4, T, i), i) == seq(*T)
    with pytest.raises(OutOfRange):
        sbar(a4, T, 3)


def test_sign_flip_needs_relative_projective(a4):
    # the first Psi-entry is not relatively projective in J(S(0))
    T = [M(1, 2), S(0)]
    with pytest.raises(NotRelativeProjective):
        sbar(a4, T, 1)


def test_pibar():
    assert pibar(["a", "b"], 1) == ("b", "a")
    assert pibar(pibar(["a", "b", "c"], 2), 2) == ("a", "b", "c")
    with pytest.raises(OutOfRange):
        pibar(["a", "b"], 2)


def test_pibar_can_leave_tf_orders(a3):
    T = seq(M(1, 2), M(0, 2), S(0))
    assert not is_tf_order(a3, pibar(T, 2))


def test_transposition_paths(a3, a4, d3):
    start, target = seq(M(1, 2), M(0, 2), S(0)), seq(M(0, 2), S(0), M(1, 2))
    path = tf_transposition_path(a3, target, start)
    assert len(path) <= 3
    assert apply_path(start, path)[-1] == target
    assert tf_transposition_path(a4, seq(M(0, 3), S(0)), seq(M(0, 3), S(0))) == []
    for A in (a3, d3):
        for T in tau_tilting_modules(A):
            orders = tf_orders(A, T.modules)
            for a in orders:
                for b in orders:
                    path = tf_transposition_path(A, a, b)
                    steps = apply_path(b, path)
                    assert steps[-1] == a and all(is_tf_order(A, s) for s in steps)
                    assert len(tf_transposition_path_bfs(A, a, b)) <= len(path)


def test_transposition_path_errors(a3):
    with pytest.raises(DifferentModules):
        tf_transposition_path(a3, seq(M(0, 2)), seq(M(1, 2)))
    with pytest.raises(NotTFOrders):
        tf_transposition_path(a3, seq(S(0), M(0, 2)), seq(M(0, 2), S(0)))


def test_reduced_prefix_stays_tf(a4, d3):
    for A in (a4, d3):
        for T in tau_tilting_modules(A):
            for order in tf_orders(A, T.modules):
                for i in range(1, len(order) - 1):
                    tail = Pair.from_signed(order[i:])
                    W = jasso(A, tail)
                    prefix = [W.to_gamma_signed(e_map(A, tail, x)) for x in order[:i]]
                    assert is_tf_order(W.gamma, prefix)
