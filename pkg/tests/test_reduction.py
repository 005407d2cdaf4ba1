import pytest
from conftest import M, S, sh, un

from nakatau.algebra import Pair, hom_dim
from nakatau.errors import NotComposable, NotInImage
from nakatau.oracle import v_map_oracle
from nakatau.reduction import e_map, e_map_inverse, jasso, v_map, v_map_closed
from nakatau.tilting import (
    bongartz_complement,
    cobongartz_complement,
    completions_of,
    gen_set,
    tau_rigid_pairs,
    tau_tilting_pairs,
)


def test_jasso_four_point_example(e5):
    W = jasso(e5, [M(3, 2)])
    assert W.gamma.rank == 4
    assert all(c.kupisch == (1,) and not c.kind == "cyclic" for c in W.gamma.components)
    assert set(W.rel_projectives) == {S(0), S(2), S(4), M(3, 3)}


def test_jasso_of_empty_pair_is_identity(a4):
    W = jasso(a4, Pair())
    assert W.gamma == a4
    assert all(W.to_gamma(m) == m for m in a4.indecomposables())


def test_jasso_single_module(a4):
    W = jasso(a4, [M(1, 2)])
    assert W.gamma.rank == 3
    images = {e_map(a4, [M(1, 2)], x).module for x in bongartz_complement(a4, [M(1, 2)])}
    assert set(W.rel_projectives) == images


def test_reduction_preserves_hom(a4, d3):
    for A in (a4, d3):
        for T in tau_rigid_pairs(A):
            W = jasso(A, T)
            assert W.gamma.rank == A.rank - len(T)
            objs = W.objects()
            assert sorted(W.from_gamma(W.to_gamma(x)) for x in objs) == sorted(objs)
            for x in objs:
                for y in objs:
                    assert hom_dim(A, x, y) == hom_dim(W.gamma, W.to_gamma(x), W.to_gamma(y))


def test_e_map_examples(a4):
    assert e_map(a4, [M(3, 3)], M(0, 3)) == un(S(0))
    assert e_map(a4, [M(1, 2)], S(1)) == sh(S(0))
    assert e_map(a4, Pair(frozenset(), frozenset({M(2, 3)})), sh(M(3, 3))) == sh(S(3))


def test_e_map_rejects_incompatible(a4):
    with pytest.raises(NotComposable):
        e_map(a4, [M(1, 2)], M(0, 2))


def test_e_map_inverse_examples(a4, a3):
    assert e_map_inverse(a4, [M(3, 3)], S(0)) == un(M(0, 3))
    assert e_map_inverse(a3, [M(2, 2), M(0, 2)], S(1)) == un(M(1, 2))
    with pytest.raises(NotInImage):
        e_map_inverse(a4, [M(3, 3)], S(3))


def test_e_map_round_trip(a4, d3):
    from nakatau.reduction import compatible_objects

    for A in (a4, d3):
        for T in tau_rigid_pairs(A):
            for x in compatible_objects(A, T):
                assert e_map_inverse(A, T, e_map(A, T, x)) == x


def test_e_map_order_preserving_on_completions(a3, d3):
    for A in (a3, d3):
        for T in tau_rigid_pairs(A):
            W = jasso(A, T)
            comps = completions_of(A, T)
            images = []
            for C in comps:
                rest = [x for x in C.summands() if x not in T]
                images.append(Pair.from_signed(W.to_gamma_signed(e_map(A, T, x)) for x in rest))
            assert set(images) == set(tau_tilting_pairs(W.gamma))
            for C1, I1 in zip(comps, images):
                for C2, I2 in zip(comps, images):
                    assert (gen_set(A, C1) <= gen_set(A, C2)) == (gen_set(W.gamma, I1) <= gen_set(W.gamma, I2))


def test_v_map_examples(a4, d3):
    assert v_map(a4, [M(1, 2)], S(1)) == un(S(0))
    assert v_map(d3, [M(2, 3)], M(2, 2)) == un(M(0, 2))
    assert v_map(a4, [M(3, 3)], sh(M(0, 3))) == un(M(0, 3))
    assert v_map(a4, Pair(), sh(M(1, 3))) == un(M(1, 3))


def test_v_map_closed_forms_match_cone(a4, d3, n2):
    for A in (a4, d3, n2):
        for T in tau_rigid_pairs(A):
            if len(T) == A.rank:
                continue
            for x in cobongartz_complement(A, T):
                closed = v_map_closed(A, T, x)
                if closed is not None:
                    assert closed == v_map_oracle(A, T, x, 2)
                assert v_map(A, T, x) in bongartz_complement(A, T)
