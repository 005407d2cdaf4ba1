import pytest
from conftest import M, S, un

from nakatau.algebra import validate_algebra
from nakatau.errors import NotCaseTF4, NotTFOrdered, OutOfRange
from nakatau.mutation import (
    TF1A,
    TF1B,
    TF2A,
    TF2B,
    TF3,
    TF4,
    braid_check,
    braid_sides,
    bridge_tf_orders,
    classify_pair,
    irregular_oracle,
    is_transitive,
    mutate_at,
    mutate_pair,
    mutation_case,
    mutation_graph,
    orbit,
    pair_orbit_cases,
    widehat,
)
from nakatau.sequences import tf_orders
from nakatau.tilting import tau_tilting_modules


def seq(*mods):
    return tuple(un(m) for m in mods)


def test_classification_examples(a4):
    assert classify_pair(a4, M(0, 3), M(3, 3)) == TF1B
    assert classify_pair(a4, M(1, 2), S(0)) == TF4
    assert classify_pair(a4, S(0), M(1, 2)) == TF3
    with pytest.raises(NotTFOrdered):
        classify_pair(a4, S(1), M(1, 2))


def test_pair_steps_three_cases(a4):
    P0, P3 = M(0, 3), M(3, 3)
    assert mutate_pair(a4, P0, P3) == (seq(P0, S(0)), TF1B)
    assert mutate_pair(a4, P0, S(0)) == (seq(P3, P0), TF2B)
    assert mutate_pair(a4, P3, P0) == (seq(P0, P3), TF1A)


def test_pair_steps_remaining_cases(a4):
    B = M(1, 2)
    assert mutate_pair(a4, B, S(0)) == (seq(B, S(1)), TF4)
    assert mutate_pair(a4, B, S(1)) == (seq(S(0), B), TF2A)
    assert mutate_pair(a4, S(0), B) == (seq(B, S(0)), TF3)


def test_closed_and_generic_routes_agree(a4, d3, e5, n2):
    for A in (a4, d3, e5, n2):
        for m in A.indecomposables():
            for n in A.indecomposables():
                try:
                    case = classify_pair(A, m, n)
                except NotTFOrdered:
                    continue
                if case != TF4:
                    assert mutate_pair(A, m, n, "generic") == mutate_pair(A, m, n)


def test_widehat_examples(a4, d3):
    assert widehat(a4, M(1, 2), S(0)) == {M(1, 2), S(1), M(1, 3), M(2, 3)}
    # the formula and the torsion-class oracle both give P(2) here
    assert widehat(d3, M(2, 2), S(1)) == {M(2, 2), S(2), M(2, 3)}
    assert irregular_oracle(d3, M(2, 2), S(1))[2] == {M(2, 2), S(2), M(2, 3)}
    with pytest.raises(NotCaseTF4):
        widehat(a4, S(0), M(1, 2))


def test_irregular_oracle_example(a4):
    result, F, ext = irregular_oracle(a4, M(1, 2), S(0))
    assert result == seq(M(1, 2), S(1))
    assert ext == widehat(a4, M(1, 2), S(0))
    assert M(1, 2) in F and S(0) not in F


def test_mutate_at_examples(a3):
    P0, P1, P2 = M(0, 2), M(1, 2), M(2, 2)
    assert mutate_at(a3, seq(P1, P0, S(0)), 2) == seq(P1, P2, P0)
    assert mutate_at(a3, seq(P2, P1, P0), 2) == seq(P2, P1, S(1))
    assert mutate_at(a3, seq(P0, S(0)), 1) == mutate_pair(a3, P0, S(0))[0]
    with pytest.raises(OutOfRange):
        mutate_at(a3, seq(P0, S(0)), 2)
    with pytest.raises(NotTFOrdered):
        mutate_at(a3, seq(S(0), P0), 1)


def test_mutation_case_inside_sequence(a3):
    P0, P1 = M(0, 2), M(1, 2)
    assert mutation_case(a3, seq(P1, P0, S(0)), 2) == TF2B


def test_orbits(a4, d3):
    assert len(orbit(a4, seq(M(0, 3), M(3, 3)), 1)) == 3
    assert pair_orbit_cases(d3, seq(M(2, 3), M(0, 2))) == [TF1B, TF2B, TF1B, TF2B]


def test_mutation_graph_counts(a3, a4):
    G = mutation_graph(a3).graph
    assert G.number_of_nodes() == 15
    assert all(d == 2 for _, d in G.out_degree())
    one = validate_algebra([{"kind": "cyclic", "kupisch": [2]}])
    G1 = mutation_graph(one).graph
    assert G1.number_of_nodes() == 1 and G1.number_of_edges() == 0
    expected = sum(len(tf_orders(a4, T.modules)) for T in tau_tilting_modules(a4))
    assert mutation_graph(a4).graph.number_of_nodes() == expected


def test_transitivity_instances(a3, a4):
    assert is_transitive(a3) and is_transitive(a4)
    for n in range(1, 5):
        A = validate_algebra([{"kind": "linear", "kupisch": list(range(1, n + 1))}])
        assert is_transitive(A)


def test_braid_failure(a3):
    T = seq(M(2, 2), M(1, 2), S(1))
    assert not braid_check(a3, T, 1)
    assert braid_sides(a3, T, 1) == (seq(M(0, 2), M(1, 2), M(2, 2)), seq(M(0, 2), M(2, 2), S(2)))
    with pytest.raises(OutOfRange):
        braid_sides(a3, seq(M(2, 2), M(1, 2)), 1)


def test_bridge_example(a3):
    T, T2, i = bridge_tf_orders(a3, [M(1, 2), M(2, 2)], M(0, 2), S(1))
    assert (T, T2, i) == (seq(M(2, 2), M(1, 2), M(0, 2)), seq(M(2, 2), M(1, 2), S(1)), 2)
    assert mutate_at(a3, T, i) == T2
