"""Mutation of TF-ordered tau-rigid modules.

Pairs are mutated by a six-way case split with closed forms; longer
sequences reduce to the pair case through tau-perpendicular categories.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import networkx as nx

from .algebra import (
    Algebra,
    IndModule,
    Pair,
    SignedInd,
    as_signed,
    hom_dim,
    is_in_gen,
    is_tau_rigid_pair,
    radical_power,
    top_quotient,
    torsion_free_part,
)
from .errors import NoBridge, NotCaseTF4, NotTFOrdered, OutOfRange
from .reduction import e_map, e_map_inverse, jasso, v_map
from .sequences import is_tf_order, tf_orders
from .tilting import bongartz_single, tau_tilting_modules

TF1A, TF1B, TF2A, TF2B, TF3, TF4 = "TF-1a", "TF-1b", "TF-2a", "TF-2b", "TF-3", "TF-4"
CASES = (TF1A, TF1B, TF2A, TF2B, TF3, TF4)


def _module(x) -> IndModule:
    s = as_signed(x)
    if s.shift:
        raise NotTFOrdered(f"{s!r} is shifted")
    return s.module


def _check_pair(A: Algebra, b: IndModule, c: IndModule) -> None:
    if b == c or not is_tau_rigid_pair(A, Pair(frozenset({b, c}))) or is_in_gen(b, [c]):
        raise NotTFOrdered(f"({b!r}, {c!r}) is not a TF-ordered tau-rigid pair")


def classify_pair(A: Algebra, b, c) -> str:
    b, c = _module(b), _module(c)
    _check_pair(A, b, c)
    if A.is_projective(c):
        return TF1A if hom_dim(A, c, b) == 0 else TF1B
    if is_in_gen(c, [b]):
        return TF2A if not A.is_projective(b) else TF2B
    if c in bongartz_single(A, b):
        return TF4
    return TF3


def mutate_pair_closed(A: Algebra, b: IndModule, c: IndModule):
    case = classify_pair(A, b, c)
    if case in (TF1A, TF3):
        return (c, b), case
    if case == TF1B:
        return (b, torsion_free_part(A, [c], b)), case
    if case == TF2A:
        return (radical_power(A, b, c.length), b), case
    if case == TF2B:
        r = radical_power(A, b, c.length)
        return (A.projective(r.comp, r.top), b), case
    return (b, top_quotient(b, b.length - c.length)), case


def mutate_pair_generic(A: Algebra, b: IndModule, c: IndModule):
    """Regular mutation through the E- and V-maps; TF-4 has no generic form."""
    case = classify_pair(A, b, c)
    if case == TF4:
        raise NotTFOrdered("irregular pair: use the closed form or the torsion-class oracle")
    if A.is_projective(c):
        e = e_map(A, [c], b).module
        v = v_map(A, [e], SignedInd(c, 1))
        return (v.module, e), case
    if is_in_gen(c, [b]):
        return (v_map(A, [b], c).module, b), case
    return (c, b), case


def mutate_pair(A: Algebra, b, c, route: str = "closed-form"):
    """``(result, case)`` for the left mutation of the TF-ordered pair ``(b, c)``."""
    b, c = _module(b), _module(c)
    if route == "generic":
        (x, y), case = mutate_pair_generic(A, b, c)
    else:
        (x, y), case = mutate_pair_closed(A, b, c)
    return (SignedInd(x, 0), SignedInd(y, 0)), case


# --- irregular mutation -----------------------------------------------------


def widehat(A: Algebra, b, c) -> frozenset:
    """The tau-tilting module attached to a TF-4 pair ``(b, c = rad^i b)``."""
    b, c = _module(b), _module(c)
    if classify_pair(A, b, c) != TF4:
        raise NotCaseTF4(f"({b!r}, {c!r}) is not in case TF-4")
    n = A.n(b.comp)
    i = b.length - c.length
    out = {b, top_quotient(b, i)}
    out |= {IndModule(b.comp, (b.top - j) % n, i - j) for j in range(1, i)}
    out |= {radical_power(A, b, j) for j in range(i + 1, b.length)}
    out |= {A.projective(b.comp, (b.top + j) % n) for j in range(n - b.length)}
    out |= {p for p in A.projectives() if p.comp != b.comp}
    return frozenset(out)


def irregular_oracle(A: Algebra, b, c):
    """Mutation of a TF-4 pair via torsion closure and Ext-projectives.

    Returns ``(result, torsion_class, ext_projectives)``.
    """
    from .oracle import ext_projectives, filt_gen_closure, quotient_closure

    b, c = _module(b), _module(c)
    W = jasso(A, [b, c])
    F = filt_gen_closure(A, quotient_closure(A, W.objects()))
    split, nonsplit = ext_projectives(A, F)
    G = quotient_closure(A, nonsplit)
    s2, ns2 = ext_projectives(A, G)
    xs = [x for x in s2 if x in nonsplit]
    if len(xs) != 1:
        raise ArithmeticError(f"irregular oracle found {xs}")
    (x,) = xs
    ys = sorted(nonsplit - {x})
    if len(ys) != 1:
        raise ArithmeticError(f"irregular oracle found {ys}")
    return (SignedInd(x, 0), SignedInd(ys[0], 0)), F, split | nonsplit


# --- mutation of longer sequences ------------------------------------------


def mutate_at(A: Algebra, entries: Sequence, i: int) -> tuple:
    """Mutate the TF-ordered module at positions ``i, i+1`` (1-based)."""
    entries = tuple(as_signed(e) for e in entries)
    t = len(entries)
    if not 1 <= i <= t - 1:
        raise OutOfRange(f"position {i} outside 1..{t - 1}")
    if not is_tf_order(A, entries):
        raise NotTFOrdered("input is not TF-ordered")
    return _mutate_at(A, entries, i)


@lru_cache(maxsize=None)
def _mutate_at(A: Algebra, entries: tuple, i: int) -> tuple:
    t = len(entries)
    if i == t - 1:
        old = Pair.from_signed(entries[-2:])
        new_pair, _ = mutate_pair(A, entries[-2], entries[-1])
        new = Pair.from_signed(new_pair)
        prefix = tuple(e_map_inverse(A, new, e_map(A, old, x)) for x in entries[:-2])
        return prefix + new_pair
    tail = entries[i + 1:]
    W = jasso(A, Pair.from_signed(tail))
    reduced = tuple(W.to_gamma_signed(e_map(A, Pair.from_signed(tail), x)) for x in entries[:i + 1])
    inner = _mutate_at(W.gamma, reduced, i)
    lifted = tuple(e_map_inverse(A, Pair.from_signed(tail), W.from_gamma_signed(y)) for y in inner)
    return lifted + tail


def mutation_case(A: Algebra, entries: Sequence, i: int) -> str:
    """Case label of ``mutate_at(entries, i)``: the pair case after reducing by the tail."""
    entries = tuple(as_signed(e) for e in entries)
    if not 1 <= i <= len(entries) - 1:
        raise OutOfRange(f"position {i} outside 1..{len(entries) - 1}")
    tail = Pair.from_signed(entries[i + 1:])
    if not tail:
        return classify_pair(A, entries[i - 1], entries[i])
    W = jasso(A, tail)
    b, c = (W.to_gamma_signed(e_map(A, tail, x)) for x in entries[i - 1:i + 1])
    return classify_pair(W.gamma, b, c)


def orbit(A: Algebra, entries: Sequence, i: int) -> list:
    """The cycle of ``mutate_at(-, i)`` through ``entries``."""
    start = tuple(as_signed(e) for e in entries)
    out = [start]
    cur = mutate_at(A, start, i)
    while cur != start:
        out.append(cur)
        cur = mutate_at(A, cur, i)
    return out


def pair_orbit_cases(A: Algebra, entries: Sequence) -> list:
    """Case labels along the orbit of a pair."""
    return [classify_pair(A, b, c) for b, c in orbit(A, entries, 1)]


@dataclass
class MutationGraph:
    graph: nx.DiGraph

    @property
    def nodes(self) -> list:
        return list(self.graph.nodes)

    def is_strongly_connected(self) -> bool:
        return self.graph.number_of_nodes() > 0 and nx.is_strongly_connected(self.graph)


@lru_cache(maxsize=None)
def mutation_graph(A: Algebra) -> MutationGraph:
    G = nx.DiGraph()
    for T in tau_tilting_modules(A):
        for order in tf_orders(A, T.modules):
            G.add_node(order)
    for node in list(G.nodes):
        for i in range(1, len(node)):
            G.add_edge(node, _mutate_at(A, node, i), position=i)
    return MutationGraph(G)


def is_transitive(A: Algebra) -> bool:
    return mutation_graph(A).is_strongly_connected()


def braid_sides(A: Algebra, entries: Sequence, i: int):
    entries = tuple(as_signed(e) for e in entries)
    if not 1 <= i or i + 1 > len(entries) - 1:
        raise OutOfRange(f"braid relation at {i} needs positions {i}, {i + 1} <= {len(entries) - 1}")
    left = mutate_at(A, mutate_at(A, mutate_at(A, entries, i), i + 1), i)
    right = mutate_at(A, mutate_at(A, mutate_at(A, entries, i + 1), i), i + 1)
    return left, right


def braid_check(A: Algebra, entries: Sequence, i: int) -> bool:
    left, right = braid_sides(A, entries, i)
    return left == right


def bridge_tf_orders(A: Algebra, common, x, y):
    """TF-orders of ``U + x`` and ``U + y`` differing in one slot and joined by one mutation.

    Returns ``(T, T', i)`` with ``mutate_at(T, i) == T'``.
    """
    common = [as_signed(u).module for u in common]
    x, y = _module(x), _module(y)
    targets = set(tf_orders(A, common + [y]))
    # prefer orders that place x late, so the mutation happens near the end
    candidates = sorted(tf_orders(A, common + [x]), key=lambda T: (-T.index(SignedInd(x, 0)), T))
    for T in candidates:
        for i in range(1, len(T)):
            T2 = _mutate_at(A, T, i)
            if T2 in targets and sum(1 for a, b in zip(T, T2) if a != b) == 1:
                return T, T2, i
    raise NoBridge(f"no bridge between {x!r} and {y!r}")
