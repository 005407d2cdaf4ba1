"""Families of small Nakayama algebras used by exhaustive checks."""

from __future__ import annotations

from itertools import product

from .algebra import CYCLIC, LINEAR, Algebra, Component, named_algebra, NAMED


def linear_kupisch(n: int) -> list:
    out = []

    def rec(prefix):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        i = len(prefix)
        for k in range(2, min(prefix[-1] + 1, i + 1) + 1):
            rec(prefix + [k])

    rec([1])
    return out


def cyclic_kupisch(n: int, max_entry: int) -> list:
    out = []
    for kup in product(range(2, max_entry + 1), repeat=n):
        if all(kup[i] <= kup[i - 1] + 1 for i in range(n)):
            out.append(kup)
    return out


def _canonical_rotation(kup: tuple) -> tuple:
    return min(kup[i:] + kup[:i] for i in range(len(kup)))


def connected_algebras(max_rank: int = 4, slack: int = 2, up_to_rotation: bool = False) -> list:
    """Connected algebras of rank at most ``max_rank`` with Loewy lengths at most rank + ``slack``.

    Rotating a cyclic Kupisch series relabels vertices and gives an
    isomorphic algebra; ``up_to_rotation`` keeps one series per class.
    """
    out = []
    for n in range(1, max_rank + 1):
        for kup in linear_kupisch(n):
            out.append(Algebra([Component(LINEAR, kup)]))
        seen = set()
        for kup in cyclic_kupisch(n, n + slack):
            key = _canonical_rotation(kup) if up_to_rotation else kup
            if key in seen:
                continue
            seen.add(key)
            out.append(Algebra([Component(CYCLIC, key)]))
    return out


def product_algebras(max_rank: int = 4, slack: int = 2) -> list:
    """Two-component products of connected sweep algebras, in both factor orders."""
    conn = connected_algebras(max_rank - 1, slack)
    return [
        Algebra(A.components + B.components)
        for A, B in product(conn, repeat=2)
        if A.rank + B.rank <= max_rank
    ]


def sweep_algebras(max_rank: int = 4, slack: int = 2) -> list:
    return connected_algebras(max_rank, slack) + product_algebras(max_rank, slack)


def named_algebras() -> dict:
    return {name: named_algebra(name) for name in sorted(NAMED)}
