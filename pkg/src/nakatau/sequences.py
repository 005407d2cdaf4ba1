"""Ordered tau-rigid pairs, TF-orders and the bijection to signed exceptional sequences."""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from math import factorial
from typing import Sequence

from .algebra import Algebra, IndModule, Pair, SignedInd, as_signed, is_in_gen, is_tau_rigid_pair
from .errors import (
    DifferentModules,
    NotAValidSequence,
    NotInImage,
    NotRelativeProjective,
    NotRigid,
    NotTFOrders,
    OutOfRange,
)
from .reduction import e_map, e_map_inverse, jasso


def _signed_tuple(entries) -> tuple:
    return tuple(as_signed(e) for e in entries)


def _check_rigid(A: Algebra, entries: tuple) -> None:
    pair = Pair.from_signed(entries)
    if len(pair) != len(entries) or not is_tau_rigid_pair(A, pair):
        raise NotRigid(f"not a basic tau-rigid pair: {list(entries)}")


def is_tf_order(A: Algebra, entries: Sequence) -> bool:
    """Each entry is outside Gen of the entries after it."""
    entries = _signed_tuple(entries)
    if any(e.shift for e in entries):
        return False
    mods = [e.module for e in entries]
    return all(not is_in_gen(m, mods[i + 1:]) for i, m in enumerate(mods))


def tf_count(mods) -> int:
    """Multinomial ``|M|! / prod a_i!`` over projective-cover multiplicities."""
    tops = {}
    for m in mods:
        tops[(m.comp, m.top)] = tops.get((m.comp, m.top), 0) + 1
    out = factorial(len(mods))
    for a in tops.values():
        out //= factorial(a)
    return out


def tf_orders(A: Algebra, mods) -> list:
    """All TF-orders of a tau-rigid module, in lexicographic order.

    Summands with a common top must appear with strictly decreasing length;
    summands with different tops never generate each other.
    """
    mods = sorted(set(as_signed(m).module for m in mods))
    if not is_tau_rigid_pair(A, Pair(frozenset(mods))):
        raise NotRigid(f"not tau-rigid: {mods}")
    groups = {}
    for m in mods:
        groups.setdefault((m.comp, m.top), []).append(m)
    for g in groups.values():
        g.sort(key=lambda m: -m.length)
    keys = sorted(groups)
    counts = {k: len(groups[k]) for k in keys}
    out = []

    def rec(prefix, used):
        if len(prefix) == len(mods):
            out.append(tuple(SignedInd(m, 0) for m in prefix))
            return
        for k in keys:
            if used[k] < counts[k]:
                used[k] += 1
                rec(prefix + [groups[k][used[k] - 1]], used)
                used[k] -= 1

    rec([], {k: 0 for k in keys})
    return sorted(out)


# --- Psi --------------------------------------------------------------------


def psi(A: Algebra, entries: Sequence) -> tuple:
    """``(E_{T>1}(T_1), E_{T>2}(T_2), ..., T_t)``."""
    entries = _signed_tuple(entries)
    _check_rigid(A, entries)
    return tuple(e_map(A, Pair.from_signed(entries[i + 1:]), x) for i, x in enumerate(entries))


def psi_recursive(A: Algebra, entries: Sequence) -> tuple:
    """Same map computed by reducing at the last entry and recursing in its model."""
    entries = _signed_tuple(entries)
    _check_rigid(A, entries)
    return _psi_rec(A, entries)


def _psi_rec(A: Algebra, entries: tuple) -> tuple:
    if len(entries) <= 1:
        return entries
    last = entries[-1]
    S = Pair.from_signed([last])
    W = jasso(A, S)
    reduced = tuple(W.to_gamma_signed(e_map(A, S, x)) for x in entries[:-1])
    inner = _psi_rec(W.gamma, reduced)
    return tuple(W.from_gamma_signed(y) for y in inner) + (last,)


def psi_inverse(A: Algebra, seq: Sequence) -> tuple:
    seq = _signed_tuple(seq)
    return _psi_inv(A, seq)


@lru_cache(maxsize=None)
def _psi_inv(A: Algebra, seq: tuple) -> tuple:
    if not seq:
        return ()
    last = seq[-1]
    if not A.contains(last.module) or (last.shift and not A.is_projective(last.module)):
        raise NotAValidSequence(f"{last!r} is not a signed object")
    if not is_tau_rigid_pair(A, Pair.from_signed([last])):
        raise NotAValidSequence(f"{last!r} is not tau-rigid")
    S = Pair.from_signed([last])
    W = jasso(A, S)
    reduced = []
    for y in seq[:-1]:
        if not W.contains(y.module):
            raise NotAValidSequence(f"{y!r} does not lie in the perpendicular category of {last!r}")
        reduced.append(W.to_gamma_signed(y))
    inner = _psi_inv(W.gamma, tuple(reduced))
    try:
        lifted = tuple(e_map_inverse(A, S, W.from_gamma_signed(x)) for x in inner)
    except NotInImage as exc:
        raise NotAValidSequence(str(exc)) from None
    return lifted + (last,)


def is_exceptional_sequence(A: Algebra, seq: Sequence) -> bool:
    try:
        psi_inverse(A, seq)
    except NotAValidSequence:
        return False
    return True


# --- sign flips and transpositions -----------------------------------------


def sbar(A: Algebra, entries: Sequence, i: int) -> tuple:
    """Flip the sign of the ``i``-th entry (1-based) of ``Psi`` and pull back."""
    entries = _signed_tuple(entries)
    if not 1 <= i <= len(entries):
        raise OutOfRange(f"position {i} outside 1..{len(entries)}")
    seq = list(psi(A, entries))
    y = seq[i - 1]
    if not y.shift:
        W = jasso(A, Pair.from_signed(entries[i:]))
        if not W.is_relative_projective(y.module):
            raise NotRelativeProjective(f"entry {i} of Psi is not relatively projective")
    seq[i - 1] = SignedInd(y.module, 1 - y.shift)
    return psi_inverse(A, seq)


def pibar(entries: Sequence, i: int) -> tuple:
    entries = tuple(entries)
    if not 1 <= i < len(entries):
        raise OutOfRange(f"position {i} outside 1..{len(entries) - 1}")
    out = list(entries)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def agreement(target: Sequence, current: Sequence) -> int:
    """Length of the common prefix (the agreeableness score)."""
    k = 0
    for a, b in zip(target, current):
        if a != b:
            break
        k += 1
    return k


def _check_orders(A: Algebra, target, start) -> None:
    if sorted(target) != sorted(start) or len(set(target)) != len(target):
        raise DifferentModules("orders are not on the same module")
    if not (is_tf_order(A, target) and is_tf_order(A, start)):
        raise NotTFOrders("both inputs must be TF-orders")


def tf_transposition_path(A: Algebra, target: Sequence, start: Sequence) -> list:
    """Adjacent transpositions taking ``start`` to ``target`` through TF-orders.

    Greedily raises the agreement with ``target``: the first disagreeing
    entry of ``target`` is bubbled leftwards into place.
    """
    target, cur = _signed_tuple(target), _signed_tuple(start)
    _check_orders(A, target, cur)
    path = []
    while cur != target:
        g = agreement(target, cur)
        p = cur.index(target[g])
        for j in range(p, g, -1):
            cur = pibar(cur, j)
            path.append(j)
    return path


def tf_transposition_path_bfs(A: Algebra, target: Sequence, start: Sequence) -> list:
    """Shortest transposition path through TF-orders by breadth-first search."""
    target, start = _signed_tuple(target), _signed_tuple(start)
    _check_orders(A, target, start)
    prev = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == target:
            break
        for j in range(1, len(cur)):
            nxt = pibar(cur, j)
            if nxt not in prev and is_tf_order(A, nxt):
                prev[nxt] = (cur, j)
                queue.append(nxt)
    path, cur = [], target
    while prev[cur] is not None:
        cur, j = prev[cur]
        path.append(j)
    return path[::-1]


def apply_path(entries: Sequence, path: Sequence[int]) -> list:
    """Every intermediate order along ``path``, starting with ``entries``."""
    out = [tuple(entries)]
    for j in path:
        out.append(pibar(out[-1], j))
    return out
