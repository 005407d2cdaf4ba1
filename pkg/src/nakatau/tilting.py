"""Support tau-tilting pairs: enumeration, completions, mutation, quotient algebras."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

import networkx as nx

from .algebra import (
    Algebra,
    Component,
    IndModule,
    LINEAR,
    Pair,
    SignedInd,
    as_signed,
    compatible,
    compose_windows,
    gen_closure,
    hom_dim,
    hom_windows,
    is_in_gen,
    is_tau_rigid_pair,
    radical_power,
    rigid_objects,
    tau,
    top_quotient,
)
from .errors import NotASummand, NotLeftMutable, NotRigid


def is_tau_tilting(A: Algebra, pair) -> bool:
    pair = Pair.coerce(pair)
    return len(pair) == A.rank and is_tau_rigid_pair(A, pair)


def gen_set(A: Algebra, pair) -> frozenset:
    return gen_closure(A, frozenset(Pair.coerce(pair).modules))


# --- enumeration ------------------------------------------------------------


@lru_cache(maxsize=None)
def compatibility_graph(A: Algebra) -> nx.Graph:
    """Rigid indecomposable objects, joined when their sum is a tau-rigid pair."""
    objs = rigid_objects(A)
    G = nx.Graph()
    G.add_nodes_from(objs)
    for i, x in enumerate(objs):
        for y in objs[i + 1:]:
            if compatible(A, x, y):
                G.add_edge(x, y)
    return G


@lru_cache(maxsize=None)
def tau_tilting_pairs(A: Algebra) -> tuple:
    """All support tau-tilting pairs, as maximal compatible sets."""
    if A.rank == 0:
        return (Pair(),)
    G = compatibility_graph(A)
    pairs = [Pair.from_signed(c) for c in nx.find_cliques(G)]
    return tuple(sorted(pairs, key=lambda p: p.summands()))


@lru_cache(maxsize=None)
def tau_rigid_pairs(A: Algebra) -> tuple:
    """All basic tau-rigid pairs including the zero pair."""
    G = compatibility_graph(A)
    out = [Pair()] + [Pair.from_signed(c) for c in nx.enumerate_all_cliques(G)]
    return tuple(out)


def tau_tilting_modules(A: Algebra) -> list:
    return [p for p in tau_tilting_pairs(A) if not p.shifted]


@dataclass
class ExchangeGraph:
    nodes: list
    edges: list  # (source index, target index, exchanged SignedInd)
    gen_sets: list = field(default_factory=list)

    def index(self, pair) -> int:
        return self.nodes.index(Pair.coerce(pair))

    def leq(self, i: int, j: int) -> bool:
        return self.gen_sets[i] <= self.gen_sets[j]

    def to_networkx(self) -> nx.DiGraph:
        G = nx.DiGraph()
        G.add_nodes_from(range(len(self.nodes)))
        for a, b, x in self.edges:
            G.add_edge(a, b, exchanged=x)
        return G


def other_completion(A: Algebra, almost, x: SignedInd) -> Pair:
    """The completion of the almost complete pair ``almost`` not containing ``x``."""
    almost = Pair.coerce(almost)
    G = compatibility_graph(A)
    inside = almost.summands()
    for y in rigid_objects(A):
        if y == x or y in almost:
            continue
        if all(G.has_edge(y, z) for z in inside):
            return almost.with_(y)
    raise ArithmeticError("almost complete pair with a single completion")


def enumerate_stautilt(A: Algebra) -> ExchangeGraph:
    """Pairs ordered by inclusion of Gen classes, with left mutation edges."""
    nodes = list(tau_tilting_pairs(A))
    pos = {p: i for i, p in enumerate(nodes)}
    gens = [gen_set(A, p) for p in nodes]
    edges = []
    for i, T in enumerate(nodes):
        for x in T.summands():
            if x.shift or is_in_gen(x.module, T.modules - {x.module}):
                continue
            other = other_completion(A, T.without(x), x)
            edges.append((i, pos[other], x))
    return ExchangeGraph(nodes, edges, gens)


def completions_of(A: Algebra, pair) -> list:
    pair = Pair.coerce(pair)
    return [T for T in tau_tilting_pairs(A) if pair.modules <= T.modules and pair.shifted <= T.shifted]


# --- quotient algebras ------------------------------------------------------


@dataclass(frozen=True)
class QuotientMap:
    """Vertex transport between ``A`` and ``A / <e>``."""

    ambient: Algebra
    quotient: Algebra
    down: dict  # (comp, vertex) -> (comp, vertex)
    up: dict

    def __hash__(self):
        return hash((self.ambient, self.quotient))

    def module_down(self, m: IndModule) -> Optional[IndModule]:
        c, v = self.down.get((m.comp, m.top), (None, None))
        if c is None:
            return None
        q = IndModule(c, v, m.length)
        return q if self.quotient.contains(q) else None

    def module_up(self, m: IndModule) -> IndModule:
        c, v = self.up[(m.comp, m.top)]
        return IndModule(c, v, m.length)


@lru_cache(maxsize=None)
def quotient_algebra(A: Algebra, removed: frozenset) -> QuotientMap:
    """Delete the vertices ``removed`` (pairs ``(comp, vertex)``).

    A cut component falls apart into linear runs; each run starts at a vertex
    whose arrow target was deleted, and Loewy lengths are truncated there.
    """
    runs = []
    for c, comp in enumerate(A.components):
        n = comp.n
        gone = {v for (cc, v) in removed if cc == c}
        if not gone:
            if comp.kind == LINEAR:
                runs.append((c, 0, list(range(n)), LINEAR, list(comp.kupisch)))
            else:
                runs.append((c, 0, list(range(n)), comp.kind, list(comp.kupisch)))
            continue
        starts = [v for v in range(n) if v not in gone and (
            (v == 0 and comp.kind == LINEAR) or ((v - 1) % n in gone and not (v == 0 and comp.kind == LINEAR)))]
        for s in starts:
            verts = []
            v = s
            while v not in gone and len(verts) < n:
                verts.append(v)
                if comp.kind == LINEAR and v == n - 1:
                    break
                v = (v + 1) % n
            kup = [min(comp.kupisch[u], j + 1) for j, u in enumerate(verts)]
            runs.append((c, min(verts), verts, LINEAR, kup))
    runs.sort(key=lambda r: (r[0], r[1]))
    comps, down, up = [], {}, {}
    for ci, (c, _, verts, kind, kup) in enumerate(runs):
        comps.append(Component(kind, tuple(kup)))
        for j, u in enumerate(verts):
            down[(c, u)] = (ci, j)
            up[(ci, j)] = (c, u)
    return QuotientMap(A, Algebra(comps), down, up)


def _support_quotient(A: Algebra, shifted) -> QuotientMap:
    return quotient_algebra(A, frozenset((p.comp, p.top) for p in shifted))


# --- completions ------------------------------------------------------------


def _require_rigid(A: Algebra, pair: Pair) -> None:
    if not is_tau_rigid_pair(A, pair):
        raise NotRigid(f"not a tau-rigid pair: {pair.summands()}")


def bongartz_single(A: Algebra, m: IndModule) -> frozenset:
    """Module part of the Bongartz completion of one indecomposable."""
    if A.is_projective(m):
        return frozenset(A.projectives())
    n = A.n(m.comp)
    out = {m}
    out |= {radical_power(A, m, i) for i in range(1, m.length)}
    out |= {A.projective(m.comp, (m.top + i) % n) for i in range(n - m.length)}
    out |= {p for p in A.projectives() if p.comp != m.comp}
    return frozenset(out)


def _bongartz_modules(A: Algebra, mods: frozenset) -> frozenset:
    if not mods:
        return frozenset(A.projectives())
    if len(mods) == 1:
        return bongartz_single(A, next(iter(mods)))
    from .reduction import e_map, e_map_inverse, jasso

    last = max(mods)
    S = Pair(frozenset({last}))
    W = jasso(A, S)
    rest = [W.to_gamma_signed(e_map(A, S, SignedInd(m, 0))) for m in sorted(mods - {last})]
    inner = bongartz(W.gamma, Pair.from_signed(rest))
    lifted = {e_map_inverse(A, S, W.from_gamma_signed(y)) for y in inner.summands()}
    out = {last}
    for y in lifted:
        if y.shift:
            raise ArithmeticError("Bongartz completion acquired a shifted summand")
        out.add(y.module)
    return frozenset(out)


def bongartz(A: Algebra, pair) -> Pair:
    """Maximal support tau-tilting pair containing ``pair``."""
    pair = Pair.coerce(pair)
    _require_rigid(A, pair)
    if not pair.shifted:
        return Pair(_bongartz_modules(A, pair.modules), frozenset())
    Q = _support_quotient(A, pair.shifted)
    down = frozenset(Q.module_down(m) for m in pair.modules)
    mods = _bongartz_modules(Q.quotient, down) if Q.quotient.rank else frozenset()
    return Pair(frozenset(Q.module_up(m) for m in mods), pair.shifted)


def bongartz_oracle(A: Algebra, pair) -> Pair:
    """Ext-projectives of ``^perp(tau M) cap P^perp``."""
    from .oracle import ext_projectives

    pair = Pair.coerce(pair)
    taus = [t for t in (tau(A, m) for m in pair.modules) if t is not None]
    cls = [
        x for x in A.indecomposables()
        if all(hom_dim(A, x, t) == 0 for t in taus) and all(hom_dim(A, p, x) == 0 for p in pair.shifted)
    ]
    split, nonsplit = ext_projectives(A, cls)
    return Pair(split | nonsplit, pair.shifted)


def cobongartz_single(A: Algebra, m: IndModule) -> Pair:
    n = A.n(m.comp)
    mods = {m} | {top_quotient(m, i) for i in range(1, min(n - 1, m.length - 1) + 1)}
    shifted = {A.projective(m.comp, (m.top + i) % n) for i in range(1, n - m.length + 1)}
    shifted |= {p for p in A.projectives() if p.comp != m.comp}
    return Pair(frozenset(mods), frozenset(shifted))


def cobongartz(A: Algebra, pair) -> Pair:
    """Minimal support tau-tilting pair containing ``pair``."""
    pair = Pair.coerce(pair)
    _require_rigid(A, pair)
    if len(pair.modules) == 1 and not pair.shifted:
        return cobongartz_single(A, next(iter(pair.modules)))
    gen = gen_closure(A, frozenset(pair.modules))
    mods = frozenset(
        x for x in gen
        if (tx := tau(A, x)) is None or all(hom_dim(A, m, tx) == 0 for m in pair.modules)
    )
    shifted = frozenset(p for p in A.projectives() if all(hom_dim(A, p, x) == 0 for x in pair.modules))
    return Pair(mods, shifted)


def bongartz_complement(A: Algebra, pair) -> list:
    pair = Pair.coerce(pair)
    return [x for x in bongartz(A, pair).summands() if x not in pair]


def cobongartz_complement(A: Algebra, pair) -> list:
    pair = Pair.coerce(pair)
    return [x for x in cobongartz(A, pair).summands() if x not in pair]


# --- mutation ---------------------------------------------------------------


@dataclass
class AirMutation:
    result: Pair
    exchanged: SignedInd
    replacement: SignedInd
    middle: list  # minimal left approximation targets, with multiplicity
    windows: list


def left_approximation_windows(A: Algebra, x: IndModule, targets) -> list:
    """Windows of a minimal left ``add(targets)``-approximation of ``x``.

    A window is dropped when it equals a composite through a radical window.
    """
    targets = sorted(set(targets))
    kept = []
    for u in targets:
        radical = set()
        for u2 in targets:
            for w1 in hom_windows(A, x, u2):
                for v in hom_windows(A, u2, u):
                    if u2 == u and v.k == u.length:
                        continue
                    c = compose_windows(A, w1, v)
                    if c is not None:
                        radical.add(c)
        kept += [w for w in hom_windows(A, x, u) if w not in radical]
    return kept


def air_mutate(A: Algebra, pair, x) -> AirMutation:
    """Left mutation of a support tau-tilting pair at the summand ``x``."""
    pair = Pair.coerce(pair)
    x = as_signed(x)
    if x not in pair:
        raise NotASummand(f"{x!r} is not a summand")
    rest = pair.without(x)
    if x.shift or is_in_gen(x.module, rest.modules):
        raise NotLeftMutable(f"{x!r} is not left mutable")
    result = cobongartz(A, rest)
    (y,) = [s for s in result.summands() if s not in rest]
    wins = left_approximation_windows(A, x.module, rest.modules)
    return AirMutation(result, x, y, sorted(w.target for w in wins), wins)
