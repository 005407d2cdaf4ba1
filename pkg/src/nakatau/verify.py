"""Exhaustive consistency suites over families of small algebras.

Every suite returns a :class:`Report`; failures carry printable
counterexamples.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import permutations
from math import factorial
from typing import Callable, Optional

import networkx as nx

from .algebra import (
    Algebra,
    IndModule,
    Pair,
    SignedInd,
    format_list,
    hom_dim,
    hom_windows,
    named_algebra,
    rigid_objects,
    tau,
)
from .errors import DomainError, UnknownSuite

MAX_FAILURES = 20


@dataclass
class Report:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, message: Callable[[], str]) -> None:
        self.checked += 1
        if not ok and len(self.failures) < MAX_FAILURES:
            self.failures.append(message())
        elif not ok:
            self.details["suppressed"] = self.details.get("suppressed", 0) + 1

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
            "details": self.details,
        }


def _named(*names) -> list:
    return [named_algebra(n) for n in names]


def _small(max_rank: int) -> list:
    from .sweep import sweep_algebras

    return [A for A in sweep_algebras() if A.rank <= max_rank]


def _fmt(A: Algebra, xs) -> str:
    return "(" + format_list(A, xs) + ")"


# --- suites -----------------------------------------------------------------


def suite_hom_models(algebras=None, primes=(2, 3)) -> Report:
    from .oracle import hom_dim_matrix, tau_oracle

    rep = Report("hom-models")
    for A in algebras or _named("a4", "a3", "d3", "e5", "n2"):
        mods = A.indecomposables()
        for p in primes:
            for m in mods:
                t = tau_oracle(A, m, p)
                rep.check(t == tau(A, m), lambda: f"{A!r}: tau {m!r} windows {tau(A, m)!r} vs oracle {t!r}")
                for n in mods:
                    w = len(hom_windows(A, m, n))
                    d = hom_dim_matrix(A, m, n, p)
                    rep.check(w == d == hom_dim(A, m, n), lambda: f"{A!r}: Hom({m!r},{n!r}) windows {w} vs matrix {d} (p={p})")
    return rep


def _completion_index(A: Algebra) -> dict:
    from .tilting import gen_set, tau_tilting_pairs

    index = {}
    for T in tau_tilting_pairs(A):
        items = T.summands()
        for mask in range(1 << len(items)):
            sub = Pair.from_signed(x for k, x in enumerate(items) if mask >> k & 1)
            index.setdefault(sub, []).append(T)
    return index


def suite_completions(algebras=None) -> Report:
    from .oracle import ext_projectives
    from .tilting import bongartz, bongartz_oracle, cobongartz, gen_set

    rep = Report("completions")
    for A in algebras or _small(4):
        for U, comps in _completion_index(A).items():
            gens = {T: gen_set(A, T) for T in comps}
            top = [T for T in comps if all(gens[S] <= gens[T] for S in comps)]
            bottom = [T for T in comps if all(gens[T] <= gens[S] for S in comps)]
            B, C = bongartz(A, U), cobongartz(A, U)
            rep.check(top == [B], lambda: f"{A!r}: B{_fmt(A, U)} = {_fmt(A, B)} but maximum is {[_fmt(A, t) for t in top]}")
            rep.check(bottom == [C], lambda: f"{A!r}: C{_fmt(A, U)} = {_fmt(A, C)} but minimum is {[_fmt(A, t) for t in bottom]}")
            if not U.shifted:
                Bo = bongartz_oracle(A, U)
                rep.check(Bo == B, lambda: f"{A!r}: Ext-projective Bongartz {_fmt(A, Bo)} vs {_fmt(A, B)}")
                if U.modules:
                    split, nonsplit = ext_projectives(A, gen_set(A, U))
                    rep.check(split | nonsplit == C.modules,
                              lambda: f"{A!r}: Ext-projectives of Gen{_fmt(A, U)} differ from co-Bongartz")
    return rep


def suite_reduction(algebras=None) -> Report:
    from .reduction import jasso
    from .tilting import bongartz, tau_rigid_pairs

    rep = Report("reduction")
    for A in algebras or _small(4):
        for T in tau_rigid_pairs(A):
            W = jasso(A, T)
            rep.check(W.gamma.rank == A.rank - len(T), lambda: f"{A!r}: rank of J{_fmt(A, T)} is {W.gamma.rank}")
            objs = W.objects()
            for x in objs:
                for y in objs:
                    a, b = hom_dim(A, x, y), hom_dim(W.gamma, W.to_gamma(x), W.to_gamma(y))
                    rep.check(a == b, lambda: f"{A!r}: J{_fmt(A, T)} Hom({x!r},{y!r}) {a} vs {b}")
            if not T.shifted:
                comp = [x.module for x in bongartz(A, T).summands() if x not in T]
                from .reduction import e_map

                images = sorted(e_map(A, T, x).module for x in comp)
                rep.check(images == sorted(W.rel_projectives),
                          lambda: f"{A!r}: relative projectives of J{_fmt(A, T)} are not E-images of the Bongartz complement")
    return rep


def suite_emap(algebras=None) -> Report:
    from .reduction import compatible_objects, e_map, e_map_inverse, jasso
    from .tilting import bongartz, tau_rigid_pairs

    rep = Report("emap")
    for A in algebras or _small(3):
        for T in tau_rigid_pairs(A):
            if len(T) == 0:
                continue
            W = jasso(A, T)
            B = bongartz(A, T)
            cands = compatible_objects(A, T)
            images = {}
            for X in cands:
                Y = e_map(A, T, X)
                images[Y] = X
                rep.check(e_map_inverse(A, T, Y) == X, lambda: f"{A!r}: E^-1 round trip fails for {X!r} over {_fmt(A, T)}")
                in_b = (not X.shift) and X in B
                proj = (not Y.shift) and W.is_relative_projective(Y.module)
                rep.check(in_b == proj, lambda: f"{A!r}: Bongartz/projective mismatch for {X!r} over {_fmt(A, T)}")
            downstairs = {W.from_gamma_signed(y) for y in rigid_objects(W.gamma)}
            rep.check(set(images) == downstairs, lambda: f"{A!r}: E-image over {_fmt(A, T)} is not all rigid objects of J")
            rep.check(len(images) == len(cands), lambda: f"{A!r}: E-map over {_fmt(A, T)} not injective")
            # associativity over every split T = M + N
            items = T.summands()
            if len(items) < 2:
                continue
            for mask in range(1, (1 << len(items)) - 1):
                M = Pair.from_signed(x for k, x in enumerate(items) if mask >> k & 1)
                N = Pair.from_signed(x for k, x in enumerate(items) if not mask >> k & 1)
                WM = jasso(A, M)
                N_down = Pair.from_signed(WM.to_gamma_signed(e_map(A, M, x)) for x in N.summands())
                for X in cands:
                    direct = e_map(A, T, X)
                    step = e_map(WM.gamma, N_down, WM.to_gamma_signed(e_map(A, M, X)))
                    via = WM.from_gamma_signed(step)
                    rep.check(direct == via, lambda: f"{A!r}: E-associativity fails for {X!r}, M={_fmt(A, M)}, N={_fmt(A, N)}")
    return rep


def suite_vmap(algebras=None) -> Report:
    from .oracle import v_map_oracle
    from .reduction import v_map_closed
    from .tilting import bongartz_complement, cobongartz_complement, tau_rigid_pairs

    rep = Report("vmap")
    closed_checked = 0
    for A in algebras or _small(3):
        for T in tau_rigid_pairs(A):
            if len(T) == A.rank:
                continue
            cob = cobongartz_complement(A, T)
            bon = set(bongartz_complement(A, T))
            image = []
            for X in cob:
                y = v_map_oracle(A, T, X)
                image.append(y)
                c = v_map_closed(A, T, X)
                if c is not None:
                    closed_checked += 1
                    rep.check(c == y, lambda: f"{A!r}: V{_fmt(A, T)}({X!r}) closed {c!r} vs oracle {y!r}")
            rep.check(sorted(image) == sorted(bon) and len(set(image)) == len(image),
                      lambda: f"{A!r}: V over {_fmt(A, T)} is not a bijection onto the Bongartz complement")
    rep.details["closed_form_checks"] = closed_checked
    return rep


def suite_psi(algebras=None) -> Report:
    from .sequences import is_tf_order, psi, psi_inverse, psi_recursive
    from .tilting import tau_rigid_pairs

    rep = Report("psi")
    for A in algebras or _small(3):
        seen = {}
        tf_images = set()
        for T in tau_rigid_pairs(A):
            for order in permutations(T.summands()):
                S = psi(A, order)
                rep.check(S not in seen, lambda: f"{A!r}: Psi not injective at {order} and {seen.get(S)}")
                seen[S] = order
                rep.check(psi_recursive(A, order) == S, lambda: f"{A!r}: recursive Psi differs at {order}")
                rep.check(psi_inverse(A, S) == tuple(order), lambda: f"{A!r}: Psi^-1 Psi != id at {order}")
                if is_tf_order(A, order):
                    tf_images.add(S)
                    rep.check(not any(s.shift for s in S), lambda: f"{A!r}: TF-order {order} has a signed image")
        unsigned = {S for S in seen if not any(s.shift for s in S)}
        rep.check(unsigned == tf_images, lambda: f"{A!r}: TF-orders do not map onto the unsigned sequences")
    return rep


def _tf_pairs(A: Algebra) -> list:
    from .sequences import is_tf_order
    from .tilting import tau_rigid_pairs

    out = []
    for T in tau_rigid_pairs(A):
        if len(T) == 2 and not T.shifted:
            for order in permutations(T.summands()):
                if is_tf_order(A, order):
                    out.append(order)
    return out


def suite_mutation_cases(algebras=None) -> Report:
    from .mutation import CASES, TF4, classify_pair, mutate_pair
    from .reduction import jasso
    from .sequences import is_tf_order, psi

    rep = Report("mutation-cases")
    tally = {c: 0 for c in CASES}
    for A in algebras or _small(4):
        for b, c in _tf_pairs(A):
            case = classify_pair(A, b, c)
            tally[case] += 1
            res, _ = mutate_pair(A, b, c)
            rep.check(is_tf_order(A, res), lambda: f"{A!r}: result of {b!r},{c!r} not TF-ordered")
            rep.check(jasso(A, Pair.from_signed(res)).rel_projectives == jasso(A, Pair.from_signed((b, c))).rel_projectives,
                      lambda: f"{A!r}: J changed under mutation of ({b!r},{c!r})")
            if case != TF4:
                gen, _ = mutate_pair(A, b, c, route="generic")
                rep.check(gen == res, lambda: f"{A!r}: {case} closed {res} vs generic {gen}")
    rep.details["cases"] = tally
    return rep


def suite_irregular(algebras=None) -> Report:
    from .mutation import TF4, classify_pair, irregular_oracle, mutate_pair, widehat
    from .sequences import psi
    from .tilting import is_tau_tilting
    from .reduction import e_map

    rep = Report("irregular")
    count = 0
    for A in algebras or _small(4):
        for b, c in _tf_pairs(A):
            if classify_pair(A, b, c) != TF4:
                continue
            count += 1
            W = widehat(A, b, c)
            rep.check(is_tau_tilting(A, Pair(W)), lambda: f"{A!r}: widehat({b!r},{c!r}) is not tau-tilting")
            (x, y), F, ext = irregular_oracle(A, b, c)
            rep.check(ext == W, lambda: f"{A!r}: widehat({b!r},{c!r}) != Ext-projectives {sorted(ext)}")
            res, _ = mutate_pair(A, b, c)
            rep.check(res == (x, y), lambda: f"{A!r}: TF-4 result {res} vs oracle {(x, y)}")
            rep.check(psi(A, res) == (e_map(A, [y], x), y), lambda: f"{A!r}: Psi of TF-4 result is not (E_Y X, Y)")
    rep.details["tf4_pairs"] = count
    return rep


def suite_tf_counts(algebras=None) -> Report:
    from .sequences import is_tf_order, tf_count, tf_orders
    from .tilting import tau_rigid_pairs

    rep = Report("tf-counts")
    for A in algebras or _small(4):
        nfact = factorial(A.rank)
        for T in tau_rigid_pairs(A):
            if T.shifted or not T.modules:
                continue
            orders = tf_orders(A, T.modules)
            k = tf_count(T.modules)
            rep.check(len(orders) == k and nfact % k == 0, lambda: f"{A!r}: {_fmt(A, T)} has {len(orders)} TF-orders, formula {k}")
            if len(T) <= 4:
                brute = sorted(p for p in permutations(T.summands()) if is_tf_order(A, p))
                rep.check(brute == orders, lambda: f"{A!r}: TF-order enumeration of {_fmt(A, T)} differs from brute force")
    return rep


def suite_transitivity(algebras=None) -> Report:
    from .mutation import mutation_graph
    from .sequences import tf_orders
    from .tilting import tau_tilting_modules

    rep = Report("transitivity")
    connected, total = True, 0
    for A in algebras or _small(4):
        G = mutation_graph(A)
        nodes = G.graph.number_of_nodes()
        total += nodes
        strong = G.is_strongly_connected()
        weak = nodes > 0 and nx.is_weakly_connected(G.graph)
        connected &= strong
        rep.check(strong, lambda: f"{A!r}: mutation graph not strongly connected")
        rep.check(strong == weak, lambda: f"{A!r}: strong and undirected connectivity disagree")
        expected = sum(len(tf_orders(A, T.modules)) for T in tau_tilting_modules(A))
        rep.check(nodes == expected, lambda: f"{A!r}: {nodes} nodes, expected {expected}")
    rep.details["connected"] = connected
    rep.details["nodes"] = total
    return rep


def suite_braid(algebras=None) -> Report:
    from .mutation import braid_check, mutation_graph

    rep = Report("braid")
    witnesses = []
    for A in algebras or _named("a3"):
        if A.rank < 3:
            continue
        for T in sorted(mutation_graph(A).graph.nodes):
            for i in range(1, A.rank - 1):
                if not braid_check(A, T, i):
                    witnesses.append((A, T, i))
    rep.check(bool(witnesses), lambda: "no braid failure found")
    rep.details["witnesses"] = [f"{A!r} {_fmt(A, T)} i={i}" for A, T, i in witnesses[:5]]
    rep.details["witness_count"] = len(witnesses)
    return rep


def suite_disk(algebras=None) -> Report:
    from .algebra import compatible
    from .disk import arcs_compatible, signed_model_available, signed_triangulation_count, triangulations
    from .tilting import tau_tilting_modules, tau_tilting_pairs

    rep = Report("disk")
    signed = 0
    for A in algebras or _small(4):
        objs = [x for x in rigid_objects(A) if not x.shift or signed_model_available(A, x.module.comp)]
        for i, x in enumerate(objs):
            for y in objs[i + 1:]:
                a, b = compatible(A, x, y), arcs_compatible(A, x, y)
                rep.check(a == b, lambda: f"{A!r}: {x!r},{y!r} rigid={a} non-crossing={b}")
        rep.check(len(triangulations(A)) == len(tau_tilting_modules(A)),
                  lambda: f"{A!r}: {len(triangulations(A))} triangulations vs {len(tau_tilting_modules(A))} tau-tilting modules")
        if all(signed_model_available(A, c) for c in range(len(A.components))):
            signed += 1
            rep.check(signed_triangulation_count(A) == len(tau_tilting_pairs(A)),
                      lambda: f"{A!r}: signed triangulations {signed_triangulation_count(A)} vs {len(tau_tilting_pairs(A))}")
    rep.details["signed_algebras"] = signed
    return rep


def suite_bridges(algebras=None) -> Report:
    from .mutation import bridge_tf_orders
    from .tilting import enumerate_stautilt

    rep = Report("bridges")
    for A in algebras or _small(4):
        ex = enumerate_stautilt(A)
        for a, b, x in ex.edges:
            S, T = ex.nodes[a], ex.nodes[b]
            if S.shifted or T.shifted:
                continue
            (y,) = [s for s in T.summands() if s not in S]
            common = sorted(S.modules & T.modules)
            try:
                bridge_tf_orders(A, common, x, y)
                ok = True
            except DomainError:
                ok = False
            rep.check(ok, lambda: f"{A!r}: no bridge for {x!r} -> {y!r}")
    return rep


SUITES = {
    "hom-models": suite_hom_models,
    "completions": suite_completions,
    "reduction": suite_reduction,
    "emap": suite_emap,
    "vmap": suite_vmap,
    "psi": suite_psi,
    "mutation-cases": suite_mutation_cases,
    "irregular": suite_irregular,
    "tf-counts": suite_tf_counts,
    "transitivity": suite_transitivity,
    "braid": suite_braid,
    "disk": suite_disk,
    "bridges": suite_bridges,
}


def run_suite(name: str, algebras: Optional[list] = None) -> Report:
    try:
        fn = SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    start = time.perf_counter()
    rep = fn(algebras)
    rep.seconds = time.perf_counter() - start
    return rep
