"""tau-perpendicular categories, their Nakayama models, and the E- and V-maps."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .algebra import (
    CYCLIC,
    LINEAR,
    Algebra,
    Component,
    IndModule,
    Pair,
    SignedInd,
    as_signed,
    compatible,
    hom_dim,
    is_in_gen,
    is_tau_rigid_pair,
    radical_power,
    rigid_objects,
    tau,
    top_quotient,
    torsion_free_part,
    validate_algebra,
)
from .errors import NotCoBongartzSummand, NotComposable, NotInImage, NotRigid


def in_perpendicular(A: Algebra, pair: Pair, x: IndModule) -> bool:
    """``x`` lies in ``M^perp cap ^perp(tau M) cap P^perp``."""
    for m in pair.modules:
        if hom_dim(A, m, x):
            return False
        tm = tau(A, m)
        if tm is not None and hom_dim(A, x, tm):
            return False
    for p in pair.shifted:
        if hom_dim(A, p, x):
            return False
    return True


@dataclass(frozen=True)
class WideCategory:
    ambient: Algebra
    defining: Pair
    gamma: Algebra
    rel_projectives: tuple  # ambient modules, in the order of gamma's projectives
    to_gamma_map: dict
    from_gamma_map: dict

    def __hash__(self):
        return hash((self.ambient, self.defining))

    def __eq__(self, other):
        return isinstance(other, WideCategory) and (self.ambient, self.defining) == (other.ambient, other.defining)

    def objects(self) -> list:
        return sorted(self.to_gamma_map)

    def contains(self, x: IndModule) -> bool:
        return x in self.to_gamma_map

    def to_gamma(self, x: IndModule) -> IndModule:
        return self.to_gamma_map[x]

    def from_gamma(self, y: IndModule) -> IndModule:
        return self.from_gamma_map[y]

    def to_gamma_signed(self, x) -> SignedInd:
        x = as_signed(x)
        return SignedInd(self.to_gamma_map[x.module], x.shift)

    def from_gamma_signed(self, y) -> SignedInd:
        y = as_signed(y)
        return SignedInd(self.from_gamma_map[y.module], y.shift)

    def is_relative_projective(self, x: IndModule) -> bool:
        return self.gamma.is_projective(self.to_gamma_map[x])


def _cut_points(A: Algebra, pair: Pair, x: IndModule) -> list:
    return [
        k for k in range(1, x.length)
        if in_perpendicular(A, pair, radical_power(A, x, k)) and in_perpendicular(A, pair, top_quotient(x, k))
    ]


def jasso(A: Algebra, pair) -> WideCategory:
    """The tau-perpendicular category of ``pair`` and its Nakayama model.

    Relative composition series are read off from the radical steps of each
    object that split it into two objects of the category.
    """
    return _jasso(A, Pair.coerce(pair))


@lru_cache(maxsize=None)
def _jasso(A: Algebra, pair: Pair) -> WideCategory:
    if not is_tau_rigid_pair(A, pair):
        raise NotRigid(f"not a tau-rigid pair: {pair.summands()}")
    objs = [x for x in A.indecomposables() if in_perpendicular(A, pair, x)]
    cuts = {x: _cut_points(A, pair, x) for x in objs}
    jlen = {x: len(cuts[x]) + 1 for x in objs}

    def jtop(x: IndModule) -> IndModule:
        c = cuts[x]
        return top_quotient(x, c[0]) if c else x

    simples = sorted(x for x in objs if jlen[x] == 1)
    proj = {}
    for x in objs:
        s = jtop(x)
        if s not in proj or jlen[x] > jlen[proj[s]]:
            proj[s] = x
    succ = {}
    for s, q in proj.items():
        if jlen[q] > 1:
            succ[s] = jtop(radical_power(A, q, cuts[q][0]))
    pred = {}
    for s, t in succ.items():
        if t in pred:
            raise ArithmeticError("reduced quiver is not Nakayama")
        pred[t] = s

    comps, seen = [], set()
    for s in simples:
        if s in seen:
            continue
        # walk forward to a sink or around a cycle
        cur, path = s, [s]
        while cur in succ and succ[cur] not in path:
            cur = succ[cur]
            path.append(cur)
        if cur in succ:
            members = _cycle(succ, cur)
            start = min(members)
            kind = CYCLIC
        else:
            start, kind = cur, LINEAR
        order = [start]
        while order[-1] in pred and pred[order[-1]] != start:
            order.append(pred[order[-1]])
        seen |= set(order)
        comps.append((kind, order))
    comps.sort(key=lambda c: min(proj[s] for s in c[1]))

    components, index = [], {}
    for ci, (kind, order) in enumerate(comps):
        components.append({"kind": kind, "kupisch": [jlen[proj[s]] for s in order]})
        for j, s in enumerate(order):
            index[s] = (ci, j)
    gamma = validate_algebra(components) if components else Algebra(())
    to_g, from_g = {}, {}
    for x in objs:
        ci, j = index[jtop(x)]
        y = IndModule(ci, j, jlen[x])
        if not gamma.contains(y) or y in from_g:
            raise ArithmeticError(f"object map is not a bijection at {x!r}")
        to_g[x] = y
        from_g[y] = x
    if len(from_g) != len(gamma.indecomposables()):
        raise ArithmeticError("object map is not surjective")
    rel = tuple(proj[s] for _, order in comps for s in order)
    return WideCategory(A, pair, gamma, rel, to_g, from_g)


def _cycle(succ: dict, start) -> list:
    out, cur = [start], succ[start]
    while cur != start:
        out.append(cur)
        cur = succ[cur]
    return out


# --- V-map ------------------------------------------------------------------


def is_cobongartz_summand(A: Algebra, pair, x) -> bool:
    pair = Pair.coerce(pair)
    x = as_signed(x)
    if x in pair:
        return False
    if x.shift:
        return A.is_projective(x.module) and is_tau_rigid_pair(A, pair.with_(x))
    return is_in_gen(x.module, pair.modules) and is_tau_rigid_pair(A, pair.with_(x))


def v_map_closed(A: Algebra, pair, x) -> Optional[SignedInd]:
    """Closed forms for the V-map; ``None`` when no pattern applies."""
    pair = Pair.coerce(pair)
    x = as_signed(x)
    if len(pair) == 0:
        return SignedInd(x.module, 0) if x.shift else None
    if len(pair) > 1:
        return None
    if pair.shifted:
        (q,) = pair.shifted
        if not x.shift:
            return None
        f = torsion_free_part(A, [q], x.module)
        return SignedInd(f, 0) if f is not None else None
    (m,) = pair.modules
    n = A.n(m.comp)
    if x.shift:
        p = x.module
        if p.comp != m.comp:
            return SignedInd(p, 0)
        if A.is_projective(m):
            return SignedInd(p, 0)
        i = (p.top - m.top) % n
        if 1 <= i <= n - m.length - 1:
            return SignedInd(p, 0)
        if i == n - m.length:
            return SignedInd(A.projective(m.comp, m.top), 0)
        return None
    q = x.module
    if q.comp != m.comp or q.top != m.top or q.length >= m.length:
        return None
    i = q.length
    if A.is_projective(m):
        return SignedInd(A.projective(m.comp, (m.top - i) % n), 0)
    return SignedInd(radical_power(A, m, i), 0)


def v_map(A: Algebra, pair, x) -> SignedInd:
    """Bijection from co-Bongartz complement summands to Bongartz complement summands."""
    pair = Pair.coerce(pair)
    x = as_signed(x)
    if not is_cobongartz_summand(A, pair, x):
        raise NotCoBongartzSummand(f"{x!r} is not a co-Bongartz complement summand of {pair.summands()}")
    y = v_map_closed(A, pair, x)
    if y is not None:
        return y
    from .oracle import v_map_oracle

    return v_map_oracle(A, pair, x)


# --- E-map ------------------------------------------------------------------


def _e_single(A: Algebra, s: SignedInd, x: SignedInd) -> SignedInd:
    if s.shift:
        if not x.shift:
            return x
        f = torsion_free_part(A, [s.module], x.module)
        return SignedInd(f, 1)
    m = s.module
    if not x.shift and not is_in_gen(x.module, [m]):
        return SignedInd(torsion_free_part(A, [m], x.module), 0)
    v = v_map(A, Pair(frozenset({m})), x)
    return SignedInd(torsion_free_part(A, [m], v.module), 1)


@lru_cache(maxsize=None)
def _e_cached(A: Algebra, pair: Pair, x: SignedInd) -> SignedInd:
    summands = pair.summands()
    if not summands:
        return x
    if len(summands) == 1:
        return _e_single(A, summands[0], x)
    last = summands[-1]
    S = Pair.from_signed([last])
    W = jasso(A, S)
    rest = Pair.from_signed(W.to_gamma_signed(_e_single(A, last, r)) for r in summands[:-1])
    y = _e_cached(W.gamma, rest, W.to_gamma_signed(_e_single(A, last, x)))
    return W.from_gamma_signed(y)


def e_map(A: Algebra, pair, x) -> SignedInd:
    """``E_T(x)``: an object of ``J(T)`` in ambient coordinates, with sign."""
    pair = Pair.coerce(pair)
    x = as_signed(x)
    if x in pair or (x.shift and not A.is_projective(x.module)) or not is_tau_rigid_pair(A, pair.with_(x)):
        raise NotComposable(f"{x!r} is not compatible with {pair.summands()}")
    return _e_cached(A, pair, x)


def e_map_list(A: Algebra, pair, xs) -> list:
    return [e_map(A, pair, x) for x in xs]


def compatible_objects(A: Algebra, pair) -> list:
    pair = Pair.coerce(pair)
    inside = pair.summands()
    return [
        x for x in rigid_objects(A)
        if x not in pair and not (x.shift and SignedInd(x.module, 0) in pair)
        and all(compatible(A, x, y) for y in inside)
    ]


@lru_cache(maxsize=None)
def _inverse_table(A: Algebra, pair: Pair) -> dict:
    table = {}
    for x in compatible_objects(A, pair):
        y = _e_cached(A, pair, x)
        if y in table:
            raise ArithmeticError(f"E-map is not injective: {table[y]!r} and {x!r}")
        table[y] = x
    return table


def e_map_inverse(A: Algebra, pair, y) -> SignedInd:
    pair = Pair.coerce(pair)
    y = as_signed(y)
    try:
        return _inverse_table(A, pair)[y]
    except KeyError:
        raise NotInImage(f"{y!r} is not an E-image for {pair.summands()}") from None
