"""Brute-force backends used to cross-check the combinatorial layer.

Modules are realised as quiver representations with explicit matrices over
``GF(p)``; homomorphisms are solved for rather than read off from windows.
Also here: 2-term complexes and the cone construction for the V-map,
torsion closure by fixpoint, and Ext-projective detection.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from . import linalg as la
from .algebra import (
    Algebra,
    IndModule,
    Pair,
    SignedInd,
    Window,
    as_signed,
    hom_dim,
    tau,
)
from .errors import NotCoBongartzSummand


# --- representations --------------------------------------------------------


@lru_cache(maxsize=None)
def layout(A: Algebra):
    """``(offsets, vertices, arrow_target)`` with global vertex ids.

    ``arrow_target[g]`` is the global id the arrow out of ``g`` points to, or
    ``None`` for the sink of a linear component.
    """
    offsets, vertices, target = [], [], []
    for c, comp in enumerate(A.components):
        offsets.append(len(vertices))
        for v in range(comp.n):
            vertices.append((c, v))
    for g, (c, v) in enumerate(vertices):
        if v == 0 and not A.is_cyclic(c):
            target.append(None)
        else:
            target.append(offsets[c] + (v - 1) % A.n(c))
    return tuple(offsets), tuple(vertices), tuple(target)


@dataclass
class Rep:
    A: Algebra
    p: int
    dims: tuple
    maps: list  # maps[g]: dims[target] x dims[g] matrix, or None

    @property
    def total_dim(self) -> int:
        return sum(self.dims)


Morphism = list  # one matrix per global vertex, shape (dim target_v, dim source_v)


def gid(A: Algebra, comp: int, v: int) -> int:
    return layout(A)[0][comp] + v


def zero_rep(A: Algebra, p: int) -> Rep:
    _, verts, target = layout(A)
    dims = tuple(0 for _ in verts)
    maps = [None if t is None else la.zeros(0, 0) for t in target]
    return Rep(A, p, dims, maps)


def matrix_rep(A: Algebra, m: IndModule, p: Optional[int] = None) -> Rep:
    """Representation of ``m``: basis ``e_j`` sits at vertex ``top - j``."""
    p = p or la.field_prime()
    offsets, verts, target = layout(A)
    n = A.n(m.comp)
    dims = [0] * len(verts)
    slot = {}
    for j in range(m.length):
        g = offsets[m.comp] + (m.top - j) % n
        slot[j] = (g, dims[g])
        dims[g] += 1
    maps = [None if t is None else la.zeros(dims[t], dims[g]) for g, t in enumerate(target)]
    for j in range(m.length - 1):
        g, col = slot[j]
        h, row = slot[j + 1]
        maps[g][row, col] = 1
    return Rep(A, p, tuple(dims), maps)


def direct_sum(A: Algebra, reps: Sequence[Rep], p: int) -> Rep:
    if not reps:
        return zero_rep(A, p)
    _, verts, target = layout(A)
    dims = tuple(sum(r.dims[g] for r in reps) for g in range(len(verts)))
    maps = []
    for g, t in enumerate(target):
        if t is None:
            maps.append(None)
            continue
        M = la.zeros(dims[t], dims[g])
        r0 = c0 = 0
        for r in reps:
            M[r0:r0 + r.dims[t], c0:c0 + r.dims[g]] = r.maps[g]
            r0 += r.dims[t]
            c0 += r.dims[g]
        maps.append(M)
    return Rep(A, p, dims, maps)


def sum_of(A: Algebra, mods: Sequence[IndModule], p: int) -> Rep:
    return direct_sum(A, [matrix_rep(A, m, p) for m in mods], p)


def block_morphism(A: Algebra, blocks, sources: Sequence[Rep], targets: Sequence[Rep]) -> Morphism:
    """Assemble a morphism between direct sums from ``blocks[i][j]: sources[j] -> targets[i]``."""
    nv = len(layout(A)[1])
    out = []
    for g in range(nv):
        rows = sum(t.dims[g] for t in targets)
        cols = sum(s.dims[g] for s in sources)
        M = la.zeros(rows, cols)
        r0 = 0
        for i, t in enumerate(targets):
            c0 = 0
            for j, s in enumerate(sources):
                b = blocks[i][j]
                if b is not None:
                    M[r0:r0 + t.dims[g], c0:c0 + s.dims[g]] = b[g]
                c0 += s.dims[g]
            r0 += t.dims[g]
        out.append(M)
    return out


def zero_morphism(X: Rep, Y: Rep) -> Morphism:
    return [la.zeros(Y.dims[g], X.dims[g]) for g in range(len(X.dims))]


def identity_morphism(X: Rep) -> Morphism:
    return [np.eye(d, dtype=np.int64) for d in X.dims]


def compose(f: Morphism, g: Morphism, p: int) -> Morphism:
    """``g . f``."""
    return [la.matmul(gv, fv, p) for fv, gv in zip(f, g)]


def add_morphisms(f: Morphism, g: Morphism, p: int, scale: int = 1) -> Morphism:
    return [(a + scale * b) % p for a, b in zip(f, g)]


def flatten(f: Morphism) -> np.ndarray:
    parts = [m.reshape(-1) for m in f]
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


def unflatten(vec: np.ndarray, X: Rep, Y: Rep) -> Morphism:
    out, pos = [], 0
    for g in range(len(X.dims)):
        size = Y.dims[g] * X.dims[g]
        out.append(np.array(vec[pos:pos + size], dtype=np.int64).reshape(Y.dims[g], X.dims[g]))
        pos += size
    return out


def is_morphism(X: Rep, Y: Rep, f: Morphism) -> bool:
    _, _, target = layout(X.A)
    for g, t in enumerate(target):
        if t is None:
            continue
        lhs = la.matmul(Y.maps[g], f[g], X.p)
        rhs = la.matmul(f[t], X.maps[g], X.p)
        if np.any((lhs - rhs) % X.p):
            return False
    return True


def hom_basis(X: Rep, Y: Rep) -> list:
    """Basis of ``Hom(X, Y)`` from the intertwiner equations ``Y_a f_v = f_w X_a``."""
    p = X.p
    _, _, target = layout(X.A)
    sizes = [Y.dims[g] * X.dims[g] for g in range(len(X.dims))]
    starts = np.concatenate([[0], np.cumsum(sizes)]).astype(int)
    nvar = int(starts[-1])
    if nvar == 0:
        return []
    blocks = []
    for g, t in enumerate(target):
        if t is None:
            continue
        rows = Y.dims[t] * X.dims[g]
        if rows == 0:
            continue
        E = la.zeros(rows, nvar)
        # row-major vec: vec(A X B) = kron(A, B^T) vec(X)
        if sizes[g]:
            E[:, starts[g]:starts[g + 1]] = np.kron(Y.maps[g], np.eye(X.dims[g], dtype=np.int64))
        if sizes[t]:
            E[:, starts[t]:starts[t + 1]] -= np.kron(np.eye(Y.dims[t], dtype=np.int64), X.maps[g].T)
        blocks.append(E % p)
    if blocks:
        N = la.nullspace(np.concatenate(blocks, axis=0), p)
    else:
        N = np.eye(nvar, dtype=np.int64)
    return [unflatten(N[:, j], X, Y) for j in range(N.shape[1])]


def coordinates(basis: Sequence[Morphism], f: Morphism, p: int) -> Optional[np.ndarray]:
    """Coefficients of ``f`` in ``basis`` (``None`` if not in the span)."""
    target = flatten(f)
    if not basis:
        return np.zeros(0, dtype=np.int64) if not np.any(target % p) else None
    B = np.stack([flatten(b) for b in basis], axis=1)
    return la.solve(B, target, p)


def hom_dim_matrix(A: Algebra, m: IndModule, n_: IndModule, p: Optional[int] = None) -> int:
    p = p or la.field_prime()
    return len(hom_basis(matrix_rep(A, m, p), matrix_rep(A, n_, p)))


def window_morphism(A: Algebra, w: Window, p: Optional[int] = None) -> Morphism:
    """Matrix of a window map: ``e_j -> e_(j + len target - k)`` for ``j < k``."""
    p = p or la.field_prime()
    X, Y = matrix_rep(A, w.source, p), matrix_rep(A, w.target, p)
    f = zero_morphism(X, Y)
    offsets = layout(A)[0]
    n = A.n(w.source.comp)
    shift = w.target.length - w.k

    def slot(m: IndModule, j: int):
        g = offsets[m.comp] + (m.top - j) % n
        idx = sum(1 for i in range(j) if (m.top - i) % n == (m.top - j) % n)
        return g, idx

    for j in range(w.k):
        g, col = slot(w.source, j)
        g2, row = slot(w.target, j + shift)
        assert g == g2
        f[g][row, col] = 1
    return f


# --- kernels, cokernels, decomposition --------------------------------------


def kernel(X: Rep, Y: Rep, f: Morphism):
    """``(K, inclusion)`` for ``f: X -> Y``."""
    p = X.p
    _, _, target = layout(X.A)
    K = [la.nullspace(f[g], p) if X.dims[g] else la.zeros(0, 0) for g in range(len(X.dims))]
    K = [k if k.shape[0] == X.dims[g] else la.zeros(X.dims[g], 0) for g, k in enumerate(K)]
    dims = tuple(k.shape[1] for k in K)
    maps = []
    for g, t in enumerate(target):
        if t is None:
            maps.append(None)
            continue
        img = la.matmul(X.maps[g], K[g], p)
        sol = la.solve(K[t], img, p) if dims[t] else la.zeros(0, dims[g])
        if sol is None:
            raise ArithmeticError("kernel is not a subrepresentation")
        maps.append(sol.reshape(dims[t], dims[g]))
    return Rep(X.A, p, dims, maps), K


def cokernel(X: Rep, Y: Rep, f: Morphism):
    """``(C, projection)`` for ``f: X -> Y``."""
    p = X.p
    _, _, target = layout(X.A)
    Q = []
    for g in range(len(Y.dims)):
        if Y.dims[g] == 0:
            Q.append(la.zeros(0, 0))
        elif X.dims[g] == 0:
            Q.append(np.eye(Y.dims[g], dtype=np.int64))
        else:
            Q.append(la.annihilator(f[g], p).reshape(-1, Y.dims[g]))
    dims = tuple(q.shape[0] for q in Q)
    maps = []
    for g, t in enumerate(target):
        if t is None:
            maps.append(None)
            continue
        if dims[g] == 0 or dims[t] == 0:
            maps.append(la.zeros(dims[t], dims[g]))
            continue
        S = la.right_inverse(Q[g], p)
        maps.append(la.matmul(la.matmul(Q[t], Y.maps[g], p), S, p))
    return Rep(X.A, p, dims, maps), Q


def radical_layers(X: Rep) -> list:
    """``r[k][g] = dim (rad^k X / rad^(k+1) X)`` at global vertex ``g``."""
    p = X.p
    _, _, target = layout(X.A)
    nv = len(X.dims)
    incoming = {t: g for g, t in enumerate(target) if t is not None}
    R = [np.eye(d, dtype=np.int64) for d in X.dims]
    dims_seq = [[d for d in X.dims]]
    while any(dims_seq[-1]):
        nxt = []
        for w in range(nv):
            g = incoming.get(w)
            if g is None or R[g].shape[1] == 0 or X.dims[w] == 0:
                nxt.append(la.zeros(X.dims[w], 0))
            else:
                nxt.append(la.column_space(la.matmul(X.maps[g], R[g], p), p))
        R = nxt
        dims_seq.append([r.shape[1] for r in R])
    return [[dims_seq[k][g] - dims_seq[k + 1][g] for g in range(nv)] for k in range(len(dims_seq) - 1)]


def decompose(X: Rep) -> list:
    """Indecomposable summands of ``X`` (sorted, with multiplicity)."""
    A = X.A
    offsets, verts, _ = layout(A)
    layers = radical_layers(X)
    depth = len(layers)

    def r(k, c, v):
        if k >= depth:
            return 0
        if not A.is_cyclic(c) and v < 0:
            return 0
        return layers[k][offsets[c] + v % A.n(c)]

    out = []
    for c, comp in enumerate(A.components):
        for t in range(comp.n):
            for length in range(1, depth + 1):
                if not comp.kind == "cyclic" and t - length + 1 < 0:
                    break
                mult = r(length - 1, c, t - length + 1) - r(length, c, t - length)
                out.extend([IndModule(c, t, length)] * mult)
    return sorted(out)


# --- projective presentations, Nakayama functor, tau -----------------------


def _path_image(X: Rep, g: int, x: np.ndarray, steps: int):
    _, _, target = layout(X.A)
    for _ in range(steps):
        t = target[g]
        if t is None:
            return None, None
        x = la.matmul(X.maps[g], x.reshape(-1, 1), X.p).reshape(-1)
        g = t
    return g, x


def projective_cover(X: Rep):
    """``(projectives, cover morphism from their direct sum)``; minimal."""
    A, p = X.A, X.p
    offsets, verts, target = layout(A)
    incoming = {t: g for g, t in enumerate(target) if t is not None}
    tops = []
    for w in range(len(verts)):
        if X.dims[w] == 0:
            continue
        g = incoming.get(w)
        if g is None or X.dims[g] == 0:
            rad = la.zeros(X.dims[w], 0)
        else:
            rad = la.column_space(X.maps[g], p)
        chosen = rad
        for i in range(X.dims[w]):
            e = np.zeros(X.dims[w], dtype=np.int64)
            e[i] = 1
            if not la.in_span(chosen, e, p):
                tops.append((w, e))
                chosen = np.concatenate([chosen, e.reshape(-1, 1)], axis=1)
    projs, blocks = [], []
    for w, x in tops:
        c, v = verts[w]
        P = A.projective(c, v)
        PR = matrix_rep(A, P, p)
        f = zero_morphism(PR, X)
        counters = [0] * len(verts)
        for j in range(P.length):
            g, img = _path_image(X, w, x, j)
            gp = offsets[c] + (v - j) % A.n(c)
            col = counters[gp]
            counters[gp] += 1
            if g is not None:
                f[gp][:, col] = img
        projs.append((P, PR, f))
    reps = [pr for _, pr, _ in projs]
    cover = block_morphism(A, [[f for _, _, f in projs]], reps, [X])
    return [P for P, _, _ in projs], cover


def projective_presentation(X: Rep):
    """``(P1, P0, d)`` with ``P1 -> P0 -> X -> 0`` minimal."""
    A, p = X.A, X.p
    P0, cover0 = projective_cover(X)
    R0 = sum_of(A, P0, p)
    K, inc = kernel(R0, X, cover0)
    P1, cover1 = projective_cover(K)
    R1 = sum_of(A, P1, p)
    d = compose(cover1, inc, p)
    return P1, P0, d


def _arrow_multiplication(A: Algebra, g: int, p: int) -> Morphism:
    """Right multiplication by the arrow out of vertex ``g``: ``P(target) -> P(g)``."""
    _, verts, target = layout(A)
    c, v = verts[g]
    w = verts[target[g]][1]
    Pv, Pw = A.projective(c, v), A.projective(c, w)
    k = Pv.length - 1
    if k <= 0:
        return zero_morphism(matrix_rep(A, Pw, p), matrix_rep(A, Pv, p))
    return window_morphism(A, Window(Pw, Pv, k), p)


def nakayama_functor(A: Algebra, P: Sequence[IndModule], p: int):
    """``nu P = D Hom(P, A)`` with the bases used to evaluate ``nu`` on maps."""
    _, verts, target = layout(A)
    RP = sum_of(A, P, p)
    bases = []
    for g, (c, v) in enumerate(verts):
        bases.append(hom_basis(RP, matrix_rep(A, A.projective(c, v), p)))
    dims = tuple(len(b) for b in bases)
    maps = []
    for g, t in enumerate(target):
        if t is None:
            maps.append(None)
            continue
        phi = _arrow_multiplication(A, g, p)
        C = la.zeros(dims[g], dims[t])
        for j, b in enumerate(bases[t]):
            coords = coordinates(bases[g], compose(b, phi, p), p)
            C[:, j] = coords
        maps.append(C.T.copy())
    return Rep(A, p, dims, maps), bases


def nakayama_on_map(A: Algebra, P1, P0, d: Morphism, p: int):
    nu1, b1 = nakayama_functor(A, P1, p)
    nu0, b0 = nakayama_functor(A, P0, p)
    f = []
    for g in range(len(layout(A)[1])):
        D = la.zeros(len(b1[g]), len(b0[g]))
        for j, h in enumerate(b0[g]):
            D[:, j] = coordinates(b1[g], compose(d, h, p), p)
        f.append(D.T.copy())
    return nu1, nu0, f


def tau_oracle(A: Algebra, m: IndModule, p: Optional[int] = None) -> Optional[IndModule]:
    """``tau m`` as the kernel of the Nakayama functor on a minimal presentation."""
    p = p or la.field_prime()
    X = matrix_rep(A, m, p)
    P1, P0, d = projective_presentation(X)
    nu1, nu0, nd = nakayama_on_map(A, P1, P0, d, p)
    K, _ = kernel(nu1, nu0, nd)
    parts = decompose(K)
    if not parts:
        return None
    assert len(parts) == 1, parts
    return parts[0]


# --- approximations ---------------------------------------------------------


@dataclass
class Approximation:
    maps: list  # (target, Window)
    cokernel: list  # indecomposable summands
    zero_map: bool


def _rad_endos(A: Algebra, u: IndModule, p: int) -> list:
    from .algebra import hom_windows

    return [window_morphism(A, w, p) for w in hom_windows(A, u, u) if w.k < u.length]


def minimal_left_approx(A: Algebra, x: IndModule, U, p: Optional[int] = None) -> Approximation:
    """Minimal left ``add U``-approximation of ``x`` and its cokernel.

    For each ``u`` in ``U`` the maps kept are a complement, inside
    ``Hom(x, u)``, of those factoring through a radical map ``u' -> u``.
    """
    from .algebra import hom_windows

    p = p or la.field_prime()
    U = sorted(set(U))
    X = matrix_rep(A, x, p)
    chosen = []
    for u in U:
        Ur = matrix_rep(A, u, p)
        radical_part = []
        for u2 in U:
            U2 = matrix_rep(A, u2, p)
            rad_maps = _rad_endos(A, u, p) if u2 == u else hom_basis(U2, Ur)
            for h in hom_basis(X, U2):
                for r in rad_maps:
                    radical_part.append(compose(h, r, p))
        span = [f for f in radical_part if np.any(flatten(f))]
        for w in hom_windows(A, x, u):
            f = window_morphism(A, w, p)
            if coordinates(span, f, p) is None:
                chosen.append((u, w, f))
                span.append(f)
    if not chosen:
        return Approximation([], [], True)
    reps = [matrix_rep(A, u, p) for u, _, _ in chosen]
    total = direct_sum(A, reps, p)
    f = block_morphism(A, [[c[2]] for c in chosen], [X], reps)
    C, _ = cokernel(X, total, f)
    return Approximation([(u, w) for u, w, _ in chosen], decompose(C), False)


# --- 2-term complexes -------------------------------------------------------


@dataclass
class TwoTermComplex:
    """``P_minus -> P_zero`` with differential given by windows."""

    minus: list
    zero: list
    windows: list  # (row index in zero, column index in minus, Window)

    def differential(self, A: Algebra, p: int) -> Morphism:
        src = [matrix_rep(A, m, p) for m in self.minus]
        tgt = [matrix_rep(A, m, p) for m in self.zero]
        blocks = [[None] * len(src) for _ in tgt]
        for i, j, w in self.windows:
            blocks[i][j] = window_morphism(A, w, p)
        return block_morphism(A, blocks, src, tgt)


def complex_of(A: Algebra, x) -> TwoTermComplex:
    s = as_signed(x)
    m = s.module
    if s.shift:
        return TwoTermComplex([m], [], [])
    if A.is_projective(m):
        return TwoTermComplex([], [m], [])
    n = A.n(m.comp)
    P0 = A.projective(m.comp, m.top)
    P1 = A.projective(m.comp, (m.top - m.length) % n)
    k = P0.length - m.length
    return TwoTermComplex([P1], [P0], [(0, 0, Window(P1, P0, k))])


def two_term_complex(A: Algebra, pair) -> TwoTermComplex:
    minus, zero, wins = [], [], []
    for s in Pair.coerce(pair).summands():
        c = complex_of(A, s)
        for i, j, w in c.windows:
            wins.append((i + len(zero), j + len(minus), w))
        minus += c.minus
        zero += c.zero
    return TwoTermComplex(minus, zero, wins)


def _complex_reps(A: Algebra, C: TwoTermComplex, p: int):
    return sum_of(A, C.minus, p), sum_of(A, C.zero, p), C.differential(A, p)


def homotopy_hom(A: Algebra, C: TwoTermComplex, D: TwoTermComplex, p: int) -> list:
    """Basis of chain maps ``C -> D`` modulo homotopy, as ``(f_minus, f_zero)``."""
    Cm, C0, dC = _complex_reps(A, C, p)
    Dm, D0, dD = _complex_reps(A, D, p)
    H1 = hom_basis(Cm, Dm)
    H0 = hom_basis(C0, D0)
    nvar = len(H1) + len(H0)
    if nvar == 0:
        return []
    cols = [flatten(compose(h, dD, p)) for h in H1] + [(-flatten(compose(dC, h, p))) % p for h in H0]
    E = np.stack(cols, axis=1) if cols[0].size else la.zeros(0, nvar)
    Z = la.nullspace(E, p) if E.shape[0] else np.eye(nvar, dtype=np.int64)
    if Z.shape[1] == 0:
        return []
    homotopies = []
    for h in hom_basis(C0, Dm):
        v1 = coordinates(H1, compose(dC, h, p), p)
        v0 = coordinates(H0, compose(h, dD, p), p)
        homotopies.append(np.concatenate([v1, v0]))
    span = np.stack(homotopies, axis=1) if homotopies else la.zeros(nvar, 0)
    out = []
    for j in range(Z.shape[1]):
        z = Z[:, j]
        if la.in_span(span, z, p):
            continue
        span = np.concatenate([span, z.reshape(-1, 1)], axis=1)
        f1 = [la.zeros(Dm.dims[g], Cm.dims[g]) for g in range(len(Cm.dims))]
        f0 = [la.zeros(D0.dims[g], C0.dims[g]) for g in range(len(C0.dims))]
        for a, h in zip(z[:len(H1)], H1):
            f1 = add_morphisms(f1, h, p, int(a))
        for b, h in zip(z[len(H1):], H0):
            f0 = add_morphisms(f0, h, p, int(b))
        out.append((f1, f0))
    return out


def shift_hom_dim(A: Algebra, C: TwoTermComplex, D: TwoTermComplex, p: int) -> int:
    """``dim Hom_K(C, D[1])``: maps ``C_minus -> D_zero`` modulo homotopy."""
    Cm, C0, dC = _complex_reps(A, C, p)
    Dm, D0, dD = _complex_reps(A, D, p)
    maps = hom_basis(Cm, D0)
    if not maps:
        return 0
    null = [compose(h, dD, p) for h in hom_basis(Cm, Dm)]
    null += [compose(dC, h, p) for h in hom_basis(C0, D0)]
    vecs = [flatten(f) for f in null]
    span = np.stack(vecs, axis=1) if vecs else la.zeros(flatten(maps[0]).size, 0)
    r0 = la.rank(span, p) if span.shape[1] else 0
    full = np.concatenate([span, np.stack([flatten(f) for f in maps], axis=1)], axis=1)
    return la.rank(full, p) - r0


def is_presilting(A: Algebra, pair, p: Optional[int] = None) -> bool:
    p = p or la.field_prime()
    C = two_term_complex(A, pair)
    return shift_hom_dim(A, C, C, p) == 0


def v_map_oracle(A: Algebra, pair, x, p: Optional[int] = None) -> SignedInd:
    """Cone construction: ``H^0`` of ``Cone(alpha)[-1]`` for a right approximation ``alpha``.

    The approximation used is the sum of all homotopy classes from summands
    of the pair; the surplus it carries is stripped afterwards.
    """
    p = p or la.field_prime()
    pair = Pair.coerce(pair)
    x = as_signed(x)
    if x in pair or not _is_cobongartz_summand(A, pair, x):
        raise NotCoBongartzSummand(f"{x!r} is not a co-Bongartz complement summand")
    X = complex_of(A, x)
    parts = []
    for s in pair.summands():
        C = complex_of(A, s)
        for f1, f0 in homotopy_hom(A, C, X, p):
            parts.append((C, f1, f0))
    Xm, X0, dX = _complex_reps(A, X, p)
    src = TwoTermComplex([], [], [])
    for C, _, _ in parts:
        off_m, off_0 = len(src.minus), len(src.zero)
        src = TwoTermComplex(
            src.minus + C.minus,
            src.zero + C.zero,
            src.windows + [(i + off_0, j + off_m, w) for i, j, w in C.windows],
        )
    Sm, S0, dS = _complex_reps(A, src, p)
    rep_m = [sum_of(A, C.minus, p) for C, _, _ in parts]
    rep_0 = [sum_of(A, C.zero, p) for C, _, _ in parts]
    a1 = block_morphism(A, [[f1 for _, f1, _ in parts]], rep_m, [Xm])
    a0 = block_morphism(A, [[f0 for _, _, f0 in parts]], rep_0, [X0])
    # Cone(alpha)[-1]:  S_minus --(-dS, a1)--> S_zero (+) X_minus --(a0, dX)--> X_zero
    mid = direct_sum(A, [S0, Xm], p)
    neg_dS = [(-m) % p for m in dS]
    d_in = block_morphism(A, [[neg_dS], [a1]], [Sm], [S0, Xm])
    d_out = block_morphism(A, [[a0, dX]], [S0, Xm], [X0])
    K, inc = kernel(mid, X0, d_out)
    through = [la.solve(inc[g], d_in[g], p) if K.dims[g] else la.zeros(0, Sm.dims[g]) for g in range(len(inc))]
    through = [t.reshape(K.dims[g], Sm.dims[g]) for g, t in enumerate(through)]
    H, _ = cokernel(Sm, K, through)
    summands = decompose(H)
    leftover = [m for m in summands if m not in pair.modules]
    if len(leftover) != 1:
        raise ArithmeticError(f"cone did not isolate a single summand: {leftover}")
    return SignedInd(leftover[0], 0)


def _is_cobongartz_summand(A: Algebra, pair: Pair, x: SignedInd) -> bool:
    if x.shift:
        return A.is_projective(x.module)
    from .algebra import is_in_gen

    return is_in_gen(x.module, pair.modules)


# --- torsion classes --------------------------------------------------------


def quotient_closure(A: Algebra, mods) -> frozenset:
    return frozenset(IndModule(m.comp, m.top, l) for m in mods for l in range(1, m.length + 1))


def filt_gen_closure(A: Algebra, mods) -> frozenset:
    """Smallest set of indecomposables containing ``mods`` closed under quotients and extensions."""
    current = set(quotient_closure(A, mods))
    changed = True
    while changed:
        changed = False
        for z in A.indecomposables():
            if z in current:
                continue
            n = A.n(z.comp)
            for k in range(1, z.length):
                sub = IndModule(z.comp, (z.top - k) % n, z.length - k)
                quo = IndModule(z.comp, z.top, k)
                if sub in current and quo in current:
                    current.add(z)
                    current |= quotient_closure(A, [z])
                    changed = True
                    break
    return frozenset(current)


def ext_projectives(A: Algebra, torsion) -> tuple:
    """``(split, nonsplit)`` Ext-projectives of a torsion class given by its indecomposables."""
    torsion = frozenset(torsion)
    split, nonsplit = set(), set()
    for x in torsion:
        tx = tau(A, x)
        if tx is not None and any(hom_dim(A, y, tx) for y in torsion):
            continue
        if any(z.comp == x.comp and z.top == x.top and z.length > x.length for z in torsion):
            nonsplit.add(x)
        else:
            split.add(x)
    return frozenset(split), frozenset(nonsplit)


def is_torsion_class(A: Algebra, mods) -> bool:
    mods = frozenset(mods)
    return filt_gen_closure(A, mods) == mods
