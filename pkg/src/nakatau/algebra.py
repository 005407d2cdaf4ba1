"""Nakayama algebras given by Kupisch series and the combinatorics of their
uniserial modules.

A component has vertices ``0..n-1`` and arrows ``i -> i-1`` (taken mod ``n``
for cyclic components).  An indecomposable module is determined by its
component, its top vertex and its Loewy length; its composition factors, read
from the top, are ``S(t), S(t-1), ..., S(t-len+1)``.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence, Union

from .errors import EmptyAlgebra, KupischViolation, Mismatch, ParseError

LINEAR = "linear"
CYCLIC = "cyclic"


class IndModule(NamedTuple):
    comp: int
    top: int
    length: int

    def __repr__(self) -> str:
        return f"M({self.comp}:{self.top},{self.length})"


class SignedInd(NamedTuple):
    """An indecomposable module, or a shifted projective when ``shift == 1``."""

    module: IndModule
    shift: int = 0

    def __repr__(self) -> str:
        return f"{self.module!r}[1]" if self.shift else repr(self.module)


Signable = Union[IndModule, SignedInd]


def as_signed(x: Signable) -> SignedInd:
    if isinstance(x, SignedInd):
        return x
    return SignedInd(x, 0)


class Window(NamedTuple):
    """Basis map ``source -> target`` whose image has length ``k``.

    It factors as ``source ->> source/rad^k source = rad^(len target - k) target >-> target``.
    """

    source: IndModule
    target: IndModule
    k: int


@dataclass(frozen=True)
class Component:
    kind: str
    kupisch: tuple

    @property
    def n(self) -> int:
        return len(self.kupisch)


class Algebra:
    """A basic Nakayama algebra, possibly disconnected.

    Instances are immutable and hashable, so they can key caches.
    """

    __slots__ = ("components", "_key", "_hash", "_indec")

    def __init__(self, components: Iterable[Component]):
        comps = tuple(components)
        object.__setattr__(self, "components", comps)
        key = tuple((c.kind, tuple(c.kupisch)) for c in comps)
        object.__setattr__(self, "_key", key)
        object.__setattr__(self, "_hash", hash(key))
        object.__setattr__(self, "_indec", None)

    def __setattr__(self, name, value):
        raise AttributeError("Algebra is immutable")

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        return isinstance(other, Algebra) and self._key == other._key

    def __repr__(self) -> str:
        parts = ", ".join(f"{c.kind}{list(c.kupisch)}" for c in self.components)
        return f"Algebra({parts})"

    @classmethod
    def linear(cls, kupisch: Sequence[int]) -> "Algebra":
        return validate_algebra([{"kind": LINEAR, "kupisch": list(kupisch)}])

    @classmethod
    def cyclic(cls, kupisch: Sequence[int]) -> "Algebra":
        return validate_algebra([{"kind": CYCLIC, "kupisch": list(kupisch)}])

    @property
    def rank(self) -> int:
        return sum(c.n for c in self.components)

    def n(self, comp: int) -> int:
        return self.components[comp].n

    def kupisch(self, comp: int, vertex: int) -> int:
        return self.components[comp].kupisch[vertex]

    def is_cyclic(self, comp: int) -> bool:
        return self.components[comp].kind == CYCLIC

    def is_projective(self, m: IndModule) -> bool:
        return m.length == self.components[m.comp].kupisch[m.top]

    def projective(self, comp: int, vertex: int) -> IndModule:
        return IndModule(comp, vertex, self.components[comp].kupisch[vertex])

    def projectives(self) -> list:
        return [self.projective(c, v) for c, comp in enumerate(self.components) for v in range(comp.n)]

    def indecomposables(self) -> tuple:
        if self._indec is None:
            mods = tuple(
                IndModule(c, t, l)
                for c, comp in enumerate(self.components)
                for t in range(comp.n)
                for l in range(1, comp.kupisch[t] + 1)
            )
            object.__setattr__(self, "_indec", mods)
        return self._indec

    def contains(self, m: IndModule) -> bool:
        if not (0 <= m.comp < len(self.components)):
            return False
        comp = self.components[m.comp]
        return 0 <= m.top < comp.n and 1 <= m.length <= comp.kupisch[m.top]

    def to_dict(self) -> dict:
        return {"components": [{"kind": c.kind, "kupisch": list(c.kupisch)} for c in self.components]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def validate_algebra(data) -> Algebra:
    """Check raw component data and build an :class:`Algebra`.

    ``data`` is a list of ``{"kind", "kupisch"}`` mappings or a mapping with a
    ``"components"`` key.  Linear components must be connected, i.e. every
    vertex other than 0 has Loewy length at least 2.
    """
    if isinstance(data, dict):
        data = data.get("components", [])
    data = list(data)
    if not data:
        raise EmptyAlgebra("an algebra needs at least one component")
    violations = []
    comps = []
    for ci, raw in enumerate(data):
        kind = str(raw.get("kind", "")).lower()
        kup = [int(x) for x in raw.get("kupisch", [])]
        n = len(kup)
        if kind not in (LINEAR, CYCLIC):
            violations.append((ci, -1, f"unknown kind {raw.get('kind')!r}"))
            continue
        if n == 0:
            violations.append((ci, -1, "empty Kupisch series"))
            continue
        if kind == LINEAR:
            if kup[0] != 1:
                violations.append((ci, 0, "linear component needs kupisch[0] = 1"))
            for i in range(1, n):
                if kup[i] < 2:
                    violations.append((ci, i, "linear component must be connected (kupisch >= 2 away from vertex 0)"))
                if kup[i] > kup[i - 1] + 1:
                    violations.append((ci, i, "kupisch[i] <= kupisch[i-1] + 1"))
                if kup[i] > i + 1:
                    violations.append((ci, i, "kupisch[i] <= i + 1"))
        else:
            for i in range(n):
                if kup[i] < 2:
                    violations.append((ci, i, "cyclic component needs kupisch >= 2"))
                if n > 1 and kup[i] > kup[i - 1] + 1:
                    violations.append((ci, i, "kupisch[i] <= kupisch[i-1] + 1 (cyclically)"))
        comps.append(Component(kind, tuple(kup)))
    if violations:
        raise KupischViolation(violations)
    return Algebra(comps)


NAMED = {
    "a3": ({"kind": CYCLIC, "kupisch": [2, 2, 2]},),
    "a4": ({"kind": CYCLIC, "kupisch": [3, 3, 3, 3]},),
    "d3": ({"kind": CYCLIC, "kupisch": [2, 2, 3]},),
    "e5": ({"kind": LINEAR, "kupisch": [1, 2, 2, 3, 3]},),
    "n2": ({"kind": CYCLIC, "kupisch": [4, 4]},),
}


def named_algebra(name: str) -> Algebra:
    try:
        return validate_algebra(list(NAMED[name.lower()]))
    except KeyError:
        raise ParseError(f"unknown algebra {name!r}; known: {', '.join(sorted(NAMED))}") from None


def load_algebra(text_or_path: str) -> Algebra:
    """Accept a built-in name, a JSON file path, or inline JSON."""
    if text_or_path.lower() in NAMED:
        return named_algebra(text_or_path)
    stripped = text_or_path.strip()
    try:
        if stripped.startswith("{") or stripped.startswith("["):
            data = json.loads(stripped)
        else:
            with open(text_or_path) as fh:
                data = json.load(fh)
    except FileNotFoundError:
        # "a4.json" with no such file still means the built-in a4
        stem = os.path.splitext(os.path.basename(text_or_path))[0].lower()
        if stem in NAMED:
            return named_algebra(stem)
        raise ParseError(f"no such algebra file or name: {text_or_path!r}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid algebra JSON: {exc}") from None
    return validate_algebra(data)


# --- module combinatorics -------------------------------------------------


def indecomposables(A: Algebra) -> list:
    return list(A.indecomposables())


def radical_power(A: Algebra, m: IndModule, k: int) -> Optional[IndModule]:
    if k < 0:
        raise ValueError("k must be non-negative")
    if k >= m.length:
        return None
    return IndModule(m.comp, (m.top - k) % A.n(m.comp), m.length - k)


def top_quotient(m: IndModule, k: int) -> Optional[IndModule]:
    """``M / rad^k M``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return None
    return IndModule(m.comp, m.top, min(k, m.length))


def tau(A: Algebra, m: IndModule) -> Optional[IndModule]:
    if A.is_projective(m):
        return None
    return IndModule(m.comp, (m.top - 1) % A.n(m.comp), m.length)


def projective_cover(A: Algebra, m: IndModule) -> IndModule:
    return A.projective(m.comp, m.top)


def socle_vertex(A: Algebra, m: IndModule) -> int:
    return (m.top - m.length + 1) % A.n(m.comp)


def composition_factors(A: Algebra, m: IndModule) -> list:
    n = A.n(m.comp)
    return [(m.top - j) % n for j in range(m.length)]


def hom_dim(A: Algebra, m: IndModule, n_: IndModule) -> int:
    """Number of windows ``m -> n_``, i.e. ``dim Hom(m, n_)``."""
    if m.comp != n_.comp:
        return 0
    n = A.components[m.comp].n
    top_len = m.length if m.length < n_.length else n_.length
    c = (m.top - n_.top + n_.length) % n
    k0 = c if c else n
    if k0 > top_len:
        return 0
    return (top_len - k0) // n + 1


def hom_windows(A: Algebra, m: IndModule, n_: IndModule) -> list:
    if m.comp != n_.comp:
        return []
    n = A.n(m.comp)
    return [
        Window(m, n_, k)
        for k in range(1, min(m.length, n_.length) + 1)
        if (n_.top - n_.length + k - m.top) % n == 0
    ]


def window_image(A: Algebra, w: Window) -> IndModule:
    """The image of a window, as a submodule of its target."""
    return radical_power(A, w.target, w.target.length - w.k)


def compose_windows(A: Algebra, w1: Window, w2: Window) -> Optional[Window]:
    """Composite ``w2 . w1`` as a window, or ``None`` when it vanishes."""
    if w1.target != w2.source:
        raise Mismatch(f"cannot compose {w1} with {w2}")
    k = w1.k + w2.k - w1.target.length
    if k <= 0:
        return None
    return Window(w1.source, w2.target, k)


def identity_window(m: IndModule) -> Window:
    return Window(m, m, m.length)


def is_in_gen(x: IndModule, mset: Iterable[IndModule]) -> bool:
    """Whether ``x`` is a quotient of some member of ``mset``."""
    for m in mset:
        if m.comp == x.comp and m.top == x.top and m.length >= x.length:
            return True
    return False


def trace_and_torsion(A: Algebra, mset: Iterable[IndModule], x: IndModule):
    """Split ``x`` along the torsion pair ``(Gen mset, mset^perp)``.

    Returns ``(t, f)`` with ``t`` the largest submodule of ``x`` generated by
    ``mset`` and ``f = x / t``; ``None`` stands for the zero module.
    """
    mset = [m for m in mset if m.comp == x.comp]
    n = A.n(x.comp)
    for k in range(x.length):
        top = (x.top - k) % n
        length = x.length - k
        for m in mset:
            if m.top == top and m.length >= length:
                return IndModule(x.comp, top, length), top_quotient(x, k)
    return None, x


def torsion_free_part(A: Algebra, mset: Iterable[IndModule], x: IndModule) -> Optional[IndModule]:
    return trace_and_torsion(A, mset, x)[1]


def is_tau_rigid_module(A: Algebra, m: IndModule) -> bool:
    if A.is_projective(m):
        return True
    return m.length < A.n(m.comp)


def is_tau_rigid_pair(A: Algebra, pair) -> bool:
    """``Hom(M_i, tau M_j) = 0`` for all module summands and ``Hom(P, M) = 0``."""
    pair = Pair.coerce(pair)
    mods = list(pair.modules)
    for p in pair.shifted:
        if not A.is_projective(p):
            return False
    for m in mods:
        if not is_tau_rigid_module(A, m):
            return False
    taus = [tau(A, m) for m in mods]
    for m in mods:
        for tm in taus:
            if tm is not None and hom_dim(A, m, tm):
                return False
    for p in pair.shifted:
        for m in mods:
            if hom_dim(A, p, m):
                return False
    return True


def compatible(A: Algebra, x: SignedInd, y: SignedInd) -> bool:
    """Whether ``x (+) y`` is a tau-rigid pair (each assumed rigid alone)."""
    if x.shift and y.shift:
        return True
    if x.shift:
        return hom_dim(A, x.module, y.module) == 0
    if y.shift:
        return hom_dim(A, y.module, x.module) == 0
    tx, ty = tau(A, x.module), tau(A, y.module)
    if ty is not None and hom_dim(A, x.module, ty):
        return False
    if tx is not None and hom_dim(A, y.module, tx):
        return False
    return True


def rigid_objects(A: Algebra) -> list:
    """All indecomposable tau-rigid modules and shifted projectives, canonical order."""
    out = [SignedInd(m, 0) for m in A.indecomposables() if is_tau_rigid_module(A, m)]
    out += [SignedInd(p, 1) for p in A.projectives()]
    return out


@dataclass(frozen=True)
class Pair:
    """A basic pair ``(M, P)``: module summands and shifted projective summands."""

    modules: frozenset = field(default_factory=frozenset)
    shifted: frozenset = field(default_factory=frozenset)

    @classmethod
    def coerce(cls, obj) -> "Pair":
        if isinstance(obj, Pair):
            return obj
        if isinstance(obj, tuple) and len(obj) == 2 and all(isinstance(o, (set, frozenset, list, tuple)) for o in obj) \
                and not any(isinstance(o, (IndModule, SignedInd)) for o in obj):
            return cls(frozenset(obj[0]), frozenset(obj[1]))
        return cls.from_signed(obj)

    @classmethod
    def from_signed(cls, items: Iterable[Signable]) -> "Pair":
        mods, shifted = set(), set()
        for it in items:
            s = as_signed(it)
            (shifted if s.shift else mods).add(s.module)
        return cls(frozenset(mods), frozenset(shifted))

    def summands(self) -> list:
        return sorted([SignedInd(m, 0) for m in self.modules] + [SignedInd(p, 1) for p in self.shifted])

    def __len__(self) -> int:
        return len(self.modules) + len(self.shifted)

    def __iter__(self) -> Iterator[SignedInd]:
        return iter(self.summands())

    def __contains__(self, x) -> bool:
        s = as_signed(x)
        return s.module in (self.shifted if s.shift else self.modules)

    def without(self, x: Signable) -> "Pair":
        s = as_signed(x)
        if s.shift:
            return Pair(self.modules, self.shifted - {s.module})
        return Pair(self.modules - {s.module}, self.shifted)

    def with_(self, x: Signable) -> "Pair":
        s = as_signed(x)
        if s.shift:
            return Pair(self.modules, self.shifted | {s.module})
        return Pair(self.modules | {s.module}, self.shifted)

    def sorted_modules(self) -> list:
        return sorted(self.modules)

    def sorted_shifted(self) -> list:
        return sorted(self.shifted)


# --- text forms ------------------------------------------------------------


def format_signed(A: Algebra, x: Signable) -> str:
    s = as_signed(x)
    m = s.module
    if s.shift:
        return f"p:{m.comp}:{m.top}[1]"
    if A.is_projective(m):
        return f"p:{m.comp}:{m.top}"
    return f"m:{m.comp}:{m.top}:{m.length}"


def parse_signed(A: Algebra, text: str) -> SignedInd:
    raw = text.strip()
    shift = 0
    if raw.endswith("[1]"):
        shift = 1
        raw = raw[:-3]
    parts = raw.split(":")
    try:
        if parts[0] == "m" and len(parts) == 4:
            m = IndModule(int(parts[1]), int(parts[2]), int(parts[3]))
        elif parts[0] == "p" and len(parts) == 3:
            c, v = int(parts[1]), int(parts[2])
            if not (0 <= c < len(A.components) and 0 <= v < A.n(c)):
                raise ParseError(f"no vertex {v} in component {c}: {text!r}")
            m = A.projective(c, v)
        else:
            raise ParseError(f"cannot parse module {text!r}")
    except ValueError:
        raise ParseError(f"cannot parse module {text!r}") from None
    if not A.contains(m):
        raise ParseError(f"{text!r} is not a module of {A!r}")
    if shift and not A.is_projective(m):
        raise ParseError(f"only projectives can be shifted: {text!r}")
    return SignedInd(m, shift)


def parse_list(A: Algebra, text: str) -> list:
    return [parse_signed(A, part) for part in text.split(",") if part.strip()]


def format_list(A: Algebra, items: Iterable[Signable]) -> str:
    return ", ".join(format_signed(A, x) for x in items)


def format_pair(A: Algebra, pair) -> str:
    return format_list(A, Pair.coerce(pair).summands())


@lru_cache(maxsize=None)
def gen_closure(A: Algebra, mods: frozenset) -> frozenset:
    """Indecomposables of ``Gen`` of a set of modules."""
    return frozenset(
        IndModule(m.comp, m.top, l) for m in mods for l in range(1, m.length + 1)
    )
