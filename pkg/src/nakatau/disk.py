"""Punctured-disk arc model: modules as arcs, rigidity as non-crossing."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import networkx as nx

from .algebra import Algebra, IndModule, Pair, SignedInd, as_signed, is_tau_rigid_module
from .errors import SignedModelUnavailable, UnsupportedFormat

PLUS, MINUS = "+", "-"

# geometry, fixed for byte-stable output
RADIUS = 100.0
MARGIN = 40.0
LABEL_OFFSET = 16.0
POINT_RADIUS = 3.0
SAMPLES = 24


class Arc(NamedTuple):
    """Inner arc ``<start, end>`` or, with ``start`` None, the puncture arc ``<*, end>``."""

    comp: int
    start: Optional[int]
    end: int
    span: int = 0

    @property
    def is_projective(self) -> bool:
        return self.start is None

    def __repr__(self) -> str:
        if self.start is None:
            return f"<*,{self.end}>@{self.comp}"
        return f"<{self.start},{self.end}>@{self.comp}"


def arc_key(arc: Arc):
    return (arc.comp, arc.start is None, -1 if arc.start is None else arc.start, arc.end)


def signed_model_available(A: Algebra, comp: int) -> bool:
    """All Loewy lengths of projectives in ``comp`` reach the rank of the component."""
    n = A.n(comp)
    return A.is_cyclic(comp) and all(k >= n for k in A.components[comp].kupisch)


def module_arc(A: Algebra, m: IndModule) -> Arc:
    if A.is_projective(m):
        return Arc(m.comp, None, m.top)
    n = A.n(m.comp)
    return Arc(m.comp, (m.top - m.length - 1) % n, m.top, m.length + 1)


def to_arc(A: Algebra, x, decorative: bool = False):
    """``(arc, sign)``; sign is None for modules, ``-`` for shifted projectives."""
    s = as_signed(x)
    m = s.module
    if not s.shift:
        return module_arc(A, m), (PLUS if A.is_projective(m) else None)
    if not (decorative or signed_model_available(A, m.comp)):
        raise SignedModelUnavailable(
            f"component {m.comp} has a projective shorter than its rank; pass decorative=True to draw anyway"
        )
    return Arc(m.comp, None, (m.top - 1) % A.n(m.comp)), MINUS


def arcs_cross(A: Algebra, a: Arc, b: Arc) -> bool:
    """Whether two arcs on the same disk must intersect."""
    if a.comp != b.comp:
        return False
    n = A.n(a.comp)
    if a.is_projective and b.is_projective:
        return False
    if a.is_projective or b.is_projective:
        p, q = (a, b) if a.is_projective else (b, a)
        lo, hi = q.start, q.start + q.span
        return any(lo < p.end + k * n < hi for k in range(-1, 3))
    a0, a1 = a.start, a.start + a.span
    for k in range(-2, 3):
        b0, b1 = b.start + k * n, b.start + b.span + k * n
        if a0 < b0 < a1 < b1 or b0 < a0 < b1 < a1:
            return True
    return False


def admissible_arcs(A: Algebra) -> list:
    """Arcs of tau-rigid non-projective modules and all puncture arcs."""
    arcs = []
    for m in A.indecomposables():
        if is_tau_rigid_module(A, m) and not A.is_projective(m):
            arcs.append(module_arc(A, m))
    arcs += [Arc(c, None, v) for c, comp in enumerate(A.components) for v in range(comp.n)]
    return arcs


def arc_graph(A: Algebra) -> nx.Graph:
    arcs = admissible_arcs(A)
    G = nx.Graph()
    G.add_nodes_from(arcs)
    for i, a in enumerate(arcs):
        for b in arcs[i + 1:]:
            if not arcs_cross(A, a, b):
                G.add_edge(a, b)
    return G


def triangulations(A: Algebra) -> list:
    """Maximal non-crossing sets of admissible arcs."""
    return sorted((sorted(c, key=arc_key) for c in nx.find_cliques(arc_graph(A))), key=lambda t: [arc_key(a) for a in t])


def arcs_compatible(A: Algebra, x, y, decorative: bool = False) -> bool:
    """Arc-model compatibility of two signed objects (each assumed rigid alone)."""
    ax, sx = to_arc(A, x, decorative)
    ay, sy = to_arc(A, y, decorative)
    if ax.comp == ay.comp and sx and sy and sx != sy:
        return False
    if ax == ay:
        return False
    return not arcs_cross(A, ax, ay)


def signed_triangulation_count(A: Algebra) -> int:
    """Triangulations times the two signs, multiplied over components."""
    total = 1
    for c, comp in enumerate(A.components):
        sub = Algebra([comp])
        total *= 2 * len(triangulations(sub))
    return total


# --- drawing ----------------------------------------------------------------


@dataclass
class SignedDiagram:
    algebra: Algebra
    arcs: list
    signs: dict = field(default_factory=dict)  # comp -> sign
    labels: bool = True


def diagram_of(A: Algebra, pair, decorative: bool = True) -> SignedDiagram:
    arcs, signs = [], {}
    for s in Pair.coerce(pair).summands():
        arc, sign = to_arc(A, s, decorative)
        arcs.append(arc)
        if sign == MINUS or (sign == PLUS and arc.comp not in signs):
            signs[arc.comp] = sign
    return SignedDiagram(A, sorted(arcs, key=arc_key), signs)


def _centre(comp: int):
    return MARGIN + RADIUS + comp * (2 * RADIUS + 2 * MARGIN), MARGIN + RADIUS


def _point(n: int, v: float, cx: float, cy: float, r: float = RADIUS):
    theta = math.pi / 2 + 2 * math.pi * v / n
    return cx + r * math.cos(theta), cy - r * math.sin(theta)


def _arc_points(n: int, arc: Arc, cx: float, cy: float) -> list:
    if arc.is_projective:
        return [(cx, cy), _point(n, arc.end, cx, cy)]
    depth = 0.15 + 0.55 * arc.span / n
    out = []
    for i in range(SAMPLES + 1):
        u = i / SAMPLES
        r = RADIUS * (1 - depth * math.sin(math.pi * u))
        out.append(_point(n, arc.start + u * arc.span, cx, cy, r))
    return out


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def render(diagram: SignedDiagram, fmt: str = "svg") -> str:
    if fmt == "svg":
        return _render_svg(diagram)
    if fmt == "tikz":
        return _render_tikz(diagram)
    raise UnsupportedFormat(f"unknown format {fmt!r}; use svg or tikz")


def _render_svg(d: SignedDiagram) -> str:
    A = d.algebra
    width = len(A.components) * (2 * RADIUS + 2 * MARGIN)
    height = 2 * RADIUS + 2 * MARGIN
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(width)}" height="{_fmt(height)}">',
    ]
    for c, comp in enumerate(A.components):
        cx, cy = _centre(c)
        n = comp.n
        lines.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(RADIUS)}" fill="none" stroke="black"/>')
        lines.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(POINT_RADIUS)}" fill="black"/>')
        for v in range(n):
            x, y = _point(n, v, cx, cy)
            lx, ly = _point(n, v, cx, cy, RADIUS + LABEL_OFFSET)
            lines.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(POINT_RADIUS)}" fill="black"/>')
            lines.append(f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" text-anchor="middle" dominant-baseline="middle">{v}</text>')
        for arc in d.arcs:
            if arc.comp != c:
                continue
            pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in _arc_points(n, arc, cx, cy))
            lines.append(f'<polyline points="{pts}" fill="none" stroke="blue"/>')
        sign = d.signs.get(c)
        if sign:
            lines.append(f'<text x="{_fmt(cx + 8)}" y="{_fmt(cy - 8)}" text-anchor="middle">{sign}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _render_tikz(d: SignedDiagram) -> str:
    A = d.algebra
    scale = 1 / 50.0
    lines = ["\\begin{tikzpicture}"]
    for c, comp in enumerate(A.components):
        cx, cy = _centre(c)
        n = comp.n

        def tk(x, y):
            return f"({_fmt(x * scale)},{_fmt(-y * scale)})"

        lines.append(f"  \\draw {tk(cx, cy)} circle ({_fmt(RADIUS * scale)});")
        lines.append(f"  \\fill {tk(cx, cy)} circle (2pt);")
        for v in range(n):
            x, y = _point(n, v, cx, cy)
            lx, ly = _point(n, v, cx, cy, RADIUS + LABEL_OFFSET)
            lines.append(f"  \\fill {tk(x, y)} circle (1.5pt);")
            lines.append(f"  \\node at {tk(lx, ly)} {{${v}$}};")
        for arc in d.arcs:
            if arc.comp != c:
                continue
            pts = " -- ".join(tk(x, y) for x, y in _arc_points(n, arc, cx, cy))
            lines.append(f"  \\draw[blue] {pts};")
        sign = d.signs.get(c)
        if sign:
            lines.append(f"  \\node at {tk(cx + 8, cy - 8)} {{${sign}$}};")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"
