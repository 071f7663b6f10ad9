"""The Desarguesian plane PG(2, q), its incidence graph, and the elliptic
semiplane of type L obtained by deleting the antiflag (L_0, P_0).

Coordinates follow the usual affine chart: points (x, y), lines [m, b] with
equation y = m x + b, vertical lines L_i (x = i), slope points P_m (the common
point of all lines of slope m), plus the line at infinity and the point at
infinity.
"""

from __future__ import annotations

from enum import IntEnum
from typing import Callable, NamedTuple

from .field import GF, field
from .graph import MixedGraph


class Kind(IntEnum):
    AFFINE_POINT = 0  # (x, y)
    AFFINE_LINE = 1  # [m, b]
    VERTICAL_LINE = 2  # L_i
    SLOPE_POINT = 3  # P_i
    LINE_AT_INFINITY = 4
    POINT_AT_INFINITY = 5


LINE_KINDS = frozenset({Kind.AFFINE_LINE, Kind.VERTICAL_LINE, Kind.LINE_AT_INFINITY})


class Vertex(NamedTuple):
    kind: Kind
    first: int | None = None  # x, m or i
    second: int | None = None  # y or b
    copy: bool = False

    def is_line(self) -> bool:
        return self.kind in LINE_KINDS

    def as_copy(self, copy: bool = True) -> "Vertex":
        return self._replace(copy=copy)


def point(x: int, y: int, copy: bool = False) -> Vertex:
    return Vertex(Kind.AFFINE_POINT, x, y, copy)


def line(m: int, b: int, copy: bool = False) -> Vertex:
    return Vertex(Kind.AFFINE_LINE, m, b, copy)


def vline(i: int, copy: bool = False) -> Vertex:
    return Vertex(Kind.VERTICAL_LINE, i, None, copy)


def spoint(i: int, copy: bool = False) -> Vertex:
    return Vertex(Kind.SLOPE_POINT, i, None, copy)


L_INF = Vertex(Kind.LINE_AT_INFINITY)
P_INF = Vertex(Kind.POINT_AT_INFINITY)


class PartKind(IntEnum):
    POINT_ROW = 0
    LINE_PENCIL = 1
    LINF = 2
    PINF = 3


class PartId(NamedTuple):
    kind: PartKind
    coord: int | None = None

    def __str__(self) -> str:
        if self.kind is PartKind.POINT_ROW:
            return f"PointRow({self.coord})"
        if self.kind is PartKind.LINE_PENCIL:
            return f"LinePencil({self.coord})"
        return "LinfPart" if self.kind is PartKind.LINF else "PinfPart"


LINF_PART = PartId(PartKind.LINF)
PINF_PART = PartId(PartKind.PINF)


def part_of(v: Vertex) -> PartId:
    if v.kind is Kind.AFFINE_POINT:
        return PartId(PartKind.POINT_ROW, v.second)
    if v.kind is Kind.AFFINE_LINE:
        return PartId(PartKind.LINE_PENCIL, v.second)
    if v.kind is Kind.VERTICAL_LINE:
        return LINF_PART
    if v.kind is Kind.SLOPE_POINT:
        return PINF_PART
    raise ValueError(f"{v!r} does not belong to the semiplane")


def all_parts(F: GF) -> list[PartId]:
    rows = [PartId(PartKind.POINT_ROW, y) for y in F.elements()]
    pencils = [PartId(PartKind.LINE_PENCIL, b) for b in F.elements()]
    return rows + pencils + [LINF_PART, PINF_PART]


def part_members(F: GF, part: PartId, copy: bool = False) -> list[Vertex]:
    """Vertices of ``part`` on one side, in exponent order of the first
    coordinate."""
    k, c = part.kind, part.coord
    if k is PartKind.POINT_ROW:
        return [point(x, c, copy) for x in F.nonzero()]
    if k is PartKind.LINE_PENCIL:
        return [line(m, c, copy) for m in F.nonzero()]
    if k is PartKind.LINF:
        return [vline(i, copy) for i in F.nonzero()]
    return [spoint(i, copy) for i in F.nonzero()]


def sort_key(F: GF) -> Callable[[Vertex], tuple]:
    """Total order: kind, exponent of the first coordinate (zero first),
    second coordinate, then originals before copies."""

    def key(v: Vertex) -> tuple:
        first = -2 if v.first is None else -1 if v.first == 0 else F.log(v.first)
        second = -1 if v.second is None else v.second
        return (int(v.kind), first, second, v.copy)

    return key


def label(F: GF, v: Vertex) -> str:
    """Canonical text label, e.g. ``P(x^3,0)``, ``L'[x^2,1]``, ``Linf(x)``.

    ``Linf``/``Pinf`` without an argument are the line and point at infinity.
    """
    tick = "'" if v.copy else ""
    k = v.kind
    if k is Kind.AFFINE_POINT:
        return f"P{tick}({F.label(v.first)},{F.label(v.second)})"
    if k is Kind.AFFINE_LINE:
        return f"L{tick}[{F.label(v.first)},{F.label(v.second)}]"
    if k is Kind.VERTICAL_LINE:
        return f"Linf{tick}({F.label(v.first)})"
    if k is Kind.SLOPE_POINT:
        return f"Pinf{tick}({F.label(v.first)})"
    return ("Linf" if k is Kind.LINE_AT_INFINITY else "Pinf") + tick


def _as_field(q: int | GF) -> GF:
    return q if isinstance(q, GF) else field(q)


def build_projective_incidence_graph(q: int | GF) -> MixedGraph:
    """Incidence (Levi) graph of PG(2, q): 2q^2 + 2q + 2 vertices, edges only."""
    F = _as_field(q)
    elems = list(F.elements())
    firsts = [0, *F.nonzero()]  # canonical order of first coordinates
    G = MixedGraph()
    for x in firsts:
        for y in elems:
            G.add_vertex(point(x, y))
    for m in firsts:
        for b in elems:
            G.add_vertex(line(m, b))
    for i in firsts:
        G.add_vertex(vline(i))
    for i in firsts:
        G.add_vertex(spoint(i))
    G.add_vertex(L_INF)
    G.add_vertex(P_INF)

    for m in elems:
        for x in elems:
            mx = F.mul(m, x)
            for b in elems:
                G.add_edge(point(x, F.add(mx, b)), line(m, b))
    for x in elems:
        for y in elems:
            G.add_edge(point(x, y), vline(x))
    for m in elems:
        for b in elems:
            G.add_edge(spoint(m), line(m, b))
    for i in elems:
        G.add_edge(spoint(i), L_INF)
        G.add_edge(P_INF, vline(i))
    G.add_edge(P_INF, L_INF)
    return G


def in_semiplane(v: Vertex) -> bool:
    """Membership in G_q: nonzero first coordinate, no infinite elements."""
    return v.first is not None and v.first != 0


def build_semiplane_L(q: int | GF) -> MixedGraph:
    """G_q: PG(2, q) minus line L_0 with its points and point P_0 with its
    lines.  2(q-1)(q+1) vertices, q-regular, girth 6."""
    F = _as_field(q)
    if F.q < 3:
        raise ValueError("the type-L semiplane needs q >= 3")
    plane = build_projective_incidence_graph(F)
    return plane.induced_subgraph(v for v in plane.vertices if in_semiplane(v))
