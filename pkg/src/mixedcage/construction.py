"""The mixed graphs H_{q,p}: two copies of G_q joined, part by part, by
circulant layers of arcs between each vertex and the copies of its
neighbours in exponent order.

Two arc rule sets are available.

``"corrected"`` (the default) joins original and copy vertices so that every
part is the circulant C_{2(q-1)}(1, 3, ..., 2z-1), with the point-side parts
ordered by the exponent of x and the line-side parts by the exponent of 1/m
(original before copy in both).  This graph has mixed girth 6.

``"literal"`` uses the rules as originally stated, where for jump i a line-side vertex
sends its arc to the copy shifted by xi^-i and receives one from the copy
shifted by xi^-(i-1).  For i = 1 this gives (x,y) -> (x,y)' and
[m,b]' -> [m,b], and together with the incidences (x,y)-[m,b] and
(x,y)'-[m,b]' that closes a 4-cycle, so the literal graph has girth 4.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field as dc_field
from enum import Enum
from typing import Any

from .field import GF, PrimePower, classify_prime_power, field
from .geometry import (
    Kind,
    PartId,
    PartKind,
    Vertex,
    all_parts,
    build_semiplane_L,
    label,
    part_members,
    part_of,
    sort_key,
)
from .girth import directed_girth, find_cycle_of_length, is_cycle, mixed_girth
from .graph import MixedGraph, bipartition_check, is_totally_regular

log = logging.getLogger(__name__)

RULES = ("corrected", "literal")
MIN_Q = 7
MIN_FORCED_Q = 4


class InvalidQError(ValueError):
    """q is not a prime power, or is below the supported minimum."""


class ParityCase(Enum):
    EVEN_Q = "EvenQ"
    ODD_Q_ODD_P = "OddQOddP"
    ODD_Q_EVEN_P = "OddQEvenP"


@dataclass(frozen=True)
class ConstructionParams:
    prime_power: PrimePower
    p: int
    z: int
    parity_case: ParityCase

    @property
    def q(self) -> int:
        return self.prime_power.q

    @property
    def jump_indices(self) -> range:
        return range(1, self.z + 1)

    @property
    def jumps(self) -> tuple[int, ...]:
        return tuple(2 * i - 1 for i in self.jump_indices)

    @property
    def part_size(self) -> int:
        return 2 * (self.q - 1)

    @property
    def order(self) -> int:
        return 4 * self.q * self.q - 4

    def as_dict(self) -> dict[str, Any]:
        return {
            "q": self.q,
            "p": self.p,
            "z": self.z,
            "parity_case": self.parity_case.value,
            "jumps": list(self.jumps),
        }


def check_q(q: int, force: bool = False) -> PrimePower:
    if q < 2:
        raise InvalidQError(f"{q} is not a prime power")
    pk = classify_prime_power(q)
    if pk is None:
        raise InvalidQError(f"{q} is not a prime power")
    if q < MIN_FORCED_Q:
        raise InvalidQError(f"q must be at least {MIN_FORCED_Q}, got {q}")
    if q < MIN_Q:
        if not force:
            raise InvalidQError(f"q must be at least {MIN_Q} (use force for q in {{4, 5}}), got {q}")
        log.warning("q=%d is below %d; girth is verified, not assumed", q, MIN_Q)
    return pk


def derive_params(q: int, force: bool = False) -> ConstructionParams:
    pk = check_q(q, force)
    if q % 2 == 0:
        p = (q - 2) // 2
        assert 2 * (q - 1) == 4 * p + 2 and p % 2 == 1
        return ConstructionParams(pk, p, (p + 1) // 2, ParityCase.EVEN_Q)
    p = (q - 1) // 2 - 1
    if p % 2 == 1:
        return ConstructionParams(pk, p, (p + 1) // 2, ParityCase.ODD_Q_ODD_P)
    return ConstructionParams(pk, p, p // 2, ParityCase.ODD_Q_EVEN_P)


def _point_side(v: Vertex) -> bool:
    return v.kind in (Kind.AFFINE_POINT, Kind.VERTICAL_LINE)


def arc_shifts(point_side: bool, i: int, rules: str = "corrected") -> tuple[int, int]:
    """Exponent shifts for jump index i on one side of the construction.

    Returns ``(to_copy, to_original)``: an original vertex with first
    coordinate xi^e sends an arc to the copy with exponent e + to_copy, and a
    copy with exponent e sends one to the original with exponent
    e + to_original.
    """
    if rules not in RULES:
        raise ValueError(f"unknown rule set {rules!r}")
    if point_side:
        return i - 1, i
    if rules == "literal":
        return -i, -(i - 1)
    return -(i - 1), -i


def build_H(q: int, force: bool = False, rules: str = "corrected") -> MixedGraph:
    """H_{q,p} on 4q^2 - 4 vertices, (z, q)-totally regular."""
    return _build(derive_params(q, force), rules)


def _build(params: ConstructionParams, rules: str) -> MixedGraph:
    q = params.q
    F = field(q)
    Gq = build_semiplane_L(F)
    n = q - 1

    H = MixedGraph(sorted(
        [v for v in Gq.vertices] + [v.as_copy() for v in Gq.vertices], key=sort_key(F)
    ))
    for u, v in Gq.edges():
        H.add_edge(u, v)
        H.add_edge(u.as_copy(), v.as_copy())

    for v in Gq.vertices:
        e = F.log(v.first)
        side = _point_side(v)
        for i in params.jump_indices:
            to_copy, to_orig = arc_shifts(side, i, rules)
            H.add_arc(v, v._replace(first=F.exp((e + to_copy) % n), copy=True))
            H.add_arc(v.as_copy(), v._replace(first=F.exp((e + to_orig) % n)))
    return H


def circulant_order(F: GF, part: PartId, rules: str = "corrected") -> list[Vertex]:
    """The 2(q-1) vertices of ``part`` listed so that H's arcs on them are
    exactly those of the circulant with jumps 1, 3, ..., 2z-1.

    Point rows and the vertical lines are listed by ascending exponent of
    the first coordinate, original before copy.  Line pencils and slope
    points follow the exponent of 1/m under the corrected rules; under the
    literal rules the original xi^e sits at position -2e and its copy at
    -2e - 1 (mod 2(q-1)).
    """
    n = F.q - 1
    orig = part_members(F, part)
    slots: list[Vertex | None] = [None] * (2 * n)
    point_side = part.kind in (PartKind.POINT_ROW, PartKind.LINF)
    for v in orig:
        e = F.log(v.first)
        if point_side:
            a, c = 2 * e, 2 * e + 1
        elif rules == "corrected":
            a, c = 2 * (-e % n), 2 * (-e % n) + 1
        else:
            a, c = -2 * e % (2 * n), (-2 * e - 1) % (2 * n)
        slots[a] = v
        slots[c] = v.as_copy()
    return slots


def circulant_part(H: MixedGraph, part: PartId) -> MixedGraph:
    """Induced sub-mixed-graph of H on one part (originals and copies)."""
    members = [v for v in H.vertices if v.kind not in (Kind.LINE_AT_INFINITY, Kind.POINT_AT_INFINITY)
               and part_of(v) == part]
    if not members:
        raise KeyError(f"unknown part {part}")
    return H.induced_subgraph(members)


def standalone_circulant(n: int, jumps) -> MixedGraph:
    """Circulant digraph on 0..n-1 with arcs a -> a + j (mod n)."""
    jumps = sorted(set(jumps))
    for j in jumps:
        if not 0 < j < n:
            raise ValueError(f"jump {j} out of range for n={n}")
    G = MixedGraph(range(n))
    for a in range(n):
        for j in jumps:
            G.add_arc(a, (a + j) % n)
    return G


def is_circulant_labelling(G: MixedGraph, order: list, jumps) -> bool:
    """True iff the arcs of G are exactly a -> a + j over ``order`` and G has
    no edges."""
    n = len(order)
    want = {(order[a], order[(a + j) % n]) for a in range(n) for j in jumps}
    return G.num_edges == 0 and set(G.arcs()) == want and set(G.vertices) == set(order)


# -- verification -------------------------------------------------------------


def bipartition_side(v: Vertex) -> int:
    """Side 0 = original lines, copy points (incl. L_i and P_i'); side 1 =
    the rest."""
    return 0 if v.is_line() != v.copy else 1


def check_matchings(F: GF, H: MixedGraph) -> list[str]:
    """Edges between parts of one copy: a matching between PointRow(y) and
    LinePencil(b), perfect for y != b and empty for y == b; perfect matchings
    PointRow(y)-LinfPart and LinePencil(b)-PinfPart; nothing between LinfPart
    and PinfPart.  Returns a list of violations."""
    problems = []
    expect: dict[PartId, dict[PartId, int]] = {}
    rows = [PartId(PartKind.POINT_ROW, y) for y in F.elements()]
    pencils = [PartId(PartKind.LINE_PENCIL, b) for b in F.elements()]
    linf, pinf = PartId(PartKind.LINF), PartId(PartKind.PINF)
    for r in rows:
        expect[r] = {pb: int(pb.coord != r.coord) for pb in pencils} | {linf: 1}
    for pb in pencils:
        expect[pb] = {r: int(pb.coord != r.coord) for r in rows} | {pinf: 1}
    expect[linf] = {r: 1 for r in rows}
    expect[pinf] = {pb: 1 for pb in pencils}

    for v in H.vertices:
        counts: dict[PartId, int] = {}
        for w in H.neighbors(v):
            if w.copy != v.copy:
                problems.append(f"edge {label(F, v)}-{label(F, w)} crosses copies")
            counts[part_of(w)] = counts.get(part_of(w), 0) + 1
        want = {k: c for k, c in expect[part_of(v)].items() if c}
        if counts != want:
            problems.append(f"{label(F, v)}: neighbour parts {sorted(map(str, counts))} "
                            f"do not form the expected matchings")
    return problems


def check_arc_locality(H: MixedGraph) -> list[tuple[Vertex, Vertex]]:
    """Arcs that do not join an original and a copy within one part."""
    return [(u, v) for u, v in H.arcs() if u.copy == v.copy or part_of(u) != part_of(v)]


@dataclass
class VerificationReport:
    q: int
    params: dict[str, Any]
    rules: str
    order: int
    expected_order: int
    z: int
    r: int
    regular: bool
    irregular_vertex: str | None
    mixed_girth: int | None
    no_short_cycle: bool
    girth_witness: list[str] | None
    bipartite: bool
    matchings_ok: bool
    arc_locality_ok: bool
    circulants_ok: bool
    part_directed_girths: dict[str, int | None]
    failures: list[str] = dc_field(default_factory=list)

    @property
    def claims_pass(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["claims_pass"] = self.claims_pass
        return d

    def format(self) -> str:
        dg = sorted(set(self.part_directed_girths.values()), key=lambda g: (g is None, g))
        lines = [
            f"q={self.q} p={self.params['p']} case={self.params['parity_case']} "
            f"jumps={self.params['jumps']} rules={self.rules}",
            f"order={self.order} (expected {self.expected_order})",
            f"z={self.z} r={self.r} regular={'yes' if self.regular else 'no'}"
            + (f" (fails at {self.irregular_vertex})" if self.irregular_vertex else ""),
            f"girth={self.mixed_girth} no_cycle_shorter_than_6={'yes' if self.no_short_cycle else 'no'}",
            f"girth_witness={' '.join(self.girth_witness) if self.girth_witness else '-'}",
            f"bipartite={'yes' if self.bipartite else 'no'} matchings={'ok' if self.matchings_ok else 'FAIL'} "
            f"arc_locality={'ok' if self.arc_locality_ok else 'FAIL'} "
            f"circulants={'ok' if self.circulants_ok else 'FAIL'}",
            f"part_directed_girths={dg}",
            "claims: " + ("PASS" if self.claims_pass else "FAIL"),
        ]
        lines += [f"  failure: {f}" for f in self.failures]
        return "\n".join(lines)


def verify_construction(
    q: int, force: bool = False, rules: str = "corrected", workers: int = 1, girth: int = 6
) -> VerificationReport:
    """Build H_{q,p} and check every claimed property; failures are recorded
    in the report rather than raised."""
    params = derive_params(q, force)
    F = field(q)
    H = _build(params, rules)
    failures = []

    if H.order != params.order:
        failures.append(f"order {H.order} != {params.order}")

    regular, bad = is_totally_regular(H, params.z, q)
    if not regular:
        failures.append(f"not ({params.z},{q})-regular at {label(F, bad)}: {H.degree(bad)}")

    short = mixed_girth(H, depth_bound=girth - 1, workers=workers)
    no_short = short is None
    if not no_short:
        failures.append(f"cycle of length {short} < {girth}")
    measured = short if short is not None else None
    witness = None
    if no_short:
        cyc = find_cycle_of_length(H, girth)
        if cyc is not None and is_cycle(H, cyc):
            measured = girth
            witness = [label(F, v) for v in cyc]
        else:
            failures.append(f"no cycle of length {girth} found")
    else:
        cyc = find_cycle_of_length(H, short)
        witness = [label(F, v) for v in cyc] if cyc else None

    bipartite = bipartition_check(H, bipartition_side)
    if not bipartite:
        failures.append("not bipartite under the original-lines/copy-points split")

    matching_problems = check_matchings(F, H)
    failures += matching_problems[:5]
    locality = check_arc_locality(H)
    if locality:
        failures.append(f"{len(locality)} arcs leave their part or stay within one copy")

    circulants_ok = True
    part_girths: dict[str, int | None] = {}
    for part in all_parts(F):
        sub = circulant_part(H, part)
        if not is_circulant_labelling(sub, circulant_order(F, part, rules), params.jumps):
            circulants_ok = False
            failures.append(f"{part} is not the circulant with jumps {params.jumps}")
        dg = directed_girth(sub)
        part_girths[str(part)] = dg
        if dg is None or dg < girth:
            failures.append(f"{part} has directed girth {dg} < {girth}")
        elif params.parity_case is ParityCase.EVEN_Q and dg != girth:
            failures.append(f"{part} has directed girth {dg}, expected exactly {girth}")

    return VerificationReport(
        q=q,
        params=params.as_dict(),
        rules=rules,
        order=H.order,
        expected_order=params.order,
        z=params.z,
        r=q,
        regular=regular,
        irregular_vertex=None if regular else label(F, bad),
        mixed_girth=measured,
        no_short_cycle=no_short,
        girth_witness=witness,
        bipartite=bipartite,
        matchings_ok=not matching_problems,
        arc_locality_ok=not locality,
        circulants_ok=circulants_ok,
        part_directed_girths=part_girths,
        failures=failures,
    )
