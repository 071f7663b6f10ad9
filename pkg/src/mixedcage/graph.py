"""Simple mixed graphs: undirected edges plus directed arcs."""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Iterator, NamedTuple

Vertex = Hashable


class SimplicityError(ValueError):
    """Raised when a loop, parallel connection or edge/arc clash is added."""

    def __init__(self, message: str, pair: tuple):
        super().__init__(f"{message}: {pair!r}")
        self.pair = pair


class DegreeTriple(NamedTuple):
    in_arcs: int
    out_arcs: int
    edges: int


class MixedGraph:
    """A simple mixed graph.

    Between any two vertices there is at most one connection: an edge, or a
    single arc in one direction.  Antiparallel arcs count as parallel, so
    every cycle has length at least 3.  Vertices keep insertion order, which
    the builders use to fix a deterministic iteration order.
    """

    def __init__(self, vertices: Iterable[Vertex] = ()):
        self._nbr: dict[Vertex, set] = {}
        self._out: dict[Vertex, set] = {}
        self._in: dict[Vertex, set] = {}
        self._edges: dict[frozenset, tuple] = {}
        self._arcs: dict[tuple, None] = {}
        for v in vertices:
            self.add_vertex(v)

    def __repr__(self) -> str:
        return f"<MixedGraph order={self.order} edges={len(self._edges)} arcs={len(self._arcs)}>"

    def __contains__(self, v: Vertex) -> bool:
        return v in self._nbr

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return (
            self._nbr.keys() == other._nbr.keys()
            and self._edges.keys() == other._edges.keys()
            and self._arcs.keys() == other._arcs.keys()
        )

    @property
    def order(self) -> int:
        return len(self._nbr)

    @property
    def vertices(self) -> list[Vertex]:
        return list(self._nbr)

    def edges(self) -> Iterator[tuple]:
        return iter(self._edges.values())

    def arcs(self) -> Iterator[tuple]:
        return iter(self._arcs)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    @property
    def num_arcs(self) -> int:
        return len(self._arcs)

    def add_vertex(self, v: Vertex) -> None:
        if v not in self._nbr:
            self._nbr[v] = set()
            self._out[v] = set()
            self._in[v] = set()

    def _check_new(self, u: Vertex, v: Vertex, kind: str) -> None:
        for w in (u, v):
            if w not in self._nbr:
                raise KeyError(f"unknown vertex {w!r}")
        if u == v:
            raise SimplicityError(f"{kind} is a loop", (u, v))
        if self.adjacent(u, v):
            raise SimplicityError(f"{kind} duplicates an existing connection", (u, v))

    def add_edge(self, u: Vertex, v: Vertex) -> None:
        self._check_new(u, v, "edge")
        self._nbr[u].add(v)
        self._nbr[v].add(u)
        self._edges[frozenset((u, v))] = (u, v)

    def add_arc(self, u: Vertex, v: Vertex) -> None:
        self._check_new(u, v, "arc")
        self._out[u].add(v)
        self._in[v].add(u)
        self._arcs[(u, v)] = None

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return frozenset((u, v)) in self._edges

    def has_arc(self, u: Vertex, v: Vertex) -> bool:
        return (u, v) in self._arcs

    def adjacent(self, u: Vertex, v: Vertex) -> bool:
        """True if any connection (edge or arc, either direction) joins u, v."""
        return v in self._nbr[u] or v in self._out[u] or v in self._in[u]

    def neighbors(self, v: Vertex) -> set:
        return self._nbr[v]

    def out_arcs(self, v: Vertex) -> set:
        return self._out[v]

    def in_arcs(self, v: Vertex) -> set:
        return self._in[v]

    def degree(self, v: Vertex) -> DegreeTriple:
        if v not in self._nbr:
            raise KeyError(f"unknown vertex {v!r}")
        return DegreeTriple(len(self._in[v]), len(self._out[v]), len(self._nbr[v]))

    def induced_subgraph(self, keep: Iterable[Vertex]) -> "MixedGraph":
        keep = set(keep)
        sub = MixedGraph(v for v in self._nbr if v in keep)
        for u, v in self._edges.values():
            if u in keep and v in keep:
                sub.add_edge(u, v)
        for u, v in self._arcs:
            if u in keep and v in keep:
                sub.add_arc(u, v)
        return sub

    def arc_subgraph(self) -> "MixedGraph":
        """Same vertices, arcs only."""
        sub = MixedGraph(self._nbr)
        for u, v in self._arcs:
            sub.add_arc(u, v)
        return sub

    def relabel(self, mapping: Callable[[Vertex], Vertex] | dict) -> "MixedGraph":
        f = mapping.__getitem__ if isinstance(mapping, dict) else mapping
        out = MixedGraph(f(v) for v in self._nbr)
        for u, v in self._edges.values():
            out.add_edge(f(u), f(v))
        for u, v in self._arcs:
            out.add_arc(f(u), f(v))
        return out

    def copy(self) -> "MixedGraph":
        return self.relabel(lambda v: v)


def degree(G: MixedGraph, v: Vertex) -> DegreeTriple:
    return G.degree(v)


def induced_subgraph(G: MixedGraph, keep: Iterable[Vertex]) -> MixedGraph:
    return G.induced_subgraph(keep)


def is_totally_regular(G: MixedGraph, z: int, r: int) -> tuple[bool, Vertex | None]:
    """Check every vertex has z in-arcs, z out-arcs and r edges.

    Returns ``(True, None)`` or ``(False, first_failing_vertex)``.
    """
    want = DegreeTriple(z, z, r)
    for v in G.vertices:
        if G.degree(v) != want:
            return False, v
    return True, None


def bipartition_check(G: MixedGraph, side_of: Callable[[Vertex], int]) -> bool:
    """True iff every edge and every arc joins the two sides."""
    return all(side_of(u) != side_of(v) for u, v in G.edges()) and all(
        side_of(u) != side_of(v) for u, v in G.arcs()
    )


def cycle_graph(n: int, directed: bool = False) -> MixedGraph:
    G = MixedGraph(range(n))
    add = G.add_arc if directed else G.add_edge
    for i in range(n):
        add(i, (i + 1) % n)
    return G


def random_mixed_graph(rng, n: int, density: float | None = None) -> MixedGraph:
    """Random simple mixed graph on 0..n-1; each unordered pair gets an edge,
    an arc (random direction) or nothing."""
    if density is None:
        density = rng.uniform(0.05, 0.4)
    G = MixedGraph(range(n))
    for u in range(n):
        for v in range(u + 1, n):
            x = rng.random()
            if x < density / 2:
                G.add_edge(u, v)
            elif x < density:
                G.add_arc(*((u, v) if rng.random() < 0.5 else (v, u)))
    return G
