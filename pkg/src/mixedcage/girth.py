"""Mixed girth, directed girth, and an exhaustive cycle oracle.

A cycle follows arcs forward and edges in either direction, never repeats a
vertex, and has length at least 3.  ``mixed_girth`` examines each connection
separately: an arc (v, u) closes a cycle of length 1 + d(u, v), and an edge
{u, v} closes one of length 1 + d(u, v) measured in the graph without that
edge.  Distances come from a bidirectional breadth-first search truncated at
the current best bound.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .graph import MixedGraph, Vertex

ORACLE_MAX_ORDER = 60


class _Indexed:
    """Integer-indexed adjacency of a mixed graph, picklable for workers."""

    def __init__(self, G: MixedGraph):
        self.vertices = G.vertices
        index = {v: i for i, v in enumerate(self.vertices)}
        n = len(self.vertices)
        self.out: list[list[int]] = [[] for _ in range(n)]
        self.inn: list[list[int]] = [[] for _ in range(n)]
        # (src, dst, is_edge): search a path src -> dst
        self.connections: list[tuple[int, int, bool]] = []
        for a, b in G.edges():
            i, j = index[a], index[b]
            self.out[i].append(j)
            self.out[j].append(i)
            self.inn[i].append(j)
            self.inn[j].append(i)
            self.connections.append((i, j, True))
        for a, b in G.arcs():
            i, j = index[a], index[b]
            self.out[i].append(j)
            self.inn[j].append(i)
            self.connections.append((j, i, False))


def _distance(out, inn, src: int, dst: int, skip_direct: bool, limit: int) -> int | None:
    """Length of a shortest src -> dst path of length <= limit, else None.

    With ``skip_direct`` the direct connection src-dst is ignored.  Only the
    two roots can carry that connection, so it is dropped on their first
    expansion only.
    """
    if limit < 1:
        return None
    f_seen, f_front = {src}, [src]
    b_seen, b_front = {dst}, [dst]
    f_root = b_root = True
    dist = 0
    while dist < limit:
        nxt: set[int] = set()
        if len(f_front) <= len(b_front):
            for w in f_front:
                nxt.update(out[w])
            if f_root and skip_direct:
                nxt.discard(dst)
            f_root = False
            nxt -= f_seen
            f_seen |= nxt
            f_front = list(nxt)
            other = b_seen
        else:
            for w in b_front:
                nxt.update(inn[w])
            if b_root and skip_direct:
                nxt.discard(src)
            b_root = False
            nxt -= b_seen
            b_seen |= nxt
            b_front = list(nxt)
            other = f_seen
        dist += 1
        if not nxt:
            return None
        if not nxt.isdisjoint(other):
            return dist
    return None


def _min_cycle(adj: _Indexed, lo: int, hi: int, bound: float) -> int | None:
    best = None
    out, inn = adj.out, adj.inn
    for src, dst, is_edge in adj.connections[lo:hi]:
        cap = bound if best is None else best - 1  # longest cycle still worth finding
        if cap < 3:
            break
        d = _distance(out, inn, src, dst, is_edge, cap - 1)
        if d is not None:
            best = d + 1
    return best


def _worker(args):
    adj, lo, hi, bound = args
    return _min_cycle(adj, lo, hi, bound)


def mixed_girth(
    G: MixedGraph, depth_bound: int | None = None, workers: int = 1
) -> int | None:
    """Length of a shortest cycle of G, or None if G has no cycle of length
    <= ``depth_bound`` (no bound when omitted).

    ``workers > 1`` splits the connections over worker processes; the result
    is the same as the sequential run.
    """
    adj = _Indexed(G)
    bound = float("inf") if depth_bound is None else depth_bound
    n = len(adj.connections)
    if workers <= 1 or n < 2 * workers:
        return _min_cycle(adj, 0, n, bound)
    step = -(-n // workers)
    jobs = [(adj, lo, min(lo + step, n), bound) for lo in range(0, n, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        found = [g for g in pool.map(_worker, jobs) if g is not None]
    return min(found) if found else None


def _path(out, src: int, dst: int, skip_direct: bool, length: int) -> list[int] | None:
    parent = {src: None}
    frontier = [src]
    for _ in range(length):
        nxt = []
        for w in frontier:
            for x in out[w]:
                if x in parent or (skip_direct and w == src and x == dst):
                    continue
                parent[x] = w
                if x == dst:
                    path = [x]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return path[::-1]
                nxt.append(x)
        frontier = nxt
    return None


def find_cycle_of_length(G: MixedGraph, length: int) -> list[Vertex] | None:
    """Some cycle of exactly ``length``, or None.  Meant for ``length`` equal
    to the girth; longer requests may miss cycles whose connections all lie
    on shorter ones."""
    adj = _Indexed(G)
    for src, dst, is_edge in adj.connections:
        if _distance(adj.out, adj.inn, src, dst, is_edge, length - 1) == length - 1:
            path = _path(adj.out, src, dst, is_edge, length - 1)
            return [adj.vertices[i] for i in path]
    return None


def shortest_cycle(G: MixedGraph, depth_bound: int | None = None) -> list[Vertex] | None:
    """A shortest cycle as a vertex list ``[v0, ..., v_{g-1}]`` (the closing
    connection runs v_{g-1} -> v0), or None as for :func:`mixed_girth`."""
    g = mixed_girth(G, depth_bound)
    return None if g is None else find_cycle_of_length(G, g)


def directed_girth(G: MixedGraph) -> int | None:
    """Girth of the arc-only subgraph."""
    return mixed_girth(G.arc_subgraph())


def is_cycle(G: MixedGraph, seq: Sequence[Vertex]) -> bool:
    """True if ``seq`` (closing back to seq[0]) is a cycle of G."""
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    for a, b in zip(seq, list(seq[1:]) + [seq[0]]):
        if not (G.has_edge(a, b) or G.has_arc(a, b)):
            return False
    return True


def girth_oracle(G: MixedGraph) -> int | None:
    """Exact girth by depth-first enumeration of simple cycles.

    Independent of :func:`mixed_girth`: it never runs a breadth-first search.
    Lengths are tried in increasing order and each cycle is rooted at its
    smallest-index vertex, so the first length for which some simple cycle
    closes is the girth.  Limited to graphs of at most 60 vertices.
    """
    n = G.order
    if n > ORACLE_MAX_ORDER:
        raise ValueError(f"girth_oracle is limited to {ORACLE_MAX_ORDER} vertices, got {n}")
    index = {v: i for i, v in enumerate(G.vertices)}
    succ: list[set[int]] = [set() for _ in range(n)]
    for a, b in G.edges():
        succ[index[a]].add(index[b])
        succ[index[b]].add(index[a])
    for a, b in G.arcs():
        succ[index[a]].add(index[b])

    def closes(start: int, length: int) -> bool:
        # stack entries: (vertex, depth, iterator over successors)
        on_path = [False] * n
        on_path[start] = True
        stack = [(start, 1, iter(sorted(w for w in succ[start] if w > start)))]
        while stack:
            v, depth, it = stack[-1]
            if depth == length:
                stack.pop()
                on_path[v] = False
                if start in succ[v]:
                    return True
                continue
            for w in it:
                if not on_path[w]:
                    on_path[w] = True
                    stack.append((w, depth + 1, iter(sorted(x for x in succ[w] if x > start))))
                    break
            else:
                stack.pop()
                on_path[v] = False
        return False

    for length in range(3, n + 1):
        if any(closes(s, length) for s in range(n)):
            return length
    return None
