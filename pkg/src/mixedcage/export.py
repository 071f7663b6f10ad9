"""Graph exchange formats: JSON, Graphviz DOT and a CSV connection list.

All three list vertices in the canonical vertex order and connections sorted
by endpoint position, so output is byte-for-byte reproducible.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any

from .field import GF
from .geometry import label, sort_key
from .graph import MixedGraph


def _ordered(F: GF, G: MixedGraph):
    verts = sorted(G.vertices, key=sort_key(F))
    pos = {v: i for i, v in enumerate(verts)}
    edges = sorted(tuple(sorted((pos[u], pos[v]))) for u, v in G.edges())
    arcs = sorted((pos[u], pos[v]) for u, v in G.arcs())
    return [label(F, v) for v in verts], edges, arcs


def to_json(F: GF, G: MixedGraph, construction: str, params: dict[str, Any] | None = None) -> str:
    names, edges, arcs = _ordered(F, G)
    doc: dict[str, Any] = {"q": F.q, "construction": construction}
    if params is not None:
        doc["params"] = params
    doc["vertices"] = names
    doc["edges"] = [[names[a], names[b]] for a, b in edges]
    doc["arcs"] = [[names[a], names[b]] for a, b in arcs]
    return json.dumps(doc, indent=1) + "\n"


def to_dot(F: GF, G: MixedGraph, name: str = "H") -> str:
    names, edges, arcs = _ordered(F, G)
    q = json.dumps  # DOT accepts JSON-style double-quoted ids
    out = [f"digraph {q(name)} {{"]
    out += [f"  {q(n)};" for n in names]
    out += [f"  {q(names[a])} -> {q(names[b])} [dir=none];" for a, b in edges]
    out += [f"  {q(names[a])} -> {q(names[b])};" for a, b in arcs]
    out.append("}")
    return "\n".join(out) + "\n"


def to_csv(F: GF, G: MixedGraph) -> str:
    names, edges, arcs = _ordered(F, G)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["source", "target", "type"])
    w.writerows([names[a], names[b], "edge"] for a, b in edges)
    w.writerows([names[a], names[b], "arc"] for a, b in arcs)
    return buf.getvalue()


def from_json(text: str) -> MixedGraph:
    """Rebuild a graph over the string labels of a JSON export."""
    doc = json.loads(text)
    G = MixedGraph(doc["vertices"])
    for a, b in doc["edges"]:
        G.add_edge(a, b)
    for a, b in doc["arcs"]:
        G.add_arc(a, b)
    return G


FORMATS = {"json": to_json, "dot": to_dot, "csv": to_csv}
