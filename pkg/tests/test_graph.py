import pytest

from mixedcage.graph import (
    DegreeTriple,
    MixedGraph,
    SimplicityError,
    bipartition_check,
    cycle_graph,
    degree,
    induced_subgraph,
    is_totally_regular,
)


def test_edge_then_arc_is_rejected():
    G = MixedGraph("ab")
    G.add_edge("a", "b")
    with pytest.raises(SimplicityError) as exc:
        G.add_arc("a", "b")
    assert exc.value.pair == ("a", "b")


@pytest.mark.parametrize(
    "first,second",
    [
        (("arc", "a", "b"), ("edge", "b", "a")),
        (("arc", "a", "b"), ("arc", "b", "a")),
        (("arc", "a", "b"), ("arc", "a", "b")),
        (("edge", "a", "b"), ("edge", "b", "a")),
    ],
)
def test_parallel_connections_rejected(first, second):
    G = MixedGraph("ab")
    getattr(G, f"add_{first[0]}")(*first[1:])
    with pytest.raises(SimplicityError):
        getattr(G, f"add_{second[0]}")(*second[1:])


def test_loops_and_unknown_vertices():
    G = MixedGraph("ab")
    with pytest.raises(SimplicityError):
        G.add_edge("a", "a")
    with pytest.raises(KeyError):
        G.add_arc("a", "z")
    with pytest.raises(KeyError):
        degree(G, "z")


def test_induced_subgraph():
    C6 = cycle_graph(6)
    assert induced_subgraph(C6, C6.vertices) == C6
    sub = induced_subgraph(C6, [0, 2, 4])
    assert sub.order == 3 and sub.num_edges == 0 and sub.num_arcs == 0


def test_induced_subgraph_keeps_arcs():
    G = cycle_graph(4, directed=True)
    G.add_vertex(9)
    G.add_edge(0, 9)
    sub = G.induced_subgraph([0, 1, 9])
    assert list(sub.arcs()) == [(0, 1)]
    assert sub.has_edge(9, 0)


def test_degrees():
    G = MixedGraph(range(4))
    G.add_arc(0, 1)
    G.add_arc(2, 0)
    G.add_edge(0, 3)
    assert degree(G, 0) == DegreeTriple(1, 1, 1)
    assert degree(G, 3) == (0, 0, 1)
    G.add_vertex("lonely")
    assert degree(G, "lonely") == (0, 0, 0)


def test_total_regularity():
    assert is_totally_regular(cycle_graph(6), 0, 2) == (True, None)
    ok, bad = is_totally_regular(cycle_graph(6), 1, 2)
    assert not ok and bad == 0
    assert is_totally_regular(cycle_graph(5, directed=True), 1, 0)[0]


def test_bipartition():
    C6 = cycle_graph(6)
    assert bipartition_check(C6, lambda v: v % 2)
    C3 = cycle_graph(3)
    assert not any(
        bipartition_check(C3, lambda v, m=mask: (m >> v) & 1) for mask in range(8)
    )


def test_arcs_count_for_bipartition():
    G = cycle_graph(4)
    G.add_vertex(4)
    G.add_arc(0, 4)
    assert not bipartition_check(G, lambda v: 0 if v in (0, 2, 4) else 1)
