import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from mixedcage.construction import standalone_circulant
from mixedcage.girth import (
    directed_girth,
    find_cycle_of_length,
    girth_oracle,
    is_cycle,
    mixed_girth,
    shortest_cycle,
)
from mixedcage.graph import MixedGraph, cycle_graph, random_mixed_graph


def circulant_girth_by_sums(n, jumps):
    """Fewest jumps (with repetition) summing to 0 mod n.  A shortest closed
    walk in a digraph is a cycle, so this is the directed girth."""
    reach = {0}
    for k in range(1, n + 1):
        reach = {(s + j) % n for s in reach for j in jumps}
        if 0 in reach:
            return k
    return None


def mixed_graphs(max_n=12):
    return st.builds(
        lambda seed, n, d: random_mixed_graph(random.Random(seed), n, d),
        st.integers(0, 2**32),
        st.integers(3, max_n),
        st.floats(0.05, 0.6),
    )


def test_cycles():
    for n in (3, 4, 7, 12):
        assert mixed_girth(cycle_graph(n)) == n
        assert mixed_girth(cycle_graph(n, directed=True)) == n


def test_acyclic():
    G = MixedGraph(range(5))
    for i in range(4):
        G.add_edge(i, i + 1)
    assert mixed_girth(G) is None
    D = MixedGraph(range(4))
    for a, b in itertools.combinations(range(4), 2):
        D.add_arc(a, b)
    assert mixed_girth(D) is None
    assert girth_oracle(D) is None


def test_arc_against_direction_is_not_a_cycle():
    G = MixedGraph("abc")
    G.add_arc("a", "b")
    G.add_arc("c", "b")
    G.add_edge("a", "c")
    assert mixed_girth(G) is None
    G2 = MixedGraph("abc")
    G2.add_arc("a", "b")
    G2.add_arc("b", "c")
    G2.add_edge("a", "c")
    assert mixed_girth(G2) == 3


def test_edge_is_not_a_2_cycle():
    G = MixedGraph("ab")
    G.add_edge("a", "b")
    assert mixed_girth(G) is None


def test_depth_bound_truncates():
    C = cycle_graph(6)
    assert mixed_girth(C, depth_bound=5) is None
    assert mixed_girth(C, depth_bound=6) == 6


def test_shortest_cycle_witness():
    G = standalone_circulant(20, (1, 3))
    cyc = shortest_cycle(G)
    assert len(cyc) == mixed_girth(G) == circulant_girth_by_sums(20, (1, 3))
    assert is_cycle(G, cyc)


def test_is_cycle_rejects():
    C = cycle_graph(5, directed=True)
    assert is_cycle(C, [0, 1, 2, 3, 4])
    assert not is_cycle(C, [4, 3, 2, 1, 0])
    assert not is_cycle(C, [0, 1])
    assert not is_cycle(C, [0, 1, 2, 1])


def test_oracle_size_limit():
    with pytest.raises(ValueError):
        girth_oracle(cycle_graph(61))


@pytest.mark.parametrize("jumps", [(1,), (1, 3), (1, 3, 5), (1, 3, 5, 7)])
def test_circulants_match_jump_sums(jumps):
    for n in range(2 * max(jumps) + 1, 41):
        G = standalone_circulant(n, jumps)
        want = circulant_girth_by_sums(n, jumps)
        assert mixed_girth(G) == want
        assert girth_oracle(G) == want
        assert directed_girth(G) == want


def test_part_sized_circulant_girths():
    # the circulants on 2(q-1) vertices used by the construction
    frozen = {12: 12, 14: 6, 16: 6, 20: 8, 24: 6, 30: 6, 32: 6, 36: 6}
    jumps = {12: (1,), 14: (1, 3), 16: (1, 3), 20: (1, 3), 24: (1, 3, 5),
             30: (1, 3, 5, 7), 32: (1, 3, 5, 7), 36: (1, 3, 5, 7)}
    for n, g in frozen.items():
        assert circulant_girth_by_sums(n, jumps[n]) == g
        assert mixed_girth(standalone_circulant(n, jumps[n])) == g


@settings(max_examples=150, deadline=None)
@given(mixed_graphs())
def test_matches_oracle(G):
    assert mixed_girth(G) == girth_oracle(G)


@settings(max_examples=60, deadline=None)
@given(mixed_graphs(), st.integers(3, 8))
def test_depth_bound_property(G, bound):
    g = mixed_girth(G)
    bounded = mixed_girth(G, depth_bound=bound)
    assert bounded == (g if g is not None and g <= bound else None)


@settings(max_examples=60, deadline=None)
@given(mixed_graphs(), st.randoms(use_true_random=False))
def test_relabel_invariance(G, rnd):
    perm = list(range(G.order))
    rnd.shuffle(perm)
    H = G.relabel(lambda v: ("v", perm[v]))
    assert mixed_girth(H) == mixed_girth(G)


@settings(max_examples=60, deadline=None)
@given(mixed_graphs())
def test_girth_facts(G):
    g = mixed_girth(G)
    d = directed_girth(G)
    assert g is None or g >= 3
    if d is not None:
        assert g is not None and g <= d
    if g is not None:
        cyc = find_cycle_of_length(G, g)
        assert cyc is not None and len(cyc) == g and is_cycle(G, cyc)


@settings(max_examples=20, deadline=None)
@given(mixed_graphs(20))
def test_workers_agree(G):
    assert mixed_girth(G, workers=2) == mixed_girth(G)
